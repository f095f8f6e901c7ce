#pragma once

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "apolar/linalg.hpp"
#include "apolar/series.hpp"

namespace apolar {

// Exponent vector of a monomial in e variables.
struct Monomial {
    std::vector<int> exp;

    int degree() const;
    std::string to_string() const; // e.g. "x1^2*x3"

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

// Graded pieces of the polynomial ring Q = k[x_1..x_e] over F_p together
// with the canonical graded-lex monomial order used everywhere for matrix
// indexing. The same index set serves the degree-d piece of the dual space,
// on which Q acts by contraction.
class PolyRing {
public:
    PolyRing(int vars, std::uint32_t p);

    int vars() const { return e_; }
    std::uint32_t modulus() const { return p_; }

    // dim Q_d = binomial(e-1+d, e-1); zero for d < 0
    std::int64_t dim(int d) const;

    const std::vector<Monomial>& monomials(int d) const;
    std::size_t index_of(const Monomial& m) const;

    // Q_da x Q_db -> Q_{da+db} on coefficient vectors
    Vec multiply(const Vec& a, int da, const Vec& b, int db) const;
    Vec multiply_monomial(const Monomial& m, const Vec& b, int db) const;

    // contraction f . F with f in Q_df, F in D_dF: lands in D_{dF-df};
    // the zero vector of D_{dF-df} when df > dF
    Vec contract(const Vec& f, int df, const Vec& dual, int d_dual) const;

    // matrix of Q_a -> D_{dF-a}, f |-> f . F
    Matrix contraction_matrix(const Vec& dual, int d_dual, int a) const;

    // matrix of the substitution x_j |-> sum_i A(i,j)*x_i on Q_d
    Matrix substitution_matrix(const Matrix& subst, int d) const;

private:
    int e_;
    std::uint32_t p_;
    // deques: growing the cache must not invalidate handed-out references;
    // the mutex makes shared rings safe to query from parallel workers
    mutable std::mutex cache_mutex_;
    mutable std::deque<std::vector<Monomial>> bases_;
    mutable std::deque<std::map<std::vector<int>, std::size_t>> index_;
    void ensure_degree(int d) const; // callers hold cache_mutex_
};

// One line per term of a dual element: <coefficient> <exp_1> ... <exp_e>.
// Blank lines and '#' comments are ignored. All terms must share one degree.
struct DualTermList {
    int vars = 0;
    int degree = 0;
    std::vector<std::pair<std::int64_t, Monomial>> terms;
};

DualTermList parse_dual_terms(std::istream& in);
void write_dual_terms(std::ostream& out, const DualTermList& terms);

} // namespace apolar
