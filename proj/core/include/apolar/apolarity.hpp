#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <vector>

#include "apolar/linalg.hpp"
#include "apolar/polyring.hpp"

#include <json.hpp>

namespace apolar {

// Degree-s element of the dual space, defining R = Q/Ann(F) via contraction.
struct DualGenerator {
    int vars = 0;
    int degree = 0;
    std::uint32_t prime = 0;
    Vec coeffs; // over the degree-s dual monomial basis

    static DualGenerator from_terms(const DualTermList& terms, std::uint32_t prime);
    static DualGenerator parse(std::istream& in, std::uint32_t prime);
    void write(std::ostream& out) const;

    bool is_zero() const;
    void validate() const; // ZeroGenerator / BadPrime
};

// Deterministic generic sampler: coefficients uniform over F_p for every
// degree-s dual monomial. Identical arguments give identical output.
DualGenerator sample_dual_generator(int e, int s, std::uint32_t p, std::uint64_t seed);

Matrix sample_invertible_matrix(int e, std::uint32_t p, std::uint64_t seed);

class GradedArtinianAlgebra;

// Graded ideal of R given per degree as a subspace of R_d (coordinates in
// the chosen degree-d basis). Closed under multiplication by R_1.
class GradedIdeal {
public:
    GradedIdeal(const GradedArtinianAlgebra& algebra, std::vector<Subspace> pieces);

    const Subspace& piece(int d) const;
    int top() const { return static_cast<int>(pieces_.size()) - 1; }
    std::int64_t dim(int d) const;
    std::int64_t total_dim() const;
    bool is_zero() const;
    bool contains(const GradedIdeal& other) const;

    friend bool operator==(const GradedIdeal& a, const GradedIdeal& b) { return a.pieces_ == b.pieces_; }

private:
    std::vector<Subspace> pieces_; // index d = 0..s
};

// Basis-per-degree model of the graded Artinian quotient R = Q/I with
// normal forms and multiplication. Degree-d basis elements are monomials
// (the lexicographically earliest complement of I_d).
class GradedArtinianAlgebra {
public:
    // R = Q/Ann(F) for a dual generator F of degree s
    static GradedArtinianAlgebra from_dual_generator(const DualGenerator& f);

    // R = Q/I for an explicit graded ideal: ideal_pieces[d] is a subspace of
    // Q_d for d = 0..top; every degree above top is treated as full.
    static GradedArtinianAlgebra from_ideal(std::shared_ptr<const PolyRing> ring, int top,
                                            std::vector<Subspace> ideal_pieces);

    const PolyRing& ring() const { return *ring_; }
    std::shared_ptr<const PolyRing> ring_ptr() const { return ring_; }
    int vars() const { return ring_->vars(); }
    std::uint32_t modulus() const { return ring_->modulus(); }

    // largest d with R_d != 0 (the socle degree for Gorenstein builds)
    int socle_degree() const { return top_; }

    std::int64_t dim(int d) const;
    std::int64_t length() const;
    std::vector<std::int64_t> hilbert_function() const; // h(0..top)
    int effective_embedding_dim() const { return static_cast<int>(dim(1)); }

    // v(R): least d >= 1 with I_d != 0, or top+1 when I vanishes through top
    int initial_ideal_degree() const;

    const std::vector<std::size_t>& basis_monomials(int d) const; // indices into ring().monomials(d)
    const Matrix& ideal_basis(int d) const;                       // rows: canonical basis of I_d in Q_d
    std::int64_t ideal_dim(int d) const;

    Vec normal_form(int d, const Vec& q) const; // Q_d coords -> R_d coords
    Vec lift(int d, const Vec& r) const;        // R_d coords -> Q_d coords

    Vec multiply(const Vec& a, int da, const Vec& b, int db) const;
    Matrix multiplication_map(const Vec& a, int da, int d) const; // R_d -> R_{d+da}
    const Matrix& variable_multiplication(int j, int d) const;    // x_j: R_d -> R_{d+1}

    nlohmann::json to_json() const;

private:
    std::shared_ptr<const PolyRing> ring_;
    int top_ = 0;
    struct Piece {
        std::vector<std::size_t> basis; // surviving monomial indices
        Matrix nf;                      // dim R_d x dim Q_d
        Matrix ideal;                   // canonical basis of I_d, rows
    };
    std::vector<Piece> pieces_;
    std::shared_ptr<std::mutex> varmul_mutex_ = std::make_shared<std::mutex>();
    mutable std::vector<std::vector<Matrix>> varmul_; // [d][j], built once under the mutex
    void build_varmul() const;
};

// Per-degree bases of I = Ann(F): kernels of the contraction pairing.
std::vector<Subspace> apolar_ideal(const DualGenerator& f);

// m^i as a graded ideal: the full pieces of degree >= i (standard graded).
GradedIdeal power_ideal(const GradedArtinianAlgebra& r, int i);

// Ideal generated by given degree-1 elements (R_1 coordinates).
GradedIdeal ideal_generated_in_degree_one(const GradedArtinianAlgebra& r, const std::vector<Vec>& gens);

// {v : v * J = 0}, degree by degree.
GradedIdeal annihilator(const GradedArtinianAlgebra& r, const GradedIdeal& j);

// Soc(R) = annihilator of the irrelevant ideal.
GradedIdeal socle(const GradedArtinianAlgebra& r);

// R/J with the induced grading and multiplication.
GradedArtinianAlgebra quotient_algebra(const GradedArtinianAlgebra& r, const GradedIdeal& j);

// Linear coordinate change by an invertible matrix: the two overloads are
// compatible, i.e. the algebra of the changed generator equals the changed
// algebra for the same matrix.
DualGenerator change_coordinates(const DualGenerator& f, const Matrix& subst);
GradedArtinianAlgebra change_coordinates(const GradedArtinianAlgebra& r, const Matrix& subst);

DualGenerator generic_coordinate_change(const DualGenerator& f, std::uint64_t seed);
GradedArtinianAlgebra generic_coordinate_change(const GradedArtinianAlgebra& r, std::uint64_t seed);

} // namespace apolar
