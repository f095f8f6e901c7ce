#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "apolar/errors.hpp"

namespace apolar {

// Coefficient vector over F_p; residues live in [0, p) with the modulus
// supplied by the surrounding context (matrix, ring, algebra).
using Vec = std::vector<std::uint32_t>;

bool is_prime(std::uint32_t n);

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

// Scalar of the coefficient field F_p, p an odd prime.
class Fp {
public:
    Fp() = default;
    Fp(std::int64_t value, std::uint32_t p);

    std::uint32_t residue() const { return r_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return r_ == 0; }

    Fp operator-() const;
    Fp inverse() const;

    friend Fp operator+(Fp a, Fp b);
    friend Fp operator-(Fp a, Fp b);
    friend Fp operator*(Fp a, Fp b);
    friend Fp operator/(Fp a, Fp b);
    friend bool operator==(Fp a, Fp b) { return a.r_ == b.r_ && a.p_ == b.p_; }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }

private:
    std::uint32_t r_ = 0;
    std::uint32_t p_ = 0;
};

struct Echelon;

// Dense matrix over F_p, row major. All reductions are deterministic:
// pivots are the first usable entry in row-major order, so the reduced
// form (and everything derived from it) is canonical.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, std::uint32_t p);

    static Matrix identity(std::size_t n, std::uint32_t p);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols, std::uint32_t p);
    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows, std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t modulus() const { return p_; }

    std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::int64_t value);
    Fp at(std::size_t i, std::size_t j) const { return Fp((*this)(i, j), p_); }

    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;
    bool is_zero() const;

    Matrix transposed() const;
    Vec apply(const Vec& v) const; // matrix * column vector

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    static Matrix stack_rows(const Matrix& top, const Matrix& bottom);
    static Matrix concat_cols(const Matrix& left, const Matrix& right);

    Echelon echelon() const;

    std::size_t rank() const;

    // Canonical basis of {v : A v = 0}. Empty for an injective map.
    std::vector<Vec> kernel_basis() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::uint32_t p_ = 1;
    std::vector<std::uint32_t> a_;
};

struct Echelon {
    Matrix reduced;                  // canonical RREF
    std::vector<std::size_t> pivots; // pivot column per pivot row
};

// Solve a * x = b columnwise; nullopt when some column of b lies outside
// the column span of a. The returned solution is the canonical one with
// free coordinates set to zero.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Vec> solve(const Matrix& a, const Vec& b);

// Inverse of a square matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

// A linear subspace of F_p^n kept as the canonical RREF of a spanning set,
// so equal subspaces compare equal as objects.
class Subspace {
public:
    Subspace(std::size_t ambient, std::uint32_t p); // zero subspace

    static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient, std::uint32_t p);
    static Subspace span(const Matrix& rows);
    static Subspace full(std::size_t ambient, std::uint32_t p);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    std::uint32_t modulus() const { return p_; }
    const Matrix& basis() const { return basis_; } // rows, canonical RREF

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool is_full() const { return dim() == ambient_; }

    Subspace sum(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    std::size_t ambient_;
    std::uint32_t p_;
    Matrix basis_;
};

// Row space maintained in echelon form with O(rank * n) insertion; the
// workhorse for repeated membership-and-extend loops where re-reducing a
// full spanning matrix each time would be quadratic in the rank.
class IncrementalSpan {
public:
    IncrementalSpan(std::size_t ambient, std::uint32_t p)
        : ambient_(ambient), p_(p) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }

    // reduce v against the stored rows; true iff the rank grew
    bool insert(Vec v);
    bool contains(Vec v) const;

private:
    std::size_t ambient_;
    std::uint32_t p_;
    std::vector<std::pair<std::size_t, Vec>> rows_; // (pivot, row), ascending pivots
    void reduce(Vec& v) const;
};

// Data describing the quotient k^n / U: the lexicographically earliest
// standard coordinates that survive as a basis, together with the map
// sending any ambient vector to its coordinates in that basis.
struct QuotientBasis {
    std::vector<std::size_t> kept; // ascending ambient indices
    Matrix coords;                 // kept.size() x n
};

QuotientBasis quotient_basis(const Subspace& u);

} // namespace apolar
