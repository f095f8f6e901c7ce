#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apolar/errors.hpp"

namespace apolar {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t binomial(int n, int k);

// Polynomial with exact integer coefficients; trailing zeros are dropped so
// equal polynomials compare equal.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<std::int64_t> coeffs);
    static IntegerPolynomial monomial(std::int64_t c, int degree);
    static IntegerPolynomial one_plus_z_pow(int e); // (1+z)^e

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    std::int64_t coeff(int i) const;
    bool is_zero() const { return c_.empty(); }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    std::int64_t evaluate(std::int64_t z) const;
    IntegerPolynomial alternate() const; // p(-z)

    // Multiply by z^k (k >= 0), or divide exactly by z^k; division throws
    // CancellationFailure if a low-order coefficient survives.
    IntegerPolynomial shift_up(int k) const;
    IntegerPolynomial shift_down(int k) const;

    friend IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b) { return a.c_ == b.c_; }

    std::string to_string() const;

private:
    std::vector<std::int64_t> c_;
};

// Power series with exact integer coefficients, retained through z^order.
class TruncatedIntegerSeries {
public:
    TruncatedIntegerSeries() = default;
    TruncatedIntegerSeries(std::vector<std::int64_t> coeffs, int order);
    static TruncatedIntegerSeries from_polynomial(const IntegerPolynomial& p, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    std::int64_t coeff(int i) const;
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    TruncatedIntegerSeries truncate(int order) const;
    TruncatedIntegerSeries inverse() const; // requires constant term +-1

    friend TruncatedIntegerSeries operator+(const TruncatedIntegerSeries& a, const TruncatedIntegerSeries& b);
    friend TruncatedIntegerSeries operator-(const TruncatedIntegerSeries& a, const TruncatedIntegerSeries& b);
    friend TruncatedIntegerSeries operator*(const TruncatedIntegerSeries& a, const TruncatedIntegerSeries& b);
    friend TruncatedIntegerSeries operator/(const TruncatedIntegerSeries& a, const TruncatedIntegerSeries& b);
    friend bool operator==(const TruncatedIntegerSeries& a, const TruncatedIntegerSeries& b) { return a.c_ == b.c_; }

    std::string to_string() const;

private:
    std::vector<std::int64_t> c_; // size order+1
};

// Exact coefficientwise equality through the common (minimum) order.
bool series_identity_check(const TruncatedIntegerSeries& lhs, const TruncatedIntegerSeries& rhs);

// Hilbert series of a compressed algebra: sum of eps_i z^i.
IntegerPolynomial hs_compressed(int e, int s);

// Closed form for the Betti polynomial of a compressed algebra over its
// polynomial presentation when the socle degree is even. The low-order terms
// of the shifted factor must cancel exactly; anything else is an error.
IntegerPolynomial po_q_even_closed_form(int e, int s);

// Denominator polynomial 1 - z*(poQR - 1) + a*z^{e+1}*(1+z).
IntegerPolynomial dr_from_po_q(const IntegerPolynomial& po_q_r, int e, std::int64_t a);

// Even-socle closed form of the denominator; must agree with the
// dr_from_po_q route applied to po_q_even_closed_form (hard assertion).
IntegerPolynomial dr_even_closed_form(int e, int s);

// Series bound/value attained by Golod rings: (1+z)^e / (1 - z*(poQ - 1)).
TruncatedIntegerSeries golod_poincare(int e, const IntegerPolynomial& po_q, int order);

// po_p_k / (1 - z*(po_p_r - 1)), the residue-field series through a Golod
// surjection from a hypersurface.
TruncatedIntegerSeries golod_quotient_formula(const TruncatedIntegerSeries& po_p_k,
                                              const TruncatedIntegerSeries& po_p_r);

// (poQM - (1+z)*hsKer) / (1-z^2): change of rings across a hypersurface.
TruncatedIntegerSeries change_of_rings_po_p(const TruncatedIntegerSeries& po_q_m,
                                            const TruncatedIntegerSeries& hs_ker);

// po_q_r + z*(1+z)^e - z^e*(1+z): Betti polynomial of R/Soc(R) over Q.
IntegerPolynomial socle_quotient_po_q(const IntegerPolynomial& po_q_r, int e);

} // namespace apolar
