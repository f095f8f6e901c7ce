#include <doctest.h>

#include "apolar/series.hpp"

using namespace apolar;

namespace {

// independent expansion of p/q by the linear recurrence of the denominator
std::vector<std::int64_t> rational_expand(const std::vector<std::int64_t>& num,
                                          const std::vector<std::int64_t>& den, int order) {
    REQUIRE(den[0] == 1);
    std::vector<std::int64_t> c(order + 1, 0);
    for (int i = 0; i <= order; ++i) {
        std::int64_t v = i < static_cast<int>(num.size()) ? num[i] : 0;
        for (int k = 1; k <= i && k < static_cast<int>(den.size()); ++k) v -= den[k] * c[i - k];
        c[i] = v;
    }
    return c;
}

} // namespace

TEST_CASE("polynomial arithmetic basics") {
    IntegerPolynomial a({1, 2, 1});
    IntegerPolynomial b({1, 1});
    CHECK(a == b * b);
    CHECK((a - a).is_zero());
    CHECK(a.degree() == 2);
    CHECK(IntegerPolynomial({1, 0, 0}).degree() == 0); // canonical trailing-zero drop
    CHECK(a.evaluate(-1) == 0);
    CHECK(IntegerPolynomial::one_plus_z_pow(4).coeff(2) == 6);
    CHECK(a.alternate() == IntegerPolynomial({1, -2, 1}));
    CHECK(a.shift_up(2).coeff(3) == 2);
    CHECK(a.shift_up(2).shift_down(2) == a);
    CHECK_THROWS_AS(a.shift_down(1), CancellationFailure);
}

TEST_CASE("checked arithmetic fails loudly") {
    CHECK_THROWS_AS(checked_mul(std::int64_t{1} << 62, 4), Overflow);
    CHECK_THROWS_AS(checked_add(std::int64_t{1} << 62, std::int64_t{1} << 62), Overflow);
    IntegerPolynomial big({std::int64_t{1} << 62});
    CHECK_THROWS_AS(big * big, Overflow);
}

TEST_CASE("binomials") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(6, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(60, 30) == 118264581564861424LL);
}

TEST_CASE("series multiply, invert, divide round-trip") {
    TruncatedIntegerSeries a({1, -3, 2, 5, 0, -1, 7}, 6);
    TruncatedIntegerSeries inv = a.inverse();
    TruncatedIntegerSeries one({1}, 6);
    CHECK(a * inv == one);
    TruncatedIntegerSeries b({2, 1, 1, 0, 3, 0, 0}, 6);
    CHECK((b / a) * a == b);
    TruncatedIntegerSeries neg({-1, 4}, 3);
    CHECK(neg * neg.inverse() == TruncatedIntegerSeries({1}, 3));
}

TEST_CASE("identity check uses the common order") {
    TruncatedIntegerSeries a({1, 2, 3}, 2);
    TruncatedIntegerSeries b({1, 2, 3, 99}, 3);
    CHECK(series_identity_check(a, b));
    CHECK(series_identity_check(a, a));
    CHECK_FALSE(series_identity_check(a, TruncatedIntegerSeries({1, 2, 4}, 2)));
}

TEST_CASE("compressed Hilbert polynomials") {
    CHECK(hs_compressed(3, 4) == IntegerPolynomial({1, 3, 6, 3, 1}));
    CHECK(hs_compressed(2, 2) == IntegerPolynomial({1, 2, 1}));
    CHECK(hs_compressed(2, 5) == IntegerPolynomial({1, 2, 3, 3, 2, 1}));
}

TEST_CASE("even-socle Betti polynomial closed form") {
    CHECK(po_q_even_closed_form(3, 4) == IntegerPolynomial({1, 7, 7, 1}));
    CHECK(po_q_even_closed_form(2, 4) == IntegerPolynomial({1, 2, 1}));
    CHECK(po_q_even_closed_form(2, 2) == IntegerPolynomial({1, 2, 1}));
    CHECK_THROWS_AS(po_q_even_closed_form(2, 5), OddSocle);

    // leading and trailing coefficients are 1 over a range of parameters
    for (int e = 2; e <= 6; ++e)
        for (int s = 2; s <= 10; s += 2) {
            IntegerPolynomial p = po_q_even_closed_form(e, s);
            CHECK(p.degree() == e);
            CHECK(p.coeff(0) == 1);
            CHECK(p.coeff(e) == 1);
            // self-dual resolution: palindromic coefficients
            for (int i = 0; i <= e; ++i) CHECK(p.coeff(i) == p.coeff(e - i));
        }
}

TEST_CASE("denominator from the Betti polynomial") {
    CHECK(dr_from_po_q(IntegerPolynomial({1, 7, 7, 1}), 3, 1) ==
          IntegerPolynomial({1, 0, -7, -7, 0, 1}));
    CHECK(dr_from_po_q(IntegerPolynomial({1, 2, 1}), 2, 1) == IntegerPolynomial({1, 0, -2, 0, 1}));
    CHECK(dr_from_po_q(IntegerPolynomial({1, 16, 30, 16, 1}), 4, 1).degree() == 6);
}

TEST_CASE("even-socle denominator closed form agrees with the assembled route") {
    CHECK(dr_even_closed_form(3, 4) == IntegerPolynomial({1, 0, -7, -7, 0, 1}));
    CHECK(dr_even_closed_form(2, 4) == IntegerPolynomial({1, 0, -2, 0, 1}));
    CHECK_THROWS_AS(dr_even_closed_form(3, 5), OddSocle);
    for (int e = 2; e <= 6; ++e)
        for (int s = 2; s <= 10; s += 2)
            CHECK(dr_even_closed_form(e, s) == dr_from_po_q(po_q_even_closed_form(e, s), e, 1));
    // socle degree 2 collapses to the product form
    for (int e = 2; e <= 5; ++e)
        CHECK(dr_even_closed_form(e, 2) ==
              hs_compressed(e, 2).alternate() * IntegerPolynomial::one_plus_z_pow(e));
}

TEST_CASE("golod series against an independent recurrence") {
    // square-zero quotient in two variables: Betti polynomial 1+3z+2z^2
    TruncatedIntegerSeries g = golod_poincare(2, IntegerPolynomial({1, 3, 2}), 4);
    std::vector<std::int64_t> expect = rational_expand({1, 2, 1}, {1, 0, -3, -2}, 4);
    CHECK(g.coeffs() == expect);
    CHECK(g.coeffs() == std::vector<std::int64_t>{1, 2, 4, 8, 16});

    // hypersurface in one variable: all Betti numbers are 1
    TruncatedIntegerSeries h = golod_poincare(1, IntegerPolynomial({1, 1}), 6);
    CHECK(h.coeffs() == std::vector<std::int64_t>(7, 1));

    // nonnegative coefficients across a parameter sweep
    for (int e = 2; e <= 4; ++e)
        for (int s = 2; s <= 6; s += 2) {
            TruncatedIntegerSeries series = golod_poincare(e, po_q_even_closed_form(e, s), 8);
            for (std::int64_t c : series.coeffs()) CHECK(c >= 0);
        }
}

TEST_CASE("golod quotient formula") {
    // generic (3,4): plugging the hypersurface data reproduces the binomial
    // power over the denominator
    int order = 8;
    TruncatedIntegerSeries po_p_k =
        TruncatedIntegerSeries::from_polynomial(IntegerPolynomial::one_plus_z_pow(3), order) /
        TruncatedIntegerSeries::from_polynomial(IntegerPolynomial({1, 0, -1}), order);
    TruncatedIntegerSeries hs_ker = TruncatedIntegerSeries::from_polynomial(
        IntegerPolynomial({0, 1, 0, 1}), order); // z + a z^e with a = 1, e = 3
    TruncatedIntegerSeries po_q_r =
        TruncatedIntegerSeries::from_polynomial(IntegerPolynomial({1, 7, 7, 1}), order);
    TruncatedIntegerSeries po_p_r = change_of_rings_po_p(po_q_r, hs_ker);
    TruncatedIntegerSeries result = golod_quotient_formula(po_p_k, po_p_r);
    std::vector<std::int64_t> expect = rational_expand({1, 3, 3, 1}, {1, 0, -7, -7, 0, 1}, order);
    CHECK(result.coeffs() == expect);
    CHECK(expect == std::vector<std::int64_t>{1, 3, 10, 29, 91, 272, 837, 2531, 7734});

    // po_p_r = 1 leaves the numerator series unchanged
    TruncatedIntegerSeries one({1}, order);
    CHECK(golod_quotient_formula(po_p_k, one) == po_p_k);

    // complete intersection of two cubics in two variables: 1/(1-z)^2
    TruncatedIntegerSeries po_p_k2 =
        TruncatedIntegerSeries::from_polynomial(IntegerPolynomial::one_plus_z_pow(2), order) /
        TruncatedIntegerSeries::from_polynomial(IntegerPolynomial({1, 0, -1}), order);
    TruncatedIntegerSeries po_p_r2 = change_of_rings_po_p(
        TruncatedIntegerSeries::from_polynomial(IntegerPolynomial({1, 2, 1}), order),
        TruncatedIntegerSeries::from_polynomial(IntegerPolynomial({0, 1, 1}), order));
    CHECK(golod_quotient_formula(po_p_k2, po_p_r2).coeffs() ==
          std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9});
}

TEST_CASE("hypersurface change of rings") {
    int order = 6;
    // injective base change: kernel series zero
    TruncatedIntegerSeries po_q_m({1, 4, 1, 0, 0, 0, 0}, order);
    TruncatedIntegerSeries zero({0}, order);
    TruncatedIntegerSeries po_p_m = change_of_rings_po_p(po_q_m, zero);
    std::vector<std::int64_t> expect = rational_expand({1, 4, 1}, {1, 0, -1}, order);
    CHECK(po_p_m.coeffs() == expect);

    // 2-periodicity of the expansion for the generic (3,4) module data
    TruncatedIntegerSeries po_q_r =
        TruncatedIntegerSeries::from_polynomial(IntegerPolynomial({1, 7, 7, 1}), order);
    TruncatedIntegerSeries hs_ker =
        TruncatedIntegerSeries::from_polynomial(IntegerPolynomial({0, 1, 0, 1}), order);
    TruncatedIntegerSeries po_p_r = change_of_rings_po_p(po_q_r, hs_ker);
    CHECK(po_p_r.coeffs() == std::vector<std::int64_t>{1, 6, 7, 6, 6, 6, 6});

    // full cancellation: hsKer = poQM/(1+z) forces the zero series
    TruncatedIntegerSeries po_q_k =
        TruncatedIntegerSeries::from_polynomial(IntegerPolynomial::one_plus_z_pow(2), order);
    TruncatedIntegerSeries half =
        po_q_k / TruncatedIntegerSeries::from_polynomial(IntegerPolynomial({1, 1}), order);
    CHECK(change_of_rings_po_p(po_q_k, half) == TruncatedIntegerSeries({0}, order));
}

TEST_CASE("socle quotient Betti polynomial") {
    CHECK(socle_quotient_po_q(IntegerPolynomial({1, 7, 7, 1}), 3) ==
          IntegerPolynomial({1, 8, 10, 3}));
    CHECK(socle_quotient_po_q(IntegerPolynomial({1, 2, 1}), 2) == IntegerPolynomial({1, 3, 2}));
    // the correction term vanishes at z = -1 for odd e
    for (int e = 3; e <= 5; e += 2) {
        IntegerPolynomial p({1, 5, 2});
        CHECK(socle_quotient_po_q(p, e).evaluate(-1) == p.evaluate(-1));
    }
}
