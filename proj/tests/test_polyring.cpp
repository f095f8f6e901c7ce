#include <doctest.h>

#include <random>
#include <sstream>

#include "apolar/polyring.hpp"

using namespace apolar;

TEST_CASE("monomial enumeration counts and order") {
    PolyRing r2(2, 32003);
    const auto& deg3 = r2.monomials(3);
    REQUIRE(deg3.size() == 4); // stars and bars
    CHECK(deg3[0].exp == std::vector<int>{3, 0});
    CHECK(deg3[1].exp == std::vector<int>{2, 1});
    CHECK(deg3[2].exp == std::vector<int>{1, 2});
    CHECK(deg3[3].exp == std::vector<int>{0, 3});

    PolyRing r3(3, 32003);
    CHECK(r3.monomials(2).size() == 6);
    CHECK(r3.dim(2) == 6);

    PolyRing r1(1, 32003);
    REQUIRE(r1.monomials(5).size() == 1);
    CHECK(r1.monomials(5)[0].exp == std::vector<int>{5});

    // dimension formula across a sweep, plus no duplicates
    for (int e = 1; e <= 4; ++e) {
        PolyRing r(e, 32003);
        for (int d = 0; d <= 6; ++d) {
            const auto& mons = r.monomials(d);
            CHECK(static_cast<std::int64_t>(mons.size()) == binomial(e - 1 + d, e - 1));
            for (std::size_t i = 0; i < mons.size(); ++i) {
                CHECK(mons[i].degree() == d);
                CHECK(r.index_of(mons[i]) == i);
            }
        }
    }
}

TEST_CASE("multiplication in graded pieces") {
    PolyRing r(2, 5);
    // (x + y)^2 = x^2 + 2xy + y^2
    Vec xy = {1, 1};
    Vec sq = r.multiply(xy, 1, xy, 1);
    CHECK(sq == Vec{1, 2, 1});
    // monomial shift
    Monomial x{std::vector<int>{1, 0}};
    CHECK(r.multiply_monomial(x, Vec{1, 1}, 1) == Vec{1, 1, 0});
}

TEST_CASE("contraction on monomials") {
    PolyRing r(2, 32003);
    // x . X^2 = X
    Vec f = {1, 0};          // x
    Vec dual = {1, 0, 0};    // X^2
    CHECK(r.contract(f, 1, dual, 2) == Vec{1, 0});
    // x . Y = 0
    Vec y_dual = {0, 1};
    CHECK(r.contract(f, 1, y_dual, 1) == Vec{0});
    // degree overflow gives the empty piece
    CHECK(r.contract(dual, 2, f, 1).empty());
}

TEST_CASE("contraction of a difference against a sum cancels") {
    PolyRing r(2, 7);
    Vec f = {1, 0, 6};    // x^2 - y^2
    Vec dual = {1, 0, 1}; // X^2 + Y^2
    Vec res = r.contract(f, 2, dual, 2);
    REQUIRE(res.size() == 1);
    CHECK(res[0] == 0);
}

TEST_CASE("perfect pairing in fixed degree is the identity matrix") {
    for (int e = 1; e <= 3; ++e) {
        PolyRing r(e, 101);
        for (int d = 0; d <= 4; ++d) {
            const auto& mons = r.monomials(d);
            for (std::size_t i = 0; i < mons.size(); ++i) {
                Vec dual(mons.size(), 0);
                dual[i] = 1;
                Matrix pairing = r.contraction_matrix(dual, d, d);
                REQUIRE(pairing.rows() == 1);
                for (std::size_t j = 0; j < mons.size(); ++j)
                    CHECK(pairing(0, j) == (i == j ? 1u : 0u));
            }
        }
    }
}

TEST_CASE("contraction is associative over multiplication") {
    PolyRing r(3, 103);
    std::mt19937_64 rng(5);
    auto rand_vec = [&](int d) {
        Vec v(static_cast<std::size_t>(r.dim(d)));
        for (auto& c : v) c = static_cast<std::uint32_t>(rng() % 103);
        return v;
    };
    for (int trial = 0; trial < 10; ++trial) {
        Vec f = rand_vec(1), g = rand_vec(2), dual = rand_vec(5);
        Vec fg = r.multiply(f, 1, g, 2);
        CHECK(r.contract(fg, 3, dual, 5) == r.contract(f, 1, r.contract(g, 2, dual, 5), 3));
    }
}

TEST_CASE("substitution matrices respect multiplication") {
    PolyRing r(2, 11);
    Matrix a(2, 2, 11);
    a.set(0, 0, 1);
    a.set(0, 1, 2);
    a.set(1, 0, 3);
    a.set(1, 1, 4);
    // substitute on a product = product of substitutes
    std::mt19937_64 rng(9);
    auto rand_vec = [&](int d) {
        Vec v(static_cast<std::size_t>(r.dim(d)));
        for (auto& c : v) c = static_cast<std::uint32_t>(rng() % 11);
        return v;
    };
    Vec f = rand_vec(1), g = rand_vec(2);
    Vec lhs = r.substitution_matrix(a, 3).apply(r.multiply(f, 1, g, 2));
    Vec rhs = r.multiply(r.substitution_matrix(a, 1).apply(f), 1,
                         r.substitution_matrix(a, 2).apply(g), 2);
    CHECK(lhs == rhs);
    // identity substitution is the identity matrix
    CHECK(r.substitution_matrix(Matrix::identity(2, 11), 3) == Matrix::identity(4, 11));
}

TEST_CASE("dual generator text round trip") {
    std::string text = "# a comment\n"
                       "1 2 0\n"
                       "\n"
                       "3 1 1  # trailing comment\n"
                       "-1 0 2\n";
    std::istringstream in(text);
    DualTermList terms = parse_dual_terms(in);
    CHECK(terms.vars == 2);
    CHECK(terms.degree == 2);
    REQUIRE(terms.terms.size() == 3);
    CHECK(terms.terms[1].first == 3);
    CHECK(terms.terms[2].first == -1);

    std::ostringstream out;
    write_dual_terms(out, terms);
    std::istringstream in2(out.str());
    DualTermList again = parse_dual_terms(in2);
    CHECK(again.terms == terms.terms);

    std::istringstream bad("1 2 0\n1 1 0\n");
    CHECK_THROWS_AS(parse_dual_terms(bad), Error); // inhomogeneous
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(parse_dual_terms(empty), Error);
}
