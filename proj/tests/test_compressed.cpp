#include <doctest.h>

#include <numeric>
#include <sstream>

#include "apolar/compressed.hpp"

using namespace apolar;

namespace {
constexpr std::uint32_t P = 32003;
}

TEST_CASE("eps vectors") {
    CHECK(eps(3, 4) == std::vector<std::int64_t>{1, 3, 6, 3, 1});
    CHECK(eps(2, 5) == std::vector<std::int64_t>{1, 2, 3, 3, 2, 1});
    for (int e = 2; e <= 6; ++e) CHECK(eps(e, 2) == std::vector<std::int64_t>{1, e, 1});
    // symmetry and normalized ends
    for (int e = 1; e <= 5; ++e)
        for (int s = 1; s <= 8; ++s) {
            auto v = eps(e, s);
            CHECK(v.front() == 1);
            CHECK(v.back() == 1);
            for (int i = 0; i <= s; ++i) CHECK(v[i] == v[s - i]);
        }
}

TEST_CASE("profile parameters") {
    CompressedProfile p4 = profile(3, 4);
    CHECK(p4.t == 3);
    CHECK(p4.r == 2);
    CHECK(p4.lambda_max == 14);
    CHECK(p4.main_theorem_applicable);
    CHECK(p4.inequality_chain);

    CompressedProfile p5 = profile(2, 5);
    CHECK(p5.t == 3);
    CHECK(p5.r == 3);

    CompressedProfile p3 = profile(2, 3);
    CHECK_FALSE(p3.main_theorem_applicable);
    CHECK_FALSE(p3.inequality_chain);

    // even s gives r = t-1, odd s gives r = t; the inequality chain holds
    // exactly for s >= 2, s != 3
    for (int s = 1; s <= 12; ++s) {
        CompressedProfile p = profile(3, s);
        if (s % 2 == 0) CHECK(p.r == p.t - 1);
        else CHECK(p.r == p.t);
        CHECK(p.inequality_chain == (s >= 2 && s != 3));
    }
}

TEST_CASE("compressedness routes agree on a generic instance") {
    DualGenerator f = sample_dual_generator(3, 4, P, 7);
    GradedArtinianAlgebra r = GradedArtinianAlgebra::from_dual_generator(f);
    CompressednessReport rep = is_compressed(r);
    CHECK(rep.length_route);
    CHECK(rep.hilbert_route);
    CHECK(rep.annihilator_route);
    CHECK(rep.length == 14);
}

TEST_CASE("two squares in degree 2 are compressed") {
    std::istringstream in("1 1 1\n");
    GradedArtinianAlgebra r =
        GradedArtinianAlgebra::from_dual_generator(DualGenerator::parse(in, P));
    CompressednessReport rep = is_compressed(r);
    CHECK(rep.compressed());
}

TEST_CASE("sum of two fourth powers is not compressed") {
    std::istringstream in("1 4 0\n1 0 4\n");
    GradedArtinianAlgebra r =
        GradedArtinianAlgebra::from_dual_generator(DualGenerator::parse(in, P));
    CHECK(r.hilbert_function() == std::vector<std::int64_t>{1, 2, 2, 2, 1});
    CompressednessReport rep = is_compressed(r);
    CHECK_FALSE(rep.length_route);
    CHECK_FALSE(rep.hilbert_route);
    CHECK_FALSE(rep.annihilator_route);
}

TEST_CASE("non-gorenstein input is rejected") {
    DualGenerator f = sample_dual_generator(2, 3, P, 5);
    GradedArtinianAlgebra r = GradedArtinianAlgebra::from_dual_generator(f);
    GradedArtinianAlgebra q = quotient_algebra(r, power_ideal(r, 2));
    CHECK_THROWS_AS(is_compressed(q), NotGorenstein);
}

TEST_CASE("length never exceeds the bound, equality iff compressed") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        DualGenerator f = sample_dual_generator(2, 4, P, seed);
        GradedArtinianAlgebra r = GradedArtinianAlgebra::from_dual_generator(f);
        if (r.effective_embedding_dim() < 2) continue;
        auto pro = profile(r.effective_embedding_dim(), r.socle_degree());
        CHECK(r.length() <= pro.lambda_max);
        auto h = r.hilbert_function();
        auto epsv = eps(r.effective_embedding_dim(), r.socle_degree());
        for (int i = 0; i < pro.t; ++i) CHECK(h[i] <= epsv[i]);
        CompressednessReport rep = is_compressed(r);
        CHECK(rep.length_route == (r.length() == pro.lambda_max));
    }
}

TEST_CASE("consequences hold for compressed instances") {
    DualGenerator f = sample_dual_generator(3, 4, P, 21);
    GradedArtinianAlgebra r = GradedArtinianAlgebra::from_dual_generator(f);
    REQUIRE(is_compressed(r).compressed());
    ConsequencesReport cons = consequences_check(r);
    CHECK(cons.v_equals_t);
    CHECK(cons.annihilator_chain);
    CHECK(cons.graded_gorenstein);
    CHECK(cons.all());

    // odd socle degree: ann(m^3) = m^3 for (2,5)
    DualGenerator f5 = sample_dual_generator(2, 5, P, 2);
    GradedArtinianAlgebra r5 = GradedArtinianAlgebra::from_dual_generator(f5);
    REQUIRE(is_compressed(r5).compressed());
    CHECK(annihilator(r5, power_ideal(r5, 3)) == power_ideal(r5, 3));
    CHECK(consequences_check(r5).all());
}

TEST_CASE("double annihilator returns the power") {
    DualGenerator f = sample_dual_generator(3, 4, P, 33);
    GradedArtinianAlgebra r = GradedArtinianAlgebra::from_dual_generator(f);
    REQUIRE(is_compressed(r).compressed());
    for (int i = 0; i <= r.socle_degree() + 1; ++i) {
        GradedIdeal pw = power_ideal(r, i);
        CHECK(annihilator(r, annihilator(r, pw)) == pw);
    }
}
