#pragma once

#include <cstdint>
#include <vector>

#include "apolar/apolarity.hpp"

namespace apolar {

// eps_i = min(binom(e-1+s-i, e-1), binom(e-1+i, e-1)) for i = 0..s.
std::vector<std::int64_t> eps(int e, int s);

struct CompressedProfile {
    int e = 0;
    int s = 0;
    int t = 0; // ceil((s+1)/2)
    int r = 0; // s+1-t
    std::vector<std::int64_t> eps;
    std::int64_t lambda_max = 0;
    bool inequality_chain = false; // 2 <= 2t-2 <= s <= 3t-4
    bool main_theorem_applicable = false; // s >= 2, s != 3, e > 1
};

CompressedProfile profile(int e, int s);

// The three equivalent characterizations of maximal length, evaluated
// against the effective embedding dimension h_R(1).
struct CompressednessReport {
    int declared_e = 0;
    int effective_e = 0;
    int s = 0;
    bool length_route = false;      // lambda(R) = sum eps_i
    bool hilbert_route = false;     // h_R(i) = eps_i for all i
    bool annihilator_route = false; // v(R) >= t and ann(m^t) = m^{s+1-t}
    std::int64_t length = 0;
    std::int64_t lambda_max = 0;
    std::vector<std::int64_t> hilbert;

    bool compressed() const { return length_route; }
};

CompressednessReport is_compressed(const GradedArtinianAlgebra& r);

// Consequences of compressedness: exact initial degree, the full
// annihilator chain, and the graded quotient being Gorenstein.
struct ConsequencesReport {
    bool v_equals_t = false;
    bool annihilator_chain = false; // ann(m^i) = m^{s+1-i} for 0 <= i <= s+1
    bool graded_gorenstein = false;
    std::vector<int> failed_chain_indices;

    bool all() const { return v_equals_t && annihilator_chain && graded_gorenstein; }
};

ConsequencesReport consequences_check(const GradedArtinianAlgebra& r);

} // namespace apolar
