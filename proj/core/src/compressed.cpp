#include "apolar/compressed.hpp"

#include <cassert>
#include <numeric>

namespace apolar {

std::vector<std::int64_t> eps(int e, int s) {
    assert(e >= 1 && s >= 0);
    std::vector<std::int64_t> v(s + 1);
    for (int i = 0; i <= s; ++i)
        v[i] = std::min(binomial(e - 1 + s - i, e - 1), binomial(e - 1 + i, e - 1));
    return v;
}

CompressedProfile profile(int e, int s) {
    assert(e >= 1 && s >= 1);
    CompressedProfile p;
    p.e = e;
    p.s = s;
    p.t = (s + 2) / 2; // ceil((s+1)/2)
    p.r = s + 1 - p.t;
    p.eps = eps(e, s);
    p.lambda_max = std::accumulate(p.eps.begin(), p.eps.end(), std::int64_t{0});
    p.inequality_chain = 2 <= 2 * p.t - 2 && 2 * p.t - 2 <= s && s <= 3 * p.t - 4;
    p.main_theorem_applicable = s >= 2 && s != 3 && e > 1;
    return p;
}

CompressednessReport is_compressed(const GradedArtinianAlgebra& r) {
    const int s = r.socle_degree();
    GradedIdeal soc = socle(r);
    std::int64_t socle_rank = soc.total_dim();
    if (socle_rank != 1)
        throw NotGorenstein("socle has rank " + std::to_string(socle_rank) + ", expected 1");

    CompressednessReport rep;
    rep.declared_e = r.vars();
    rep.effective_e = r.effective_embedding_dim();
    rep.s = s;
    if (rep.effective_e <= 1)
        throw Error("InvalidParameters", "compressedness needs effective embedding dimension > 1");

    CompressedProfile pro = profile(rep.effective_e, s);
    rep.hilbert = r.hilbert_function();
    rep.length = r.length();
    rep.lambda_max = pro.lambda_max;

    rep.length_route = rep.length == pro.lambda_max;

    rep.hilbert_route = true;
    for (int i = 0; i <= s; ++i)
        if (rep.hilbert[i] != pro.eps[i]) rep.hilbert_route = false;

    // v(R) >= t amounts to I_d = 0 for d < t in the graded setting. The
    // annihilator condition is a genuine computation either way.
    bool v_ge_t = r.initial_ideal_degree() >= pro.t;
    rep.annihilator_route =
        v_ge_t && annihilator(r, power_ideal(r, pro.t)) == power_ideal(r, s + 1 - pro.t);

    // the three routes characterize the same property; a disagreement is a bug
    if (rep.length_route != rep.hilbert_route || rep.length_route != rep.annihilator_route)
        throw Error("RouteDisagreement", "compressedness routes disagree");
    return rep;
}

ConsequencesReport consequences_check(const GradedArtinianAlgebra& r) {
    const int s = r.socle_degree();
    const int e = r.effective_embedding_dim();
    CompressedProfile pro = profile(e, s);

    ConsequencesReport rep;
    rep.v_equals_t = r.initial_ideal_degree() == pro.t;

    rep.annihilator_chain = true;
    for (int i = 0; i <= s + 1; ++i) {
        if (!(annihilator(r, power_ideal(r, i)) == power_ideal(r, s + 1 - i))) {
            rep.annihilator_chain = false;
            rep.failed_chain_indices.push_back(i);
        }
    }

    GradedIdeal soc = socle(r);
    rep.graded_gorenstein = soc.total_dim() == 1 && soc.dim(s) == 1;
    return rep;
}

} // namespace apolar
