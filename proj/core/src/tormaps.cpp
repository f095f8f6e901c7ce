#include "apolar/tormaps.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace apolar {

namespace {

// particular solution of mat*x = rhs, optionally shifted by a seeded kernel
// combination so tests can exercise lift independence
Vec solve_with_tie_break(const Matrix& mat, const Vec& rhs, std::mt19937_64* rng) {
    auto x = solve(mat, rhs);
    if (!x) throw LiftFailure("no solution while lifting a chain map; input is not a resolution");
    Vec v = *x;
    if (rng) {
        const std::uint32_t p = mat.modulus();
        for (const Vec& k : mat.kernel_basis()) {
            std::uint64_t c = (*rng)() % p;
            if (c == 0) continue;
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] = static_cast<std::uint32_t>((v[i] + c * k[i]) % p);
        }
    }
    return v;
}

} // namespace

Matrix ChainMap::tor_map(int i) const {
    const std::uint32_t p = dst_->backend().modulus();
    const auto& src_degs = src_degrees_[i];
    const auto& dst_degs = dst_->step(i).degrees;
    Matrix m(dst_degs.size(), src_degs.size(), p);
    for (std::size_t g = 0; g < src_degs.size(); ++g) {
        std::vector<std::size_t> off = dst_->piece_offsets(i, src_degs[g]);
        for (std::size_t a = 0; a < dst_degs.size(); ++a) {
            // the degree-0 component of the block is the scalar entry
            if (dst_degs[a] != src_degs[g]) continue;
            m.set(a, g, lifts_[i][g][off[a]]);
        }
    }
    return m;
}

Matrix ChainMap::assembled(int i, int d) const {
    const RingBackend& backend = dst_->backend();
    const std::uint32_t p = backend.modulus();
    const auto& src_degs = src_degrees_[i];

    std::vector<std::size_t> col_off;
    std::size_t cols = 0;
    for (int g : src_degs) {
        col_off.push_back(cols);
        cols += static_cast<std::size_t>(std::max<std::int64_t>(backend.dim(d - g), 0));
    }
    std::vector<std::size_t> row_off = dst_->piece_offsets(i, d);
    const auto& dst_degs = dst_->step(i).degrees;
    Matrix m(static_cast<std::size_t>(dst_->piece_dim(i, d)), cols, p);
    for (std::size_t g = 0; g < src_degs.size(); ++g) {
        int dg = src_degs[g];
        if (dg > d) continue;
        std::vector<std::size_t> v_off = dst_->piece_offsets(i, dg);
        for (std::size_t a = 0; a < dst_degs.size(); ++a) {
            int da = dst_degs[a];
            if (da > dg) continue;
            std::size_t ew = static_cast<std::size_t>(backend.dim(dg - da));
            Vec entry(lifts_[i][g].begin() + static_cast<std::ptrdiff_t>(v_off[a]),
                      lifts_[i][g].begin() + static_cast<std::ptrdiff_t>(v_off[a] + ew));
            if (std::all_of(entry.begin(), entry.end(), [](std::uint32_t x) { return x == 0; }))
                continue;
            Matrix block = backend.multiplication_map(entry, dg - da, d - dg);
            for (std::size_t r = 0; r < block.rows(); ++r)
                for (std::size_t c = 0; c < block.cols(); ++c)
                    if (block(r, c)) m.set(row_off[a] + r, col_off[g] + c, block(r, c));
        }
    }
    return m;
}

ChainMap ChainMap::build(const GradedResolution& res_dst, std::vector<std::vector<int>> src_degrees,
                         const std::vector<std::vector<Vec>>& src_vectors, const std::vector<Vec>& rhs0,
                         std::uint64_t tie_seed) {
    ChainMap cm;
    cm.dst_ = &res_dst;
    std::mt19937_64 rng(tie_seed);
    std::mt19937_64* rng_ptr = tie_seed == 0 ? nullptr : &rng;
    const int steps = static_cast<int>(src_degrees.size()) - 1;

    cm.src_degrees_ = std::move(src_degrees);
    cm.lifts_.assign(cm.src_degrees_.size(), {});

    // step 0: solve through the augmentation of the target resolution
    for (std::size_t g = 0; g < cm.src_degrees_[0].size(); ++g) {
        int dg = cm.src_degrees_[0][g];
        cm.lifts_[0].push_back(solve_with_tie_break(res_dst.map(0, dg), rhs0[g], rng_ptr));
    }

    for (int i = 1; i <= steps; ++i) {
        for (std::size_t g = 0; g < cm.src_degrees_[i].size(); ++g) {
            int dg = cm.src_degrees_[i][g];
            Vec rhs = cm.assembled(i - 1, dg).apply(src_vectors[i][g]);
            cm.lifts_[i].push_back(solve_with_tie_break(res_dst.map(i, dg), rhs, rng_ptr));
        }
    }
    return cm;
}

ChainMap lift_chain_map(const ModuleMap& f, const GradedResolution& res_src,
                        const GradedResolution& res_dst, std::uint64_t tie_seed) {
    assert(&res_src.backend() == &res_dst.backend() ||
           res_src.backend().kind() == res_dst.backend().kind());
    std::vector<std::vector<int>> degrees;
    std::vector<std::vector<Vec>> vectors;
    for (int i = 0; i <= res_src.steps(); ++i) {
        degrees.push_back(res_src.step(i).degrees);
        vectors.push_back(res_src.step(i).vectors);
    }
    std::vector<Vec> rhs0;
    for (std::size_t g = 0; g < res_src.step(0).degrees.size(); ++g) {
        int dg = res_src.step(0).degrees[g];
        rhs0.push_back(f.at(dg).apply(res_src.step(0).vectors[g]));
    }
    return ChainMap::build(res_dst, std::move(degrees), vectors, rhs0, tie_seed);
}

Matrix tor_induced_map(const ChainMap& cm, int i) { return cm.tor_map(i); }

ChainMap lift_base_change(const GradedResolution& res_q, const GradedResolution& res_p,
                          std::uint64_t tie_seed) {
    assert(res_q.backend().kind() == RingBackend::Kind::polynomial);
    const RingBackend& p_backend = res_p.backend();

    // base-change the source complex: reduce every differential entry block
    // to the hypersurface's normal form
    std::vector<std::vector<int>> degrees;
    std::vector<std::vector<Vec>> vectors;
    for (int i = 0; i <= res_q.steps(); ++i) {
        degrees.push_back(res_q.step(i).degrees);
        std::vector<Vec> vecs;
        if (i >= 1) {
            const auto& prev_degs = res_q.step(i - 1).degrees;
            for (std::size_t g = 0; g < res_q.step(i).degrees.size(); ++g) {
                int dg = res_q.step(i).degrees[g];
                std::vector<std::size_t> q_off = res_q.piece_offsets(i - 1, dg);
                Vec out;
                for (std::size_t a = 0; a < prev_degs.size(); ++a) {
                    int da = prev_degs[a];
                    std::size_t ew = static_cast<std::size_t>(res_q.backend().dim(dg - da));
                    Vec entry(res_q.step(i).vectors[g].begin() + static_cast<std::ptrdiff_t>(q_off[a]),
                              res_q.step(i).vectors[g].begin() + static_cast<std::ptrdiff_t>(q_off[a] + ew));
                    Vec reduced = dg - da < 0 ? Vec{} : p_backend.normal_form(dg - da, entry);
                    out.insert(out.end(), reduced.begin(), reduced.end());
                }
                vecs.push_back(std::move(out));
            }
        }
        vectors.push_back(std::move(vecs));
    }
    // identity on the module: the augmentation images are unchanged
    std::vector<Vec> rhs0;
    for (std::size_t g = 0; g < res_q.step(0).degrees.size(); ++g)
        rhs0.push_back(res_q.step(0).vectors[g]);
    return ChainMap::build(res_p, std::move(degrees), vectors, rhs0, tie_seed);
}

Matrix tor_base_change_map(const GradedResolution& res_q, const GradedResolution& res_p, int i) {
    return lift_base_change(res_q, res_p).tor_map(i);
}

bool GolodCriterionReport::holds() const {
    return std::all_of(projection_ranks.begin(), projection_ranks.end(),
                       [](std::int64_t r) { return r == 0; }) &&
           std::all_of(inclusion_ranks.begin(), inclusion_ranks.end(),
                       [](std::int64_t r) { return r == 0; });
}

GolodCriterionReport golod_criterion_check(std::shared_ptr<const GradedArtinianAlgebra> r,
                                           std::shared_ptr<const RingBackend> p_backend, int a, int n) {
    GolodCriterionReport rep;
    rep.a = a;
    rep.steps = n;

    // condition on the projection R -> R/m^a
    FiniteModule mod_r = FiniteModule::of_algebra(r);
    auto quot = std::make_shared<const GradedArtinianAlgebra>(quotient_algebra(*r, power_ideal(*r, a)));
    FiniteModule mod_quot = FiniteModule::of_algebra(quot);
    GradedResolution res_r = minimal_resolution(p_backend, mod_r, n);
    GradedResolution res_quot = minimal_resolution(p_backend, mod_quot, n);
    ChainMap proj = lift_chain_map(ModuleMap::identity_on_common(mod_r, mod_quot), res_r, res_quot);
    for (int i = 1; i <= n; ++i)
        rep.projection_ranks.push_back(static_cast<std::int64_t>(proj.tor_rank(i)));

    // condition on the inclusion m^{2a} -> m^a
    FiniteModule outer = FiniteModule::power_submodule(r, a);
    FiniteModule inner = FiniteModule::power_submodule(r, 2 * a);
    GradedResolution res_inner = minimal_resolution(p_backend, inner, n);
    GradedResolution res_outer = minimal_resolution(p_backend, outer, n);
    ChainMap incl = lift_chain_map(ModuleMap::identity_on_common(inner, outer), res_inner, res_outer);
    for (int i = 0; i <= n; ++i)
        rep.inclusion_ranks.push_back(static_cast<std::int64_t>(incl.tor_rank(i)));
    return rep;
}

SocleFactorizationReport socle_factorization_check(const GradedArtinianAlgebra& r, const Vec& h, int t) {
    const PolyRing& ring = r.ring();
    const int e = r.vars();
    const int s = r.socle_degree();
    const int rr = s + 1 - t;

    // the frame must make h monic in x_1; every other degree-t monomial
    // involves one of x_2..x_e
    Monomial x1t{std::vector<int>(e, 0)};
    x1t.exp[0] = t;
    std::size_t lead = ring.index_of(x1t);
    if (h[lead] == 0)
        throw CoordinateForm("the degree-" + std::to_string(t) + " form has no x_1^t term");

    SocleFactorizationReport rep;
    std::vector<Vec> linear;
    for (int j = 1; j < e; ++j) {
        Vec xj(static_cast<std::size_t>(ring.dim(1)), 0);
        xj[j] = 1;
        linear.push_back(r.normal_form(1, xj));
    }
    GradedIdeal tail = ideal_generated_in_degree_one(r, linear);
    GradedIdeal q = annihilator(r, tail);
    rep.q_total_dim = q.total_dim();

    rep.q_in_m_r = power_ideal(r, rr).contains(q);
    rep.q_not_in_m_r_plus_1 = !power_ideal(r, rr + 1).contains(q);

    // span of x_1^{t-1} * q against the socle piece m^s = R_s
    Monomial x1pow{std::vector<int>(e, 0)};
    x1pow.exp[0] = t - 1;
    Vec x1p(static_cast<std::size_t>(ring.dim(t - 1)), 0);
    x1p[ring.index_of(x1pow)] = 1;
    Vec x1p_r = r.normal_form(t - 1, x1p);

    std::vector<Vec> products;
    bool stray = false; // a nonzero product below the socle degree disproves the factorization
    for (int d = 0; d <= s; ++d) {
        const Subspace& qd = q.piece(d);
        for (std::size_t row = 0; row < qd.basis().rows(); ++row) {
            Vec prod = r.multiply(x1p_r, t - 1, qd.basis().row(row), d);
            if (d + t - 1 == s)
                products.push_back(std::move(prod));
            else if (d + t - 1 < s &&
                     !std::all_of(prod.begin(), prod.end(), [](std::uint32_t x) { return x == 0; }))
                stray = true;
        }
    }
    Subspace span = Subspace::span(products, static_cast<std::size_t>(r.dim(s)), r.modulus());
    rep.socle_product = !stray && span.is_full() && r.dim(s) == 1;
    return rep;
}

} // namespace apolar
