#include "apolar/homology.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>

namespace apolar {

RingBackend RingBackend::polynomial(std::shared_ptr<const PolyRing> ring) {
    RingBackend b;
    b.kind_ = Kind::polynomial;
    b.ring_ = std::move(ring);
    return b;
}

RingBackend RingBackend::hypersurface(std::shared_ptr<const PolyRing> ring, Vec h, int deg_h) {
    RingBackend b;
    b.kind_ = Kind::hypersurface;
    b.ring_ = std::move(ring);
    b.h_ = std::move(h);
    b.deg_h_ = deg_h;
    assert(deg_h >= 1);
    assert(std::any_of(b.h_.begin(), b.h_.end(), [](std::uint32_t c) { return c != 0; }));
    return b;
}

RingBackend RingBackend::artinian(std::shared_ptr<const GradedArtinianAlgebra> algebra) {
    RingBackend b;
    b.kind_ = Kind::artinian;
    b.ring_ = algebra->ring_ptr();
    b.algebra_ = std::move(algebra);
    return b;
}

std::optional<int> RingBackend::top_degree() const {
    if (kind_ == Kind::artinian) return algebra_->socle_degree();
    return std::nullopt;
}

const RingBackend::HyperPiece& RingBackend::hyper_piece(int d) const {
    assert(kind_ == Kind::hypersurface && d >= 0);
    std::lock_guard<std::mutex> lock(*cache_mutex_);
    while (static_cast<int>(hyper_.size()) <= d) {
        int deg = static_cast<int>(hyper_.size());
        std::vector<Vec> rows;
        if (deg >= deg_h_) {
            for (const Monomial& m : ring_->monomials(deg - deg_h_))
                rows.push_back(ring_->multiply_monomial(m, h_, deg_h_));
        }
        Subspace sub = Subspace::span(rows, static_cast<std::size_t>(ring_->dim(deg)), modulus());
        QuotientBasis q = quotient_basis(sub);
        hyper_.push_back(HyperPiece{std::move(q.kept), std::move(q.coords)});
    }
    return hyper_[d];
}

std::int64_t RingBackend::dim(int d) const {
    if (d < 0) return 0;
    switch (kind_) {
    case Kind::polynomial: return ring_->dim(d);
    case Kind::hypersurface: return ring_->dim(d) - ring_->dim(d - deg_h_);
    case Kind::artinian: return algebra_->dim(d);
    }
    return 0;
}

Vec RingBackend::normal_form(int d, const Vec& q) const {
    switch (kind_) {
    case Kind::polynomial: return q;
    case Kind::hypersurface: return hyper_piece(d).nf.apply(q);
    case Kind::artinian: return algebra_->normal_form(d, q);
    }
    return {};
}

Vec RingBackend::lift(int d, const Vec& a) const {
    switch (kind_) {
    case Kind::polynomial: return a;
    case Kind::hypersurface: {
        const HyperPiece& piece = hyper_piece(d);
        Vec q(static_cast<std::size_t>(ring_->dim(d)), 0);
        assert(a.size() == piece.basis.size());
        for (std::size_t i = 0; i < piece.basis.size(); ++i) q[piece.basis[i]] = a[i];
        return q;
    }
    case Kind::artinian: return algebra_->lift(d, a);
    }
    return {};
}

Vec RingBackend::multiply(const Vec& a, int da, const Vec& b, int db) const {
    if (dim(da + db) == 0) return Vec{};
    return normal_form(da + db, ring_->multiply(lift(da, a), da, lift(db, b), db));
}

Matrix RingBackend::multiplication_map(const Vec& a, int da, int d) const {
    std::size_t cols = static_cast<std::size_t>(dim(d));
    std::size_t rows = static_cast<std::size_t>(dim(d + da));
    Matrix m(rows, cols, modulus());
    if (rows == 0 || cols == 0) return m;
    if (kind_ == Kind::artinian) return algebra_->multiplication_map(a, da, d);
    Vec qa = lift(da, a);
    for (std::size_t j = 0; j < cols; ++j) {
        Vec unit(cols, 0);
        unit[j] = 1;
        Vec qb = lift(d, unit);
        Vec col = normal_form(d + da, ring_->multiply(qa, da, qb, d));
        for (std::size_t i = 0; i < rows; ++i)
            if (col[i]) m.set(i, j, col[i]);
    }
    return m;
}

const Matrix& RingBackend::variable_multiplication(int j, int d) const {
    if (kind_ == Kind::artinian && d >= 0 && d <= algebra_->socle_degree())
        return algebra_->variable_multiplication(j, d);
    auto key = std::make_pair(j, d);
    {
        std::lock_guard<std::mutex> lock(*cache_mutex_);
        auto it = varmul_.find(key);
        if (it != varmul_.end()) return it->second;
    }
    Vec xj(static_cast<std::size_t>(ring_->dim(1)), 0);
    xj[j] = 1;
    Matrix m = multiplication_map(normal_form(1, xj), 1, d);
    std::lock_guard<std::mutex> lock(*cache_mutex_);
    return varmul_.try_emplace(key, std::move(m)).first->second;
}

TruncatedIntegerSeries RingBackend::hilbert_series(int order) const {
    std::vector<std::int64_t> c(order + 1);
    for (int d = 0; d <= order; ++d) c[d] = dim(d);
    return TruncatedIntegerSeries(std::move(c), order);
}

FiniteModule FiniteModule::zero(int vars, std::uint32_t p) {
    FiniteModule m;
    m.vars_ = vars;
    m.p_ = p;
    m.lo_ = 0;
    m.hi_ = -1;
    return m;
}

FiniteModule FiniteModule::residue_field(int vars, std::uint32_t p) {
    FiniteModule m;
    m.vars_ = vars;
    m.p_ = p;
    m.lo_ = 0;
    m.hi_ = 0;
    m.dims_ = {1};
    m.action_.push_back(std::vector<Matrix>(vars, Matrix(0, 1, p)));
    return m;
}

FiniteModule FiniteModule::of_algebra(std::shared_ptr<const GradedArtinianAlgebra> r) {
    return power_submodule(std::move(r), 0);
}

FiniteModule FiniteModule::power_submodule(std::shared_ptr<const GradedArtinianAlgebra> r, int i) {
    const int s = r->socle_degree();
    if (i > s) return zero(r->vars(), r->modulus());
    FiniteModule m;
    m.vars_ = r->vars();
    m.p_ = r->modulus();
    m.lo_ = i;
    m.hi_ = s;
    for (int d = i; d <= s; ++d) {
        m.dims_.push_back(r->dim(d));
        std::vector<Matrix> acts;
        for (int j = 0; j < m.vars_; ++j) {
            if (d < s)
                acts.push_back(r->variable_multiplication(j, d));
            else
                acts.push_back(Matrix(0, static_cast<std::size_t>(r->dim(d)), m.p_));
        }
        m.action_.push_back(std::move(acts));
    }
    return m;
}

std::int64_t FiniteModule::dim(int d) const {
    if (d < lo_ || d > hi_) return 0;
    return dims_[d - lo_];
}

const Matrix& FiniteModule::action(int j, int d) const {
    assert(d >= lo_ && d <= hi_);
    return action_[d - lo_][j];
}

Vec FiniteModule::act_monomial(const Monomial& m, int from, Vec v) const {
    int d = from;
    for (int j = 0; j < vars_; ++j) {
        for (int rep = 0; rep < m.exp[j]; ++rep) {
            if (dim(d) == 0) return Vec(static_cast<std::size_t>(dim(from + m.degree())), 0);
            v = action(j, d).apply(v);
            ++d;
        }
    }
    return v;
}

std::vector<std::int64_t> FiniteModule::hilbert() const {
    std::vector<std::int64_t> h;
    for (int d = lo_; d <= hi_; ++d) h.push_back(dim(d));
    return h;
}

ModuleMap ModuleMap::identity_on_common(const FiniteModule& src, const FiniteModule& dst) {
    ModuleMap f;
    f.src = &src;
    f.dst = &dst;
    for (int d = src.lo(); d <= src.hi(); ++d) {
        if (src.dim(d) == 0 || dst.dim(d) == 0) continue;
        assert(src.dim(d) == dst.dim(d));
        f.mats.emplace(d, Matrix::identity(static_cast<std::size_t>(src.dim(d)), src.modulus()));
    }
    return f;
}

ModuleMap ModuleMap::zero(const FiniteModule& src, const FiniteModule& dst) {
    ModuleMap f;
    f.src = &src;
    f.dst = &dst;
    return f;
}

Matrix ModuleMap::at(int d) const {
    auto it = mats.find(d);
    if (it != mats.end()) return it->second;
    return Matrix(static_cast<std::size_t>(dst->dim(d)), static_cast<std::size_t>(src->dim(d)),
                  src->modulus());
}

BettiTable::BettiTable(std::vector<std::map<int, std::int64_t>> rows, std::vector<bool> complete)
    : rows_(std::move(rows)), complete_(std::move(complete)) {
    // drop zero entries so tables compare structurally
    for (auto& row : rows_)
        for (auto it = row.begin(); it != row.end();)
            it = it->second == 0 ? row.erase(it) : std::next(it);
}

std::int64_t BettiTable::at(int i, int j) const {
    if (i < 0 || i >= static_cast<int>(rows_.size())) return 0;
    auto it = rows_[i].find(j);
    return it == rows_[i].end() ? 0 : it->second;
}

std::int64_t BettiTable::total(int i) const {
    if (i < 0 || i >= static_cast<int>(rows_.size())) return 0;
    std::int64_t t = 0;
    for (const auto& [j, b] : rows_[i]) t += b;
    return t;
}

std::vector<std::int64_t> BettiTable::totals() const {
    std::vector<std::int64_t> t(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) t[i] = total(static_cast<int>(i));
    return t;
}

bool BettiTable::all_complete() const {
    return std::all_of(complete_.begin(), complete_.end(), [](bool b) { return b; });
}

void BettiTable::write_csv(std::ostream& out) const {
    out << "i,j,beta\n";
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (const auto& [j, b] : rows_[i]) out << i << ',' << j << ',' << b << '\n';
}

nlohmann::json BettiTable::to_json() const {
    nlohmann::json j;
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (const auto& [deg, b] : rows_[i])
            entries.push_back({{"i", i}, {"j", deg}, {"beta", b}});
    j["entries"] = entries;
    j["totals"] = totals();
    nlohmann::json flags = nlohmann::json::array();
    for (bool b : complete_) flags.push_back(b ? "complete" : "possibly-truncated");
    j["steps"] = flags;
    return j;
}

std::int64_t GradedResolution::piece_dim(int i, int d) const {
    std::int64_t t = 0;
    for (int g : steps_[i].degrees) t += backend_->dim(d - g);
    return t;
}

std::vector<std::size_t> GradedResolution::piece_offsets(int i, int d) const {
    std::vector<std::size_t> off;
    off.reserve(steps_[i].degrees.size() + 1);
    std::size_t cur = 0;
    for (int g : steps_[i].degrees) {
        off.push_back(cur);
        cur += static_cast<std::size_t>(std::max<std::int64_t>(backend_->dim(d - g), 0));
    }
    off.push_back(cur);
    return off;
}

const Matrix& GradedResolution::map(int i, int d) const {
    auto key = std::make_pair(i, d);
    {
        std::lock_guard<std::mutex> lock(*cache_mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }

    const std::uint32_t p = backend_->modulus();
    const Step& src = steps_[i];
    std::size_t cols = static_cast<std::size_t>(piece_dim(i, d));
    std::vector<std::size_t> col_off = piece_offsets(i, d);

    Matrix m(0, 0, p);
    if (i == 0) {
        std::size_t rows = static_cast<std::size_t>(module_.dim(d));
        m = Matrix(rows, cols, p);
        for (std::size_t g = 0; g < src.degrees.size(); ++g) {
            int dg = src.degrees[g];
            if (dg > d) continue;
            const auto& mons = backend_->ring().monomials(d - dg);
            std::size_t block = static_cast<std::size_t>(backend_->dim(d - dg));
            for (std::size_t c = 0; c < block; ++c) {
                Vec unit(block, 0);
                unit[c] = 1;
                Vec qrep = backend_->lift(d - dg, unit);
                // expand the lift over monomials and act on the generator
                Vec col(rows, 0);
                for (std::size_t k = 0; k < qrep.size(); ++k) {
                    if (qrep[k] == 0) continue;
                    Vec w = module_.act_monomial(mons[k], dg, src.vectors[g]);
                    for (std::size_t r = 0; r < rows; ++r)
                        col[r] = static_cast<std::uint32_t>(
                            (col[r] + static_cast<std::uint64_t>(qrep[k]) * w[r]) % p);
                }
                for (std::size_t r = 0; r < rows; ++r)
                    if (col[r]) m.set(r, col_off[g] + c, col[r]);
            }
        }
    } else {
        const Step& dst = steps_[i - 1];
        std::size_t rows = static_cast<std::size_t>(piece_dim(i - 1, d));
        std::vector<std::size_t> row_off = piece_offsets(i - 1, d);
        m = Matrix(rows, cols, p);
        for (std::size_t g = 0; g < src.degrees.size(); ++g) {
            int dg = src.degrees[g];
            if (dg > d) continue;
            std::vector<std::size_t> v_off = piece_offsets(i - 1, dg);
            for (std::size_t a = 0; a < dst.degrees.size(); ++a) {
                int da = dst.degrees[a];
                if (da > dg) continue;
                std::size_t ew = static_cast<std::size_t>(backend_->dim(dg - da));
                Vec entry(src.vectors[g].begin() + static_cast<std::ptrdiff_t>(v_off[a]),
                          src.vectors[g].begin() + static_cast<std::ptrdiff_t>(v_off[a] + ew));
                if (std::all_of(entry.begin(), entry.end(), [](std::uint32_t x) { return x == 0; }))
                    continue;
                Matrix block = backend_->multiplication_map(entry, dg - da, d - dg);
                for (std::size_t r = 0; r < block.rows(); ++r)
                    for (std::size_t c = 0; c < block.cols(); ++c)
                        if (block(r, c)) m.set(row_off[a] + r, col_off[g] + c, block(r, c));
            }
        }
    }
    std::lock_guard<std::mutex> lock(*cache_mutex_);
    return cache_.try_emplace(key, std::move(m)).first->second;
}

Vec GradedResolution::apply_variable(int i, int j, int d, const Vec& v) const {
    const Step& st = steps_[i];
    const std::uint64_t p = backend_->modulus();
    std::vector<std::size_t> src_off = piece_offsets(i, d);
    std::vector<std::size_t> dst_off = piece_offsets(i, d + 1);
    Vec out(static_cast<std::size_t>(piece_dim(i, d + 1)), 0);
    for (std::size_t g = 0; g < st.degrees.size(); ++g) {
        int dg = st.degrees[g];
        if (dg > d) continue;
        const Matrix& block = backend_->variable_multiplication(j, d - dg);
        for (std::size_t r = 0; r < block.rows(); ++r) {
            std::uint64_t acc = 0;
            for (std::size_t c = 0; c < block.cols(); ++c)
                acc += static_cast<std::uint64_t>(block(r, c)) * v[src_off[g] + c];
            if (acc) out[dst_off[g] + r] = static_cast<std::uint32_t>((out[dst_off[g] + r] + acc) % p);
        }
    }
    return out;
}

BettiTable GradedResolution::betti() const {
    std::vector<std::map<int, std::int64_t>> rows(steps_.size());
    std::vector<bool> complete(steps_.size());
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        complete[i] = steps_[i].complete;
        for (int g : steps_[i].degrees) ++rows[i][g];
    }
    return BettiTable(std::move(rows), std::move(complete));
}

std::vector<std::int64_t> GradedResolution::total_betti() const {
    std::vector<std::int64_t> t;
    for (const Step& s : steps_) t.push_back(static_cast<std::int64_t>(s.degrees.size()));
    return t;
}

bool GradedResolution::all_steps_complete() const {
    return std::all_of(steps_.begin(), steps_.end(), [](const Step& s) { return s.complete; });
}

bool GradedResolution::is_minimal() const {
    // a nonminimal differential has a unit entry, i.e. a nonzero scalar
    // between generators of equal degree
    for (int i = 1; i <= steps(); ++i) {
        const Step& src = steps_[i];
        const Step& dst = steps_[i - 1];
        for (std::size_t g = 0; g < src.degrees.size(); ++g) {
            std::vector<std::size_t> off = piece_offsets(i - 1, src.degrees[g]);
            for (std::size_t a = 0; a < dst.degrees.size(); ++a) {
                if (dst.degrees[a] != src.degrees[g]) continue;
                if (src.vectors[g][off[a]] != 0) return false;
            }
        }
    }
    return true;
}

bool GradedResolution::differentials_compose_to_zero() const {
    for (int i = 2; i <= steps(); ++i) {
        int lo = steps_[i].degrees.empty() ? degree_bound_ + 1 : steps_[i].degrees.front();
        for (int d = lo; d <= degree_bound_; ++d) {
            if (piece_dim(i, d) == 0) continue;
            Matrix prod = map(i - 1, d) * map(i, d);
            if (!prod.is_zero()) return false;
        }
    }
    return true;
}

int default_degree_bound(const RingBackend& backend, const FiniteModule& m, int n) {
    if (m.is_zero()) return 0;
    switch (backend.kind()) {
    case RingBackend::Kind::polynomial:
        // finite length over the polynomial ring: regularity equals the top
        // degree, so step i generates in degrees <= hi + i and stops at e
        return m.hi() + backend.vars();
    case RingBackend::Kind::hypersurface: {
        int t = backend.relation_degree();
        return m.hi() + n + ((n + 1) / 2) * t;
    }
    case RingBackend::Kind::artinian:
        return m.hi() + n * backend.algebra().socle_degree();
    }
    return m.hi() + n;
}

namespace {

// largest degree in which step i+1 of a minimal resolution can acquire
// generators, given the generator degrees already present at step i
int next_step_degree_cap(const RingBackend& backend, const FiniteModule& m, int next_step,
                         int max_gen_degree) {
    switch (backend.kind()) {
    case RingBackend::Kind::polynomial:
        // the resolution stops at the number of variables
        return next_step > backend.vars() ? -1 : m.hi() + next_step;
    case RingBackend::Kind::hypersurface:
        return m.hi() + next_step + ((next_step + 1) / 2) * backend.relation_degree();
    case RingBackend::Kind::artinian:
        return max_gen_degree + backend.algebra().socle_degree();
    }
    return max_gen_degree;
}

} // namespace

GradedResolution minimal_resolution(std::shared_ptr<const RingBackend> backend, FiniteModule m,
                                    int n, int degree_bound) {
    assert(n >= 0);
    GradedResolution res;
    res.backend_ = backend;
    res.module_ = std::move(m);
    const FiniteModule& mod = res.module_;
    if (degree_bound < 0) degree_bound = default_degree_bound(*backend, mod, n);
    res.degree_bound_ = degree_bound;
    const std::uint32_t p = backend->modulus();

    // step 0: minimal generators of the module
    {
        GradedResolution::Step st;
        st.complete = mod.is_zero() || mod.hi() <= degree_bound;
        for (int d = mod.lo(); d <= std::min(mod.hi(), degree_bound); ++d) {
            std::size_t nd = static_cast<std::size_t>(mod.dim(d));
            if (nd == 0) continue;
            std::vector<Vec> image;
            if (d > mod.lo() && mod.dim(d - 1) > 0) {
                for (int j = 0; j < mod.vars(); ++j) {
                    const Matrix& act = mod.action(j, d - 1);
                    for (std::size_t c = 0; c < act.cols(); ++c) image.push_back(act.column(c));
                }
            }
            Subspace v = Subspace::span(image, nd, p);
            QuotientBasis q = quotient_basis(v);
            for (std::size_t k : q.kept) {
                Vec unit(nd, 0);
                unit[k] = 1;
                st.degrees.push_back(d);
                st.vectors.push_back(std::move(unit));
            }
        }
        res.steps_.push_back(std::move(st));
    }

    for (int i = 1; i <= n; ++i) {
        const GradedResolution::Step& prev = res.steps_[i - 1];
        GradedResolution::Step st;
        if (prev.degrees.empty()) {
            st.complete = prev.complete;
            res.steps_.push_back(std::move(st));
            continue;
        }
        int lo = prev.degrees.front() + 1; // kernels sit inside m*F_{i-1}
        int max_prev = *std::max_element(prev.degrees.begin(), prev.degrees.end());
        int cap = next_step_degree_cap(*backend, mod, i, max_prev);
        st.complete = prev.complete && cap <= degree_bound;

        std::vector<Vec> prev_kernel; // kernel basis at degree d-1
        for (int d = lo - 1; d <= degree_bound; ++d) {
            std::vector<Vec> kernel =
                res.piece_dim(i - 1, d) == 0 ? std::vector<Vec>{} : res.map(i - 1, d).kernel_basis();
            if (d >= lo && !kernel.empty()) {
                // span of the degree-d piece of (irrelevant ideal) * kernel
                IncrementalSpan span(static_cast<std::size_t>(res.piece_dim(i - 1, d)), p);
                if (!prev_kernel.empty()) {
                    for (int j = 0; j < backend->vars(); ++j)
                        for (const Vec& v : prev_kernel)
                            span.insert(res.apply_variable(i - 1, j, d - 1, v));
                }
                for (const Vec& v : kernel) {
                    if (!span.insert(v)) continue;
                    st.degrees.push_back(d);
                    st.vectors.push_back(v);
                }
            }
            prev_kernel = std::move(kernel);
        }
        res.steps_.push_back(std::move(st));
    }
    return res;
}

bool betti_euler_check(const RingBackend& backend, const FiniteModule& m,
                       const std::vector<std::vector<int>>& step_degrees, int window_top) {
    for (int d = 0; d <= window_top; ++d) {
        std::int64_t acc = 0;
        std::int64_t sign = 1;
        for (const auto& degs : step_degrees) {
            for (int g : degs) acc += sign * backend.dim(d - g);
            sign = -sign;
        }
        if (acc != m.dim(d)) return false;
    }
    return true;
}

bool resolution_audit(const GradedResolution& res) {
    const auto& last = res.step(res.steps());
    int window = res.degree_bound();
    if (!last.degrees.empty()) window = std::min(window, last.degrees.front());
    std::vector<std::vector<int>> degs;
    for (int i = 0; i <= res.steps(); ++i) degs.push_back(res.step(i).degrees);
    return betti_euler_check(res.backend(), res.module(), degs, window);
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int e, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // lexicographic enumeration of size-subsets of {0..e-1}
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < e; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

BettiTable koszul_betti(const PolyRing& ring, const FiniteModule& m) {
    const int e = ring.vars();
    const std::uint32_t p = ring.modulus();
    std::vector<std::map<int, std::int64_t>> rows(e + 1);
    if (m.is_zero()) return BettiTable(std::move(rows), std::vector<bool>(e + 1, true));

    std::vector<std::vector<std::vector<int>>> subsets(e + 1);
    for (int i = 0; i <= e; ++i) subsets[i] = subsets_of_size(e, i);

    // index of a subset within the lexicographic list of its size
    auto subset_index = [&](const std::vector<int>& s, int size) {
        const auto& list = subsets[size];
        auto it = std::lower_bound(list.begin(), list.end(), s);
        assert(it != list.end() && *it == s);
        return static_cast<std::size_t>(it - list.begin());
    };

    // matrix of the Koszul differential K_i tensor M at internal degree d
    auto koszul_map = [&](int i, int d) -> Matrix {
        std::int64_t col_block = m.dim(d - i);
        std::int64_t row_block = m.dim(d - i + 1);
        std::size_t cols = static_cast<std::size_t>(col_block) * subsets[i].size();
        std::size_t rws =
            i == 0 ? 0 : static_cast<std::size_t>(row_block) * subsets[i - 1].size();
        Matrix mat(rws, cols, p);
        if (i == 0 || col_block == 0 || row_block == 0) return mat;
        for (std::size_t si = 0; si < subsets[i].size(); ++si) {
            const auto& s = subsets[i][si];
            for (int l = 0; l < i; ++l) {
                std::vector<int> sub = s;
                sub.erase(sub.begin() + l);
                std::size_t ti = subset_index(sub, i - 1);
                const Matrix& act = m.action(s[l], d - i);
                std::uint32_t sign = l % 2 == 0 ? 1 : p - 1;
                for (std::size_t r = 0; r < act.rows(); ++r)
                    for (std::size_t c = 0; c < act.cols(); ++c)
                        if (act(r, c))
                            mat.set(ti * static_cast<std::size_t>(row_block) + r,
                                    si * static_cast<std::size_t>(col_block) + c,
                                    static_cast<std::int64_t>(
                                        static_cast<std::uint64_t>(sign) * act(r, c) % p));
            }
        }
        return mat;
    };

    for (int i = 0; i <= e; ++i) {
        for (int d = m.lo() + i; d <= m.hi() + i; ++d) {
            std::int64_t piece = m.dim(d - i) * static_cast<std::int64_t>(subsets[i].size());
            if (piece == 0) continue;
            Matrix di = koszul_map(i, d);
            std::int64_t ker = piece - static_cast<std::int64_t>(di.rank());
            std::int64_t im_next = 0;
            if (i < e) im_next = static_cast<std::int64_t>(koszul_map(i + 1, d).rank());
            std::int64_t beta = ker - im_next;
            if (beta != 0) rows[i][d] += beta;
        }
    }
    return BettiTable(std::move(rows), std::vector<bool>(e + 1, true));
}

PoincareResult poincare_truncated(std::shared_ptr<const RingBackend> backend, const FiniteModule& m,
                                  int n, int degree_bound) {
    GradedResolution res = minimal_resolution(std::move(backend), m, n, degree_bound);
    std::vector<std::int64_t> totals = res.total_betti();
    PoincareResult out{TruncatedIntegerSeries(std::move(totals), n), res.all_steps_complete()};
    return out;
}

} // namespace apolar
