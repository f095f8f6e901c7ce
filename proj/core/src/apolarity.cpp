#include "apolar/apolarity.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <ostream>
#include <random>

namespace apolar {

namespace {

std::uint32_t uniform_residue(std::mt19937_64& rng, std::uint32_t p) {
    // rejection sampling keeps the draw uniform and platform-independent
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % p;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return static_cast<std::uint32_t>(x % p);
}

} // namespace

DualGenerator DualGenerator::from_terms(const DualTermList& terms, std::uint32_t prime) {
    DualGenerator f;
    f.vars = terms.vars;
    f.degree = terms.degree;
    f.prime = prime;
    PolyRing ring(terms.vars, prime);
    f.coeffs.assign(static_cast<std::size_t>(ring.dim(terms.degree)), 0);
    for (const auto& [c, m] : terms.terms) {
        std::size_t k = ring.index_of(m);
        std::int64_t v = (static_cast<std::int64_t>(f.coeffs[k]) + c) % static_cast<std::int64_t>(prime);
        if (v < 0) v += prime;
        f.coeffs[k] = static_cast<std::uint32_t>(v);
    }
    f.validate();
    return f;
}

DualGenerator DualGenerator::parse(std::istream& in, std::uint32_t prime) {
    return from_terms(parse_dual_terms(in), prime);
}

void DualGenerator::write(std::ostream& out) const {
    PolyRing ring(vars, prime);
    const auto& mons = ring.monomials(degree);
    DualTermList terms;
    terms.vars = vars;
    terms.degree = degree;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k]) terms.terms.emplace_back(coeffs[k], mons[k]);
    write_dual_terms(out, terms);
}

bool DualGenerator::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

void DualGenerator::validate() const {
    if (!is_prime(prime) || prime == 2) throw BadPrime("prime " + std::to_string(prime) + " is not an odd prime");
    if (static_cast<int>(prime) <= degree)
        throw BadPrime("prime " + std::to_string(prime) + " must exceed the socle degree " + std::to_string(degree));
    if (is_zero()) throw ZeroGenerator("dual generator is zero");
}

DualGenerator sample_dual_generator(int e, int s, std::uint32_t p, std::uint64_t seed) {
    if (e < 1 || s < 1) throw Error("InvalidParameters", "need e >= 1 and s >= 1");
    if (!is_prime(p) || p == 2 || static_cast<int>(p) <= s)
        throw BadPrime("need an odd prime p > s, got p=" + std::to_string(p));
    PolyRing ring(e, p);
    std::mt19937_64 rng(seed);
    DualGenerator f;
    f.vars = e;
    f.degree = s;
    f.prime = p;
    do {
        f.coeffs.assign(static_cast<std::size_t>(ring.dim(s)), 0);
        for (auto& c : f.coeffs) c = uniform_residue(rng, p);
    } while (f.is_zero());
    return f;
}

Matrix sample_invertible_matrix(int e, std::uint32_t p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    while (true) {
        Matrix a(e, e, p);
        for (int i = 0; i < e; ++i)
            for (int j = 0; j < e; ++j) a.set(i, j, uniform_residue(rng, p));
        if (a.rank() == static_cast<std::size_t>(e)) return a;
    }
}

std::vector<Subspace> apolar_ideal(const DualGenerator& f) {
    f.validate();
    PolyRing ring(f.vars, f.prime);
    std::vector<Subspace> ideal;
    for (int d = 0; d <= f.degree; ++d) {
        Matrix pairing = ring.contraction_matrix(f.coeffs, f.degree, d);
        std::vector<Vec> kernel = pairing.kernel_basis();
        ideal.push_back(Subspace::span(kernel, static_cast<std::size_t>(ring.dim(d)), f.prime));
    }
    return ideal;
}

GradedIdeal::GradedIdeal(const GradedArtinianAlgebra& algebra, std::vector<Subspace> pieces)
    : pieces_(std::move(pieces)) {
    assert(static_cast<int>(pieces_.size()) == algebra.socle_degree() + 1);
    for (int d = 0; d <= algebra.socle_degree(); ++d)
        assert(pieces_[d].ambient() == static_cast<std::size_t>(algebra.dim(d)));
}

const Subspace& GradedIdeal::piece(int d) const {
    assert(d >= 0 && d < static_cast<int>(pieces_.size()));
    return pieces_[d];
}

std::int64_t GradedIdeal::dim(int d) const {
    if (d < 0 || d >= static_cast<int>(pieces_.size())) return 0;
    return static_cast<std::int64_t>(pieces_[d].dim());
}

std::int64_t GradedIdeal::total_dim() const {
    std::int64_t t = 0;
    for (const auto& s : pieces_) t += static_cast<std::int64_t>(s.dim());
    return t;
}

bool GradedIdeal::is_zero() const { return total_dim() == 0; }

bool GradedIdeal::contains(const GradedIdeal& other) const {
    assert(pieces_.size() == other.pieces_.size());
    for (std::size_t d = 0; d < pieces_.size(); ++d)
        if (!pieces_[d].contains(other.pieces_[d])) return false;
    return true;
}

GradedArtinianAlgebra GradedArtinianAlgebra::from_dual_generator(const DualGenerator& f) {
    auto ring = std::make_shared<const PolyRing>(f.vars, f.prime);
    return from_ideal(ring, f.degree, apolar_ideal(f));
}

GradedArtinianAlgebra GradedArtinianAlgebra::from_ideal(std::shared_ptr<const PolyRing> ring, int top,
                                                        std::vector<Subspace> ideal_pieces) {
    assert(static_cast<int>(ideal_pieces.size()) == top + 1);
    GradedArtinianAlgebra r;
    r.ring_ = std::move(ring);
    if (!ideal_pieces.empty() && ideal_pieces[0].dim() > 0)
        throw UnitIdeal("the ideal contains a unit");
    // trim fully-collapsed top degrees so socle_degree() is the true top
    int t = top;
    while (t >= 0 && ideal_pieces[t].is_full()) --t;
    if (t < 0) throw UnitIdeal("the quotient is zero");
    r.top_ = t;
    for (int d = 0; d <= t; ++d) {
        QuotientBasis q = quotient_basis(ideal_pieces[d]);
        Piece piece;
        piece.basis = std::move(q.kept);
        piece.nf = std::move(q.coords);
        piece.ideal = ideal_pieces[d].basis();
        r.pieces_.push_back(std::move(piece));
    }
    return r;
}

std::int64_t GradedArtinianAlgebra::dim(int d) const {
    if (d < 0 || d > top_) return 0;
    return static_cast<std::int64_t>(pieces_[d].basis.size());
}

std::int64_t GradedArtinianAlgebra::length() const {
    std::int64_t t = 0;
    for (int d = 0; d <= top_; ++d) t += dim(d);
    return t;
}

std::vector<std::int64_t> GradedArtinianAlgebra::hilbert_function() const {
    std::vector<std::int64_t> h(top_ + 1);
    for (int d = 0; d <= top_; ++d) h[d] = dim(d);
    return h;
}

int GradedArtinianAlgebra::initial_ideal_degree() const {
    for (int d = 1; d <= top_; ++d)
        if (ideal_dim(d) > 0) return d;
    return top_ + 1;
}

const std::vector<std::size_t>& GradedArtinianAlgebra::basis_monomials(int d) const {
    assert(d >= 0 && d <= top_);
    return pieces_[d].basis;
}

const Matrix& GradedArtinianAlgebra::ideal_basis(int d) const {
    assert(d >= 0 && d <= top_);
    return pieces_[d].ideal;
}

std::int64_t GradedArtinianAlgebra::ideal_dim(int d) const {
    if (d < 0) return 0;
    if (d > top_) return ring_->dim(d);
    return static_cast<std::int64_t>(pieces_[d].ideal.rows());
}

Vec GradedArtinianAlgebra::normal_form(int d, const Vec& q) const {
    if (d < 0 || d > top_) return Vec{};
    return pieces_[d].nf.apply(q);
}

Vec GradedArtinianAlgebra::lift(int d, const Vec& r) const {
    assert(d >= 0 && d <= top_);
    Vec q(static_cast<std::size_t>(ring_->dim(d)), 0);
    const auto& basis = pieces_[d].basis;
    assert(r.size() == basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) q[basis[i]] = r[i];
    return q;
}

Vec GradedArtinianAlgebra::multiply(const Vec& a, int da, const Vec& b, int db) const {
    if (da + db > top_) return Vec{};
    Vec qa = lift(da, a), qb = lift(db, b);
    return normal_form(da + db, ring_->multiply(qa, da, qb, db));
}

Matrix GradedArtinianAlgebra::multiplication_map(const Vec& a, int da, int d) const {
    std::size_t cols = static_cast<std::size_t>(dim(d));
    std::size_t rows = static_cast<std::size_t>(dim(d + da));
    Matrix m(rows, cols, modulus());
    if (rows == 0 || cols == 0) return m;
    Vec qa = lift(da, a);
    const auto& mons = ring_->monomials(d);
    for (std::size_t j = 0; j < cols; ++j) {
        Vec prod = ring_->multiply_monomial(mons[pieces_[d].basis[j]], qa, da);
        Vec col = normal_form(d + da, prod);
        for (std::size_t i = 0; i < rows; ++i)
            if (col[i]) m.set(i, j, col[i]);
    }
    return m;
}

void GradedArtinianAlgebra::build_varmul() const {
    std::lock_guard<std::mutex> lock(*varmul_mutex_);
    if (!varmul_.empty()) return;
    const int e = vars();
    varmul_.resize(top_ + 1);
    for (int d = 0; d <= top_; ++d) {
        varmul_[d].reserve(e);
        for (int j = 0; j < e; ++j) {
            Vec xj(static_cast<std::size_t>(ring_->dim(1)), 0);
            xj[j] = 1;
            varmul_[d].push_back(multiplication_map(normal_form(1, xj), 1, d));
        }
    }
}

const Matrix& GradedArtinianAlgebra::variable_multiplication(int j, int d) const {
    assert(d >= 0 && d <= top_);
    build_varmul();
    return varmul_[d][j];
}

nlohmann::json GradedArtinianAlgebra::to_json() const {
    nlohmann::json j;
    j["e"] = vars();
    j["s"] = top_;
    j["p"] = modulus();
    j["hilbert"] = hilbert_function();
    nlohmann::json bases = nlohmann::json::array();
    nlohmann::json ideal = nlohmann::json::array();
    for (int d = 0; d <= top_; ++d) {
        nlohmann::json degree_basis = nlohmann::json::array();
        for (std::size_t idx : pieces_[d].basis)
            degree_basis.push_back(ring_->monomials(d)[idx].exp);
        bases.push_back(degree_basis);
        nlohmann::json degree_ideal = nlohmann::json::array();
        for (std::size_t r = 0; r < pieces_[d].ideal.rows(); ++r)
            degree_ideal.push_back(pieces_[d].ideal.row(r));
        ideal.push_back(degree_ideal);
    }
    j["basis_monomials"] = bases;
    j["ideal_bases"] = ideal;
    return j;
}

GradedIdeal power_ideal(const GradedArtinianAlgebra& r, int i) {
    assert(i >= 0 && i <= r.socle_degree() + 1);
    std::vector<Subspace> pieces;
    for (int d = 0; d <= r.socle_degree(); ++d) {
        std::size_t n = static_cast<std::size_t>(r.dim(d));
        pieces.push_back(d >= i ? Subspace::full(n, r.modulus()) : Subspace(n, r.modulus()));
    }
    return GradedIdeal(r, std::move(pieces));
}

GradedIdeal ideal_generated_in_degree_one(const GradedArtinianAlgebra& r, const std::vector<Vec>& gens) {
    const int s = r.socle_degree();
    std::vector<Subspace> pieces;
    pieces.emplace_back(static_cast<std::size_t>(r.dim(0)), r.modulus());
    std::vector<Vec> current = gens;
    for (int d = 1; d <= s; ++d) {
        Subspace span = Subspace::span(current, static_cast<std::size_t>(r.dim(d)), r.modulus());
        pieces.push_back(span);
        if (d < s) {
            std::vector<Vec> next;
            for (std::size_t row = 0; row < span.basis().rows(); ++row) {
                Vec v = span.basis().row(row);
                for (int jv = 0; jv < r.vars(); ++jv)
                    next.push_back(r.variable_multiplication(jv, d).apply(v));
            }
            current = std::move(next);
        }
    }
    return GradedIdeal(r, std::move(pieces));
}

GradedIdeal annihilator(const GradedArtinianAlgebra& r, const GradedIdeal& j) {
    const int s = r.socle_degree();
    std::vector<Subspace> pieces;
    for (int d = 0; d <= s; ++d) {
        std::size_t n = static_cast<std::size_t>(r.dim(d));
        // stack the multiplication maps against every graded piece of J
        Matrix stacked(0, n, r.modulus());
        for (int c = 0; c + d <= s; ++c) {
            const Subspace& jc = j.piece(c);
            for (std::size_t row = 0; row < jc.basis().rows(); ++row) {
                Matrix mul = r.multiplication_map(jc.basis().row(row), c, d);
                stacked = Matrix::stack_rows(stacked, mul);
            }
        }
        pieces.push_back(Subspace::span(stacked.kernel_basis(), n, r.modulus()));
    }
    return GradedIdeal(r, std::move(pieces));
}

GradedIdeal socle(const GradedArtinianAlgebra& r) {
    return annihilator(r, power_ideal(r, 1));
}

GradedArtinianAlgebra quotient_algebra(const GradedArtinianAlgebra& r, const GradedIdeal& j) {
    if (j.dim(0) > 0) throw UnitIdeal("quotient by an ideal containing a unit");
    const int s = r.socle_degree();
    std::vector<Subspace> ideal_pieces;
    for (int d = 0; d <= s; ++d) {
        std::vector<Vec> rows;
        const Matrix& old_ideal = r.ideal_basis(d);
        for (std::size_t i = 0; i < old_ideal.rows(); ++i) rows.push_back(old_ideal.row(i));
        const Subspace& jd = j.piece(d);
        for (std::size_t i = 0; i < jd.basis().rows(); ++i)
            rows.push_back(r.lift(d, jd.basis().row(i)));
        ideal_pieces.push_back(Subspace::span(rows, static_cast<std::size_t>(r.ring().dim(d)), r.modulus()));
    }
    return GradedArtinianAlgebra::from_ideal(r.ring_ptr(), s, std::move(ideal_pieces));
}

DualGenerator change_coordinates(const DualGenerator& f, const Matrix& subst) {
    f.validate();
    PolyRing ring(f.vars, f.prime);
    const std::uint32_t p = f.prime;
    auto inv = inverse(subst);
    if (!inv) throw Error("SingularMatrix", "coordinate change matrix is singular");
    Matrix dual_subst = inv->transposed();

    // divided-power coordinates <-> polynomial coordinates differ by
    // factorials of the exponents; p > s keeps them invertible
    const auto& mons = ring.monomials(f.degree);
    auto factorial_of = [&](const Monomial& m) {
        std::uint64_t v = 1;
        for (int x : m.exp)
            for (int i = 2; i <= x; ++i) v = v * static_cast<std::uint64_t>(i) % p;
        return static_cast<std::uint32_t>(v);
    };
    Vec poly(f.coeffs.size());
    for (std::size_t k = 0; k < mons.size(); ++k)
        poly[k] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(f.coeffs[k]) *
                                             mod_inverse(factorial_of(mons[k]), p) % p);
    Vec moved = ring.substitution_matrix(dual_subst, f.degree).apply(poly);
    DualGenerator g = f;
    for (std::size_t k = 0; k < mons.size(); ++k)
        g.coeffs[k] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(moved[k]) *
                                                 factorial_of(mons[k]) % p);
    g.validate();
    return g;
}

GradedArtinianAlgebra change_coordinates(const GradedArtinianAlgebra& r, const Matrix& subst) {
    if (!inverse(subst)) throw Error("SingularMatrix", "coordinate change matrix is singular");
    const int s = r.socle_degree();
    std::vector<Subspace> ideal_pieces;
    for (int d = 0; d <= s; ++d) {
        Matrix sub = r.ring().substitution_matrix(subst, d);
        std::vector<Vec> rows;
        const Matrix& old_ideal = r.ideal_basis(d);
        for (std::size_t i = 0; i < old_ideal.rows(); ++i)
            rows.push_back(sub.apply(old_ideal.row(i)));
        ideal_pieces.push_back(Subspace::span(rows, static_cast<std::size_t>(r.ring().dim(d)), r.modulus()));
    }
    return GradedArtinianAlgebra::from_ideal(r.ring_ptr(), s, std::move(ideal_pieces));
}

DualGenerator generic_coordinate_change(const DualGenerator& f, std::uint64_t seed) {
    return change_coordinates(f, sample_invertible_matrix(f.vars, f.prime, seed));
}

GradedArtinianAlgebra generic_coordinate_change(const GradedArtinianAlgebra& r, std::uint64_t seed) {
    return change_coordinates(r, sample_invertible_matrix(r.vars(), r.modulus(), seed));
}

} // namespace apolar
