#include "apolar/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace apolar {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    // extended Euclid; a != 0 mod p
    if (a % p == 0) throw std::domain_error("mod_inverse of zero");
    std::int64_t r0 = p, r1 = a % p, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    std::int64_t inv = s0 % p;
    if (inv < 0) inv += p;
    return static_cast<std::uint32_t>(inv);
}

namespace {

std::uint32_t reduce(std::int64_t value, std::uint32_t p) {
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

} // namespace

Fp::Fp(std::int64_t value, std::uint32_t p) : p_(p) {
    if (p < 3 || !is_prime(p)) throw BadPrime("modulus must be an odd prime, got " + std::to_string(p));
    r_ = reduce(value, p);
}

Fp Fp::operator-() const { return Fp(r_ == 0 ? 0 : p_ - r_, p_); }

Fp Fp::inverse() const { return Fp(mod_inverse(r_, p_), p_); }

Fp operator+(Fp a, Fp b) {
    assert(a.p_ == b.p_);
    std::uint32_t s = a.r_ + b.r_;
    if (s >= a.p_) s -= a.p_;
    return Fp(s, a.p_);
}

Fp operator-(Fp a, Fp b) {
    assert(a.p_ == b.p_);
    std::uint32_t s = a.r_ + a.p_ - b.r_;
    if (s >= a.p_) s -= a.p_;
    return Fp(s, a.p_);
}

Fp operator*(Fp a, Fp b) {
    assert(a.p_ == b.p_);
    return Fp(static_cast<std::uint64_t>(a.r_) * b.r_ % a.p_, a.p_);
}

Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

Matrix::Matrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

Matrix Matrix::identity(std::size_t n, std::uint32_t p) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols, std::uint32_t p) {
    Matrix m(rows.size(), cols, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        assert(rows[i].size() == cols);
        std::copy(rows[i].begin(), rows[i].end(), m.a_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows, std::uint32_t p) {
    Matrix m(rows, cols.size(), p);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        assert(cols[j].size() == rows);
        for (std::size_t i = 0; i < rows; ++i) m.a_[i * cols.size() + j] = cols[j][i];
    }
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, std::int64_t value) {
    a_[i * cols_ + j] = reduce(value, p_);
}

Vec Matrix::row(std::size_t i) const {
    return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = a_[i * cols_ + j];
    return v;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](std::uint32_t x) { return x == 0; });
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.a_[j * rows_ + i] = a_[i * cols_ + j];
    return t;
}

Vec Matrix::apply(const Vec& v) const {
    assert(v.size() == cols_);
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        const std::uint32_t* r = a_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j) acc += static_cast<std::uint64_t>(r[j]) * v[j];
        out[i] = static_cast<std::uint32_t>(acc % p_);
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_ && a.p_ == b.p_);
    Matrix c(a.rows_, b.cols_, a.p_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            std::uint64_t f = a.a_[i * a.cols_ + k];
            if (f == 0) continue;
            const std::uint32_t* brow = b.a_.data() + k * b.cols_;
            std::uint32_t* crow = c.a_.data() + i * b.cols_;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                crow[j] = static_cast<std::uint32_t>((crow[j] + f * brow[j]) % a.p_);
            }
        }
    }
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_ && a.a_ == b.a_;
}

Matrix Matrix::stack_rows(const Matrix& top, const Matrix& bottom) {
    assert(top.cols_ == bottom.cols_ && top.p_ == bottom.p_);
    Matrix m(top.rows_ + bottom.rows_, top.cols_, top.p_);
    std::copy(top.a_.begin(), top.a_.end(), m.a_.begin());
    std::copy(bottom.a_.begin(), bottom.a_.end(), m.a_.begin() + static_cast<std::ptrdiff_t>(top.a_.size()));
    return m;
}

Matrix Matrix::concat_cols(const Matrix& left, const Matrix& right) {
    assert(left.rows_ == right.rows_ && left.p_ == right.p_);
    Matrix m(left.rows_, left.cols_ + right.cols_, left.p_);
    for (std::size_t i = 0; i < left.rows_; ++i) {
        std::copy(left.a_.begin() + static_cast<std::ptrdiff_t>(i * left.cols_),
                  left.a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * left.cols_),
                  m.a_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
        std::copy(right.a_.begin() + static_cast<std::ptrdiff_t>(i * right.cols_),
                  right.a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * right.cols_),
                  m.a_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_ + left.cols_));
    }
    return m;
}

Echelon Matrix::echelon() const {
    // lazy reduction: rows accumulate in 64-bit and are reduced only when
    // they pivot or when an entry is inspected. Each elimination adds less
    // than 2^30, keeping sums far from overflow at this scale.
    Echelon e{*this, {}};
    std::vector<std::uint64_t> w(a_.begin(), a_.end());
    const std::uint64_t p = p_;
    std::size_t pr = 0; // next pivot row
    for (std::size_t j = 0; j < cols_ && pr < rows_; ++j) {
        std::size_t piv = rows_;
        for (std::size_t i = pr; i < rows_; ++i) {
            w[i * cols_ + j] %= p;
            if (w[i * cols_ + j] != 0) {
                piv = i;
                break;
            }
        }
        if (piv == rows_) continue;
        if (piv != pr)
            std::swap_ranges(w.begin() + static_cast<std::ptrdiff_t>(piv * cols_),
                             w.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols_),
                             w.begin() + static_cast<std::ptrdiff_t>(pr * cols_));
        std::uint64_t* prow = w.data() + pr * cols_;
        const std::uint64_t inv = mod_inverse(static_cast<std::uint32_t>(prow[j]), p_);
        for (std::size_t k = j; k < cols_; ++k) prow[k] = prow[k] % p * inv % p;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == pr) continue;
            std::uint64_t* rowi = w.data() + i * cols_;
            const std::uint64_t f = rowi[j] % p;
            if (f == 0) {
                rowi[j] = 0;
                continue;
            }
            const std::uint64_t nf = p - f;
            for (std::size_t k = j; k < cols_; ++k) rowi[k] += nf * prow[k];
        }
        e.pivots.push_back(j);
        ++pr;
    }
    std::vector<std::uint32_t>& out = e.reduced.a_;
    for (std::size_t idx = 0; idx < w.size(); ++idx)
        out[idx] = static_cast<std::uint32_t>(w[idx] % p);
    return e;
}

std::size_t Matrix::rank() const { return echelon().pivots.size(); }

std::vector<Vec> Matrix::kernel_basis() const {
    Echelon e = echelon();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t j : e.pivots) is_pivot[j] = true;
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (is_pivot[j]) continue;
        Vec v(cols_, 0);
        v[j] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            std::uint32_t c = e.reduced(r, j);
            if (c != 0) v[e.pivots[r]] = p_ - c;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    assert(a.rows() == b.rows() && a.modulus() == b.modulus());
    Matrix aug = Matrix::concat_cols(a, b);
    Echelon e = aug.echelon();
    for (std::size_t j : e.pivots)
        if (j >= a.cols()) return std::nullopt; // inconsistent column
    Matrix x(a.cols(), b.cols(), a.modulus());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.set(e.pivots[r], j, e.reduced(r, a.cols() + j));
    return x;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    auto x = solve(a, Matrix::from_columns({b}, a.rows(), a.modulus()));
    if (!x) return std::nullopt;
    return x->column(0);
}

std::optional<Matrix> inverse(const Matrix& a) {
    assert(a.rows() == a.cols());
    auto x = solve(a, Matrix::identity(a.rows(), a.modulus()));
    if (!x) return std::nullopt;
    // solve() succeeds for any consistent system; invertibility needs full rank
    if ((a * *x) == Matrix::identity(a.rows(), a.modulus())) return x;
    return std::nullopt;
}

Subspace::Subspace(std::size_t ambient, std::uint32_t p)
    : ambient_(ambient), p_(p), basis_(0, ambient, p) {}

Subspace Subspace::span(const Matrix& rows) {
    Subspace s(rows.cols(), rows.modulus());
    Echelon e = rows.echelon();
    Matrix b(e.pivots.size(), rows.cols(), rows.modulus());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t j = 0; j < rows.cols(); ++j) b.set(r, j, e.reduced(r, j));
    s.basis_ = std::move(b);
    return s;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient, std::uint32_t p) {
    return span(Matrix::from_rows(vectors, ambient, p));
}

Subspace Subspace::full(std::size_t ambient, std::uint32_t p) {
    return span(Matrix::identity(ambient, p));
}

bool Subspace::contains(const Vec& v) const {
    // reduce v against the RREF basis rows
    Vec w = v;
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        std::size_t lead = 0;
        while (lead < ambient_ && basis_(r, lead) == 0) ++lead;
        if (lead == ambient_) continue;
        std::uint64_t f = w[lead];
        if (f == 0) continue;
        std::uint64_t nf = p_ - f;
        for (std::size_t j = lead; j < ambient_; ++j)
            w[j] = static_cast<std::uint32_t>((w[j] + nf * basis_(r, j)) % p_);
    }
    return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.dim() > dim()) return false;
    for (std::size_t r = 0; r < other.basis_.rows(); ++r)
        if (!contains(other.basis_.row(r))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    assert(ambient_ == other.ambient_ && p_ == other.p_);
    return span(Matrix::stack_rows(basis_, other.basis_));
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.p_ == b.p_ && a.basis_ == b.basis_;
}

void IncrementalSpan::reduce(Vec& v) const {
    for (const auto& [pivot, row] : rows_) {
        std::uint64_t f = v[pivot];
        if (f == 0) continue;
        const std::uint64_t nf = p_ - f;
        for (std::size_t j = pivot; j < ambient_; ++j)
            v[j] = static_cast<std::uint32_t>((v[j] + nf * row[j]) % p_);
    }
}

bool IncrementalSpan::insert(Vec v) {
    assert(v.size() == ambient_);
    reduce(v);
    std::size_t lead = 0;
    while (lead < ambient_ && v[lead] == 0) ++lead;
    if (lead == ambient_) return false;
    const std::uint64_t inv = mod_inverse(v[lead], p_);
    for (std::size_t j = lead; j < ambient_; ++j)
        v[j] = static_cast<std::uint32_t>(inv * v[j] % p_);
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), lead,
                                [](const auto& row, std::size_t key) { return row.first < key; });
    rows_.insert(pos, {lead, std::move(v)});
    return true;
}

bool IncrementalSpan::contains(Vec v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

QuotientBasis quotient_basis(const Subspace& u) {
    const std::size_t n = u.ambient();
    const std::uint32_t p = u.modulus();
    const Matrix& b = u.basis();
    // reverse columns so RREF pivots become the latest ambient coordinates,
    // leaving the earliest ones as the surviving basis
    Matrix rev(b.rows(), n, p);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) rev.set(i, j, b(i, n - 1 - j));
    Echelon e = rev.echelon();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t j : e.pivots) is_pivot[j] = true;

    QuotientBasis q;
    for (std::size_t j = n; j-- > 0;)
        if (!is_pivot[j]) q.kept.push_back(n - 1 - j);
    std::sort(q.kept.begin(), q.kept.end());

    std::vector<std::size_t> slot(n, 0);
    for (std::size_t i = 0; i < q.kept.size(); ++i) slot[q.kept[i]] = i;

    q.coords = Matrix(q.kept.size(), n, p);
    for (std::size_t i = 0; i < q.kept.size(); ++i) q.coords.set(i, q.kept[i], 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        std::size_t orig = n - 1 - e.pivots[r]; // pivot coordinate, eliminated one
        for (std::size_t j = e.pivots[r] + 1; j < n; ++j) {
            std::uint32_t c = e.reduced(r, j);
            if (c == 0) continue;
            std::size_t jorig = n - 1 - j; // a kept coordinate
            q.coords.set(slot[jorig], orig, static_cast<std::int64_t>(p - c));
        }
    }
    return q;
}

} // namespace apolar
