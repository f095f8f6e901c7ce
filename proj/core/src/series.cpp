#include "apolar/series.hpp"

#include <sstream>

namespace apolar {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer overflow in addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer overflow in multiplication");
    return r;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i;
    }
    return r;
}

IntegerPolynomial::IntegerPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntegerPolynomial IntegerPolynomial::monomial(std::int64_t c, int degree) {
    if (c == 0) return IntegerPolynomial();
    std::vector<std::int64_t> v(degree + 1, 0);
    v[degree] = c;
    return IntegerPolynomial(std::move(v));
}

IntegerPolynomial IntegerPolynomial::one_plus_z_pow(int e) {
    std::vector<std::int64_t> v(e + 1);
    for (int i = 0; i <= e; ++i) v[i] = binomial(e, i);
    return IntegerPolynomial(std::move(v));
}

std::int64_t IntegerPolynomial::coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
}

std::int64_t IntegerPolynomial::evaluate(std::int64_t z) const {
    std::int64_t r = 0;
    for (int i = degree(); i >= 0; --i) r = checked_add(checked_mul(r, z), c_[i]);
    return r;
}

IntegerPolynomial IntegerPolynomial::alternate() const {
    std::vector<std::int64_t> v = c_;
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return IntegerPolynomial(std::move(v));
}

IntegerPolynomial IntegerPolynomial::shift_up(int k) const {
    if (is_zero()) return {};
    std::vector<std::int64_t> v(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), v.begin() + k);
    return IntegerPolynomial(std::move(v));
}

IntegerPolynomial IntegerPolynomial::shift_down(int k) const {
    for (int i = 0; i < k && i < static_cast<int>(c_.size()); ++i)
        if (c_[i] != 0)
            throw CancellationFailure("nonzero coefficient of z^" + std::to_string(i) +
                                      " survives a z^-" + std::to_string(k) + " shift");
    if (static_cast<int>(c_.size()) <= k) return {};
    return IntegerPolynomial(std::vector<std::int64_t>(c_.begin() + k, c_.end()));
}

IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    std::vector<std::int64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return IntegerPolynomial(std::move(v));
}

IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    std::vector<std::int64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_add(a.coeff(static_cast<int>(i)), -b.coeff(static_cast<int>(i)));
    return IntegerPolynomial(std::move(v));
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] = checked_add(v[i + j], checked_mul(a.c_[i], b.c_[j]));
    return IntegerPolynomial(std::move(v));
}

std::string IntegerPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
        if (c_[i] == 0) continue;
        std::int64_t c = c_[i];
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::int64_t ac = c < 0 ? -c : c;
        if (i == 0) {
            os << ac;
        } else {
            if (ac != 1) os << ac << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

TruncatedIntegerSeries::TruncatedIntegerSeries(std::vector<std::int64_t> coeffs, int order)
    : c_(std::move(coeffs)) {
    c_.resize(order + 1, 0);
}

TruncatedIntegerSeries TruncatedIntegerSeries::from_polynomial(const IntegerPolynomial& p, int order) {
    return TruncatedIntegerSeries(p.coeffs(), order);
}

std::int64_t TruncatedIntegerSeries::coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
}

TruncatedIntegerSeries TruncatedIntegerSeries::truncate(int order) const {
    return TruncatedIntegerSeries(c_, order);
}

TruncatedIntegerSeries TruncatedIntegerSeries::inverse() const {
    if (c_.empty() || (c_[0] != 1 && c_[0] != -1))
        throw Error("SeriesInversion", "series inversion needs constant term +1 or -1");
    const int n = order();
    std::vector<std::int64_t> inv(n + 1, 0);
    inv[0] = c_[0]; // 1/1 = 1, 1/-1 = -1
    for (int i = 1; i <= n; ++i) {
        std::int64_t acc = 0;
        for (int k = 1; k <= i; ++k) acc = checked_add(acc, checked_mul(c_[k], inv[i - k]));
        inv[i] = checked_mul(-c_[0], acc);
    }
    return TruncatedIntegerSeries(std::move(inv), n);
}

TruncatedIntegerSeries operator+(const TruncatedIntegerSeries& a, const TruncatedIntegerSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<std::int64_t> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = checked_add(a.coeff(i), b.coeff(i));
    return TruncatedIntegerSeries(std::move(v), n);
}

TruncatedIntegerSeries operator-(const TruncatedIntegerSeries& a, const TruncatedIntegerSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<std::int64_t> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = checked_add(a.coeff(i), -b.coeff(i));
    return TruncatedIntegerSeries(std::move(v), n);
}

TruncatedIntegerSeries operator*(const TruncatedIntegerSeries& a, const TruncatedIntegerSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<std::int64_t> v(n + 1, 0);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            v[i + j] = checked_add(v[i + j], checked_mul(a.coeff(i), b.coeff(j)));
    return TruncatedIntegerSeries(std::move(v), n);
}

TruncatedIntegerSeries operator/(const TruncatedIntegerSeries& a, const TruncatedIntegerSeries& b) {
    return a * b.truncate(std::min(a.order(), b.order())).inverse();
}

std::string TruncatedIntegerSeries::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i];
    }
    os << "] + O(z^" << c_.size() << ")";
    return os.str();
}

bool series_identity_check(const TruncatedIntegerSeries& lhs, const TruncatedIntegerSeries& rhs) {
    int n = std::min(lhs.order(), rhs.order());
    for (int i = 0; i <= n; ++i)
        if (lhs.coeff(i) != rhs.coeff(i)) return false;
    return true;
}

IntegerPolynomial hs_compressed(int e, int s) {
    std::vector<std::int64_t> v(s + 1);
    for (int i = 0; i <= s; ++i)
        v[i] = std::min(binomial(e - 1 + s - i, e - 1), binomial(e - 1 + i, e - 1));
    return IntegerPolynomial(std::move(v));
}

namespace {

// (-z)^{-k} * (hs(-z)*(1+z)^e - 1 - z^{s+e}) with exact cancellation of the
// low-order terms; shared by the two even-socle closed forms.
IntegerPolynomial shifted_core(int e, int s, int k) {
    IntegerPolynomial core = hs_compressed(e, s).alternate() * IntegerPolynomial::one_plus_z_pow(e) -
                             IntegerPolynomial::monomial(1, 0) - IntegerPolynomial::monomial(1, s + e);
    IntegerPolynomial shifted = core.shift_down(k);
    if (k % 2 != 0) shifted = IntegerPolynomial() - shifted;
    return shifted;
}

} // namespace

IntegerPolynomial po_q_even_closed_form(int e, int s) {
    if (s % 2 != 0) throw OddSocle("closed form needs even socle degree, got s=" + std::to_string(s));
    if (s < 2 || e < 2) throw Error("InvalidParameters", "closed form needs s >= 2 and e > 1");
    return IntegerPolynomial::monomial(1, 0) + IntegerPolynomial::monomial(1, e) + shifted_core(e, s, s / 2);
}

IntegerPolynomial dr_from_po_q(const IntegerPolynomial& po_q_r, int e, std::int64_t a) {
    IntegerPolynomial one = IntegerPolynomial::monomial(1, 0);
    return one - (po_q_r - one).shift_up(1) +
           IntegerPolynomial::monomial(a, e + 1) * IntegerPolynomial({1, 1});
}

IntegerPolynomial dr_even_closed_form(int e, int s) {
    if (s % 2 != 0) throw OddSocle("closed form needs even socle degree, got s=" + std::to_string(s));
    if (s < 2 || e < 2) throw Error("InvalidParameters", "closed form needs s >= 2 and e > 1");
    IntegerPolynomial d = IntegerPolynomial::monomial(1, 0) + IntegerPolynomial::monomial(1, e + 2) +
                          shifted_core(e, s, (s - 2) / 2);
    IntegerPolynomial via_po_q = dr_from_po_q(po_q_even_closed_form(e, s), e, 1);
    if (!(d == via_po_q))
        throw Error("ClosedFormMismatch", "the two denominator routes disagree for e=" +
                                              std::to_string(e) + ", s=" + std::to_string(s));
    return d;
}

TruncatedIntegerSeries golod_poincare(int e, const IntegerPolynomial& po_q, int order) {
    IntegerPolynomial one = IntegerPolynomial::monomial(1, 0);
    TruncatedIntegerSeries den =
        TruncatedIntegerSeries::from_polynomial(one - (po_q - one).shift_up(1), order);
    TruncatedIntegerSeries num =
        TruncatedIntegerSeries::from_polynomial(IntegerPolynomial::one_plus_z_pow(e), order);
    return num / den;
}

TruncatedIntegerSeries golod_quotient_formula(const TruncatedIntegerSeries& po_p_k,
                                              const TruncatedIntegerSeries& po_p_r) {
    int n = std::min(po_p_k.order(), po_p_r.order());
    std::vector<std::int64_t> den(n + 1, 0);
    den[0] = 1;
    for (int i = 1; i <= n; ++i) den[i] = -po_p_r.coeff(i - 1);
    den[1] = checked_add(den[1], 1); // -z*(poPR - 1) = -z*poPR + z
    return po_p_k.truncate(n) / TruncatedIntegerSeries(std::move(den), n);
}

TruncatedIntegerSeries change_of_rings_po_p(const TruncatedIntegerSeries& po_q_m,
                                            const TruncatedIntegerSeries& hs_ker) {
    int n = std::min(po_q_m.order(), hs_ker.order());
    TruncatedIntegerSeries num =
        po_q_m.truncate(n) -
        TruncatedIntegerSeries::from_polynomial(IntegerPolynomial({1, 1}), n) * hs_ker.truncate(n);
    return num / TruncatedIntegerSeries::from_polynomial(IntegerPolynomial({1, 0, -1}), n);
}

IntegerPolynomial socle_quotient_po_q(const IntegerPolynomial& po_q_r, int e) {
    return po_q_r + IntegerPolynomial::one_plus_z_pow(e).shift_up(1) -
           IntegerPolynomial({1, 1}).shift_up(e);
}

} // namespace apolar
