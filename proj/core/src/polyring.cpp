#include "apolar/polyring.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace apolar {

int Monomial::degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }

std::string Monomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exp.size(); ++i) {
        if (exp[i] == 0) continue;
        if (!first) os << "*";
        os << "x" << (i + 1);
        if (exp[i] > 1) os << "^" << exp[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

PolyRing::PolyRing(int vars, std::uint32_t p) : e_(vars), p_(p) {
    if (vars < 1) throw Error("InvalidParameters", "need at least one variable");
    if (!is_prime(p) || p == 2) throw BadPrime("coefficient modulus must be an odd prime");
}

std::int64_t PolyRing::dim(int d) const {
    if (d < 0) return 0;
    return binomial(e_ - 1 + d, e_ - 1);
}

void PolyRing::ensure_degree(int d) const {
    while (static_cast<int>(bases_.size()) <= d) {
        int deg = static_cast<int>(bases_.size());
        std::vector<Monomial> list;
        // descending lex on exponent vectors: x1^d first, xe^d last
        std::vector<int> cur(e_, 0);
        cur[0] = deg;
        while (true) {
            list.push_back(Monomial{cur});
            // successor in descending lex order at fixed total degree:
            // the last donatable position passes everything after it along
            int i = e_ - 2;
            while (i >= 0 && cur[i] == 0) --i;
            if (i < 0) break;
            --cur[i];
            int rest = cur[e_ - 1] + 1; // positions i+1..e-2 are zero by choice of i
            cur[e_ - 1] = 0;
            cur[i + 1] = rest;
        }
        std::map<std::vector<int>, std::size_t> idx;
        for (std::size_t k = 0; k < list.size(); ++k) idx[list[k].exp] = k;
        bases_.push_back(std::move(list));
        index_.push_back(std::move(idx));
    }
}

const std::vector<Monomial>& PolyRing::monomials(int d) const {
    assert(d >= 0);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    ensure_degree(d);
    return bases_[d];
}

std::size_t PolyRing::index_of(const Monomial& m) const {
    int d = m.degree();
    std::lock_guard<std::mutex> lock(cache_mutex_);
    ensure_degree(d);
    auto it = index_[d].find(m.exp);
    assert(it != index_[d].end());
    return it->second;
}

Vec PolyRing::multiply(const Vec& a, int da, const Vec& b, int db) const {
    const auto& ma = monomials(da);
    const auto& mb = monomials(db);
    assert(a.size() == ma.size() && b.size() == mb.size());
    monomials(da + db);
    Vec out(dim(da + db), 0);
    Monomial prod{std::vector<int>(e_, 0)};
    for (std::size_t i = 0; i < ma.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < mb.size(); ++j) {
            if (b[j] == 0) continue;
            for (int v = 0; v < e_; ++v) prod.exp[v] = ma[i].exp[v] + mb[j].exp[v];
            std::size_t k = index_of(prod);
            out[k] = static_cast<std::uint32_t>(
                (out[k] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_);
        }
    }
    return out;
}

Vec PolyRing::multiply_monomial(const Monomial& m, const Vec& b, int db) const {
    const auto& mb = monomials(db);
    int dm = m.degree();
    monomials(dm + db);
    Vec out(dim(dm + db), 0);
    Monomial prod{std::vector<int>(e_, 0)};
    for (std::size_t j = 0; j < mb.size(); ++j) {
        if (b[j] == 0) continue;
        for (int v = 0; v < e_; ++v) prod.exp[v] = m.exp[v] + mb[j].exp[v];
        out[index_of(prod)] = b[j];
    }
    return out;
}

Vec PolyRing::contract(const Vec& f, int df, const Vec& dual, int d_dual) const {
    int dr = d_dual - df;
    if (dr < 0) return Vec{};
    const auto& mf = monomials(df);
    const auto& md = monomials(d_dual);
    assert(f.size() == mf.size() && dual.size() == md.size());
    monomials(dr);
    Vec out(dim(dr), 0);
    Monomial rem{std::vector<int>(e_, 0)};
    for (std::size_t j = 0; j < md.size(); ++j) {
        if (dual[j] == 0) continue;
        for (std::size_t i = 0; i < mf.size(); ++i) {
            if (f[i] == 0) continue;
            bool divides = true;
            for (int v = 0; v < e_; ++v) {
                rem.exp[v] = md[j].exp[v] - mf[i].exp[v];
                if (rem.exp[v] < 0) {
                    divides = false;
                    break;
                }
            }
            if (!divides) continue;
            std::size_t k = index_of(rem);
            out[k] = static_cast<std::uint32_t>(
                (out[k] + static_cast<std::uint64_t>(f[i]) * dual[j]) % p_);
        }
    }
    return out;
}

Matrix PolyRing::contraction_matrix(const Vec& dual, int d_dual, int a) const {
    int dr = d_dual - a;
    assert(dr >= 0);
    const auto& ma = monomials(a);
    monomials(dr);
    Matrix m(static_cast<std::size_t>(dim(dr)), ma.size(), p_);
    Vec f(ma.size(), 0);
    for (std::size_t j = 0; j < ma.size(); ++j) {
        f[j] = 1;
        Vec col = contract(f, a, dual, d_dual);
        f[j] = 0;
        for (std::size_t i = 0; i < col.size(); ++i)
            if (col[i]) m.set(i, j, col[i]);
    }
    return m;
}

Matrix PolyRing::substitution_matrix(const Matrix& subst, int d) const {
    assert(static_cast<int>(subst.rows()) == e_ && static_cast<int>(subst.cols()) == e_);
    const auto& md = monomials(d);
    Matrix out(static_cast<std::size_t>(dim(d)), md.size(), p_);
    for (std::size_t j = 0; j < md.size(); ++j) {
        Vec acc{1 % p_};
        int deg = 0;
        for (int v = 0; v < e_; ++v) {
            Vec linear(static_cast<std::size_t>(dim(1)), 0);
            for (int i = 0; i < e_; ++i) linear[i] = subst(i, v);
            for (int rep = 0; rep < md[j].exp[v]; ++rep) {
                acc = multiply(linear, 1, acc, deg);
                ++deg;
            }
        }
        for (std::size_t i = 0; i < acc.size(); ++i)
            if (acc[i]) out.set(i, j, acc[i]);
    }
    return out;
}

DualTermList parse_dual_terms(std::istream& in) {
    DualTermList out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::int64_t coeff;
        if (!(ls >> coeff)) continue; // blank or comment-only line
        std::vector<int> exp;
        int x;
        while (ls >> x) {
            if (x < 0) throw Error("ParseError", "negative exponent on line " + std::to_string(lineno));
            exp.push_back(x);
        }
        if (exp.empty()) throw Error("ParseError", "missing exponents on line " + std::to_string(lineno));
        Monomial m{std::move(exp)};
        if (out.terms.empty()) {
            out.vars = static_cast<int>(m.exp.size());
            out.degree = m.degree();
        } else if (static_cast<int>(m.exp.size()) != out.vars) {
            throw Error("ParseError", "inconsistent variable count on line " + std::to_string(lineno));
        } else if (m.degree() != out.degree) {
            throw Error("ParseError", "inhomogeneous term on line " + std::to_string(lineno));
        }
        out.terms.emplace_back(coeff, std::move(m));
    }
    if (out.terms.empty()) throw Error("ParseError", "no terms found");
    return out;
}

void write_dual_terms(std::ostream& out, const DualTermList& terms) {
    for (const auto& [c, m] : terms.terms) {
        out << c;
        for (int x : m.exp) out << ' ' << x;
        out << '\n';
    }
}

} // namespace apolar
