#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/linalg.hpp"
#include "apolar/polyring.hpp"
#include "apolar/series.hpp"

#include <json.hpp>

namespace apolar {

// Ring to resolve over: the polynomial ring Q, a hypersurface Q/(h), or a
// finite-dimensional graded quotient. Each exposes its graded pieces through
// a normal form / lift pair plus multiplication; that is all the resolution
// engine needs.
class RingBackend {
public:
    enum class Kind { polynomial, hypersurface, artinian };

    static RingBackend polynomial(std::shared_ptr<const PolyRing> ring);
    static RingBackend hypersurface(std::shared_ptr<const PolyRing> ring, Vec h, int deg_h);
    static RingBackend artinian(std::shared_ptr<const GradedArtinianAlgebra> algebra);

    Kind kind() const { return kind_; }
    int vars() const { return ring_->vars(); }
    std::uint32_t modulus() const { return ring_->modulus(); }
    const PolyRing& ring() const { return *ring_; }
    std::shared_ptr<const PolyRing> ring_ptr() const { return ring_; }

    // degree of the defining form for hypersurfaces, -1 otherwise
    int relation_degree() const { return deg_h_; }
    const Vec& relation() const { return h_; }
    const GradedArtinianAlgebra& algebra() const { return *algebra_; }

    std::optional<int> top_degree() const; // s for artinian, nullopt otherwise
    std::int64_t dim(int d) const;

    Vec normal_form(int d, const Vec& q) const; // Q_d coords -> piece coords
    Vec lift(int d, const Vec& a) const;        // piece coords -> Q_d coords

    Vec multiply(const Vec& a, int da, const Vec& b, int db) const;
    Matrix multiplication_map(const Vec& a, int da, int d) const; // A_d -> A_{d+da}
    const Matrix& variable_multiplication(int j, int d) const;

    // dim A_0 + dim A_1 z + ... through the given order
    TruncatedIntegerSeries hilbert_series(int order) const;

private:
    RingBackend() = default;
    Kind kind_ = Kind::polynomial;
    std::shared_ptr<const PolyRing> ring_;
    std::shared_ptr<const GradedArtinianAlgebra> algebra_;
    Vec h_;
    int deg_h_ = -1;

    struct HyperPiece {
        std::vector<std::size_t> basis;
        Matrix nf;
    };
    // lazily built piece data; the shared mutex keeps a backend safe to
    // query from parallel workers
    std::shared_ptr<std::mutex> cache_mutex_ = std::make_shared<std::mutex>();
    mutable std::deque<HyperPiece> hyper_;
    mutable std::map<std::pair<int, int>, Matrix> varmul_;
    const HyperPiece& hyper_piece(int d) const;
};

// Finitely supported graded module given by its pieces and the action of
// the ring variables; the common shape of every module in the suites
// (residue field, the algebra itself, powers of the irrelevant ideal,
// quotients by them).
class FiniteModule {
public:
    static FiniteModule zero(int vars, std::uint32_t p);
    static FiniteModule residue_field(int vars, std::uint32_t p);
    static FiniteModule of_algebra(std::shared_ptr<const GradedArtinianAlgebra> r);
    static FiniteModule power_submodule(std::shared_ptr<const GradedArtinianAlgebra> r, int i); // m^i

    int vars() const { return vars_; }
    std::uint32_t modulus() const { return p_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool is_zero() const { return lo_ > hi_; }

    std::int64_t dim(int d) const;
    const Matrix& action(int j, int d) const; // x_j: M_d -> M_{d+1}

    Vec act_monomial(const Monomial& m, int from, Vec v) const;

    std::vector<std::int64_t> hilbert() const;

private:
    int vars_ = 0;
    std::uint32_t p_ = 3;
    int lo_ = 0, hi_ = -1;
    std::vector<std::int64_t> dims_;          // index d - lo_
    std::vector<std::vector<Matrix>> action_; // [d - lo_][j]
    Matrix empty_;
};

// Degree-preserving map of finite modules, one matrix per degree.
struct ModuleMap {
    const FiniteModule* src = nullptr;
    const FiniteModule* dst = nullptr;
    std::map<int, Matrix> mats;

    static ModuleMap identity_on_common(const FiniteModule& src, const FiniteModule& dst);
    static ModuleMap zero(const FiniteModule& src, const FiniteModule& dst);

    Matrix at(int d) const; // dim dst_d x dim src_d, zero when absent
};

// Bigraded Betti numbers with per-step completeness flags.
class BettiTable {
public:
    BettiTable() = default;
    explicit BettiTable(std::vector<std::map<int, std::int64_t>> rows, std::vector<bool> complete);

    int steps() const { return static_cast<int>(rows_.size()) - 1; }
    std::int64_t at(int i, int j) const;
    std::int64_t total(int i) const;
    std::vector<std::int64_t> totals() const;
    const std::map<int, std::int64_t>& row(int i) const { return rows_[i]; }
    bool complete(int i) const { return complete_[i]; }
    bool all_complete() const;

    void write_csv(std::ostream& out) const; // columns i,j,beta
    nlohmann::json to_json() const;

    friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.rows_ == b.rows_; }

private:
    std::vector<std::map<int, std::int64_t>> rows_;
    std::vector<bool> complete_;
};

// Minimal graded free resolution of M over the backend, truncated at
// homological step N and internal degree D. Differentials are produced
// minimal by construction and that is asserted separately.
class GradedResolution {
public:
    struct Step {
        std::vector<int> degrees;
        std::vector<Vec> vectors; // coords in the previous object's piece at that degree
        bool complete = true;
    };

    int steps() const { return static_cast<int>(steps_.size()) - 1; }
    int degree_bound() const { return degree_bound_; }
    const Step& step(int i) const { return steps_[i]; }
    const RingBackend& backend() const { return *backend_; }
    const FiniteModule& module() const { return module_; }

    std::int64_t piece_dim(int i, int d) const;
    std::vector<std::size_t> piece_offsets(int i, int d) const;

    // i = 0: augmentation M_d x (F_0)_d; i >= 1: (F_{i-1})_d x (F_i)_d
    const Matrix& map(int i, int d) const;

    // x_j applied blockwise to an element of (F_i)_d; the full matrix is
    // block diagonal and never materialized
    Vec apply_variable(int i, int j, int d, const Vec& v) const;

    BettiTable betti() const;
    std::vector<std::int64_t> total_betti() const;
    bool all_steps_complete() const;

    bool is_minimal() const;
    bool differentials_compose_to_zero() const;

private:
    friend GradedResolution minimal_resolution(std::shared_ptr<const RingBackend>, FiniteModule, int, int);
    std::shared_ptr<const RingBackend> backend_;
    FiniteModule module_;
    int degree_bound_ = 0;
    std::vector<Step> steps_;
    std::shared_ptr<std::mutex> cache_mutex_ = std::make_shared<std::mutex>();
    mutable std::map<std::pair<int, int>, Matrix> cache_;
};

// Certified default internal-degree bound for resolving M to step N.
int default_degree_bound(const RingBackend& backend, const FiniteModule& m, int n);

GradedResolution minimal_resolution(std::shared_ptr<const RingBackend> backend, FiniteModule m,
                                    int n, int degree_bound = -1);

// Euler-characteristic completeness guard: the alternating sum of the
// step Hilbert functions must reproduce the module's Hilbert function
// through every degree where the last kernel is known to vanish.
bool resolution_audit(const GradedResolution& res);
bool betti_euler_check(const RingBackend& backend, const FiniteModule& m,
                       const std::vector<std::vector<int>>& step_degrees, int window_top);

// Full bigraded Betti table over the polynomial ring via the exterior
// algebra complex on the variables; independent of the resolution engine.
BettiTable koszul_betti(const PolyRing& ring, const FiniteModule& m);

struct PoincareResult {
    TruncatedIntegerSeries series;
    bool exact = true; // every step certified complete
};

PoincareResult poincare_truncated(std::shared_ptr<const RingBackend> backend, const FiniteModule& m,
                                  int n, int degree_bound = -1);

} // namespace apolar
