#pragma once

#include <cstdint>
#include <vector>

#include "apolar/homology.hpp"

namespace apolar {

// A chain map between two resolutions over the same backend (or from a
// base-changed complex into a resolution). Stored per step as the image of
// each source generator; full matrices per internal degree are assembled on
// demand. Any valid lift induces the same maps on Tor.
class ChainMap {
public:
    int steps() const { return static_cast<int>(lifts_.size()) - 1; }
    const std::vector<Vec>& lift_vectors(int i) const { return lifts_[i]; }

    // constant-coefficient block at step i: Tor_i(src) -> Tor_i(dst),
    // rows indexed by dst generators, columns by src generators
    Matrix tor_map(int i) const;

    std::size_t tor_rank(int i) const { return tor_map(i).rank(); }

private:
    friend ChainMap lift_chain_map(const ModuleMap&, const GradedResolution&, const GradedResolution&,
                                   std::uint64_t);
    friend ChainMap lift_base_change(const GradedResolution&, const GradedResolution&, std::uint64_t);
    const GradedResolution* dst_ = nullptr;
    std::vector<std::vector<int>> src_degrees_; // per step
    std::vector<std::vector<Vec>> lifts_;       // per step, per src generator: coords in (dst F_i)_deg
    Matrix assembled(int i, int d) const; // (dst F_i)_d x (src F_i)_d over the dst backend

    // shared induction for both lift flavors: src vectors are already in
    // dst-backend coordinates, rhs0 holds the module images of the step-0
    // generators
    static ChainMap build(const GradedResolution& dst, std::vector<std::vector<int>> src_degrees,
                          const std::vector<std::vector<Vec>>& src_vectors,
                          const std::vector<Vec>& rhs0, std::uint64_t tie_seed);
};

// Comparison-theorem lift of f through the two resolutions. The optional
// seed perturbs the lift by kernel elements (the induced Tor maps must not
// depend on it).
ChainMap lift_chain_map(const ModuleMap& f, const GradedResolution& res_src,
                        const GradedResolution& res_dst, std::uint64_t tie_seed = 0);

// Map on Tor at step i induced by f; both resolutions are minimal, so this
// is the constant block of any lift.
Matrix tor_induced_map(const ChainMap& cm, int i);

// Lift of the identity along the surjection of rings: res_q over the
// polynomial backend is base-changed to the hypersurface and mapped into
// res_p. tor_map(i) is then Tor_i over Q -> Tor_i over P for the module.
ChainMap lift_base_change(const GradedResolution& res_q, const GradedResolution& res_p,
                          std::uint64_t tie_seed = 0);

Matrix tor_base_change_map(const GradedResolution& res_q, const GradedResolution& res_p, int i);

// Numerical form of the two Golod-homomorphism conditions for the
// surjection from the hypersurface, with cutoff a: the maps induced on Tor
// by R -> R/m^a (steps 1..N) and by the inclusion m^{2a} -> m^a (steps
// 0..N) must all vanish.
struct GolodCriterionReport {
    int a = 0;
    int steps = 0;
    std::vector<std::int64_t> projection_ranks; // index i-1 for i in 1..N
    std::vector<std::int64_t> inclusion_ranks;  // index i for i in 0..N
    bool holds() const;
};

GolodCriterionReport golod_criterion_check(std::shared_ptr<const GradedArtinianAlgebra> r,
                                           std::shared_ptr<const RingBackend> p_backend, int a, int n);

// Structure of the socle through a coordinate frame in which the chosen
// degree-t form is monic in x_1: q = ann(x_2..x_e) sits between m^r and
// m^{r+1} and x_1^{t-1} q fills the socle.
struct SocleFactorizationReport {
    bool q_in_m_r = false;
    bool q_not_in_m_r_plus_1 = false;
    bool socle_product = false; // x_1^{t-1} * q = m^s
    std::int64_t q_total_dim = 0;
    bool holds() const { return q_in_m_r && q_not_in_m_r_plus_1 && socle_product; }
};

SocleFactorizationReport socle_factorization_check(const GradedArtinianAlgebra& r, const Vec& h, int t);

} // namespace apolar
