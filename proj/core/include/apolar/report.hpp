#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "apolar/compressed.hpp"
#include "apolar/homology.hpp"
#include "apolar/tormaps.hpp"

#include <json.hpp>

namespace apolar {

struct RunConfig {
    int e = 3;
    int s = 4;
    std::uint32_t prime = 32003;
    std::uint64_t seed = 1;
    int trunc = -1;        // homological truncation N; -1 picks the default
    int degree_bound = -1; // internal degree override, -1 = policy default
    bool allow_s3 = false;
    bool with_maps = false;
    bool with_socle_factorization = false;
    bool with_timings = false;

    int effective_trunc() const { return trunc >= 0 ? trunc : (e <= 3 ? 5 : 4); }
    void validate() const; // BadPrime / SocleDegreeExcluded / InvalidParameters
};

struct CheckRecord {
    std::string id;     // stable machine-readable token
    std::string name;   // human-readable description
    std::string status; // "pass" | "fail" | "inconclusive"
    nlohmann::json witness;
};

struct VerificationReport {
    int schema = 1;
    std::string suite;
    int e = 0;
    int s = 0;
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;
    int retries = 0;
    int effective_e = 0;
    std::vector<CheckRecord> checks;
    std::optional<double> total_seconds; // only with RunConfig::with_timings

    void add(const std::string& id, const std::string& name, bool pass, nlohmann::json witness = {});
    void add_inconclusive(const std::string& id, const std::string& name, nlohmann::json witness = {});
    const CheckRecord* find(const std::string& id) const;

    bool passed() const;
    bool inconclusive() const;
    int exit_code() const; // 0 pass, 1 fail, 2 inconclusive
    std::string overall() const;

    nlohmann::json to_json() const;
    void write_csv(std::ostream& out) const;
};

// A sampled-until-compressed instance, the entry point of every suite.
struct Instance {
    DualGenerator generator;
    std::shared_ptr<const GradedArtinianAlgebra> algebra;
    int retries = 0;
    CompressednessReport compressedness;
};

// Retries up to 32 consecutive seeds before giving up
// (GenericSamplingFailed). Deterministic in the config.
Instance sample_compressed_instance(const RunConfig& cfg);

// The degree-t defining form handed to the hypersurface: the first element
// of the canonical basis of I_t.
Vec choose_hypersurface_form(const GradedArtinianAlgebra& r, int t);

VerificationReport run_main_theorem_suite(const RunConfig& cfg);
VerificationReport run_golod_powers_suite(const RunConfig& cfg);
VerificationReport run_socle_quotient_suite(const RunConfig& cfg);

enum class MapCheck { nu, phi, rho, golod_criterion };
VerificationReport run_map_checks(const RunConfig& cfg, MapCheck which);

} // namespace apolar
