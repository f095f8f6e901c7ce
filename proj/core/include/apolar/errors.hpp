#pragma once

#include <stdexcept>
#include <string>

namespace apolar {

// Base class for all domain errors. `code()` is a stable machine-readable
// identifier used by the CLI and report writers.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct BadPrime : Error {
    explicit BadPrime(const std::string& what) : Error("BadPrime", what) {}
};

struct ZeroGenerator : Error {
    explicit ZeroGenerator(const std::string& what) : Error("ZeroGenerator", what) {}
};

struct NotGorenstein : Error {
    explicit NotGorenstein(const std::string& what) : Error("NotGorenstein", what) {}
};

struct UnitIdeal : Error {
    explicit UnitIdeal(const std::string& what) : Error("UnitIdeal", what) {}
};

struct OddSocle : Error {
    explicit OddSocle(const std::string& what) : Error("OddSocle", what) {}
};

struct CancellationFailure : Error {
    explicit CancellationFailure(const std::string& what) : Error("CancellationFailure", what) {}
};

struct LiftFailure : Error {
    explicit LiftFailure(const std::string& what) : Error("LiftFailure", what) {}
};

struct CoordinateForm : Error {
    explicit CoordinateForm(const std::string& what) : Error("CoordinateForm", what) {}
};

struct GenericSamplingFailed : Error {
    explicit GenericSamplingFailed(const std::string& what) : Error("GenericSamplingFailed", what) {}
};

struct SocleDegreeExcluded : Error {
    explicit SocleDegreeExcluded(const std::string& what) : Error("SocleDegreeExcluded", what) {}
};

// Integer overflow in exact series/polynomial arithmetic. Never wraps silently.
struct Overflow : Error {
    explicit Overflow(const std::string& what) : Error("Overflow", what) {}
};

} // namespace apolar
