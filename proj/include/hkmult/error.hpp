#pragma once

#include <stdexcept>
#include <string>

namespace hkm {

enum class Errc {
    CollinearRays,
    EmptyInput,
    UnboundedRegion,
    NotNested,
    GeneratorOutsideCone,
    NotSaturated,
    NotMPrimary,
    NonIntegralMultiplicity,
    NoStabilization,
    BadParameters,
    DimensionMismatch,
    AsymmetricTable,
    BadInput,
};

const char* errcName(Errc code) noexcept;

// True for codes that indicate a broken internal guarantee rather than bad
// user input (the CLI maps these to exit status 2).
bool isContractViolation(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errcName(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace hkm
