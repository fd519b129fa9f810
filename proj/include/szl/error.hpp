#pragma once

#include <stdexcept>
#include <string>

namespace szl {

enum class Errc {
    PoleAtNonPositiveInteger,
    PoleAtOne,
    NonConvergence,
    InvalidSignature,
    UnsupportedKind,
    NoHyperbolicFound,
    CutoffTooSmall,
    ZeroACoefficient,
    DivergentTail,
    NonUnitLeading,
    UnsupportedGroup,
    PoleHit,
    InsufficientTerms,
    BoundaryTooClose,
    WrongTrichotomy,
    UnitA,
    UnknownGroup,
    InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace szl
