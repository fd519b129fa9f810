#include "szl/error.hpp"

namespace szl {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::PoleAtNonPositiveInteger: return "PoleAtNonPositiveInteger";
        case Errc::PoleAtOne: return "PoleAtOne";
        case Errc::NonConvergence: return "NonConvergence";
        case Errc::InvalidSignature: return "InvalidSignature";
        case Errc::UnsupportedKind: return "UnsupportedKind";
        case Errc::NoHyperbolicFound: return "NoHyperbolicFound";
        case Errc::CutoffTooSmall: return "CutoffTooSmall";
        case Errc::ZeroACoefficient: return "ZeroACoefficient";
        case Errc::DivergentTail: return "DivergentTail";
        case Errc::NonUnitLeading: return "NonUnitLeading";
        case Errc::UnsupportedGroup: return "UnsupportedGroup";
        case Errc::PoleHit: return "PoleHit";
        case Errc::InsufficientTerms: return "InsufficientTerms";
        case Errc::BoundaryTooClose: return "BoundaryTooClose";
        case Errc::WrongTrichotomy: return "WrongTrichotomy";
        case Errc::UnitA: return "UnitA";
        case Errc::UnknownGroup: return "UnknownGroup";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace szl
