#pragma once

#include <optional>
#include <vector>

#include "szl/groups.hpp"
#include "szl/scattering.hpp"

namespace szl {

enum class Trichotomy { GeodesicSmaller, ScatteringSmaller, Equal };

const char* trichotomy_name(Trichotomy t);

struct SurfaceInvariants {
    double systole_length = 0.0;
    std::optional<SystoleResult> systole;  // matrix groups only
    int m0 = 1;
    bool m0_exact = true;
    int n1 = 0;
    double g1 = 1.0;
    double d1 = 1.0;
    std::optional<Rational> g_ratio_sq;  // absent for compact surfaces
    double exp_systole = 0.0;
    double A = 0.0;
    double a = 0.0;
    Trichotomy trichotomy = Trichotomy::GeodesicSmaller;
    double volume = 0.0;

    // (-1)^{k-1} a (log A)^{k-1}
    double a_k(int k) const;
};

struct InvariantOptions {
    std::optional<int> m0_override;
    long long m0_search_bound = 0;
    double trace_ceiling = 64.0;
};

// sd may be null only for compact surfaces
SurfaceInvariants invariants(const GroupDescriptor& g, const ScatteringData* sd,
                             const InvariantOptions& opt = {});

// equal volume, systole and multiplicity, no cusps
SurfaceInvariants compact_twin(const SurfaceInvariants& inv);

}  // namespace szl
