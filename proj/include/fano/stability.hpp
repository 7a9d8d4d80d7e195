#pragma once

#include <string>
#include <vector>

#include "fano/serre.hpp"

namespace fano {

enum class StabilityKind { StableVerified, SemistableVerified, Unstable, Inconclusive };

std::string stability_kind_name(StabilityKind k);

/// One record per twist the checker looked at: which rule certified
/// the vanishing, or why no rule applied.
struct TwistWitness {
    Int a, b;
    bool certified;
    std::string rule;
    std::string detail;
};

struct StabilityVerdict {
    StabilityKind verdict;
    Int bound;
    std::vector<TwistWitness> witnesses;
};

/// All pairs (a,b) in the box |a|,|b| <= bound whose line-bundle slope
/// passes the threshold: 3(1+e)a+9(a+b) >= mu, strict when testing
/// semistability.
std::vector<std::pair<Int, Int>> hoppe_window(Model m, const Rat& mu, const Int& bound,
                                              bool strict = false);

/// Certificate-based stability check for a bundle built by one of the
/// three recipes. For every window twist the section space is bounded
/// through the defining short exact sequence; the ideal-sheaf half is
/// certified by one of a small set of replayable rules (line-bundle
/// vanishing, nonempty vanishing locus, fibre exclusion, exceptional-
/// divisor exclusion). StableVerified only when every pair in the
/// window carries a certificate; otherwise Inconclusive with the
/// uncertified pairs listed. The window is finite, so the verdict is a
/// sound one-sided check at the recorded bound.
StabilityVerdict check_serre_stability(Variant v, const Int& alpha, const Int& beta,
                                       const Int& bound = 8);

/// Slope test for a direct sum of line bundles: Unstable with the two
/// slopes as witnesses when they differ, SemistableVerified (never
/// stable) when all slopes agree.
StabilityVerdict check_split_slopes(Model m, const std::vector<ChowClass>& summands);

}  // namespace fano
