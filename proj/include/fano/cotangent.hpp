#pragma once

#include <array>
#include <string>

#include "fano/chow.hpp"

namespace fano {

/// One cohomology dimension, either pinned to a single value or only
/// known to lie in [lo, hi].
struct CohomEntry {
    Int lo, hi;

    bool exact() const { return lo == hi; }
    bool exactly(const Int& n) const { return exact() && lo == n; }
    std::string to_string() const;
};

/// Cohomology of a twist of the relative cotangent bundle. On the
/// product model every entry is exact (Bott plus Kunneth); on the
/// blow-up the entries are intervals cut out by the two Euler-sequence
/// presentations, Serre duality and the Euler characteristic, and an
/// entry is exact exactly when its interval collapses.
struct IntervalCohomology {
    std::array<CohomEntry, 4> h;
    Int chi;
};

/// Bott dimensions (h0,h1,h2) of Ω_{P2}(a): h1 = 1 only at a = 0, h0
/// forced by the Euler sequence for a >= 1, h2 its Serre dual.
std::array<Int, 3> bott_p2(const Int& a);

/// Cohomology of Ω_{F|P1}(aξ+bf).
IntervalCohomology cotangent_cohomology(Model m, const Int& a, const Int& b);

}  // namespace fano
