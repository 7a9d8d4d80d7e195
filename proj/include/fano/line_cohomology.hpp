#pragma once

#include <utility>

#include "fano/chow.hpp"

namespace fano {

/// The four cohomology dimensions of a sheaf twist together with the
/// Euler characteristic. Entries are exact nonnegative integers.
struct CohomologyVector {
    Int h0, h1, h2, h3;
    Int chi;

    Int h(int i) const;
    bool operator==(const CohomologyVector&) const = default;
};

/// Cohomology of O(aξ+bf) from the closed binomial formulas: the
/// pushforward sums on the blow-up, the Kunneth products on P1 x P2.
/// Binomial conventions make both total functions: C(n,1) = max(n,0)
/// and C(n,2) = n(n-1)/2 for n >= 2, else 0.
CohomologyVector line_cohomology(Model m, const Int& a, const Int& b);

/// chi(O(aξ+bf)) straight from Riemann-Roch with rank 1; serves as an
/// independent route to CohomologyVector::chi.
Int line_chi_rr(Model m, const Int& a, const Int& b);

struct LineProperties {
    bool effective;
    bool globally_generated;
    bool smooth_integral_member;
    /// On the product model the smooth-member criterion is derived
    /// (global generation + Bertini) rather than a listed case split;
    /// output carries this flag so consumers can tell.
    bool smooth_member_criterion_extended;
};

LineProperties line_properties(Model m, const Int& a, const Int& b);

/// Indices (a',b') with h^i(aξ+bf) = h^{3-i}(a'ξ+b'f): Serre duality
/// through ω = -3ξ-(2-e)f. An involution.
std::pair<Int, Int> serre_dual_indices(Model m, const Int& a, const Int& b);

}  // namespace fano
