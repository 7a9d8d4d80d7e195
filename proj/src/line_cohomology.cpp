#include "fano/line_cohomology.hpp"

#include "fano/bundle.hpp"
#include "fano/errors.hpp"

namespace fano {

Int CohomologyVector::h(int i) const {
    switch (i) {
        case 0: return h0;
        case 1: return h1;
        case 2: return h2;
        case 3: return h3;
        default: return 0;
    }
}

namespace {

// C(n,1) with the convention that negative arguments give 0.
Int binom1(const Int& n) { return n > 0 ? n : Int(0); }

// C(n,2) = n(n-1)/2 for n >= 2, else 0.
Int binom2(const Int& n) { return n >= 2 ? Int(n * (n - 1) / 2) : Int(0); }

// Σ_{j=1}^{top} j * C(base ± j, 1); the four blow-up formulas are all
// of this shape.
Int weighted_sum(const Int& top, const Int& base, int sign) {
    Int total = 0;
    for (Int j = 1; j <= top; ++j) total += j * binom1(base + sign * j);
    return total;
}

}  // namespace

CohomologyVector line_cohomology(Model m, const Int& a, const Int& b) {
    CohomologyVector v{0, 0, 0, 0, 0};
    if (m.e() == 1) {
        v.h0 = weighted_sum(a + 1, a + b + 2, -1);
        v.h1 = weighted_sum(a + 1, -a - b - 2, +1);
        v.h2 = weighted_sum(-a - 2, a + b + 2, +1);
        v.h3 = weighted_sum(-a - 2, -a - b - 2, -1);
    } else {
        v.h0 = binom2(a + 2) * binom1(b + 1);
        v.h1 = binom2(a + 2) * binom1(-1 - b);
        v.h2 = binom2(-1 - a) * binom1(b + 1);
        v.h3 = binom2(-1 - a) * binom1(-1 - b);
    }
    v.chi = v.h0 - v.h1 + v.h2 - v.h3;
    return v;
}

Int line_chi_rr(Model m, const Int& a, const Int& b) {
    return rr_general(chern_of(m, NamedBundle::line(a, b)));
}

LineProperties line_properties(Model m, const Int& a, const Int& b) {
    LineProperties p{};
    if (m.e() == 1) {
        p.effective = a >= 0 && a + b >= 0;
        p.globally_generated = a >= 0 && b >= 0;
        p.smooth_integral_member = p.globally_generated || (a == 1 && b == -1);
        p.smooth_member_criterion_extended = false;
    } else {
        p.effective = a >= 0 && b >= 0;
        p.globally_generated = p.effective;
        p.smooth_integral_member = p.globally_generated;
        p.smooth_member_criterion_extended = true;
    }
    return p;
}

std::pair<Int, Int> serre_dual_indices(Model m, const Int& a, const Int& b) {
    return {-a - 3, -b - (2 - m.e())};
}

}  // namespace fano
