#include "fano/cotangent.hpp"

#include <algorithm>
#include <sstream>

#include "fano/bundle.hpp"
#include "fano/errors.hpp"
#include "fano/line_cohomology.hpp"

namespace fano {

std::string CohomEntry::to_string() const {
    std::ostringstream os;
    if (exact())
        os << lo;
    else
        os << "[" << lo << ", " << hi << "]";
    return os.str();
}

namespace {

Int binom2_std(const Int& n) { return n >= 2 ? Int(n * (n - 1) / 2) : Int(0); }

Int p1_h0(const Int& m) { return m >= 0 ? Int(m + 1) : Int(0); }
Int p1_h1(const Int& m) { return m <= -2 ? Int(-m - 1) : Int(0); }

using Vec4 = std::array<Int, 4>;
using Box = std::array<CohomEntry, 4>;

Vec4 line_h(Model m, const Int& a, const Int& b) {
    const CohomologyVector v = line_cohomology(m, a, b);
    return {v.h0, v.h1, v.h2, v.h3};
}

// Per-coordinate range of V_i over all exact fillings of
//   0 -> V -> M -> B -> 0,
// i.e. V_i = B_{i-1} - s_{i-1} + M_i - s_i where s_i is the rank of
// M_i -> B_i, 0 <= s_i <= min(M_i, B_i), and s_3 = B_3 because the
// sequence ends surjectively.
Box bounds_sub_presentation(const Vec4& mid, const Vec4& quot) {
    if (quot[3] > mid[3])
        throw InternalError("sub-presentation: h3 of the quotient exceeds h3 of the middle term");
    Vec4 smin{}, smax{};
    for (int i = 0; i < 3; ++i) {
        smin[i] = 0;
        smax[i] = std::min(mid[i], quot[i]);
    }
    smin[3] = smax[3] = quot[3];
    Box out;
    for (int i = 0; i < 4; ++i) {
        const Int prev_lo = i == 0 ? Int(0) : Int(quot[i - 1] - smax[i - 1]);
        const Int prev_hi = i == 0 ? Int(0) : Int(quot[i - 1] - smin[i - 1]);
        out[i].lo = prev_lo + mid[i] - smax[i];
        out[i].hi = prev_hi + mid[i] - smin[i];
        if (out[i].lo < 0) out[i].lo = 0;
    }
    return out;
}

// Same for 0 -> B -> M -> V -> 0: V_i = M_i - u_i + B_{i+1} - u_{i+1}
// with u_i the rank of B_i -> M_i, pinned u_0 = B_0 by injectivity.
Box bounds_quot_presentation(const Vec4& sub, const Vec4& mid) {
    if (sub[0] > mid[0])
        throw InternalError("quot-presentation: h0 of the sub term exceeds h0 of the middle term");
    std::array<Int, 5> umin{}, umax{};
    umin[0] = umax[0] = sub[0];
    for (int i = 1; i < 4; ++i) {
        umin[i] = 0;
        umax[i] = std::min(sub[i], mid[i]);
    }
    umin[4] = umax[4] = 0;
    Box out;
    for (int i = 0; i < 4; ++i) {
        const Int next = i == 3 ? Int(0) : sub[i + 1];
        out[i].lo = mid[i] - umax[i] + next - umax[i + 1];
        out[i].hi = mid[i] - umin[i] + next - umin[i + 1];
        if (out[i].lo < 0) out[i].lo = 0;
    }
    return out;
}

void intersect(Box& box, const Box& other) {
    for (int i = 0; i < 4; ++i) {
        box[i].lo = std::max(box[i].lo, other[i].lo);
        box[i].hi = std::min(box[i].hi, other[i].hi);
        if (box[i].lo > box[i].hi)
            throw InternalError("cotangent cohomology bounds became inconsistent");
    }
}

// Tighten the box against h0 - h1 + h2 - h3 = chi until nothing moves.
void propagate_chi(Box& box, const Int& chi) {
    const int sign[4] = {+1, -1, +1, -1};
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < 4; ++i) {
            // Solve the alternating sum for coordinate i.
            Int lo = sign[i] > 0 ? chi : -chi;
            Int hi = lo;
            for (int j = 0; j < 4; ++j) {
                if (j == i) continue;
                const int rel = -sign[i] * sign[j];
                lo += rel > 0 ? box[j].lo : -box[j].hi;
                hi += rel > 0 ? box[j].hi : -box[j].lo;
            }
            lo = std::max(lo, Int(0));
            if (lo > box[i].lo) { box[i].lo = lo; changed = true; }
            if (hi < box[i].hi) { box[i].hi = hi; changed = true; }
            if (box[i].lo > box[i].hi)
                throw InternalError("cotangent cohomology bounds exclude the Euler characteristic");
        }
    }
}

// The two presentations of Ω(aξ+bf) on the blow-up:
//  (sub)  0 -> Ω(D) -> O(D-ξ)² ⊕ O(D-ξ+f) -> O(D) -> 0
//  (quot) 0 -> O(D-3ξ+f) -> O(D-2ξ+f)² ⊕ O(D-2ξ) -> Ω(D) -> 0
// the second coming from Ω^∨ ≅ Ω(3ξ-f).
Box euler_bounds(Model m, const Int& a, const Int& b, const Int& chi) {
    Vec4 mid1{}, quot1{}, sub2{}, mid2{};
    {
        const Vec4 u = line_h(m, a - 1, b);
        const Vec4 v = line_h(m, a - 1, b + 1);
        for (int i = 0; i < 4; ++i) mid1[i] = 2 * u[i] + v[i];
        quot1 = line_h(m, a, b);
    }
    {
        sub2 = line_h(m, a - 3, b + 1);
        const Vec4 u = line_h(m, a - 2, b + 1);
        const Vec4 v = line_h(m, a - 2, b);
        for (int i = 0; i < 4; ++i) mid2[i] = 2 * u[i] + v[i];
    }
    Box box = bounds_sub_presentation(mid1, quot1);
    intersect(box, bounds_quot_presentation(sub2, mid2));
    propagate_chi(box, chi);
    return box;
}

Int cotangent_chi(Model m, const Int& a, const Int& b) {
    return rr_general(chern_of(m, NamedBundle::cotangent(a, b)));
}

IntervalCohomology blowup_cotangent(Model m, const Int& a, const Int& b) {
    const Int chi = cotangent_chi(m, a, b);
    Box box = euler_bounds(m, a, b, chi);

    // Serre duality: h^i(Ω(D)) = h^{3-i}(Ω(-D-2f)).
    const Int da = -a, db = -b - 2;
    const Box dual = euler_bounds(m, da, db, cotangent_chi(m, da, db));
    Box flipped;
    for (int i = 0; i < 4; ++i) flipped[i] = dual[3 - i];
    intersect(box, flipped);
    propagate_chi(box, chi);

    return IntervalCohomology{box, chi};
}

IntervalCohomology product_cotangent(Model m, const Int& a, const Int& b) {
    const std::array<Int, 3> p2 = bott_p2(a);
    const Int q0 = p1_h0(b), q1 = p1_h1(b);
    IntervalCohomology out{};
    Vec4 h{};
    for (int i = 0; i <= 2; ++i) {
        h[i] += p2[i] * q0;
        h[i + 1] += p2[i] * q1;
    }
    for (int i = 0; i < 4; ++i) out.h[i] = CohomEntry{h[i], h[i]};
    out.chi = h[0] - h[1] + h[2] - h[3];
    if (out.chi != cotangent_chi(m, a, b))
        throw InternalError("Kunneth cotangent cohomology disagrees with Riemann-Roch");
    return out;
}

}  // namespace

std::array<Int, 3> bott_p2(const Int& a) {
    const Int h0 = a >= 1 ? Int(3 * binom2_std(a + 1) - binom2_std(a + 2)) : Int(0);
    const Int h1 = a == 0 ? 1 : 0;
    const Int h2 = -a >= 1 ? Int(3 * binom2_std(-a + 1) - binom2_std(-a + 2)) : Int(0);
    return {h0, h1, h2};
}

IntervalCohomology cotangent_cohomology(Model m, const Int& a, const Int& b) {
    return m.e() == 0 ? product_cotangent(m, a, b) : blowup_cotangent(m, a, b);
}

}  // namespace fano
