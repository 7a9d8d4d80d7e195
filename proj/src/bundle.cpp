#include "fano/bundle.hpp"

#include <sstream>

#include "fano/errors.hpp"

namespace fano {

std::string NamedBundle::to_string() const {
    std::ostringstream os;
    os << (kind == BundleKind::Line ? "O(" : "Omega(");
    const ChowClass d = Model(0).divisor(a, b);
    os << (d.is_zero() ? "0" : d.to_string()) << ")";
    return os.str();
}

ChernData chern_of(Model m, const NamedBundle& bundle) {
    if (bundle.kind == BundleKind::Line)
        return ChernData{1, m.divisor(bundle.a, bundle.b), m.zero(), m.zero()};

    // Relative cotangent bundle: rank 2 with total Chern class
    // (1-ξ)²(1-ξ+ef); the codim-3 part cancels through ξ³ = eξ²f.
    ChernData base{2, m.divisor(-3, m.e()), m.codim2(3, -2 * m.e()), m.zero()};
    return twist(base, m.divisor(bundle.a, bundle.b));
}

ChernData twist(const ChernData& c, const ChowClass& L) {
    if (!L.is_homogeneous(1)) throw InvalidInput("twist expects a divisor class");
    if (L.model() != c.model()) throw ModelMismatch("twist: divisor lives on a different model");
    const Int& r = c.rank;
    const ChowClass L2 = L * L;
    const ChowClass L3 = L2 * L;

    ChernData out{c.rank, c.c1, c.c2, c.c3};
    out.c1 = c.c1 + L * r;
    out.c2 = c.c2 + c.c1 * L * (r - 1) + L2 * choose(r, 2);
    out.c3 = c.c3 + c.c2 * L * (r - 2) + c.c1 * L2 * choose(r - 1, 2) + L3 * choose(r, 3);
    return out;
}

namespace {

// Total Chern class as one inhomogeneous ring element with unit
// constant term.
ChowClass total_chern(const ChernData& c) {
    return c.model().unit() + c.c1 + c.c2 + c.c3;
}

// Inverse of 1 + n with n of positive codimension; n^4 = 0 on a
// threefold so the Neumann series stops.
ChowClass invert_unit_series(const ChowClass& s) {
    const ChowClass one = s.model().unit();
    const ChowClass n = s - one;
    return one - n + n * n - n * n * n;
}

}  // namespace

ChernData chern_of_complex(Model m, const std::vector<ComplexTerm>& terms) {
    Int rank = 0;
    ChowClass total = m.unit();
    for (const auto& term : terms) {
        const bool odd = ((term.degree % 2) + 2) % 2 == 1;
        for (const auto& [bundle, mult] : term.summands) {
            if (mult < 0) throw InvalidInput("complex term multiplicities must be nonnegative");
            const ChernData c = chern_of(m, bundle);
            rank += (odd ? -mult : mult) * c.rank;
            ChowClass factor = total_chern(c);
            if (odd) factor = invert_unit_series(factor);
            for (Int i = 0; i < mult; ++i) total = total * factor;
        }
    }
    return ChernData{rank, total.graded_part(1), total.graded_part(2), total.graded_part(3)};
}

Int rr_chi(Model m, const Int& alpha, const Int& beta, const Int& a, const Int& b) {
    Rat chi = 0;
    if (m.e() == 1) chi += Rat(a * a * a, 3) + Rat(2 * a, 3) - Rat(a * alpha);
    chi += Rat(a * a * b + 3 * a + 2 * b - b * alpha - a * beta);
    if (rat_den(chi) != 1) throw InternalError("rr_chi produced a non-integral value");
    return rat_num(chi);
}

Int rr_general(const ChernData& c) {
    const Model m = c.model();
    const ChowClass omega = m.omega();
    const ChowClass c2cot = m.c2_cotangent();

    const Int deg_c1_cubed = (c.c1 * c.c1 * c.c1).degree();
    const Int deg_c1c2 = (c.c1 * c.c2).degree();
    const Int deg_c3 = c.c3.degree();
    const Int deg_w_c1sq = (omega * c.c1 * c.c1).degree();
    const Int deg_w_c2 = (omega * c.c2).degree();
    const Int deg_w2_c1 = (omega * omega * c.c1).degree();
    const Int deg_c2cot_c1 = (c2cot * c.c1).degree();

    Rat chi = Rat(c.rank) * Rat(m.chi_structure_sheaf());
    chi += Rat(deg_c1_cubed - 3 * deg_c1c2 + 3 * deg_c3, 6);
    chi -= Rat(deg_w_c1sq - 2 * deg_w_c2, 4);
    chi += Rat(deg_w2_c1 + deg_c2cot_c1, 12);
    if (rat_den(chi) != 1)
        throw InternalError("Riemann-Roch produced a non-integral chi; Chern data is inconsistent");
    return rat_num(chi);
}

}  // namespace fano
