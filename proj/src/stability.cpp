#include "fano/stability.hpp"

#include <sstream>

#include "fano/errors.hpp"
#include "fano/line_cohomology.hpp"

namespace fano {

std::string stability_kind_name(StabilityKind k) {
    switch (k) {
        case StabilityKind::StableVerified: return "stable-verified";
        case StabilityKind::SemistableVerified: return "semistable-verified";
        case StabilityKind::Unstable: return "unstable";
        case StabilityKind::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::vector<std::pair<Int, Int>> hoppe_window(Model m, const Rat& mu, const Int& bound,
                                              bool strict) {
    if (bound < 0) throw InvalidInput("window bound must be nonnegative");
    std::vector<std::pair<Int, Int>> out;
    for (Int a = -bound; a <= bound; ++a) {
        for (Int b = -bound; b <= bound; ++b) {
            const Rat lhs = Rat(3 * (1 + m.e()) * a + 9 * (a + b));
            if (strict ? lhs > mu : lhs >= mu) out.emplace_back(a, b);
        }
    }
    return out;
}

namespace {

struct Divisor {
    Int a, b;
};

std::string divisor_str(const Divisor& d) {
    std::ostringstream os;
    os << d.a << "*xi" << (d.b < 0 ? "" : "+") << d.b << "*f";
    return os.str();
}

bool line_h0_vanishes(Model m, const Divisor& d) {
    return line_cohomology(m, d.a, d.b).h0 == 0;
}

// Certify h0(I_Z(D)) = 0 for the disjoint general union Z of recipe
// curves; returns the rule name or the empty string.
std::string certify_ideal(Model m, const ZScheme& z, const Divisor& d, std::string& detail) {
    if (line_h0_vanishes(m, d)) {
        detail = "h0(O(" + divisor_str(d) + ")) = 0";
        return "line-vanishing";
    }
    if (d.a == 0 && d.b == 0) {
        if (!z.empty()) {
            detail = "twist is trivial and the vanishing locus is nonempty";
            return "nonempty-locus";
        }
        return "";
    }
    if (d.a == 0 && d.b == 1) {
        // Sections of O(f) cut out single fibres. A curve meeting every
        // fibre (L or M type) cannot lie in one, and two disjoint
        // fibre-lines must sit in distinct fibres.
        if (z.n_l + z.n_m >= 1) {
            detail = "a component meets every fibre, so no fibre contains Z";
            return "fibre-exclusion";
        }
        if (z.n_n >= 2) {
            detail = "two disjoint fibre-lines never share a fibre";
            return "fibre-exclusion";
        }
        return "";
    }
    if (m.e() == 1 && d.a >= 1 && d.a + d.b == 0) {
        // |k(xi-f)| consists of the exceptional divisor with
        // multiplicity k alone; general M- and N-curves avoid it.
        if (z.n_m >= 1 || z.n_n >= 1) {
            detail = "the only divisor is supported on the exceptional surface, which general "
                     "components avoid";
            return "exceptional-exclusion";
        }
        return "";
    }
    return "";
}

}  // namespace

StabilityVerdict check_serre_stability(Variant v, const Int& alpha, const Int& beta,
                                       const Int& bound) {
    const RecipeCharge rc = recipe_charge(v, alpha, beta);
    const ConstructionRecipe r = recipe(v);
    const Model m = r.model;
    const Rat mu = slope(rc.chern.c1, rc.chern.rank);

    StabilityVerdict verdict{StabilityKind::StableVerified, bound, {}};
    for (const auto& [a, b] : hoppe_window(m, mu, bound, /*strict=*/false)) {
        // Twist the defining sequence 0 -> O(t) -> E -> I_Z(det+t) -> 0
        // by O(-a xi - b f).
        const Divisor sub{r.twist_divisor.coeff(Mono::Xi) - a, r.twist_divisor.coeff(Mono::F) - b};
        const Divisor quot{sub.a + r.det.coeff(Mono::Xi), sub.b + r.det.coeff(Mono::F)};

        TwistWitness w{a, b, false, "", ""};
        if (!line_h0_vanishes(m, sub)) {
            w.rule = "none";
            w.detail = "h0(O(" + divisor_str(sub) + ")) > 0";
        } else {
            std::string detail;
            const std::string rule = certify_ideal(m, rc.z, quot, detail);
            if (rule.empty()) {
                w.rule = "none";
                w.detail = "no vanishing rule applies to I_Z(" + divisor_str(quot) + ")";
            } else {
                w.certified = true;
                w.rule = rule;
                w.detail = detail;
            }
        }
        if (!w.certified) verdict.verdict = StabilityKind::Inconclusive;
        verdict.witnesses.push_back(std::move(w));
    }
    return verdict;
}

StabilityVerdict check_split_slopes(Model m, const std::vector<ChowClass>& summands) {
    if (summands.empty()) throw InvalidInput("a direct sum needs at least one summand");
    StabilityVerdict verdict{StabilityKind::SemistableVerified, 0, {}};
    Rat first_slope;
    bool mismatch = false;
    for (std::size_t i = 0; i < summands.size(); ++i) {
        if (summands[i].model() != m)
            throw ModelMismatch("summand lives on a different threefold");
        const Rat s = slope(summands[i], 1);
        if (i == 0)
            first_slope = s;
        else if (s != first_slope)
            mismatch = true;
        std::ostringstream os;
        os << "slope " << s;
        verdict.witnesses.push_back(TwistWitness{summands[i].coeff(Mono::Xi),
                                                 summands[i].coeff(Mono::F), true,
                                                 "slope", os.str()});
    }
    if (mismatch) verdict.verdict = StabilityKind::Unstable;
    return verdict;
}

}  // namespace fano
