#include "fano/serre.hpp"

#include <sstream>

#include "fano/errors.hpp"
#include "fano/line_cohomology.hpp"
#include "fano/moduli.hpp"

namespace fano {

CurveFamily curve_family(Family name, Model m) {
    const Int e = m.e();
    switch (name) {
        case Family::L:
            if (m.e() != 1) throw InvalidInput("the product threefold contains no lines");
            return {name, m, m.codim2(1, -1), {0, -1}, 1, 1, 1};
        case Family::M:
            return {name, m, m.codim2(1, 0), {e, e}, 2 * (1 + e), 2 * (1 + e), 1 + e};
        case Family::N:
            return {name, m, m.codim2(0, 1), {0, 1}, 3, 3, 1};
    }
    throw InvalidInput("unknown curve family");
}

ChowClass z_class(const ZScheme& z) {
    if (z.model.e() == 0 && z.n_l != 0)
        throw InvalidInput("the product threefold contains no lines");
    ChowClass total = z.model.codim2(z.n_l + z.n_m, -z.n_l + z.n_n);
    return total;
}

std::vector<ChowClass> classify_unit_degree(Model m, Polarization pol) {
    const ChowClass polarization = pol == Polarization::H ? m.h() : m.hhat();
    std::vector<ChowClass> out;
    // Positivity a >= 0, ea+b >= 0 plus the degree-1 equation bound a
    // by (2-e)a <= 1 (h) or a <= 1 (hhat), so scanning a in {0,1} is
    // exhaustive; b is then determined by integrality of the degree.
    for (Int a = 0; a <= 1; ++a) {
        const Int weight_a = (polarization * (m.xi() * m.xi() * a)).degree();
        const Int weight_b = (polarization * (m.xi() * m.f())).degree();
        // a*weight_a' + b*weight_b = 1 where weight_a' is the pairing
        // of xi^2 with the polarization.
        const Int residue = 1 - weight_a;
        if (weight_b == 0) continue;
        if (residue % weight_b != 0) continue;
        const Int b = residue / weight_b;
        if (m.e() * a + b < 0) continue;
        out.push_back(m.codim2(a, b));
    }
    return out;
}

std::pair<bool, bool> serre_applicable(const ChowClass& det, Model m) {
    if (!det.is_homogeneous(1)) throw InvalidInput("determinant must be a divisor class");
    const Int a = -det.coeff(Mono::Xi);
    const Int b = -det.coeff(Mono::F);
    const CohomologyVector v = line_cohomology(m, a, b);
    const bool exists = v.h2 == 0;
    const bool unique = exists && v.h1 == 0;
    return {exists, unique};
}

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Instanton: return "instanton";
        case Variant::Earnest: return "earnest";
        case Variant::Segre: return "segre";
    }
    return "?";
}

Model variant_model(Variant v) { return Model(v == Variant::Segre ? 0 : 1); }

bool variant_admissible(Variant v, const Int& alpha, const Int& beta) {
    const ChargeReport report = classify_charge(variant_model(v), alpha, beta);
    return v == Variant::Earnest ? report.earnest_exists : report.instanton_exists;
}

ZScheme ConstructionRecipe::z_scheme(const Int& alpha, const Int& beta) const {
    switch (variant) {
        case Variant::Instanton: return {model, alpha - 2, 0, alpha + beta - 4};
        case Variant::Earnest: return {model, 0, alpha - 2, beta - 1};
        case Variant::Segre: return {model, 0, alpha - 2, beta - 3};
    }
    throw InvalidInput("unknown construction variant");
}

ConstructionRecipe recipe(Variant v) {
    const Model m = variant_model(v);
    switch (v) {
        case Variant::Instanton:
            return {v, m, m.divisor(1, -1), m.divisor(-2, 0)};
        case Variant::Earnest:
            return {v, m, m.divisor(1, 1), m.divisor(-2, -1)};
        case Variant::Segre:
            return {v, m, m.divisor(1, 0), m.divisor(-2, -1)};
    }
    throw InvalidInput("unknown construction variant");
}

namespace {

void check_det_component(std::vector<std::string>& checks, bool& ok, const ConstructionRecipe& r,
                         Family fam, const Int& count) {
    if (count == 0) return;
    const CurveFamily c = curve_family(fam, r.model);
    const Int pairing = (r.det * c.cls).degree();
    const Int splitting_sum = c.normal_splitting.first + c.normal_splitting.second;
    std::ostringstream os;
    os << "family " << (fam == Family::L ? "L" : fam == Family::M ? "M" : "N")
       << ": det*class = " << pairing << ", splitting degrees sum to " << splitting_sum;
    if (pairing != splitting_sum) {
        ok = false;
        os << " (MISMATCH)";
    }
    checks.push_back(os.str());
}

}  // namespace

RecipeCharge recipe_charge(Variant v, const Int& alpha, const Int& beta) {
    if (!variant_admissible(v, alpha, beta)) {
        std::ostringstream os;
        os << "charge (" << alpha << ", " << beta << ") is outside the " << variant_name(v)
           << " construction range";
        throw InvalidInput(os.str());
    }
    const ConstructionRecipe r = recipe(v);
    RecipeCharge out{r.z_scheme(alpha, beta),
                     ChernData{0, r.model.zero(), r.model.zero(), r.model.zero()},
                     true,
                     {},
                     {}};

    check_det_component(out.det_checks, out.det_compatible, r, Family::L, out.z.n_l);
    check_det_component(out.det_checks, out.det_compatible, r, Family::M, out.z.n_m);
    check_det_component(out.det_checks, out.det_compatible, r, Family::N, out.z.n_n);
    if (!out.det_compatible)
        throw InternalError("normal bundle data is inconsistent with the recipe determinant");

    const ChernData intermediate{2, r.det, z_class(out.z), r.model.zero()};
    out.chern = twist(intermediate, r.twist_divisor);

    out.splitting = v == Variant::Segre ? GenericSplitting{true, {0, 0}}
                                        : GenericSplitting{false, {0, -1}};
    return out;
}

DefectInterval earnest_defect_bounds(Variant v, const Int& alpha, const Int& beta) {
    (void)beta;  // bounds depend on alpha alone
    if (v == Variant::Segre)
        throw InvalidInput("the exceptional-divisor defect is only defined on the blow-up");
    if (v == Variant::Earnest) return {0, 0};
    const Int lo = alpha - 3 > 0 ? Int(alpha - 3) : Int(0);
    const Int hi = alpha - 2 > lo ? Int(alpha - 2) : lo;
    return {lo, hi};
}

}  // namespace fano
