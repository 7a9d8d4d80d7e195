#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fano/bundle.hpp"

namespace fano {

/// The three families of smooth rational curves the constructions draw
/// from: L are the lines of the blow-up (inside the exceptional
/// divisor), M the pulled-back lines / fibres of the projection to P2,
/// N the lines inside fibres of the projection to P1.
enum class Family { L, M, N };

struct CurveFamily {
    Family name;
    Model model;
    ChowClass cls;                          ///< class in codimension 2
    std::pair<Int, Int> normal_splitting;   ///< N_{C|F} = O(u) ⊕ O(v) on P1
    Int hilbert_dim;
    Int h_degree;     ///< C·h
    Int hhat_degree;  ///< C·ĥ
};

/// Discrete data of a family; L requires the blow-up model.
CurveFamily curve_family(Family name, Model m);

/// A disjoint union of family members, recorded only by counts.
struct ZScheme {
    Model model;
    Int n_l, n_m, n_n;

    bool empty() const { return n_l == 0 && n_m == 0 && n_n == 0; }
};

/// Cycle class of the union: n_l(ξ²-ξf) + n_m ξ² + n_n ξf.
ChowClass z_class(const ZScheme& z);

enum class Polarization { H, Hhat };

/// All codimension-2 classes aξ²+bξf of degree 1 against the chosen
/// polarization subject to a >= 0 and ea+b >= 0. Finite: the listed
/// constraints force a <= 1.
std::vector<ChowClass> classify_unit_degree(Model m, Polarization pol);

/// Existence and uniqueness tests for a rank-2 bundle with the given
/// determinant and a section vanishing on a prescribed codim-2 locus:
/// exists iff h²(-det) = 0, unique iff additionally h¹(-det) = 0.
std::pair<bool, bool> serre_applicable(const ChowClass& det, Model m);

/// The three bundle constructions of the library.
enum class Variant { Instanton, Earnest, Segre };

std::string variant_name(Variant v);
Model variant_model(Variant v);

/// Admissible charge range of a variant:
///   Instanton: α >= 2, α+β >= 4, 4α+3β >= 15   (blow-up)
///   Earnest:   α >= 2, β >= 1,   4α+3β >= 15   (blow-up)
///   Segre:     α >= 2, β >= 3,   α+β >= 6      (product)
bool variant_admissible(Variant v, const Int& alpha, const Int& beta);

/// Fixed recipe data: the determinant of the intermediate bundle, the
/// twist that produces the instanton from it, and the curve counts as
/// functions of the charge.
struct ConstructionRecipe {
    Variant variant;
    Model model;
    ChowClass det;
    ChowClass twist_divisor;

    ZScheme z_scheme(const Int& alpha, const Int& beta) const;
};

ConstructionRecipe recipe(Variant v);

/// Restriction behaviour on a general line, recorded with the charge
/// data. The product model has no lines, so the verdict there is
/// tagged vacuous instead of carrying a splitting type.
struct GenericSplitting {
    bool vacuous;
    std::pair<Int, Int> type;
};

struct RecipeCharge {
    ZScheme z;
    ChernData chern;  ///< Chern data of the twisted bundle E
    bool det_compatible;
    std::vector<std::string> det_checks;
    GenericSplitting splitting;
};

/// Runs the charge algebra of a recipe: builds the curve scheme,
/// verifies det-compatibility family by family (splitting degrees must
/// sum to det·class), and returns the Chern data of E, which must come
/// out as (2, -h, αξ²+βξf, 0).
RecipeCharge recipe_charge(Variant v, const Int& alpha, const Int& beta);

/// Bounds for h¹(E(-E_exc)) measuring failure of earnestness:
/// [max(α-3,0), α-2] for the Instanton recipe, [0,0] for Earnest.
/// Undefined for Segre (no exceptional divisor).
struct DefectInterval {
    Int lo, hi;
};

DefectInterval earnest_defect_bounds(Variant v, const Int& alpha, const Int& beta);

}  // namespace fano
