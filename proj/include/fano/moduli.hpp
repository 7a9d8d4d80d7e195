#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fano/chow.hpp"
#include "fano/serre.hpp"

namespace fano {

/// Everything the classifier knows about one charge αξ²+βξf.
struct ChargeReport {
    int e;
    Int alpha, beta;
    Int degree;  ///< c₂·h = 4α+3β (blow-up) or 2α+3β (product)
    bool monad_necessary_ok;
    bool instanton_exists;
    bool earnest_exists;
    bool in_movable_cone;
    std::optional<Int> ext1_dim;
    std::vector<std::string> notes;
};

/// Classify one charge. The existence flags are sharp: the necessary
/// bounds of the monad tables coincide with the constructive range of
/// the disjoint-curve recipes.
ChargeReport classify_charge(Model m, const Int& alpha, const Int& beta);

/// Membership of αξ²+βξf in the movable cone: nonnegative pairing with
/// every effective divisor, which reduces to α,β >= 0 on both models.
bool mov_contains(Model m, const Int& alpha, const Int& beta);

struct ExtDims {
    Int ext1, ext2, ext3;
};

/// Ext-algebra dimensions of a bundle produced by the given recipe:
/// (2·c₂h - 30, 0, 0), with the degree pairing evaluated in the ring
/// and cross-checked against the closed forms 8α+6β-30 and 4α+6β-30.
ExtDims ext_dims_constructed(Variant v, const Int& alpha, const Int& beta);

/// Reports for every charge with α >= 0 and 0 <= degree <= max_degree,
/// sorted by degree then α. On the blow-up β may be negative; the scan
/// is kept finite by α+β >= 0, which covers every existing charge.
std::vector<ChargeReport> enumerate_charges(Model m, const Int& max_degree);

/// Recorded facts about the first charge beyond the minimal one on the
/// blow-up, where the moduli space is the projectivization of a
/// five-dimensional extension space.
struct SpecialCharge23 {
    Int extension_space_dim;  ///< h¹(O(ξ-3f)) = 5
    Int moduli_dim;           ///< 4
};

SpecialCharge23 special_charge_2_3();

}  // namespace fano
