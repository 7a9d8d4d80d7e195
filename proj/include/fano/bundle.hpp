#pragma once

#include <string>
#include <vector>

#include "fano/chow.hpp"

namespace fano {

/// Chern data of a bundle or of the formal cohomology of a complex:
/// rank plus the graded pieces c1 (codim 1), c2 (codim 2), c3 (codim 3).
struct ChernData {
    Int rank;
    ChowClass c1, c2, c3;

    Model model() const { return c1.model(); }
    bool operator==(const ChernData&) const = default;
};

enum class BundleKind {
    Line,               ///< O(aξ + bf)
    RelativeCotangent,  ///< Ω_{F|P1}(aξ + bf), rank 2
};

/// A bundle the monad machinery knows by name: a line bundle twist or
/// a twist of the relative cotangent bundle of the fibration over P1.
struct NamedBundle {
    BundleKind kind;
    Int a, b;

    static NamedBundle line(const Int& a, const Int& b) { return {BundleKind::Line, a, b}; }
    static NamedBundle cotangent(const Int& a, const Int& b) {
        return {BundleKind::RelativeCotangent, a, b};
    }

    bool operator==(const NamedBundle&) const = default;
    std::string to_string() const;
};

/// Formal sum of named bundles with nonnegative multiplicities.
using BundleSum = std::vector<std::pair<NamedBundle, Int>>;

/// One term of a bounded complex.
struct ComplexTerm {
    int degree;
    BundleSum summands;
};

/// Chern data of a named bundle. The relative cotangent bundle carries
/// total Chern class (1-ξ)²(1-ξ+ef) from the relative Euler sequence,
/// so untwisted c1 = -3ξ+ef and c2 = 3ξ²-2eξf.
ChernData chern_of(Model m, const NamedBundle& bundle);

/// Chern data of E ⊗ O(L) for a divisor class L, via the total-Chern
/// re-expansion c_k(E⊗L) = Σ C(rank-i, k-i) c_i L^{k-i}.
ChernData twist(const ChernData& c, const ChowClass& L);

/// Rank and Chern classes of the formal alternating "cohomology" of a
/// bounded complex: c(E) = Π c(C^i)^{(-1)^i} computed by truncated
/// power-series multiplication and inversion in the Chow ring, and
/// rank(E) = Σ (-1)^i rank(C^i).
ChernData chern_of_complex(Model m, const std::vector<ComplexTerm>& terms);

/// chi(E(aξ+bf)) for a rank-2 bundle with c1 = -h and charge αξ²+βξf,
/// as the closed cubic polynomial specialized to these threefolds.
/// Evaluated over exact rationals; the result is always an integer.
Int rr_chi(Model m, const Int& alpha, const Int& beta, const Int& a, const Int& b);

/// General Riemann-Roch on a threefold: evaluates
///   chi = rk + (c1³ - 3c1c2 + 3c3)/6 - (ωc1² - 2ωc2)/4 + (ω²c1 + c2(Ω)c1)/12
/// and asserts the result is integral (a non-integer signals corrupt
/// Chern data).
Int rr_general(const ChernData& c);

}  // namespace fano
