#pragma once

#include <array>
#include <string>
#include <vector>

#include "fano/bundle.hpp"

namespace fano {

/// Parameters of an instanton monad: the charge coefficients (α,β) and
/// the one or two extra cohomological invariants of the bundle. On the
/// blow-up γ and δ are the h¹ of two fixed twists and must satisfy
///   α >= 2, γ >= 0, β >= max{4-α, α-δ-2, 1-γ}, δ >= 2γ;
/// on the product only γ appears and the constraints are
///   α >= 2, β >= 3, α+β >= 6, γ >= 0, α-β+γ >= 0.
/// These are exactly the conditions making every term multiplicity
/// nonnegative.
struct MonadSpec {
    int e;
    Int alpha, beta;
    Int gamma = 0;
    Int delta = 0;  // unused on the product model

    Model model() const { return Model(e); }
};

/// Violated multiplicity inequalities, empty when the spec is valid.
std::vector<std::string> monad_spec_violations(const MonadSpec& spec);

/// The three terms of the monad, indexed -1, 0, 1.
struct MonadTerms {
    int e;
    std::array<BundleSum, 3> term;  // term[0] is C^{-1}, term[1] is C^0, term[2] is C^1

    const BundleSum& at(int degree) const { return term[degree + 1]; }
    Model model() const { return Model(e); }
};

/// Term multiplicities of the monad for a valid spec; throws
/// InvalidInput listing every violated inequality otherwise.
MonadTerms build_monad(const MonadSpec& spec);

/// Outcome of checking that a term complex has the Chern data of an
/// instanton bundle: rank 2, c1 = -h, c2 = αξ²+βξf, c3 = 0. The charge
/// read off the complex is reported either way.
struct MonadVerdict {
    bool ok;
    ChernData chern;
    Int charge_alpha, charge_beta;
    std::vector<std::string> failures;
};

MonadVerdict verify_monad(const MonadTerms& terms);

/// Integer-linear polynomial in (α,β,γ,δ); the symbolic entry type of
/// the e^{p,q} tables.
struct LinPoly {
    Int c0, ca, cb, cg, cd;

    static LinPoly constant(const Int& v) { return {v, 0, 0, 0, 0}; }
    Int eval(const Int& a, const Int& b, const Int& g, const Int& d) const {
        return c0 + ca * a + cb * b + cg * g + cd * d;
    }
    LinPoly operator+(const LinPoly& o) const {
        return {c0 + o.c0, ca + o.ca, cb + o.cb, cg + o.cg, cd + o.cd};
    }
    LinPoly operator-(const LinPoly& o) const {
        return {c0 - o.c0, ca - o.ca, cb - o.cb, cg - o.cg, cd - o.cd};
    }
    LinPoly operator-() const { return {-c0, -ca, -cb, -cg, -cd}; }
    bool operator==(const LinPoly&) const = default;
    bool is_zero() const { return *this == LinPoly{0, 0, 0, 0, 0}; }
    std::string to_string() const;
};

/// 6x6 table of h^{q+ceil(p/2)}(E ⊗ F_p) for the fixed twist collection
/// F_{-5},...,F_0, with q = 0..5 downward and p = -5..0 across.
struct EpqTable {
    int e;
    std::array<std::array<LinPoly, 6>, 6> cell;  // cell[q][p+5]

    const LinPoly& at(int p, int q) const { return cell[q][p + 5]; }
};

struct EpqValues {
    int e;
    std::array<std::array<Int, 6>, 6> cell;

    const Int& at(int p, int q) const { return cell[q][p + 5]; }
};

/// The divisor twist (a_p, b_p) with F_p = O(a_p ξ + b_p f).
std::pair<Int, Int> epq_twist(int e, int p);

/// chi(E ⊗ F_p) as a symbolic linear polynomial in (α,β); this is the
/// alternating sum of column p of the table.
LinPoly epq_column_chi(int e, int p);

/// Symbolic table for the given model.
EpqTable epq_table_symbolic(int e);

/// Numeric table for a valid spec. Every entry is derived twice: by
/// evaluating the symbolic table and by combining Riemann-Roch with
/// the forced vanishing pattern of each column; a mismatch throws
/// InternalError.
EpqValues epq_table_numeric(const MonadSpec& spec);

}  // namespace fano
