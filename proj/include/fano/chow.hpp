#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "fano/numeric.hpp"

namespace fano {

class ChowClass;

/// One of the two threefolds the library computes on: e = 0 is the
/// product P1 x P2, e = 1 is the blow-up of P3 along a line. Both are
/// index-1 Fano threefolds of degree 54 and come with the projective
/// bundle structure over P1 that defines the classes xi and f.
class Model {
public:
    explicit Model(int e);

    int e() const { return e_; }

    ChowClass zero() const;
    ChowClass unit() const;
    ChowClass xi() const;
    ChowClass f() const;
    /// aξ + bf
    ChowClass divisor(const Int& a, const Int& b) const;
    /// αξ² + βξf (the shape of every charge)
    ChowClass codim2(const Int& alpha, const Int& beta) const;
    ChowClass point() const;

    /// Fundamental polarization h = 3ξ + (2-e)f, with h³ = 54.
    ChowClass h() const;
    /// Auxiliary very ample polarization ĥ = ξ + f.
    ChowClass hhat() const;
    /// Canonical class ω = -h (index 1).
    ChowClass omega() const;
    /// c₂ of the cotangent bundle: 3ξ² + (6-2e)ξf.
    ChowClass c2_cotangent() const;
    /// Exceptional divisor class ξ - f; only defined on the blow-up.
    ChowClass exceptional() const;

    int index() const { return 1; }
    int q() const { return 0; }
    Int chi_structure_sheaf() const { return 1; }

    bool operator==(const Model& o) const { return e_ == o.e_; }
    bool operator!=(const Model& o) const { return e_ != o.e_; }

private:
    int e_;
};

/// Basis monomials of A(F_e) = Z[ξ,f]/(f², ξ³-eξ²f), in the fixed
/// order used for the coefficient vector.
enum class Mono : int { One = 0, Xi = 1, F = 2, Xi2 = 3, XiF = 4, Pt = 5 };

/// An element of the Chow ring, stored as six exact integers on the
/// basis {1, ξ, f, ξ², ξf, pt}. Products are reduced eagerly through
/// f² = 0 and ξ³ = e·ξ²f (so ξ²f is the point class in both models).
/// Values are immutable once built; all operations return new values.
class ChowClass {
public:
    explicit ChowClass(Model m);

    static ChowClass monomial(Model m, Mono basis, const Int& coeff = 1);

    Model model() const { return model_; }
    const Int& coeff(Mono basis) const { return c_[static_cast<int>(basis)]; }
    const std::array<Int, 6>& coefficients() const { return c_; }

    bool is_zero() const;
    /// True when every nonzero coefficient sits in codimension k.
    bool is_homogeneous(int codim) const;
    /// The coefficient of the point class.
    const Int& degree() const { return c_[static_cast<int>(Mono::Pt)]; }

    /// Component of pure codimension k (0..3), other coefficients zeroed.
    ChowClass graded_part(int codim) const;

    ChowClass operator+(const ChowClass& o) const;
    ChowClass operator-(const ChowClass& o) const;
    ChowClass operator-() const;
    ChowClass operator*(const ChowClass& o) const;
    ChowClass operator*(const Int& s) const;
    ChowClass pow(unsigned exponent) const;

    bool operator==(const ChowClass& o) const;
    bool operator!=(const ChowClass& o) const { return !(*this == o); }

    /// Canonical printed form, re-parseable by parse_expr. The point
    /// class always prints as xi^2*f.
    std::string to_string() const;

private:
    Model model_;
    std::array<Int, 6> c_;
};

ChowClass operator*(const Int& s, const ChowClass& x);
std::ostream& operator<<(std::ostream& os, const ChowClass& x);

/// Degree of the codimension-3 part; alias for x.degree().
Int degree(const ChowClass& x);

/// Slope (c₁·h²)/rank as an exact rational. For a line bundle
/// O(aξ+bf) this is 15a+9b on the blow-up and 12a+9b on the product.
Rat slope(const ChowClass& c1, const Int& rank);

}  // namespace fano
