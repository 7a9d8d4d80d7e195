#include "fano/chow.hpp"

#include <ostream>
#include <sstream>

#include "fano/errors.hpp"

namespace fano {

Int choose(const Int& n, unsigned k) {
    Int num = 1;
    Int den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= n - Int(i);
        den *= Int(i) + 1;
    }
    return num / den;
}

Model::Model(int e) : e_(e) {
    if (e != 0 && e != 1) throw InvalidInput("model parameter e must be 0 or 1");
}

ChowClass Model::zero() const { return ChowClass(*this); }
ChowClass Model::unit() const { return ChowClass::monomial(*this, Mono::One); }
ChowClass Model::xi() const { return ChowClass::monomial(*this, Mono::Xi); }
ChowClass Model::f() const { return ChowClass::monomial(*this, Mono::F); }
ChowClass Model::point() const { return ChowClass::monomial(*this, Mono::Pt); }

ChowClass Model::divisor(const Int& a, const Int& b) const {
    return ChowClass::monomial(*this, Mono::Xi, a) + ChowClass::monomial(*this, Mono::F, b);
}

ChowClass Model::codim2(const Int& alpha, const Int& beta) const {
    return ChowClass::monomial(*this, Mono::Xi2, alpha) +
           ChowClass::monomial(*this, Mono::XiF, beta);
}

ChowClass Model::h() const { return divisor(3, 2 - e_); }
ChowClass Model::hhat() const { return divisor(1, 1); }
ChowClass Model::omega() const { return divisor(-3, e_ - 2); }
ChowClass Model::c2_cotangent() const { return codim2(3, 6 - 2 * e_); }

ChowClass Model::exceptional() const {
    if (e_ != 1) throw InvalidInput("the exceptional divisor exists only on the blow-up (e=1)");
    return divisor(1, -1);
}

ChowClass::ChowClass(Model m) : model_(m) { c_.fill(0); }

ChowClass ChowClass::monomial(Model m, Mono basis, const Int& coeff) {
    ChowClass r(m);
    r.c_[static_cast<int>(basis)] = coeff;
    return r;
}

bool ChowClass::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

namespace {
constexpr int kCodim[6] = {0, 1, 1, 2, 2, 3};
}

bool ChowClass::is_homogeneous(int codim) const {
    for (int i = 0; i < 6; ++i)
        if (kCodim[i] != codim && c_[i] != 0) return false;
    return true;
}

ChowClass ChowClass::graded_part(int codim) const {
    ChowClass r(model_);
    for (int i = 0; i < 6; ++i)
        if (kCodim[i] == codim) r.c_[i] = c_[i];
    return r;
}

namespace {
void require_same_model(const ChowClass& x, const ChowClass& y) {
    if (x.model() != y.model())
        throw ModelMismatch("cannot combine classes living on different threefolds");
}
}  // namespace

ChowClass ChowClass::operator+(const ChowClass& o) const {
    require_same_model(*this, o);
    ChowClass r(model_);
    for (int i = 0; i < 6; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

ChowClass ChowClass::operator-(const ChowClass& o) const {
    require_same_model(*this, o);
    ChowClass r(model_);
    for (int i = 0; i < 6; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

ChowClass ChowClass::operator-() const {
    ChowClass r(model_);
    for (int i = 0; i < 6; ++i) r.c_[i] = -c_[i];
    return r;
}

// Reduction rules behind the table: f² = 0, ξ³ = e·ξ²f = e·pt,
// ξ·ξf = ξ²f = pt, everything of codimension > 3 dies.
ChowClass ChowClass::operator*(const ChowClass& o) const {
    require_same_model(*this, o);
    const auto& x = c_;
    const auto& y = o.c_;
    const Int e = model_.e();

    ChowClass r(model_);
    r.c_[0] = x[0] * y[0];
    r.c_[1] = x[0] * y[1] + x[1] * y[0];
    r.c_[2] = x[0] * y[2] + x[2] * y[0];
    r.c_[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[1];
    r.c_[4] = x[0] * y[4] + x[4] * y[0] + x[1] * y[2] + x[2] * y[1];
    r.c_[5] = x[0] * y[5] + x[5] * y[0]           // 1 · pt
            + x[1] * y[4] + x[4] * y[1]           // ξ · ξf
            + x[2] * y[3] + x[3] * y[2]           // f · ξ²
            + e * (x[1] * y[3] + x[3] * y[1]);    // ξ · ξ² = ξ³
    return r;
}

ChowClass ChowClass::operator*(const Int& s) const {
    ChowClass r(model_);
    for (int i = 0; i < 6; ++i) r.c_[i] = c_[i] * s;
    return r;
}

ChowClass operator*(const Int& s, const ChowClass& x) { return x * s; }

ChowClass ChowClass::pow(unsigned exponent) const {
    ChowClass r = model_.unit();
    for (unsigned i = 0; i < exponent; ++i) r = r * (*this);
    return r;
}

bool ChowClass::operator==(const ChowClass& o) const {
    return model_ == o.model_ && c_ == o.c_;
}

std::string ChowClass::to_string() const {
    static const char* kMono[6] = {"", "xi", "f", "xi^2", "xi*f", "xi^2*f"};
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 6; ++i) {
        const Int& v = c_[i];
        if (v == 0) continue;
        Int mag = v < 0 ? Int(-v) : v;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << mag;
        } else if (mag == 1) {
            os << kMono[i];
        } else {
            os << mag << "*" << kMono[i];
        }
    }
    if (first) return "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ChowClass& x) { return os << x.to_string(); }

Int degree(const ChowClass& x) { return x.degree(); }

Rat slope(const ChowClass& c1, const Int& rank) {
    if (rank <= 0) throw InvalidInput("slope needs a positive rank");
    if (!c1.is_homogeneous(1))
        throw InvalidInput("slope expects a divisor class a*xi + b*f");
    const Model m = c1.model();
    const Int num = (c1 * m.h().pow(2)).degree();
    return Rat(num, rank);
}

}  // namespace fano
