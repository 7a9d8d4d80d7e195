#include "fano/monad.hpp"

#include <sstream>

#include "fano/errors.hpp"

namespace fano {

namespace {

void check_violation(std::vector<std::string>& out, const Int& value, const std::string& label) {
    if (value < 0) {
        std::ostringstream os;
        os << label << " must be nonnegative, got " << value;
        out.push_back(os.str());
    }
}

}  // namespace

std::vector<std::string> monad_spec_violations(const MonadSpec& spec) {
    std::vector<std::string> v;
    Model(spec.e);  // validates e
    if (spec.e == 1) {
        check_violation(v, spec.alpha - 2, "alpha-2");
        check_violation(v, spec.gamma, "gamma");
        check_violation(v, spec.alpha + spec.beta - 4, "alpha+beta-4");
        check_violation(v, spec.beta + spec.gamma - 1, "beta+gamma-1");
        check_violation(v, spec.delta + spec.beta - spec.alpha + 2, "delta+beta-alpha+2");
        check_violation(v, spec.delta - 2 * spec.gamma, "delta-2*gamma");
    } else {
        check_violation(v, spec.alpha - 2, "alpha-2");
        check_violation(v, spec.beta - 3, "beta-3");
        check_violation(v, spec.alpha + spec.beta - 6, "alpha+beta-6");
        check_violation(v, spec.gamma, "gamma");
        check_violation(v, spec.alpha - spec.beta + spec.gamma, "alpha-beta+gamma");
    }
    return v;
}

namespace {

void add_term(BundleSum& sum, const NamedBundle& bundle, const Int& mult) {
    if (mult > 0) sum.emplace_back(bundle, mult);
}

}  // namespace

MonadTerms build_monad(const MonadSpec& spec) {
    const auto violations = monad_spec_violations(spec);
    if (!violations.empty()) {
        std::string msg = "invalid monad parameters:";
        for (const auto& s : violations) msg += " " + s + ";";
        throw InvalidInput(msg);
    }

    MonadTerms t{spec.e, {}};
    const Int &a = spec.alpha, &b = spec.beta, &g = spec.gamma, &d = spec.delta;
    if (spec.e == 1) {
        add_term(t.term[0], NamedBundle::line(-2, -1), a + b - 4);
        add_term(t.term[0], NamedBundle::line(-2, 0), g);

        add_term(t.term[1], NamedBundle::line(-2, 0), b + g - 1);
        add_term(t.term[1], NamedBundle::cotangent(0, -1), a - 2);
        add_term(t.term[1], NamedBundle::line(-1, 0), d + b - a + 2);

        add_term(t.term[2], NamedBundle::line(-1, -1), g);
        add_term(t.term[2], NamedBundle::line(-1, 0), d - 2 * g);
        add_term(t.term[2], NamedBundle::line(-1, 1), b + g - 1);
    } else {
        add_term(t.term[0], NamedBundle::line(-2, -1), a + b - 6);

        add_term(t.term[1], NamedBundle::line(-2, 0), b - 3);
        add_term(t.term[1], NamedBundle::cotangent(0, -1), a - 2);
        add_term(t.term[1], NamedBundle::line(-1, -1), g);

        add_term(t.term[2], NamedBundle::line(-1, -1), a - b + g);
        add_term(t.term[2], NamedBundle::line(-1, 0), b - 3);
    }
    return t;
}

MonadVerdict verify_monad(const MonadTerms& terms) {
    const Model m = terms.model();
    std::vector<ComplexTerm> complex;
    for (int d = -1; d <= 1; ++d) complex.push_back(ComplexTerm{d, terms.at(d)});
    const ChernData c = chern_of_complex(m, complex);

    MonadVerdict verdict{true, c, c.c2.coeff(Mono::Xi2), c.c2.coeff(Mono::XiF), {}};
    if (c.rank != 2) {
        std::ostringstream os;
        os << "rank is " << c.rank << ", expected 2";
        verdict.failures.push_back(os.str());
    }
    if (c.c1 != -m.h())
        verdict.failures.push_back("c1 is " + c.c1.to_string() + ", expected " + (-m.h()).to_string());
    if (!c.c3.is_zero()) verdict.failures.push_back("c3 is " + c.c3.to_string() + ", expected 0");
    verdict.ok = verdict.failures.empty();
    return verdict;
}

std::string LinPoly::to_string() const {
    struct Part { const Int* coeff; const char* name; };
    const Part parts[5] = {{&c0, ""}, {&ca, "alpha"}, {&cb, "beta"}, {&cg, "gamma"}, {&cd, "delta"}};
    std::ostringstream os;
    bool first = true;
    for (const auto& p : parts) {
        const Int& v = *p.coeff;
        if (v == 0) continue;
        Int mag = v < 0 ? Int(-v) : v;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? "-" : "+");
        }
        if (p.name[0] == '\0')
            os << mag;
        else if (mag == 1)
            os << p.name;
        else
            os << mag << "*" << p.name;
    }
    return first ? "0" : os.str();
}

std::pair<Int, Int> epq_twist(int e, int p) {
    if (p < -5 || p > 0) throw InvalidInput("table column index must lie in -5..0");
    if (e == 1) {
        switch (p) {
            case -5: return {-1, 0};
            case -4: return {-1, 1};
            case -3: return {0, -1};
            case -2: return {0, 0};
            case -1: return {1, -2};
            default: return {1, -1};
        }
    }
    switch (p) {
        case -5: return {-1, -1};
        case -4: return {-1, 0};
        case -3: return {0, -1};
        case -2: return {0, 0};
        case -1: return {1, -1};
        default: return {1, 0};
    }
}

namespace {

int ceil_half(int p) { return p >= 0 ? (p + 1) / 2 : -((-p) / 2); }

// Row index of cohomological degree i in column p.
int q_of(int p, int i) { return i - ceil_half(p); }

// chi(E(aξ+bf)) as a linear polynomial in (α,β) for fixed (a,b).
LinPoly chi_sym(int e, const Int& a, const Int& b) {
    LinPoly chi = LinPoly::constant(a * a * b + 3 * a + 2 * b);
    if (e == 1) chi.c0 += (a * a * a + 2 * a) / 3;
    chi.ca = -(Int(e) * a + b);
    chi.cb = -a;
    return chi;
}

struct ColumnShape {
    LinPoly pinned;    // the entry the table pins by definition (or zero)
    bool pin_is_h2;    // which of the two possibly nonzero degrees is pinned
    bool empty;        // column forced entirely zero
};

ColumnShape column_shape(int e, int p) {
    const LinPoly zero = LinPoly::constant(0);
    const LinPoly gamma{0, 0, 0, 1, 0};
    const LinPoly delta{0, 0, 0, 0, 1};
    if (p == -2) return {zero, false, true};
    if (e == 1) {
        switch (p) {
            case -5: return {zero, false, false};   // h1 = 0
            case -4: return {gamma, false, false};  // h1 = γ
            case -3: return {zero, false, false};   // h1 = 0
            case -1: return {delta, true, false};   // h2 = δ
            default: return {gamma, true, false};   // p = 0, h2 = γ
        }
    }
    switch (p) {
        case -5: return {zero, false, false};
        case -4: return {zero, false, false};
        case -3: return {zero, false, false};
        case -1: return {gamma, false, false};  // h1 = γ
        default: return {zero, true, false};    // p = 0, h2 = 0
    }
}

}  // namespace

LinPoly epq_column_chi(int e, int p) {
    Model(e);
    const auto [a, b] = epq_twist(e, p);
    return chi_sym(e, a, b);
}

// The fixed support of the blow-up table: eight nonzero cells.
//   (p,q)=(-5,4): α+β-4   (-4,4): β+γ-1   (-4,3): γ   (-3,3): α-2
//   (-1,2): δ   (0,2): γ   (-1,1): δ+β-α+2   (0,1): β+γ-1
// and of the product table: six nonzero cells.
//   (-5,4): α+β-6   (-4,4): β-3   (-3,3): α-2
//   (-1,2): α-β+γ   (-1,1): γ   (0,1): β-3
EpqTable epq_table_symbolic(int e) {
    Model(e);
    EpqTable t{e, {}};
    for (auto& row : t.cell)
        for (auto& c : row) c = LinPoly::constant(0);
    auto set = [&t](int p, int q, const LinPoly& v) { t.cell[q][p + 5] = v; };
    if (e == 1) {
        set(-5, 4, LinPoly{-4, 1, 1, 0, 0});
        set(-4, 4, LinPoly{-1, 0, 1, 1, 0});
        set(-4, 3, LinPoly{0, 0, 0, 1, 0});
        set(-3, 3, LinPoly{-2, 1, 0, 0, 0});
        set(-1, 2, LinPoly{0, 0, 0, 0, 1});
        set(0, 2, LinPoly{0, 0, 0, 1, 0});
        set(-1, 1, LinPoly{2, -1, 1, 0, 1});
        set(0, 1, LinPoly{-1, 0, 1, 1, 0});
    } else {
        set(-5, 4, LinPoly{-6, 1, 1, 0, 0});
        set(-4, 4, LinPoly{-3, 0, 1, 0, 0});
        set(-3, 3, LinPoly{-2, 1, 0, 0, 0});
        set(-1, 2, LinPoly{0, 1, -1, 1, 0});
        set(-1, 1, LinPoly{0, 0, 0, 1, 0});
        set(0, 1, LinPoly{-3, 0, 1, 0, 0});
    }
    return t;
}

EpqValues epq_table_numeric(const MonadSpec& spec) {
    const auto violations = monad_spec_violations(spec);
    if (!violations.empty()) {
        std::string msg = "invalid monad parameters:";
        for (const auto& s : violations) msg += " " + s + ";";
        throw InvalidInput(msg);
    }
    const EpqTable sym = epq_table_symbolic(spec.e);
    EpqValues out{spec.e, {}};
    const Model m = spec.model();
    for (int q = 0; q < 6; ++q)
        for (int p = -5; p <= 0; ++p)
            out.cell[q][p + 5] =
                sym.at(p, q).eval(spec.alpha, spec.beta, spec.gamma, spec.delta);

    // Independent route: per column, chi from Riemann-Roch combined
    // with the pinned entry must reproduce both values.
    for (int p = -5; p <= 0; ++p) {
        const auto shape = column_shape(spec.e, p);
        const auto [a, b] = epq_twist(spec.e, p);
        const Int chi = rr_chi(m, spec.alpha, spec.beta, a, b);
        if (shape.empty) {
            if (chi != 0) throw InternalError("trivial table column has nonzero chi");
            continue;
        }
        const Int pinned = shape.pinned.eval(spec.alpha, spec.beta, spec.gamma, spec.delta);
        const Int h1 = shape.pin_is_h2 ? pinned - chi : pinned;
        const Int h2 = shape.pin_is_h2 ? pinned : pinned + chi;
        if (out.at(p, q_of(p, 1)) != h1 || out.at(p, q_of(p, 2)) != h2)
            throw InternalError("numeric table entry disagrees with the Riemann-Roch derivation");
    }
    return out;
}

}  // namespace fano
