#include "fano/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <json.hpp>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "acceptance/criteria.hpp"
#include "fano/bundle.hpp"
#include "fano/cotangent.hpp"
#include "fano/errors.hpp"
#include "fano/expr.hpp"
#include "fano/line_cohomology.hpp"
#include "fano/moduli.hpp"
#include "fano/monad.hpp"
#include "fano/serre.hpp"
#include "fano/stability.hpp"

namespace fano {

namespace {

using ojson = nlohmann::ordered_json;

ojson jint(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

std::string jrat(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

ojson chern_json(const ChernData& c) {
    ojson j;
    j["rank"] = jint(c.rank);
    j["c1"] = c.c1.to_string();
    j["c2"] = c.c2.to_string();
    j["c3"] = c.c3.to_string();
    return j;
}

ojson envelope(const std::string& command, std::optional<int> e, ojson result,
               std::vector<std::string> notes = {}) {
    ojson j;
    j["command"] = command;
    if (e) j["e"] = *e;
    j["result"] = std::move(result);
    j["notes"] = notes;
    return j;
}

void emit(std::ostream& out, const ojson& j) { out << j.dump(2) << "\n"; }

ojson bundle_sum_json(const BundleSum& sum) {
    ojson arr = ojson::array();
    for (const auto& [bundle, mult] : sum) {
        ojson t;
        t["kind"] = bundle.kind == BundleKind::Line ? "O" : "Omega";
        t["a"] = jint(bundle.a);
        t["b"] = jint(bundle.b);
        t["mult"] = jint(mult);
        arr.push_back(std::move(t));
    }
    return arr;
}

std::string bundle_sum_str(const BundleSum& sum) {
    if (sum.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [bundle, mult] : sum) {
        if (!first) os << " + ";
        first = false;
        os << bundle.to_string();
        if (mult != 1) os << "^" << mult;
    }
    return os.str();
}

ojson verdict_json(const MonadVerdict& v) {
    ojson j;
    j["ok"] = v.ok;
    j["chern"] = chern_json(v.chern);
    j["charge"] = ojson{{"alpha", jint(v.charge_alpha)}, {"beta", jint(v.charge_beta)}};
    j["failures"] = v.failures;
    return j;
}

ojson stability_json(const StabilityVerdict& v) {
    ojson j;
    j["verdict"] = stability_kind_name(v.verdict);
    j["bound"] = jint(v.bound);
    ojson ws = ojson::array();
    for (const auto& w : v.witnesses) {
        ojson e;
        e["a"] = jint(w.a);
        e["b"] = jint(w.b);
        e["certified"] = w.certified;
        e["rule"] = w.rule;
        e["detail"] = w.detail;
        ws.push_back(std::move(e));
    }
    j["witnesses"] = std::move(ws);
    return j;
}

ojson report_json(const ChargeReport& r) {
    ojson j;
    j["e"] = r.e;
    j["alpha"] = jint(r.alpha);
    j["beta"] = jint(r.beta);
    j["degree"] = jint(r.degree);
    j["monad_necessary_ok"] = r.monad_necessary_ok;
    j["instanton"] = r.instanton_exists;
    j["earnest"] = r.earnest_exists;
    j["movable"] = r.in_movable_cone;
    if (r.ext1_dim)
        j["ext1"] = jint(*r.ext1_dim);
    else
        j["ext1"] = nullptr;
    j["notes"] = r.notes;
    return j;
}

Variant parse_variant(const std::string& name) {
    if (name == "instanton") return Variant::Instanton;
    if (name == "earnest") return Variant::Earnest;
    if (name == "segre") return Variant::Segre;
    throw InvalidInput("unknown variant '" + name + "' (expected instanton, earnest or segre)");
}

struct Options {
    int e = 1;
    long long a = 0, b = 0;
    long long alpha = 0, beta = 0, gamma = 0, delta = 0;
    long long bound = 8;
    long long max_degree = 0;
    std::string expression;
    std::string variant;
    std::string complex_spec;
    bool json = false;
    bool csv = false;
    bool symbolic = false;
};

int cmd_ring_eval(const Options& opt, std::ostream& out) {
    const Model m(opt.e);
    const ChowClass value = parse_expr(opt.expression, m);
    if (opt.json) {
        ojson result;
        result["class"] = value.to_string();
        result["degree"] = jint(value.degree());
        emit(out, envelope("ring eval", opt.e, std::move(result)));
    } else {
        out << value.to_string() << "\n";
    }
    return 0;
}

int cmd_cohom(const Options& opt, std::ostream& out) {
    const Model m(opt.e);
    const CohomologyVector v = line_cohomology(m, opt.a, opt.b);
    const LineProperties p = line_properties(m, opt.a, opt.b);
    std::vector<std::string> notes;
    if (p.smooth_member_criterion_extended)
        notes.push_back("smooth-member test on the product model is derived from global "
                        "generation plus a general-member argument");
    if (opt.json) {
        ojson result;
        result["h"] = ojson::array({jint(v.h0), jint(v.h1), jint(v.h2), jint(v.h3)});
        result["chi"] = jint(v.chi);
        result["effective"] = p.effective;
        result["globally_generated"] = p.globally_generated;
        result["smooth_integral_member"] = p.smooth_integral_member;
        emit(out, envelope("cohom", opt.e, std::move(result), std::move(notes)));
    } else {
        out << "h = (" << v.h0 << ", " << v.h1 << ", " << v.h2 << ", " << v.h3 << ")\n"
            << "chi = " << v.chi << "\n"
            << "effective: " << (p.effective ? "yes" : "no")
            << ", globally generated: " << (p.globally_generated ? "yes" : "no")
            << ", smooth integral member: " << (p.smooth_integral_member ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_cotangent(const Options& opt, std::ostream& out) {
    const Model m(opt.e);
    const IntervalCohomology v = cotangent_cohomology(m, opt.a, opt.b);
    if (opt.json) {
        ojson result;
        ojson hs = ojson::array();
        for (const auto& entry : v.h) {
            ojson e;
            e["lo"] = jint(entry.lo);
            e["hi"] = jint(entry.hi);
            e["exact"] = entry.exact();
            hs.push_back(std::move(e));
        }
        result["h"] = std::move(hs);
        result["chi"] = jint(v.chi);
        emit(out, envelope("cotangent", opt.e, std::move(result)));
    } else {
        for (int i = 0; i < 4; ++i)
            out << "h" << i << " = " << v.h[i].to_string()
                << (v.h[i].exact() ? " (exact)" : " (interval)") << "\n";
        out << "chi = " << v.chi << "\n";
    }
    return 0;
}

std::vector<ComplexTerm> parse_complex_spec(const std::string& text) {
    ojson spec;
    try {
        spec = ojson::parse(text);
    } catch (const std::exception& ex) {
        throw InvalidInput(std::string("complex spec is not valid JSON: ") + ex.what());
    }
    if (!spec.is_array()) throw InvalidInput("complex spec must be a JSON array of terms");
    std::vector<ComplexTerm> terms;
    for (const auto& item : spec) {
        ComplexTerm term;
        term.degree = item.at("degree").get<int>();
        for (const auto& s : item.at("terms")) {
            const std::string kind = s.at("kind").get<std::string>();
            if (kind != "O" && kind != "Omega")
                throw InvalidInput("bundle kind must be 'O' or 'Omega'");
            NamedBundle b = kind == "O"
                                ? NamedBundle::line(s.at("a").get<long long>(),
                                                    s.at("b").get<long long>())
                                : NamedBundle::cotangent(s.at("a").get<long long>(),
                                                         s.at("b").get<long long>());
            const long long mult = s.value("mult", 1LL);
            term.summands.emplace_back(b, mult);
        }
        terms.push_back(std::move(term));
    }
    return terms;
}

int cmd_chern(const Options& opt, std::ostream& out) {
    const Model m(opt.e);
    const auto terms = parse_complex_spec(opt.complex_spec);
    const ChernData c = chern_of_complex(m, terms);
    if (opt.json) {
        emit(out, envelope("chern", opt.e, chern_json(c)));
    } else {
        out << "rank = " << c.rank << "\n"
            << "c1 = " << c.c1 << "\n"
            << "c2 = " << c.c2 << "\n"
            << "c3 = " << c.c3 << "\n";
    }
    return 0;
}

MonadSpec spec_from(const Options& opt) {
    return MonadSpec{opt.e, opt.alpha, opt.beta, opt.gamma, opt.delta};
}

int cmd_monad_build(const Options& opt, std::ostream& out) {
    const MonadTerms terms = build_monad(spec_from(opt));
    const MonadVerdict verdict = verify_monad(terms);
    if (opt.json) {
        ojson result;
        result["terms"] = ojson{{"C-1", bundle_sum_json(terms.at(-1))},
                                {"C0", bundle_sum_json(terms.at(0))},
                                {"C1", bundle_sum_json(terms.at(1))}};
        result["verify"] = verdict_json(verdict);
        emit(out, envelope("monad build", opt.e, std::move(result)));
    } else {
        out << "C^-1 = " << bundle_sum_str(terms.at(-1)) << "\n"
            << "C^0  = " << bundle_sum_str(terms.at(0)) << "\n"
            << "C^1  = " << bundle_sum_str(terms.at(1)) << "\n"
            << "verify: " << (verdict.ok ? "ok" : "FAILED") << ", c2 = " << verdict.chern.c2
            << "\n";
    }
    return 0;
}

int cmd_monad_verify(const Options& opt, std::ostream& out) {
    const MonadTerms terms = build_monad(spec_from(opt));
    const MonadVerdict verdict = verify_monad(terms);
    if (opt.json) {
        emit(out, envelope("monad verify", opt.e, verdict_json(verdict)));
    } else {
        out << (verdict.ok ? "ok" : "FAILED") << "\n"
            << "rank = " << verdict.chern.rank << ", c1 = " << verdict.chern.c1
            << ", c2 = " << verdict.chern.c2 << ", c3 = " << verdict.chern.c3 << "\n";
        for (const auto& f : verdict.failures) out << "failure: " << f << "\n";
    }
    return 0;
}

int cmd_monad_table(const Options& opt, std::ostream& out) {
    std::array<std::array<std::string, 6>, 6> cells;
    if (opt.symbolic) {
        const EpqTable t = epq_table_symbolic(opt.e);
        for (int q = 0; q < 6; ++q)
            for (int p = -5; p <= 0; ++p) cells[q][p + 5] = t.at(p, q).to_string();
    } else {
        const EpqValues t = epq_table_numeric(spec_from(opt));
        for (int q = 0; q < 6; ++q)
            for (int p = -5; p <= 0; ++p) cells[q][p + 5] = t.at(p, q).str();
    }
    if (opt.json) {
        ojson result;
        result["symbolic"] = opt.symbolic;
        ojson rows = ojson::array();
        for (int q = 5; q >= 0; --q) {
            ojson row;
            row["q"] = q;
            row["cells"] = cells[q];
            rows.push_back(std::move(row));
        }
        result["rows"] = std::move(rows);
        emit(out, envelope("monad table", opt.e, std::move(result)));
    } else {
        std::array<std::size_t, 6> width{};
        for (int p = 0; p < 6; ++p)
            for (int q = 0; q < 6; ++q) width[p] = std::max(width[p], cells[q][p].size());
        for (int q = 5; q >= 0; --q) {
            out << "q=" << q << " |";
            for (int p = 0; p < 6; ++p)
                out << " " << std::setw(static_cast<int>(width[p])) << cells[q][p] << " |";
            out << "\n";
        }
        out << "      ";
        for (int p = 0; p < 6; ++p)
            out << " " << std::setw(static_cast<int>(width[p])) << ("p=" + std::to_string(p - 5))
                << "  ";
        out << "\n";
    }
    return 0;
}

int cmd_serre(const Options& opt, std::ostream& out) {
    const Variant v = parse_variant(opt.variant);
    const Model m = variant_model(v);
    const RecipeCharge rc = recipe_charge(v, opt.alpha, opt.beta);
    const ExtDims ext = ext_dims_constructed(v, opt.alpha, opt.beta);
    std::optional<DefectInterval> defect;
    if (v != Variant::Segre) defect = earnest_defect_bounds(v, opt.alpha, opt.beta);

    if (opt.json) {
        ojson result;
        result["variant"] = variant_name(v);
        result["alpha"] = jint(opt.alpha);
        result["beta"] = jint(opt.beta);
        result["z"] = ojson{{"L", jint(rc.z.n_l)},
                            {"M", jint(rc.z.n_m)},
                            {"N", jint(rc.z.n_n)},
                            {"class", z_class(rc.z).to_string()}};
        result["chern"] = chern_json(rc.chern);
        result["det_compatible"] = rc.det_compatible;
        result["det_checks"] = rc.det_checks;
        result["generic_splitting"] =
            rc.splitting.vacuous
                ? ojson{{"vacuous", true}}
                : ojson{{"vacuous", false},
                        {"type", ojson::array({jint(rc.splitting.type.first),
                                               jint(rc.splitting.type.second)})}};
        if (defect)
            result["earnest_defect"] = ojson{{"lo", jint(defect->lo)}, {"hi", jint(defect->hi)}};
        else
            result["earnest_defect"] = nullptr;
        result["ext"] = ojson{{"ext1", jint(ext.ext1)}, {"ext2", jint(ext.ext2)},
                              {"ext3", jint(ext.ext3)}};
        emit(out, envelope("serre", m.e(), std::move(result)));
    } else {
        out << "Z = " << rc.z.n_l << "*L + " << rc.z.n_m << "*M + " << rc.z.n_n
            << "*N, class " << z_class(rc.z) << "\n"
            << "E: rank " << rc.chern.rank << ", c1 = " << rc.chern.c1
            << ", c2 = " << rc.chern.c2 << "\n"
            << "det compatibility: " << (rc.det_compatible ? "ok" : "FAILED") << "\n";
        for (const auto& line : rc.det_checks) out << "  " << line << "\n";
        if (defect)
            out << "earnest defect h1(E(-E)) in [" << defect->lo << ", " << defect->hi << "]\n";
        out << "ext dims = (" << ext.ext1 << ", " << ext.ext2 << ", " << ext.ext3 << ")\n";
    }
    return 0;
}

int cmd_stability(const Options& opt, std::ostream& out) {
    const Variant v = parse_variant(opt.variant);
    const StabilityVerdict verdict = check_serre_stability(v, opt.alpha, opt.beta, opt.bound);
    if (opt.json) {
        emit(out, envelope("stability", variant_model(v).e(), stability_json(verdict)));
    } else {
        out << stability_kind_name(verdict.verdict) << " (bound " << verdict.bound << ", "
            << verdict.witnesses.size() << " twists checked)\n";
        for (const auto& w : verdict.witnesses)
            if (!w.certified)
                out << "  uncertified at (a,b) = (" << w.a << ", " << w.b << "): " << w.detail
                    << "\n";
    }
    return verdict.verdict == StabilityKind::Inconclusive ? 3 : 0;
}

int cmd_charges(const Options& opt, std::ostream& out) {
    const Model m(opt.e);
    const auto reports = enumerate_charges(m, opt.max_degree);
    if (opt.csv) {
        out << "e,alpha,beta,degree,instanton,earnest,movable,ext1\n";
        for (const auto& r : reports) {
            out << r.e << "," << r.alpha << "," << r.beta << "," << r.degree << ","
                << (r.instanton_exists ? 1 : 0) << "," << (r.earnest_exists ? 1 : 0) << ","
                << (r.in_movable_cone ? 1 : 0) << ",";
            if (r.ext1_dim) out << *r.ext1_dim;
            out << "\n";
        }
    } else if (opt.json) {
        ojson result;
        result["max_degree"] = jint(opt.max_degree);
        ojson arr = ojson::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        result["charges"] = std::move(arr);
        emit(out, envelope("charges", opt.e, std::move(result)));
    } else {
        for (const auto& r : reports) {
            out << "(" << r.alpha << ", " << r.beta << ") degree " << r.degree << ": "
                << (r.instanton_exists ? "instanton" : "no instanton");
            if (r.earnest_exists) out << ", earnest";
            if (r.ext1_dim) out << ", ext1 = " << *r.ext1_dim;
            out << "\n";
        }
    }
    return 0;
}

int cmd_selftest(std::ostream& out) {
    const auto& all = acceptance::criteria();
    int failures = 0;
    int index = 0;
    for (const auto& criterion : all) {
        ++index;
        acceptance::CriterionResult result;
        try {
            result = criterion.run();
        } catch (const std::exception& ex) {
            result = {false, ex.what()};
        }
        out << (result.pass ? "PASS" : "FAIL") << " " << index << "/" << all.size() << " "
            << criterion.name;
        if (!result.pass) out << ": " << result.detail;
        out << "\n";
        if (!result.pass) ++failures;
    }
    out << (all.size() - failures) << "/" << all.size() << " criteria passed\n";
    return failures == 0 ? 0 : 4;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact instanton-bundle calculus on two index-1 Fano threefolds"};
    app.require_subcommand(1);
    Options opt;

    auto add_e = [&opt](CLI::App* cmd) {
        cmd->add_option("--e", opt.e, "threefold model (0 or 1)")
            ->required()
            ->check(CLI::Range(0, 1));
    };
    auto add_ab = [&opt](CLI::App* cmd) {
        cmd->add_option("--a", opt.a, "xi coefficient")->required();
        cmd->add_option("--b", opt.b, "f coefficient")->required();
    };
    auto add_json = [&opt](CLI::App* cmd) { cmd->add_flag("--json", opt.json, "JSON output"); };

    CLI::App* ring = app.add_subcommand("ring", "Chow ring arithmetic");
    ring->require_subcommand(1);
    CLI::App* ring_eval = ring->add_subcommand("eval", "evaluate a ring expression");
    add_e(ring_eval);
    ring_eval->add_option("expression", opt.expression, "expression to evaluate")->required();
    add_json(ring_eval);

    CLI::App* cohom = app.add_subcommand("cohom", "line bundle cohomology");
    add_e(cohom);
    add_ab(cohom);
    add_json(cohom);

    CLI::App* cotangent = app.add_subcommand("cotangent", "relative cotangent cohomology");
    add_e(cotangent);
    add_ab(cotangent);
    add_json(cotangent);

    CLI::App* chern = app.add_subcommand("chern", "Chern data of a bundle complex");
    add_e(chern);
    chern->add_option("--complex", opt.complex_spec, "JSON description of the complex")
        ->required();
    add_json(chern);

    CLI::App* monad = app.add_subcommand("monad", "instanton monads");
    monad->require_subcommand(1);
    CLI::App* monad_build = monad->add_subcommand("build", "term multiplicities of the monad");
    CLI::App* monad_verify = monad->add_subcommand("verify", "Chern verification of the monad");
    CLI::App* monad_table = monad->add_subcommand("table", "cohomology table of the twists");
    for (CLI::App* cmd : {monad_build, monad_verify, monad_table}) {
        add_e(cmd);
        cmd->add_option("--alpha", opt.alpha, "charge coefficient of xi^2");
        cmd->add_option("--beta", opt.beta, "charge coefficient of xi*f");
        cmd->add_option("--gamma", opt.gamma, "first cohomological parameter");
        cmd->add_option("--delta", opt.delta, "second cohomological parameter (e=1)");
        add_json(cmd);
    }
    monad_table->add_flag("--symbolic", opt.symbolic, "print symbolic entries");

    CLI::App* serre = app.add_subcommand("serre", "disjoint-curve construction data");
    CLI::App* stability = app.add_subcommand("stability", "slope stability certificates");
    for (CLI::App* cmd : {serre, stability}) {
        cmd->add_option("--variant", opt.variant, "instanton, earnest or segre")->required();
        cmd->add_option("--alpha", opt.alpha, "charge coefficient of xi^2")->required();
        cmd->add_option("--beta", opt.beta, "charge coefficient of xi*f")->required();
        add_json(cmd);
    }
    stability->add_option("--bound", opt.bound, "window box bound (default 8)");

    CLI::App* charges = app.add_subcommand("charges", "classify charges up to a degree");
    add_e(charges);
    charges->add_option("--max-degree", opt.max_degree, "largest charge degree to report")
        ->required();
    add_json(charges);
    charges->add_flag("--csv", opt.csv, "CSV output");

    CLI::App* selftest = app.add_subcommand("selftest", "replay the acceptance checks");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& ex) {
        err << ex.what() << "\n";
        err << "run with --help for usage\n";
        return 2;
    }

    try {
        if (ring_eval->parsed()) return cmd_ring_eval(opt, out);
        if (cohom->parsed()) return cmd_cohom(opt, out);
        if (cotangent->parsed()) return cmd_cotangent(opt, out);
        if (chern->parsed()) return cmd_chern(opt, out);
        if (monad_build->parsed()) return cmd_monad_build(opt, out);
        if (monad_verify->parsed()) return cmd_monad_verify(opt, out);
        if (monad_table->parsed()) return cmd_monad_table(opt, out);
        if (serre->parsed()) return cmd_serre(opt, out);
        if (stability->parsed()) return cmd_stability(opt, out);
        if (charges->parsed()) return cmd_charges(opt, out);
        if (selftest->parsed()) return cmd_selftest(out);
        err << "unknown command\n";
        return 2;
    } catch (const InternalError& ex) {
        err << "internal error: " << ex.what() << "\n";
        return 4;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
}

}  // namespace fano
