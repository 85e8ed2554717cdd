#pragma once

// Command-line front end. Exit codes: 0 success, 1 domain error, 2 usage
// error, 3 theorem violation.

#include "eisen/applications.hpp"
#include "eisen/atoms.hpp"
#include "eisen/cubes.hpp"
#include "eisen/descent.hpp"
#include "eisen/error.hpp"
#include "eisen/ring.hpp"
#include "eisen/serialize.hpp"
#include "eisen/text.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace eisen::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kTheoremViolation = 3 };

class Args {
public:
    std::map<std::string, std::string> values;
    std::map<std::string, bool> switches;
    bool json = false;

    bool has(const std::string& name) const { return values.count(name) != 0; }

    Integer integer(const std::string& name) const {
        const std::string& text = values.at(name);
        auto v = parse_integer(text);
        if (!v) throw DomainError(ErrorCode::ParseError, "--" + name + ": '" + text + "' is not an integer");
        return *v;
    }

    std::int64_t small(const std::string& name, std::int64_t lo, std::int64_t hi) const {
        const Integer v = integer(name);
        if (v < lo || v > hi)
            throw DomainError(ErrorCode::ParseError, "--" + name + " must lie in [" + std::to_string(lo) + ", " +
                                                         std::to_string(hi) + "]");
        return v.get_si();
    }

    EisensteinInt element(const std::string& name) const { return parse_eisenstein(values.at(name)); }

    bool flag(const std::string& name) const {
        auto it = switches.find(name);
        return it != switches.end() && it->second;
    }
};

namespace detail {

// Wraps sums and differences in parentheses.
inline std::string paren(std::string s) {
    std::string bare = s;
    eisen::detail::replace_all(bare, kSqrtMinus3, "#");
    return bare.find_first_of("+-", 1) != std::string::npos ? "(" + s + ")" : s;
}

inline std::string paren(const EisensteinInt& z) { return paren(to_string(z)); }

inline std::string factor_text(const AtomicFactorization& f) {
    std::string out(unit_name(f.unit));
    for (const Atom& a : f.atoms) out += " * " + paren(to_string(a));
    return out;
}

inline std::string bool_text(bool b) { return b ? "true" : "false"; }

inline Json p4_json(const P4Facts& f) {
    return Json{{"q_odd", f.q_odd},
                {"nine_divides_p", f.nine_divides_p},
                {"three_divides_theta", f.three_divides_theta},
                {"three_ndivides_q", f.three_ndivides_q}};
}

inline std::vector<Integer> parse_list(const std::string& text) {
    std::vector<Integer> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto v = parse_integer(item);
        if (!v) throw DomainError(ErrorCode::ParseError, "'" + item + "' is not an integer");
        out.push_back(*v);
    }
    if (out.empty()) throw DomainError(ErrorCode::ParseError, "empty factor list");
    return out;
}

}  // namespace detail

struct Command {
    std::string name;
    std::string description;
    std::vector<std::pair<std::string, std::string>> required;  // flag, help
    std::vector<std::pair<std::string, std::string>> optional;
    std::vector<std::pair<std::string, std::string>> switches;
    std::function<void(const Args&, std::ostream&)> handler;
};

inline std::vector<Command> commands() {
    using detail::bool_text;
    std::vector<Command> cmds;

    cmds.push_back({"factor", "atomic factorization z = unit * atoms",
                    {{"z", "ring element, e.g. -10+9√-3 or (1+√-3)/2"}},
                    {{"max-norm", "trial-division cap on N(z)"}},
                    {},
                    [](const Args& a, std::ostream& out) {
                        const EisensteinInt z = a.element("z");
                        const Integer cap = a.has("max-norm") ? a.integer("max-norm") : default_max_norm();
                        const AtomicFactorization f = atomize(z, cap);
                        if (a.json) out << to_json(f).dump() << '\n';
                        else out << to_string(z) << " = " << detail::factor_text(f) << '\n';
                    }});
    cmds.push_back({"gcd", "canonical gcd in A",
                    {{"x", "ring element"}, {"y", "ring element"}},
                    {},
                    {},
                    [](const Args& a, std::ostream& out) {
                        const EisensteinInt g = gcd(a.element("x"), a.element("y"));
                        if (a.json) out << Json{{"gcd", to_string(g)}}.dump() << '\n';
                        else out << to_string(g) << '\n';
                    }});
    cmds.push_back({"div", "Euclidean division x = q*d + r",
                    {{"x", "dividend"}, {"d", "divisor"}},
                    {},
                    {},
                    [](const Args& a, std::ostream& out) {
                        const DivResult r = euclid_div(a.element("x"), a.element("d"));
                        if (a.json)
                            out << Json{{"quotient", to_string(r.quotient)}, {"remainder", to_string(r.remainder)}}.dump()
                                << '\n';
                        else out << "quotient " << to_string(r.quotient) << " remainder " << to_string(r.remainder) << '\n';
                    }});
    cmds.push_back({"norm", "N(z)",
                    {{"z", "ring element"}},
                    {},
                    {},
                    [](const Args& a, std::ostream& out) {
                        const Integer n = norm(a.element("z"));
                        if (a.json) out << Json{{"norm", to_json(n)}}.dump() << '\n';
                        else out << n << '\n';
                    }});
    cmds.push_back({"unit", "name of a unit element",
                    {{"z", "ring element of norm 1"}},
                    {},
                    {},
                    [](const Args& a, std::ostream& out) {
                        const Unit u = unit_value(a.element("z"));
                        if (a.json) out << Json{{"unit", unit_name(u)}}.dump() << '\n';
                        else out << unit_name(u) << '\n';
                    }});
    cmds.push_back({"classify", "decomposition of a rational prime",
                    {{"p", "prime"}},
                    {},
                    {},
                    [](const Args& a, std::ostream& out) {
                        const RationalPrimeClass c = classify_rational_prime(a.integer("p"));
                        if (a.json) {
                            Json j{{"p", to_json(c.p)}, {"kind", atom_kind_name(c.kind)},
                                   {"factorization", to_json(c.factorization)}};
                            out << j.dump() << '\n';
                        } else {
                            out << c.p << ": " << atom_kind_name(c.kind) << ", " << c.p << " = "
                                << detail::factor_text(c.factorization) << '\n';
                        }
                    }});
    cmds.push_back({"represent", "p = r^2 + 3s^2 for a prime p = 1 (mod 6)",
                    {{"p", "prime"}},
                    {},
                    {},
                    [](const Args& a, std::ostream& out) {
                        const PrimeRepresentation r = represent_6k1_prime(a.integer("p"));
                        if (a.json) out << Json{{"p", to_json(r.p)}, {"r", to_json(r.r)}, {"s", to_json(r.s)}}.dump() << '\n';
                        else out << r.p << " = " << r.r << "^2 + 3*" << r.s << "^2\n";
                    }});
    cmds.push_back({"p1", "prime factorization of a^2+3b^2 for coprime a, b with a+b odd",
                    {{"a", "integer"}, {"b", "integer"}},
                    {},
                    {},
                    [](const Args& a, std::ostream& out) {
                        const PrimeFactorization f = p1_profile(a.integer("a"), a.integer("b"));
                        if (a.json) {
                            Json j = Json::array();
                            for (const auto& [p, e] : f) j.push_back(Json{{"p", to_json(p)}, {"exponent", e}});
                            out << j.dump() << '\n';
                        } else {
                            std::string sep;
                            for (const auto& [p, e] : f) {
                                out << sep << p << '^' << e;
                                sep = " * ";
                            }
                            out << '\n';
                        }
                    }});
    cmds.push_back({"p2", "whether p divides a+b√-3 for coprime a, b",
                    {{"p", "prime = 1 mod 6"}, {"a", "integer"}, {"b", "integer"}},
                    {},
                    {},
                    [](const Args& a, std::ostream& out) {
                        const bool hit = p2_check(a.integer("p"), a.integer("a"), a.integer("b"));
                        if (a.json) out << Json{{"divides", hit}}.dump() << '\n';
                        else out << bool_text(hit) << '\n';
                    }});
    cmds.push_back({"cube-root", "(e+f√-3)^3 = a+b√-3",
                    {{"a", "integer"}, {"b", "integer"}},
                    {},
                    {},
                    [](const Args& a, std::ostream& out) {
                        const LemmaWitness w = cube_root_in_zsqrt3(a.integer("a"), a.integer("b"));
                        if (a.json)
                            out << Json{{"a", to_json(w.a)}, {"b", to_json(w.b)}, {"e", to_json(w.e)}, {"f", to_json(w.f)}}
                                       .dump()
                                << '\n';
                        else
                            out << to_string(EisensteinInt::from_zsqrt3(w.a, w.b)) << " = "
                                << detail::paren(EisensteinInt::from_zsqrt3(w.e, w.f)) << "^3\n";
                    }});
    cmds.push_back({"lemma", "expand (e+f√-3)^3",
                    {{"e", "integer"}, {"f", "integer"}},
                    {},
                    {},
                    [](const Args& a, std::ostream& out) {
                        const Integer e = a.integer("e"), f = a.integer("f");
                        const LemmaExpansion x = lemma_expand(e, f);
                        if (a.json)
                            out << Json{{"e", to_json(e)}, {"f", to_json(f)}, {"a", to_json(x.a)}, {"b", to_json(x.b)},
                                        {"degenerate", x.degenerate}}
                                       .dump()
                                << '\n';
                        else
                            out << detail::paren(EisensteinInt::from_zsqrt3(e, f)) << "^3 = "
                                << to_string(EisensteinInt::from_zsqrt3(x.a, x.b)) << (x.degenerate ? " (degenerate)" : "")
                                << '\n';
                    }});
    cmds.push_back({"p4", "divisibility facts for 2p(p^2+3q^2) = theta^3",
                    {{"p", "integer"}, {"q", "integer"}, {"theta", "integer"}},
                    {},
                    {{"relaxed", "skip state validation"}},
                    [](const Args& a, std::ostream& out) {
                        const Integer p = a.integer("p"), q = a.integer("q"), t = a.integer("theta");
                        const P4Facts f = a.flag("relaxed") ? p4_facts(p, q, t) : check_p4(make_state(p, q, t));
                        if (a.json) out << detail::p4_json(f).dump() << '\n';
                        else
                            out << "q_odd=" << bool_text(f.q_odd) << " nine_divides_p=" << bool_text(f.nine_divides_p)
                                << " three_divides_theta=" << bool_text(f.three_divides_theta)
                                << " three_ndivides_q=" << bool_text(f.three_ndivides_q) << '\n';
                    }});
    cmds.push_back({"split", "u^3 = 2p/9, v^3 = (p^2+3q^2)/3",
                    {{"p", "integer"}, {"q", "integer"}, {"theta", "integer"}},
                    {},
                    {},
                    [](const Args& a, std::ostream& out) {
                        const CubeSplit s = split_eq2(a.integer("p"), a.integer("q"), a.integer("theta"));
                        if (a.json) out << Json{{"u", to_json(s.u)}, {"v", to_json(s.v)}}.dump() << '\n';
                        else out << "u=" << s.u << " v=" << s.v << '\n';
                    }});
    cmds.push_back({"eq56", "(e, f) with q = e(e^2-9f^2), p/3 = 3f(e^2-f^2)",
                    {{"q", "integer"}, {"p-third", "integer"}, {"v", "integer"}},
                    {},
                    {},
                    [](const Args& a, std::ostream& out) {
                        const LemmaWitness w = apply_lemma_eq56(a.integer("q"), a.integer("p-third"), a.integer("v"));
                        if (a.json) out << Json{{"e", to_json(w.e)}, {"f", to_json(w.f)}}.dump() << '\n';
                        else out << "e=" << w.e << " f=" << w.f << '\n';
                    }});
    cmds.push_back({"coprime-split", "cube roots of pairwise coprime factors of a cube",
                    {{"factors", "comma-separated integers"}},
                    {},
                    {},
                    [](const Args& a, std::ostream& out) {
                        const std::vector<Integer> factors = detail::parse_list(a.values.at("factors"));
                        const std::vector<Integer> roots = coprime_cube_split(factors);
                        if (a.json) {
                            Json j = Json::array();
                            for (const Integer& r : roots) j.push_back(to_json(r));
                            out << Json{{"roots", std::move(j)}}.dump() << '\n';
                        } else {
                            std::string sep;
                            for (const Integer& r : roots) {
                                out << sep << r;
                                sep = " ";
                            }
                            out << '\n';
                        }
                    }});
    cmds.push_back({"alpha-beta", "alpha = (r-s)/2, beta = (r+s)/2",
                    {{"r", "odd integer"}, {"s", "odd integer"}},
                    {},
                    {},
                    [](const Args& a, std::ostream& out) {
                        const AlphaBeta ab = alpha_beta(a.integer("r"), a.integer("s"));
                        if (a.json)
                            out << Json{{"alpha", to_json(ab.alpha)}, {"beta", to_json(ab.beta)},
                                        {"degenerate", ab.degenerate}}
                                       .dump()
                                << '\n';
                        else
                            out << "alpha=" << ab.alpha << " beta=" << ab.beta << (ab.degenerate ? " (degenerate)" : "")
                                << '\n';
                    }});
    cmds.push_back({"descent", "one descent step from (p, q, theta)",
                    {{"p", "integer"}, {"q", "integer"}, {"theta", "integer"}},
                    {},
                    {{"relaxed", "skip state validation and the divisibility assertion"}},
                    [](const Args& a, std::ostream& out) {
                        const DescentChain c =
                            descent_chain(a.integer("p"), a.integer("q"), a.integer("theta"),
                                          a.flag("relaxed") ? DescentMode::Relaxed : DescentMode::Strict);
                        if (a.json)
                            out << Json{{"p", to_json(c.next.p)}, {"q", to_json(c.next.q)}, {"theta", to_json(c.next.theta)}}
                                       .dump()
                                << '\n';
                        else out << describe(c) << '\n';
                    }});
    cmds.push_back({"fermat-reduce", "p = (x+y)/2, q = (x-y)/2",
                    {{"x", "odd integer"}, {"y", "odd integer"}},
                    {{"z", "integer; validates the state (p, q, -z)"}},
                    {},
                    [](const Args& a, std::ostream& out) {
                        const Integer x = a.integer("x"), y = a.integer("y");
                        if (a.has("z")) {
                            const DescentState s = fermat_reduce(x, y, a.integer("z"));
                            if (a.json)
                                out << Json{{"p", to_json(s.p)}, {"q", to_json(s.q)}, {"theta", to_json(s.theta)}}.dump()
                                    << '\n';
                            else out << describe(s) << '\n';
                            return;
                        }
                        const FermatReduction r = fermat_reduce(x, y);
                        if (a.json)
                            out << Json{{"p", to_json(r.p)}, {"q", to_json(r.q)}, {"cube_sum", to_json(r.cube_sum)}}.dump()
                                << '\n';
                        else out << "p=" << r.p << " q=" << r.q << " x^3+y^3=" << r.cube_sum << '\n';
                    }});
    cmds.push_back({"square", "r with r^2 = 12q^3 - 3p^6",
                    {{"p", "nonzero integer"}, {"q", "integer"}},
                    {},
                    {},
                    [](const Args& a, std::ostream& out) {
                        const auto r = square_discriminant(a.integer("p"), a.integer("q"));
                        if (a.json) out << Json{{"r", r ? to_json(*r) : Json(nullptr)}}.dump() << '\n';
                        else out << (r ? to_string(*r) : std::string("none")) << '\n';
                    }});
    cmds.push_back({"app1", "x = 3p^3+r, y = 3p^3-r, z = 6pq",
                    {{"p", "integer"}, {"q", "integer"}, {"r", "integer"}},
                    {},
                    {},
                    [](const Args& a, std::ostream& out) {
                        const FermatTriple t = app1_construct(a.integer("p"), a.integer("q"), a.integer("r"));
                        out << "x=" << t.x << " y=" << t.y << " z=" << t.z << '\n';
                    }});
    cmds.push_back({"app2", "p, q, r and residual for 9x^3 = zy^3 + z^2 + 6xyz",
                    {{"x", "integer"}, {"y", "integer"}, {"z", "integer"}},
                    {},
                    {},
                    [](const Args& a, std::ostream& out) {
                        const App2Reduction r = app2_reduce(a.integer("x"), a.integer("y"), a.integer("z"));
                        if (a.json)
                            out << Json{{"p", to_json(r.p)}, {"q", to_json(r.q)}, {"r", to_json(r.r)},
                                        {"residual", to_json(r.residual)}, {"hypothesis_met", r.hypothesis_met}}
                                       .dump()
                                << '\n';
                        else
                            out << "p=" << r.p << " q=" << r.q << " r=" << r.r << " residual=" << r.residual
                                << (r.hypothesis_met ? "" : " (zero input)") << '\n';
                    }});
    cmds.push_back({"app3", "r, s, t for (a+b+c)^3 = 24abc",
                    {{"a", "integer"}, {"b", "integer"}, {"c", "integer"}},
                    {},
                    {},
                    [](const Args& a, std::ostream& out) {
                        const App3Reduction r = app3_reduce(a.integer("a"), a.integer("b"), a.integer("c"));
                        if (a.json)
                            out << Json{{"r", to_json(r.r)}, {"s", to_json(r.s)}, {"t", to_json(r.t)},
                                        {"lhs7", to_json(r.lhs7)}, {"rhs9", to_json(r.rhs9)}, {"degenerate", r.degenerate}}
                                       .dump()
                                << '\n';
                        else
                            out << "r=" << r.r << " s=" << r.s << " t=" << r.t << " lhs7=" << r.lhs7 << " rhs9=" << r.rhs9
                                << (r.degenerate ? " (degenerate)" : "") << '\n';
                    }});
    cmds.push_back({"search", "bounded exhaustive search",
                    {{"target", "eq1 | fermat | square | app2 | app3"}, {"bound", "positive integer"}},
                    {{"jobs", "worker threads (default 1)"}},
                    {{"relaxed", "drop parity/coprimality (eq1) or allow z = 0 (fermat)"},
                     {"timing", "include elapsed_ms"}},
                    [](const Args& a, std::ostream& out) {
                        const std::string target = a.values.at("target");
                        const std::int64_t bound = a.small("bound", 1, 100000);
                        const unsigned jobs =
                            a.has("jobs") ? static_cast<unsigned>(a.small("jobs", 1, 256)) : 1u;
                        SearchReport report;
                        if (target == "eq1") report = search_eq1({bound, jobs, a.flag("relaxed")});
                        else if (target == "fermat") report = search_fermat({bound, jobs, a.flag("relaxed")});
                        else if (target == "square") report = search_applications(AppTarget::Square, bound, jobs);
                        else if (target == "app2") report = search_applications(AppTarget::App2, bound, jobs);
                        else if (target == "app3") report = search_applications(AppTarget::App3, bound, jobs);
                        else throw CLI::ValidationError("--target", "unknown search target '" + target + "'");
                        if (a.json) {
                            out << to_json(report, a.flag("timing")).dump() << '\n';
                            return;
                        }
                        out << "search " << report.target << " bound=" << report.bound
                            << " candidates_tested=" << report.candidates_tested << " hits=" << report.hits.size();
                        if (a.flag("timing")) out << " elapsed_ms=" << report.elapsed_ms;
                        out << '\n';
                        for (const auto& hit : report.hits) {
                            for (std::size_t i = 0; i < hit.size(); ++i)
                                out << (i ? " " : "  ") << report.fields[i] << '=' << hit[i];
                            out << '\n';
                        }
                    }});
    cmds.push_back({"fuzz", "evaluate the registered polynomial identities on seeded samples",
                    {},
                    {{"trials", "number of sampled triples (default 1000)"}, {"seed", "RNG seed (default 0)"}},
                    {},
                    [](const Args& a, std::ostream& out) {
                        const std::uint64_t trials =
                            a.has("trials") ? static_cast<std::uint64_t>(a.small("trials", 1, 100'000'000)) : 1000;
                        const std::uint64_t seed =
                            a.has("seed") ? static_cast<std::uint64_t>(a.small("seed", 0, INT64_MAX)) : 0;
                        const auto reports = fuzz_identities(trials, seed);
                        if (a.json) {
                            Json j = Json::array();
                            for (const auto& r : reports) j.push_back(to_json(r));
                            out << j.dump() << '\n';
                            return;
                        }
                        for (const auto& r : reports)
                            out << r.id << " trials=" << r.trials << " failures=" << r.failures << '\n';
                    }});
    return cmds;
}

/// Parses and executes one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic in Z[w] and the cubic Fermat descent", "eisen"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::vector<Command> cmds = commands();
    std::vector<Args> parsed(cmds.size());
    std::vector<CLI::App*> subs;
    for (std::size_t i = 0; i < cmds.size(); ++i) {
        CLI::App* sub = app.add_subcommand(cmds[i].name, cmds[i].description);
        subs.push_back(sub);
        for (const auto& [flag, help] : cmds[i].required)
            sub->add_option("--" + flag, parsed[i].values[flag], help)->required()->allow_extra_args(false);
        for (const auto& [flag, help] : cmds[i].optional)
            sub->add_option_function<std::string>(
                "--" + flag, [&parsed, i, f = flag](const std::string& v) { parsed[i].values[f] = v; }, help);
        for (const auto& [flag, help] : cmds[i].switches) sub->add_flag("--" + flag, parsed[i].switches[flag], help);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    const bool json = format == "json";
    for (std::size_t i = 0; i < cmds.size(); ++i) {
        if (!subs[i]->parsed()) continue;
        parsed[i].json = json;
        try {
            cmds[i].handler(parsed[i], out);
            return kOk;
        } catch (const DomainError& e) {
            if (json) {
                Json j{{"error", e.name()}, {"detail", e.detail()}};
                if (!e.stage().empty()) j["stage"] = e.stage();
                out << j.dump() << '\n';
            }
            err << e.what() << '\n';
            return kDomainError;
        } catch (const TheoremViolation& e) {
            err << e.what() << '\n';
            return kTheoremViolation;
        } catch (const CLI::ValidationError& e) {
            err << "usage error: " << e.what() << '\n';
            return kUsageError;
        }
    }
    err << "usage error: no command\n";
    return kUsageError;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace eisen::cli
