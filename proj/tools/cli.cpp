#include "cli.hpp"

#include "sturm/combi.hpp"
#include "sturm/construct.hpp"
#include "sturm/gaussint.hpp"
#include "sturm/modular.hpp"
#include "sturm/perm.hpp"
#include "sturm/quadres.hpp"
#include "sturm/radical.hpp"
#include "sturm/seqcalc.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iterator>
#include <map>
#include <sstream>

namespace sturm::cli {

namespace {

using json = nlohmann::json;

struct Output {
    std::string text;
    json data;
};

std::string fmt_double(double v) {
    if (v == 0.0) return "0";
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

double round12(double v) { return std::stod(fmt_double(v)); }

std::string fmt_complex(ComplexApprox z) {
    if (z.imag() == 0.0) return fmt_double(z.real());
    return fmt_double(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt_double(std::abs(z.imag())) + "i";
}

std::string trim(std::string s) {
    auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
    s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
    s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
    return s;
}

// "-" reads the whole of stdin.
std::string body(const std::string& arg, std::istream& in) {
    if (arg != "-") return arg;
    return trim(std::string(std::istreambuf_iterator<char>(in), {}));
}

unsigned to_unsigned(const std::string& text, const char* what) {
    Integer v = parse_integer(text);
    if (v < 0) throw std::domain_error(std::string(what) + " must be nonnegative");
    if (v > 1000000000) throw std::domain_error(std::string(what) + " is too large");
    return static_cast<unsigned>(v);
}

json roots_json(const RootSet& rs) {
    json roots = json::array();
    for (const auto& r : rs.roots) roots.push_back({{"re", round12(r.real())}, {"im", round12(r.imag())}});
    return {{"roots", roots}, {"residual_bound", round12(rs.residual_bound)}};
}

Output roots_output(RootSet rs) {
    std::sort(rs.roots.begin(), rs.roots.end(), [](ComplexApprox a, ComplexApprox b) {
        bool ra = a.imag() == 0.0, rb = b.imag() == 0.0;
        if (ra != rb) return ra;
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    std::string text;
    for (const auto& r : rs.roots) text += fmt_complex(r) + "\n";
    return {text, roots_json(rs)};
}

Output integer_output(const Integer& v, const char* key) { return {to_string(v) + "\n", {{key, to_string(v)}}}; }

GroupAction parse_group(const std::string& text) {
    auto colon = text.find(':');
    std::string kind = text.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (kind == "cube-faces" && rest.empty()) return cube_face_rotations();
    if (kind == "cyclic" || kind == "dihedral") {
        unsigned n = to_unsigned(rest, "group degree");
        return kind == "cyclic" ? cyclic_group(n) : dihedral_group(n);
    }
    if (kind == "gens") {
        std::vector<std::string> parts;
        std::stringstream ss(rest);
        for (std::string part; std::getline(ss, part, '|');) parts.push_back(trim(part));
        std::vector<Permutation> gens;
        unsigned degree = 0;
        for (const auto& p : parts) degree = std::max(degree, parse_cycles(p).size());
        for (const auto& p : parts) gens.push_back(parse_cycles(p, degree));
        if (gens.empty()) throw std::invalid_argument("no generators given");
        return GroupAction::generate(degree, gens);
    }
    throw std::invalid_argument("unknown group '" + text + "' (cyclic:N, dihedral:N, cube-faces, gens:P|Q)");
}

IntersectionSums family_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("family must be a JSON object");
    if (j.contains("sums")) {
        std::vector<Integer> M;
        for (const auto& v : j.at("sums")) M.push_back(parse_integer(v.is_string() ? v.get<std::string>() : v.dump()));
        return IntersectionSums(std::move(M));
    }
    if (!j.contains("universe") || !j.contains("sets")) {
        throw std::invalid_argument("family needs \"sums\" or \"universe\" and \"sets\"");
    }
    std::map<std::string, unsigned> index;
    const json& u = j.at("universe");
    if (u.is_number_integer()) {
        long long n = u.get<long long>();
        if (n < 0 || n > 10000000) throw std::domain_error("universe size out of range");
        for (long long k = 1; k <= n; ++k) index.emplace(std::to_string(k), static_cast<unsigned>(k - 1));
    } else if (u.is_array()) {
        for (const auto& v : u) index.emplace(v.dump(), static_cast<unsigned>(index.size()));
    } else {
        throw std::invalid_argument("\"universe\" must be a size or a list");
    }
    std::vector<std::vector<unsigned>> sets;
    for (const auto& s : j.at("sets")) {
        std::vector<unsigned> members;
        for (const auto& v : s) {
            auto it = index.find(v.dump());
            if (it == index.end()) throw std::domain_error("set element " + v.dump() + " not in universe");
            members.push_back(it->second);
        }
        sets.push_back(std::move(members));
    }
    return IntersectionSums::from_family(static_cast<unsigned>(index.size()), sets);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"sturm: exact number theory and algebra toolkit", "sturm"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit JSON (exact integers as strings)");

    std::function<Output()> action;
    std::vector<std::string> a(4);
    auto positional = [&](CLI::App* sc, std::initializer_list<std::pair<const char*, const char*>> names) {
        std::size_t k = 0;
        for (auto [name, help] : names) sc->add_option(name, a.at(k++), help)->required();
    };

    auto* modpow = app.add_subcommand("modpow", "a^e mod m");
    positional(modpow, {{"a", "base"}, {"e", "exponent"}, {"m", "modulus"}});
    modpow->callback([&] {
        action = [&] {
            return integer_output(mod_pow(Residue(parse_integer(a[0]), parse_integer(a[2])), parse_integer(a[1])).value(),
                                  "result");
        };
    });

    auto* order_cmd = app.add_subcommand("order", "multiplicative order of a mod m");
    positional(order_cmd, {{"a", "element"}, {"m", "modulus"}});
    order_cmd->callback([&] {
        action = [&] { return integer_output(multiplicative_order(Residue(parse_integer(a[0]), parse_integer(a[1]))), "order"); };
    });

    bool count_roots = false;
    auto* primroot = app.add_subcommand("primroot", "smallest primitive root mod m");
    positional(primroot, {{"m", "modulus"}});
    primroot->add_flag("--count", count_roots, "number of primitive roots mod a prime");
    primroot->callback([&] {
        action = [&]() -> Output {
            Integer m = parse_integer(a[0]);
            if (count_roots) return integer_output(count_primitive_roots(m), "count");
            auto g = find_primitive_root(m);
            if (!g) return {"none\n", {{"root", nullptr}}};
            return integer_output(g->value(), "root");
        };
    });

    auto* dlog = app.add_subcommand("dlog", "least x with a^x = b mod m");
    positional(dlog, {{"a", "base"}, {"b", "target"}, {"m", "modulus"}});
    dlog->callback([&] {
        action = [&]() -> Output {
            Integer m = parse_integer(a[2]);
            auto x = discrete_log(Residue(parse_integer(a[0]), m), Residue(parse_integer(a[1]), m));
            if (!x) return {"none\n", {{"x", nullptr}}};
            return integer_output(*x, "x");
        };
    });

    auto* period = app.add_subcommand("period", "period of the decimal expansion of 1/m");
    positional(period, {{"m", "modulus"}});
    period->callback([&] { action = [&] { return integer_output(decimal_period(parse_integer(a[0])), "period"); }; });

    std::string route = "both";
    auto* leg = app.add_subcommand("legendre", "Legendre symbol (a/p)");
    positional(leg, {{"a", "numerator"}, {"p", "odd prime"}});
    leg->add_option("--route", route, "euler, reciprocity or both")->check(CLI::IsMember({"euler", "reciprocity", "both"}));
    leg->callback([&] {
        action = [&]() -> Output {
            Integer x = parse_integer(a[0]), p = parse_integer(a[1]);
            LegendreValue v;
            if (route == "euler") {
                v = legendre_euler(x, p);
            } else if (route == "reciprocity") {
                v = legendre_reciprocity(x, p);
            } else {
                v = legendre_euler(x, p);
                if (legendre_reciprocity(x, p) != v) throw std::logic_error("Legendre routes disagree");
            }
            std::string s = std::to_string(to_int(v));
            return {s + "\n", {{"value", s}}};
        };
    });

    auto* sqrtmod = app.add_subcommand("sqrtmod", "square roots of a mod an odd prime p");
    positional(sqrtmod, {{"a", "residue"}, {"p", "odd prime"}});
    sqrtmod->callback([&] {
        action = [&]() -> Output {
            auto r = sqrt_mod(parse_integer(a[0]), parse_integer(a[1]));
            if (!r) return {"none\n", {{"roots", nullptr}}};
            std::string x = to_string(r->first), y = to_string(r->second);
            return {x + " " + y + "\n", {{"roots", {x, y}}}};
        };
    });

    auto* gfactor = app.add_subcommand("gfactor", "factor a Gaussian integer");
    positional(gfactor, {{"z", "Gaussian integer, e.g. 3+4i"}});
    gfactor->callback([&] {
        action = [&]() -> Output {
            auto f = g_factor(parse_gaussian(body(a[0], in)));
            json factors = json::array();
            for (const auto& pp : f.factors)
                factors.push_back({{"prime", to_string(pp.prime)}, {"exponent", std::to_string(pp.exponent)}});
            return {f.to_string() + "\n", {{"unit", to_string(f.unit)}, {"factors", factors}}};
        };
    });

    auto* twosq = app.add_subcommand("twosquares", "n = a^2 + b^2 with a <= b");
    positional(twosq, {{"n", "nonnegative integer"}});
    twosq->callback([&] {
        action = [&]() -> Output {
            Integer n = parse_integer(a[0]);
            auto r = two_squares(n);
            if (!r) return {"none\n", {{"a", nullptr}, {"b", nullptr}}};
            std::string x = to_string(r->first), y = to_string(r->second);
            return {to_string(n) + " = " + x + "^2 + " + y + "^2\n", {{"a", x}, {"b", y}}};
        };
    });

    auto* cubic = app.add_subcommand("solve-cubic", "roots of a cubic with rational coefficients");
    positional(cubic, {{"f", "polynomial, e.g. 'x^3 - 3*x + 1'"}});
    cubic->callback([&] { action = [&] { return roots_output(solve_cubic(parse_poly(body(a[0], in)))); }; });

    auto* quartic = app.add_subcommand("solve-quartic", "roots of a quartic with rational coefficients");
    positional(quartic, {{"f", "polynomial"}});
    quartic->callback([&] { action = [&] { return roots_output(solve_quartic(parse_poly(body(a[0], in)))); }; });

    auto* constructible = app.add_subcommand("constructible", "is the regular n-gon constructible");
    positional(constructible, {{"n", "number of sides"}});
    constructible->callback([&] {
        action = [&]() -> Output {
            auto v = gauss_constructible(parse_integer(a[0]));
            json primes = json::array();
            for (const auto& p : v.fermat_primes) primes.push_back(to_string(p));
            json data = {{"n", to_string(v.n)},
                         {"constructible", v.constructible},
                         {"factorization", v.factorization.to_string()},
                         {"fermat_primes", primes},
                         {"summary", v.summary()},
                         {"offending_prime", v.offending_prime ? json(to_string(*v.offending_prime)) : json(nullptr)}};
            return {v.summary() + "\n", data};
        };
    });

    bool slow = false, show_lattice = false;
    auto* resolvents = app.add_subcommand("resolvents", "Lagrange resolvents for a Fermat prime");
    positional(resolvents, {{"p", "3, 5, 17 (257 with --slow)"}});
    resolvents->add_flag("--slow", slow, "allow p = 257");
    resolvents->add_flag("--lattice", show_lattice, "print the coordinates of T_r^(p-1)");
    resolvents->callback([&] {
        action = [&]() -> Output {
            auto r = lagrange_resolvents(to_unsigned(a[0], "p"), slow);
            auto passed = std::count(r.power_checks.begin(), r.power_checks.end(), true);
            std::ostringstream os;
            os << "p " << r.p << "\nprimitive root " << r.g << "\npower checks " << passed << "/"
               << r.power_checks.size() << "\nT0 error " << fmt_double(r.t0_error) << "\nreconstruction error "
               << fmt_double(r.reconstruction_error) << "\nlattice deviation " << fmt_double(r.max_lattice_deviation)
               << "\n";
            json lattice = json::array();
            for (std::size_t k = 0; k < r.lattice.size(); ++k) {
                json row = json::array();
                if (show_lattice) os << "T" << k << "^" << (r.p - 1) << " =";
                for (const auto& c : r.lattice[k]) {
                    row.push_back(to_string(c));
                    if (show_lattice) os << " " << c;
                }
                if (show_lattice) os << "\n";
                lattice.push_back(row);
            }
            json data = {{"p", std::to_string(r.p)},
                         {"primitive_root", to_string(r.g)},
                         {"power_checks_passed", std::to_string(passed)},
                         {"t0_error", round12(r.t0_error)},
                         {"reconstruction_error", round12(r.reconstruction_error)},
                         {"lattice_deviation", round12(r.max_lattice_deviation)},
                         {"lattice", lattice}};
            return {os.str(), data};
        };
    });

    unsigned perm_size = 0;
    auto* perm = app.add_subcommand("perm", "permutation algebra in cycle notation");
    perm->require_subcommand(1);
    perm->add_option("--size", perm_size, "act on {1..n}");
    auto sized = [&](const std::string& s) { return parse_cycles(body(s, in), perm_size); };
    auto common_size = [&](Permutation& f, Permutation& g) {
        unsigned n = std::max(f.size(), g.size());
        f = parse_cycles(to_cycle_string(f), n);
        g = parse_cycles(to_cycle_string(g), n);
    };
    auto* compose_cmd = perm->add_subcommand("compose", "f o g, applying g first");
    positional(compose_cmd, {{"f", "outer"}, {"g", "inner"}});
    compose_cmd->callback([&] {
        action = [&]() -> Output {
            Permutation f = sized(a[0]), g = sized(a[1]);
            common_size(f, g);
            std::string s = to_cycle_string(compose(f, g));
            return {s + "\n", {{"permutation", s}}};
        };
    });
    auto* perm_order = perm->add_subcommand("order", "order of a permutation");
    positional(perm_order, {{"f", "permutation"}});
    perm_order->callback([&] { action = [&] { return integer_output(order(sized(a[0])), "order"); }; });
    auto* perm_type = perm->add_subcommand("type", "cycle type, fixed points included");
    positional(perm_type, {{"f", "permutation"}});
    perm_type->callback([&] {
        action = [&]() -> Output {
            Permutation f = sized(a[0]);
            std::string s = cycle_type(f).to_string();
            return {s + "\n", {{"type", s}, {"parity", parity(f) == Parity::even ? "even" : "odd"}}};
        };
    });
    auto* perm_conj = perm->add_subcommand("conj", "are two permutations conjugate");
    positional(perm_conj, {{"a", "permutation"}, {"b", "permutation"}});
    perm_conj->callback([&] {
        action = [&]() -> Output {
            Permutation f = sized(a[0]), g = sized(a[1]);
            common_size(f, g);
            bool c = are_conjugate(f, g);
            return {c ? "yes\n" : "no\n", {{"conjugate", c}}};
        };
    });
    auto* perm_count = perm->add_subcommand("count", "number of permutations of {1..n} with a cycle type");
    positional(perm_count, {{"n", "degree"}, {"type", "cycle type, e.g. <2,3>"}});
    perm_count->callback([&] {
        action = [&] { return integer_output(count_of_type(to_unsigned(a[0], "n"), parse_cycle_type(a[1])), "count"); };
    });

    auto* burnside = app.add_subcommand("burnside", "orbits of colorings under a permutation group");
    positional(burnside, {{"group", "cyclic:N, dihedral:N, cube-faces or gens:P|Q"}, {"colors", "number of colors"}});
    burnside->callback([&] {
        action = [&]() -> Output {
            GroupAction g = parse_group(a[0]);
            Integer orbits = burnside_orbits(g, parse_integer(a[1]));
            return {to_string(orbits) + "\n",
                    {{"orbits", to_string(orbits)}, {"group_order", std::to_string(g.order())}}};
        };
    });

    bool bracelet = false;
    auto* necklace = app.add_subcommand("necklace", "r-colored necklaces of n beads up to rotation");
    positional(necklace, {{"n", "beads"}, {"r", "colors"}});
    necklace->add_flag("--bracelet", bracelet, "also allow reflections (odd n)");
    necklace->callback([&] {
        action = [&] {
            unsigned n = to_unsigned(a[0], "n");
            Integer r = parse_integer(a[1]);
            return integer_output(bracelet ? bracelets_odd(n, r) : necklaces(n, r), "count");
        };
    });

    auto* der = app.add_subcommand("derangements", "permutations of n with no fixed point");
    positional(der, {{"n", "size"}});
    der->callback([&] { action = [&] { return integer_output(derangements(to_unsigned(a[0], "n")), "count"); }; });

    auto* surj = app.add_subcommand("surjections", "maps from a k-set onto an n-set");
    positional(surj, {{"k", "domain size"}, {"n", "codomain size"}});
    surj->callback([&] {
        action = [&] { return integer_output(surjections(to_unsigned(a[0], "k"), to_unsigned(a[1], "n")), "count"); };
    });

    std::optional<unsigned> exactly, bonf;
    auto* ie = app.add_subcommand("ie", "inclusion-exclusion over a JSON set family");
    positional(ie, {{"file", "JSON file or - for stdin"}});
    ie->add_option("--exactly", exactly, "count points in exactly r sets");
    ie->add_option("--bonferroni", bonf, "truncation bounds at depth s");
    ie->callback([&] {
        action = [&]() -> Output {
            std::string text;
            if (a[0] == "-") {
                text = std::string(std::istreambuf_iterator<char>(in), {});
            } else {
                std::ifstream f(a[0]);
                if (!f) throw std::invalid_argument("cannot read " + a[0]);
                text = std::string(std::istreambuf_iterator<char>(f), {});
            }
            json j;
            try {
                j = json::parse(text);
            } catch (const json::exception& e) {
                throw std::invalid_argument(std::string("bad JSON: ") + e.what());
            }
            IntersectionSums s = family_from_json(j);
            json sums = json::array();
            for (const auto& m : s.M) sums.push_back(to_string(m));
            std::string u = to_string(union_size(s)), c = to_string(complement_size(s));
            std::string out_text = "union " + u + "\ncomplement " + c + "\n";
            json data = {{"sums", sums}, {"union", u}, {"complement", c}};
            if (exactly) {
                std::string e = to_string(exactly_r(s, *exactly));
                out_text += "exactly " + std::to_string(*exactly) + " " + e + "\n";
                data["exactly"] = {{"r", std::to_string(*exactly)}, {"count", e}};
            }
            if (bonf) {
                auto [lo, hi] = bonferroni(s, *bonf);
                out_text += "bonferroni " + to_string(lo) + " " + to_string(hi) + "\n";
                data["bonferroni"] = {{"s", std::to_string(*bonf)}, {"lower", to_string(lo)}, {"upper", to_string(hi)}};
            }
            return {out_text, data};
        };
    });

    unsigned diff_order = 1;
    auto* delta_cmd = app.add_subcommand("delta", "finite difference of a polynomial sequence P(n)");
    positional(delta_cmd, {{"P", "polynomial in n"}});
    delta_cmd->add_option("-k,--order", diff_order, "apply the difference k times");
    delta_cmd->callback([&] {
        action = [&]() -> Output {
            std::string s = to_string(kth_difference({parse_poly(body(a[0], in))}, diff_order).P, 'n');
            return {s + "\n", {{"poly", s}}};
        };
    });

    auto* sigma_cmd = app.add_subcommand("sigma", "S(n) = P(1) + ... + P(n)");
    positional(sigma_cmd, {{"P", "polynomial in n"}});
    sigma_cmd->callback([&] {
        action = [&]() -> Output {
            std::string s = to_string(sigma_poly({parse_poly(body(a[0], in))}).P, 'n');
            return {s + "\n", {{"poly", s}}};
        };
    });

    std::vector<std::string> samples;
    auto* detect = app.add_subcommand("detect", "is a_1, ..., a_m a polynomial sequence");
    detect->add_option("values", samples, "a_1 ... a_m")->required();
    detect->callback([&] {
        action = [&]() -> Output {
            std::vector<Rational> values;
            for (const auto& s : samples) values.push_back(parse_rational(s));
            auto d = detect_polynomial(values);
            std::string cand = to_string(d.candidate, 'n');
            return {d.accepted ? cand + "\n" : "not polynomial\n", {{"accepted", d.accepted}, {"candidate", cand}}};
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        Output result = action();
        if (as_json) out << result.data.dump() << "\n";
        else out << result.text;
        return 0;
    } catch (const std::invalid_argument& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace sturm::cli
