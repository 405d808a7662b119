// Command-line front end.
//
// Exit status: 0 success, 1 bad input (including NotColorless and other precondition failures),
// 2 ill-defined action at resonant parameters (the pole is reported), 3 mismatch (relation failure
// or character disagreement).
#include <iostream>

#include "CLI11.hpp"
#include "toro/characters.hpp"

using namespace toro;
using M = Monomial;
using nlohmann::json;

namespace {

enum Status { OK = 0, BAD_INPUT = 1, ILL_DEFINED = 2, MISMATCH = 3 };

struct Config {
    std::string module = "fock";
    int n = 3, k = 0, l = 0;
    std::string u = "u", K = "symbolic", ratio = "1";
    std::string mu, nu, alpha, beta, gamma, parts, box;
    int m = 0, t = 0, r = 8, bound = 3;
    bool carve = false;
    int max_degree = 6;
    std::string format = "json";
};

struct BadInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Partition part(const std::string& s) { return parse_partition(s); }

Box parse_box(const std::string& s) {
    std::vector<int> v;
    std::istringstream is(s);
    for (std::string c; std::getline(is, c, ',');) v.push_back(std::stoi(c));
    if (v.size() != 3) throw BadInput("box needs three coordinates x,y,z");
    return {v[0], v[1], v[2]};
}

M k_spec(const Config& c) { return c.K == "symbolic" ? M::K() : parse_monomial(c.K); }

ModuleHandle build(const Config& c) {
    if (c.n < 1) throw BadInput("n must be positive");
    ColorContext ctx{c.n, mod(c.k, c.n)};
    M u = parse_monomial(c.u);
    const std::string& name = c.module;
    if (name == "vector" || name == "vector-bar") return vector_module({ctx, u, name == "vector-bar"});
    if (name == "fock") return fock_module({ctx, u});
    if (name == "n") return n_module(part(c.alpha), part(c.beta), ctx, u, c.m);
    if (name == "macmahon-vacuum") return vacuum_macmahon(ctx, u, k_spec(c));
    if (name == "macmahon") return general_macmahon(part(c.alpha), part(c.beta), part(c.gamma), ctx, u, k_spec(c));
    if (name == "h") {
        MacmahonDescriptor d{ctx, u, k_spec(c), part(c.alpha), part(c.beta), part(c.gamma), 0, true};
        return special_k_quotient(d, parse_box(c.box), c.t);
    }
    if (name == "g") return g_module(part(c.mu), part(c.nu), ctx, u);
    if (name == "tensor-vv") return tensor_vv(c.n, ctx.k, mod(c.l, c.n), parse_monomial(c.ratio), c.bound, c.carve);
    if (name == "tensor-ff") return tensor_ff(c.n, ctx.k, mod(c.l, c.n), parse_monomial(c.ratio), c.carve);
    if (name == "wedge") return wedge_module(ctx, c.r);
    throw BadInput("unknown module '" + name + "'");
}

void add_module_options(CLI::App* s, Config& c) {
    s->add_option("--module", c.module,
                  "vector | vector-bar | fock | n | macmahon-vacuum | macmahon | h | g | tensor-vv | tensor-ff | wedge");
    s->add_option("--n", c.n, "number of colors");
    s->add_option("--k", c.k, "color of the corner box");
    s->add_option("--l", c.l, "color of the second tensor factor");
    s->add_option("--u", c.u, "evaluation parameter, e.g. u or u*q^2");
    s->add_option("--K", c.K, "Macmahon parameter: symbolic or a monomial");
    s->add_option("--ratio", c.ratio, "second tensor parameter over the first, e.g. q1^1");
    s->add_option("--mu", c.mu);
    s->add_option("--nu", c.nu);
    s->add_option("--alpha", c.alpha);
    s->add_option("--beta", c.beta);
    s->add_option("--gamma", c.gamma);
    s->add_option("--box", c.box, "special box x,y,z (module h)");
    s->add_option("--t", c.t, "quotient index (module h)");
    s->add_option("--m", c.m, "leading Fock layers (module n); 0 picks the leg depth");
    s->add_option("--r", c.r, "number of wedge factors");
    s->add_option("--bound", c.bound, "mode window for vector factors");
    s->add_flag("--carve", c.carve, "impose the resonance submodule");
    s->add_option("--max-degree", c.max_degree);
}

void add_format(CLI::App* s, std::string& format) {
    s->add_option("--format", format)->check(CLI::IsMember({"json", "tsv", "ascii"}));
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int fail(Status st, const std::string& type, const std::string& msg, const Config& c,
         const std::optional<M>& where = std::nullopt) {
    std::cerr << type << ": " << msg << '\n';
    if (c.format != "json") return st;
    json j{{"error", type}, {"message", msg}, {"status", (int)st}};
    if (where) j["where"] = where->str();
    emit(j);
    return st;
}

// ---------------------------------------------------------------- subcommands

int cmd_relations(const Config& c) {
    auto h = build(c);
    auto rep = check_relations(h, c.max_degree);
    if (c.format == "json") {
        emit(to_json(rep));
    } else if (c.format == "tsv") {
        std::cout << "relation\tchecked\n";
        for (auto& [r, k] : rep.checked) std::cout << r << '\t' << k << '\n';
        for (auto& f : rep.failures)
            std::cout << "FAIL\t" << f.relation << '\t' << f.label << '\t' << f.where << '\t' << f.lhs << '\t' << f.rhs << '\n';
    } else {
        long total = 0;
        for (auto& [r, k] : rep.checked) total += k;
        std::cout << rep.module << ": " << (rep.ok() ? "ok" : "FAILED") << ", " << total << " identities, "
                  << rep.failures.size() << " failures\n";
        for (auto& f : rep.failures) std::cout << "  " << f.relation << " at " << f.label << ": " << f.lhs << " != " << f.rhs << '\n';
    }
    return rep.ok() ? OK : MISMATCH;
}

// prod_{i>=1} (1 - x^i)^{-i}
PowerSeriesZ plane_partition_series(int order) {
    PowerSeriesZ s = PowerSeriesZ::monomial(0, 1, order);
    for (int i = 1; i <= order; ++i) {
        PowerSeriesZ geo(order);
        for (int e = 0; e <= order; e += i) geo[e] = 1;
        for (int rep = 0; rep < i; ++rep) s = s * geo;
    }
    return s;
}

int cmd_character(const Config& c, const std::string& compare, const std::vector<std::string>& expect) {
    auto h = build(c);
    if (h.two_sided) throw BadInput("module '" + c.module + "' is graded by all of Z; characters need a lowest weight");
    auto e = char_enumerate(h, c.max_degree);
    std::optional<PowerSeriesZ> other;
    std::string against;
    if (!compare.empty() && !expect.empty()) throw BadInput("--compare and --expect are exclusive");
    if (!expect.empty()) {
        std::vector<Int> v;
        for (auto& x : expect) {
            try {
                v.push_back(Int(x));
            } catch (const std::runtime_error&) {
                throw BadInput("bad coefficient '" + x + "'");
            }
        }
        if ((int)v.size() != c.max_degree + 1) throw BadInput("--expect needs max-degree + 1 coefficients");
        other = PowerSeriesZ(v), against = "expected";
    } else if (!compare.empty()) {
        if (c.module == "g") {
            auto mu = part(c.mu), nu = part(c.nu);
            if (compare == "weyl-sum") other = weyl_sum_char(mu, nu, c.n, c.max_degree);
            else if (compare == "kt") other = kt_char(mu, nu, c.n, mod(c.k, c.n), c.max_degree);
            else other = ntuple_char(mu, nu, c.n, c.max_degree);
            against = compare == "enumerate" ? "n-tuple enumeration" : compare;
        } else if (compare == "enumerate" && c.module == "fock") {
            other = PowerSeriesZ::inverse_pochhammer(1, c.max_degree), against = "partition numbers";
        } else if (compare == "enumerate" && c.module == "macmahon-vacuum") {
            other = plane_partition_series(c.max_degree), against = "plane partition numbers";
        } else {
            throw BadInput("--compare " + compare + " is not available for module '" + c.module + "'");
        }
    }
    int mm = other ? first_mismatch(e, *other) : -1;
    if (c.format == "json") {
        json j{{"module", h.name}, {"character", to_json(e)}};
        if (other) {
            auto diff = json::array();
            for (int d = 0; d <= c.max_degree; ++d)
                if (e[d] != (*other)[d]) diff.push_back({{"degree", d}, {"lhs", e[d].str()}, {"rhs", (*other)[d].str()}});
            j["compare"] = {{"against", against}, {"series", to_json(*other)}, {"first_mismatch", mm}, {"diff", diff}};
        }
        emit(j);
    } else if (c.format == "tsv") {
        std::cout << "degree\tdimension" << (other ? "\tcompare" : "") << '\n';
        for (int d = 0; d <= c.max_degree; ++d) {
            std::cout << d << '\t' << e[d];
            if (other) std::cout << '\t' << (*other)[d];
            std::cout << '\n';
        }
    } else {
        std::cout << e.str() << '\n';
        if (other) std::cout << other->str() << '\n' << (mm < 0 ? "identical" : "first mismatch at degree " + std::to_string(mm)) << '\n';
    }
    return mm < 0 ? OK : MISMATCH;
}

int cmd_resonance(const Config& c, bool verify) {
    if (c.n < 1) throw BadInput("n must be positive");
    M ratio = parse_monomial(c.ratio);
    int k = mod(c.k, c.n), l = mod(c.l, c.n);
    auto res = resonance_classify(c.n, k, l, ratio);
    json j{{"n", c.n}, {"k", k}, {"l", l}, {"ratio", ratio.str()}, {"vector", to_string(res.vector)},
           {"fock", to_string(res.fock)}};
    j["m"] = res.m ? json(*res.m) : json(nullptr);
    j["ab"] = res.ab ? json::array({res.ab->first, res.ab->second}) : json(nullptr);
    int st = OK;
    if (verify) {
        auto pole = find_pole(tensor_vv(c.n, k, l, ratio, c.bound, false), c.max_degree);
        j["brute_force"] = {{"pole", pole.has_value()}, {"where", pole ? json(pole->str()) : json(nullptr)}};
        if (pole.has_value() != (res.vector == Resonance::Vector::IllDefined)) st = MISMATCH;
    }
    if (c.format == "json") {
        emit(j);
    } else if (c.format == "tsv") {
        std::cout << "ratio\tvector\tm\tfock\tab\n"
                  << j["ratio"].get<std::string>() << '\t' << j["vector"].get<std::string>() << '\t'
                  << (res.m ? std::to_string(*res.m) : "-") << '\t' << j["fock"].get<std::string>() << '\t'
                  << (res.ab ? std::to_string(res.ab->first) + "," + std::to_string(res.ab->second) : "-") << '\n';
    } else {
        std::cout << "V x V: " << j["vector"].get<std::string>() << (res.m ? " (m=" + std::to_string(*res.m) + ")" : "")
                  << "\nF x F: " << j["fock"].get<std::string>() << '\n';
    }
    return st;
}

int cmd_colorless(const Config& c) {
    if (c.n < 1) throw BadInput("n must be positive");
    auto g = part(c.parts);
    int k = mod(c.k, c.n);
    bool col = is_colorless(g, c.n);
    auto v = v_vec(g, c.n, k);
    json j{{"partition", g.parts}, {"n", c.n}, {"k", k}, {"colorless", col}, {"v", v},
           {"conjugate_colorless", is_colorless(conjugate(g), c.n)}};
    if (c.format == "json") {
        emit(j);
    } else if (c.format == "tsv") {
        std::cout << "partition\tcolorless\tv\n" << g.str() << '\t' << (col ? "yes" : "no") << '\t';
        for (size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << v[i];
        std::cout << '\n';
    } else {
        std::cout << g.str() << (col ? " is colorless\n" : " is not colorless\n");
    }
    return OK;
}

json perm_json(const Permutation& p) { return p.img; }

int cmd_orbit(const Config& c) {
    if (c.n < 2) throw BadInput("n must be at least 2");
    json j{{"n", c.n}};
    if (c.nu.empty()) {
        auto mins = minimal_partitions(c.n);
        std::sort(mins.begin(), mins.end(), [](auto& a, auto& b) { return a.parts < b.parts; });
        auto ms = json::array();
        for (auto& p : mins) ms.push_back(p.parts);
        j["minimal"] = ms;
        j["edges"] = orbit_to_json(orbit_walk(c.n));
    } else {
        auto nu = part(c.nu);
        if (!in_family(nu, c.n)) throw NotInFamily(nu.str() + " is not in the colorless family");
        j["nu"] = nu.parts;
        j["minimal"] = is_minimal(nu, c.n);
        j["sigma"] = perm_json(sigma_perm(nu, c.n));
        auto bs = json::array();
        for (auto& b : beta_roots(nu, c.n, 0)) bs.push_back(to_json(b));
        j["betas"] = bs;
        auto steps = json::array();
        auto inv = sigma_perm(nu, c.n).inverse();
        for (int i = 1; i <= c.n - 1; ++i) {
            if (inv(i) > inv(i + 1)) continue;
            auto rep = ribeta_check(nu, i, c.n);
            auto alt = json::array();
            for (auto a : rep.alt) alt.push_back(a == RibetaAlt::Reflected ? "reflected" : "reflected+delta");
            steps.push_back({{"i", i}, {"to", rep.next.parts}, {"alternatives", alt}});
        }
        j["steps"] = steps;
    }
    if (c.format == "json") {
        emit(j);
    } else if (c.nu.empty()) {
        if (c.format == "tsv") std::cout << "from\ti\tto\n";
        for (auto& e : orbit_walk(c.n))
            std::cout << e.from.str() << (c.format == "tsv" ? "\t" : " -") << e.i << (c.format == "tsv" ? "\t" : "-> ")
                      << e.to.str() << '\n';
    } else {
        if (c.format == "tsv") std::cout << "i\tto\n";
        for (auto& s : j["steps"]) {
            std::cout << s["i"].get<int>() << (c.format == "tsv" ? "\t" : ": ") << Partition(s["to"].get<std::vector<int>>()).str()
                      << '\n';
        }
    }
    return OK;
}

int cmd_render(const Config& c, const std::string& type) {
    if (c.n < 1) throw BadInput("n must be positive");
    ColorContext ctx{c.n, mod(c.k, c.n)};
    json j{{"type", type}, {"n", c.n}, {"k", ctx.k}};
    std::string art;
    if (type == "young") {
        auto l = part(c.parts);
        art = render_young(l, ctx);
        auto cr = corners(l, ctx);
        auto pos = [&](const std::vector<std::pair<int, int>>& v) {
            auto a = json::array();
            for (auto [x, y] : v) a.push_back({{"x", x}, {"y", y}, {"color", ctx.color(x, y)}});
            return a;
        };
        j["parts"] = l.parts;
        j["convex"] = pos(cr.convex);
        j["concave"] = pos(cr.concave);
    } else {
        auto a = part(c.alpha), b = part(c.beta), g = part(c.gamma);
        auto p = lowest_plane(a, b, g);
        art = render_plane(p, ctx);
        j["plane"] = plane_to_json(p);
    }
    j["ascii"] = art;
    if (c.format == "json") emit(j);
    else std::cout << art;
    return OK;
}

int cmd_level(const Config& c) {
    auto h = build(c);
    auto lv = level_of(h);
    if (c.format == "json") emit({{"module", h.name}, {"level", lv.str()}});
    else if (c.format == "tsv") std::cout << "module\tlevel\n" << h.name << '\t' << lv.str() << '\n';
    else std::cout << lv.str() << '\n';
    return OK;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"representations of the quantum toroidal algebra of gl_n"};
    app.require_subcommand(1);
    Config c;
    std::string compare, type = "young", render_format = "ascii";
    bool verify = false;

    auto rel = app.add_subcommand("relations", "check the defining relations on a module");
    add_module_options(rel, c);
    add_format(rel, c.format);

    auto ch = app.add_subcommand("character", "graded character, optionally compared with a formula");
    add_module_options(ch, c);
    add_format(ch, c.format);
    std::vector<std::string> expect;
    ch->add_option("--expect", expect, "expected coefficients, comma separated")->delimiter(',');
    ch->add_option("--compare", compare)->check(CLI::IsMember({"weyl-sum", "enumerate", "kt"}));

    auto res = app.add_subcommand("resonance", "classify a tensor product parameter ratio");
    res->add_option("--n", c.n);
    res->add_option("--k", c.k);
    res->add_option("--l", c.l);
    res->add_option("--ratio", c.ratio)->required();
    res->add_option("--bound", c.bound);
    res->add_option("--max-degree", c.max_degree);
    res->add_flag("--verify", verify, "compare with brute-force pole detection");
    add_format(res, c.format);

    auto col = app.add_subcommand("colorless", "colorless test and the vector v");
    col->add_option("--parts", c.parts)->required();
    col->add_option("--n", c.n);
    col->add_option("--k", c.k);
    add_format(col, c.format);

    auto orb = app.add_subcommand("orbit", "orbit walk of the colorless family");
    orb->add_option("--n", c.n);
    orb->add_option("--nu", c.nu, "a family member: sigma, betas and admissible steps");
    add_format(orb, c.format);

    auto ren = app.add_subcommand("render", "ASCII diagram of a Young diagram or lowest plane partition");
    ren->add_option("--type", type)->check(CLI::IsMember({"young", "plane"}));
    ren->add_option("--parts", c.parts);
    ren->add_option("--alpha", c.alpha);
    ren->add_option("--beta", c.beta);
    ren->add_option("--gamma", c.gamma);
    ren->add_option("--n", c.n);
    ren->add_option("--k", c.k);
    add_format(ren, render_format);

    auto lev = app.add_subcommand("level", "level of a module");
    add_module_options(lev, c);
    add_format(lev, c.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return BAD_INPUT;
    }

    if (*ren) c.format = render_format;
    try {
        if (*rel) return cmd_relations(c);
        if (*ch) return cmd_character(c, compare, expect);
        if (*res) return cmd_resonance(c, verify);
        if (*col) return cmd_colorless(c);
        if (*orb) return cmd_orbit(c);
        if (*ren) return cmd_render(c, type);
        if (*lev) return cmd_level(c);
    } catch (const IllDefined& e) {
        return fail(ILL_DEFINED, "IllDefined", e.what(), c, e.where);
    } catch (const PoleAtSupport& e) {
        return fail(ILL_DEFINED, "IllDefined", e.what(), c, e.where);
    } catch (const NotColorless& e) {
        return fail(BAD_INPUT, "NotColorless", e.what(), c);
    } catch (const MalformedPartition& e) {
        return fail(BAD_INPUT, "MalformedPartition", e.what(), c);
    } catch (const Mismatch& e) {
        return fail(MISMATCH, "Mismatch", e.what(), c);
    } catch (const std::invalid_argument& e) {
        return fail(BAD_INPUT, "InvalidInput", e.what(), c);
    } catch (const std::out_of_range& e) {
        return fail(BAD_INPUT, "InvalidInput", e.what(), c);
    }
    return BAD_INPUT;
}
