#include "toro/rep.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace toro {

// ---------------------------------------------------------------- Label

Label Label::index(int j) {
    Label l;
    l.kind = Kind::Index;
    l.j = j;
    return l;
}

Label Label::young(Partition p) {
    Label l;
    l.kind = Kind::Young;
    l.p = std::move(p);
    return l;
}

Label Label::layer_seq(std::vector<Partition> ls) {
    Label l;
    l.kind = Kind::Layers;
    l.layers = std::move(ls);
    return l;
}

Label Label::tuple(std::vector<Label> t) {
    Label l;
    l.kind = Kind::Tuple;
    l.parts = std::move(t);
    return l;
}

std::strong_ordering Label::operator<=>(const Label& o) const {
    if (auto c = kind <=> o.kind; c != 0) return c;
    switch (kind) {
        case Kind::Index: return j <=> o.j;
        case Kind::Young: return p <=> o.p;
        case Kind::Layers: return layers <=> o.layers;
        case Kind::Tuple: break;
    }
    if (auto c = parts.size() <=> o.parts.size(); c != 0) return c;
    for (size_t a = 0; a < parts.size(); ++a)
        if (auto c = parts[a] <=> o.parts[a]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string Label::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Index: os << '[' << j << ']'; break;
        case Kind::Young: os << '|' << p.str() << '>'; break;
        case Kind::Layers:
            os << '{';
            for (size_t a = 0; a < layers.size(); ++a) os << (a ? ";" : "") << layers[a].str();
            os << '}';
            break;
        case Kind::Tuple:
            for (size_t a = 0; a < parts.size(); ++a) os << (a ? " x " : "") << parts[a].str();
            break;
    }
    return os.str();
}

nlohmann::json to_json(const Label& l) {
    switch (l.kind) {
        case Label::Kind::Index: return {{"index", l.j}};
        case Label::Kind::Young: return {{"young", to_json(l.p)}};
        case Label::Kind::Layers: {
            auto a = nlohmann::json::array();
            for (auto& p : l.layers) a.push_back(to_json(p));
            return {{"layers", a}};
        }
        case Label::Kind::Tuple: break;
    }
    auto a = nlohmann::json::array();
    for (auto& p : l.parts) a.push_back(to_json(p));
    return {{"tuple", a}};
}

Label label_from_json(const nlohmann::json& j) {
    if (j.contains("index")) return Label::index(j["index"].get<int>());
    if (j.contains("young")) return Label::young(partition_from_json(j["young"]));
    if (j.contains("layers")) {
        std::vector<Partition> ls;
        for (auto& p : j["layers"]) ls.push_back(partition_from_json(p));
        return Label::layer_seq(ls);
    }
    if (j.contains("tuple")) {
        std::vector<Label> ps;
        for (auto& p : j["tuple"]) ps.push_back(label_from_json(p));
        return Label::tuple(ps);
    }
    throw std::invalid_argument("unknown label json");
}

// ---------------------------------------------------------------- helpers

std::vector<int> ModuleHandle::degree_window(int max_degree) const {
    std::vector<int> w;
    for (int t = two_sided ? -max_degree : min_degree; t <= max_degree; ++t) w.push_back(t);
    return w;
}

std::vector<DeltaTerm> combine_terms(std::vector<DeltaTerm> terms) {
    std::map<std::pair<Label, Monomial>, FieldElem> acc;
    std::vector<std::pair<Label, Monomial>> order;
    for (auto& t : terms) {
        auto key = std::make_pair(t.target, t.support);
        auto it = acc.find(key);
        if (it == acc.end()) {
            acc.emplace(key, t.coeff);
            order.push_back(key);
        } else {
            it->second += t.coeff;
        }
    }
    std::vector<DeltaTerm> out;
    for (auto& k : order) {
        auto& c = acc[k];
        if (!c.is_zero()) out.push_back({k.first, c, k.second});
    }
    return out;
}

int a_mat(int i, int j, int n) {
    i = mod(i, n);
    j = mod(j, n);
    if (i == j) return 2;
    if (j == mod(i + 1, n) || j == mod(i - 1, n)) return -1;
    return 0;
}

int m_mat(int i, int j, int n) {
    i = mod(i, n);
    j = mod(j, n);
    if (i == j) return 0;
    if (j == mod(i + 1, n)) return -1;
    if (j == mod(i - 1, n)) return 1;
    return 0;
}

int worker_threads() {
    int hw = (int)std::thread::hardware_concurrency();
    if (const char* s = std::getenv("TORO_THREADS")) {
        int v = std::atoi(s);
        if (v > 0) return hw > 0 ? std::min(v, std::max(hw, 1)) : v;
    }
    return std::max(hw, 1);
}

std::vector<Label> labels_up_to(const ModuleHandle& h, int max_degree) {
    std::vector<Label> out;
    for (int t : h.degree_window(max_degree))
        for (auto& l : h.basis_by_degree(h.degree_sign * t)) out.push_back(l);
    return out;
}

namespace {

using Op = std::pair<char, int>;  // ('E' | 'F', color)

struct PathKey {
    Label t;
    std::vector<Monomial> s;  // supports in application order
    auto operator<=>(const PathKey&) const = default;
    bool operator==(const PathKey&) const = default;
};

using PathMap = std::map<PathKey, FieldElem>;

std::vector<DeltaTerm> act(const ModuleHandle& h, Op op, const Label& v) {
    return op.first == 'E' ? h.e_action(op.second, v) : h.f_action(op.second, v);
}

// Operators in application order (first entry acts first).
PathMap paths(const ModuleHandle& h, const Label& v, const std::vector<Op>& ops) {
    PathMap cur{{PathKey{v, {}}, FieldElem(1)}};
    for (auto& op : ops) {
        PathMap nx;
        for (auto& [k, c] : cur) {
            for (auto& t : act(h, op, k.t)) {
                PathKey nk{t.target, k.s};
                nk.s.push_back(t.support);
                auto it = nx.find(nk);
                if (it == nx.end()) nx.emplace(std::move(nk), c * t.coeff);
                else it->second += c * t.coeff;
            }
        }
        cur.clear();
        for (auto& [k, c] : nx)
            if (!c.is_zero()) cur.emplace(k, c);
    }
    return cur;
}

// Reorders the support list of every key by the permutation perm (new[i] = old[perm[i]]).
PathMap reorder(const PathMap& m, const std::vector<int>& perm) {
    PathMap out;
    for (auto& [k, c] : m) {
        PathKey nk{k.t, {}};
        for (int p : perm) nk.s.push_back(k.s[p]);
        out[nk] += c;
    }
    return out;
}

std::string supports_str(const std::vector<Monomial>& s) {
    std::string r;
    for (size_t a = 0; a < s.size(); ++a) r += (a ? "," : "") + s[a].str();
    return r;
}

FieldElem F(const Monomial& m) { return FieldElem(m); }

struct LabelResult {
    std::map<std::string, long> checked;
    std::vector<RelationFailure> failures;
    std::exception_ptr error;
};

struct Checker {
    const ModuleHandle& h;
    int n;
    FieldElem qq = F(Monomial::q()) - F(Monomial::q(-1));

    static Monomial field_of(const Monomial& s) {
        if (s.u != 1) throw std::invalid_argument("support without a single u factor: " + s.str());
        return s.field_part();
    }

    void grading(const Label& v, LabelResult& r) {
        auto dv = h.degree(v);
        for (int i = 0; i < n; ++i) {
            for (char c : {'E', 'F'}) {
                for (auto& t : act(h, {c, i}, v)) {
                    auto dt = h.degree(t.target);
                    auto expect = dv;
                    expect[i] += c == 'E' ? 1 : -1;
                    r.checked["grading"]++;
                    if (dt != expect) r.failures.push_back({"grading", v.str(), std::string(1, c) + std::to_string(i), "", ""});
                }
            }
        }
    }

    void k_e(const Label& v, LabelResult& r) {
        r.checked["K-K"] += n * n;
        std::vector<ZetaFunction> phi_v(n);
        for (int i = 0; i < n; ++i) phi_v[i] = h.k_eigen(i, v);
        for (int j = 0; j < n; ++j) {
            for (char c : {'E', 'F'}) {
                for (auto& t : combine_terms(act(h, {c, j}, v))) {
                    Monomial s = field_of(t.support);
                    for (int i = 0; i < n; ++i) {
                        int a = a_mat(i, j, n), m = m_mat(i, j, n);
                        auto phi_t = h.k_eigen(i, t.target);
                        // in zeta = u/z: (q^a s zeta - d^m) phi_t = (s zeta - d^m q^a) phi_v for E,
                        // mirrored for F
                        auto P = ZetaFunction::factor(Monomial::d(m), s * Monomial::q(a));
                        auto Q = ZetaFunction::factor(Monomial::d(m) * Monomial::q(a), s);
                        bool ok = c == 'E' ? P * phi_t == Q * phi_v[i] : Q * phi_t == P * phi_v[i];
                        r.checked[c == 'E' ? "K-E" : "K-F"]++;
                        if (!ok)
                            r.failures.push_back({c == 'E' ? "K-E" : "K-F", v.str(),
                                                  "i=" + std::to_string(i) + " j=" + std::to_string(j) + " s=" +
                                                      t.support.str() + " -> " + t.target.str(),
                                                  phi_t.str(), phi_v[i].str()});
                    }
                }
            }
        }
    }

    void quadratic(const Label& v, LabelResult& r) {
        for (char c : {'E', 'F'}) {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    // A: X_i(z) X_j(w) v, keys (t, z, w); B: X_j(w) X_i(z) v
                    auto A = reorder(paths(h, v, {{c, j}, {c, i}}), {1, 0});
                    auto B = paths(h, v, {{c, i}, {c, j}});
                    std::set<PathKey> keys;
                    for (auto& [k, x] : A) keys.insert(k);
                    for (auto& [k, x] : B) keys.insert(k);
                    int a = a_mat(i, j, n), m = m_mat(i, j, n);
                    bool adjacent = a != 0;
                    std::string rel = adjacent ? std::string(1, c) + c + "-exchange" : std::string(1, c) + c + "-commute";
                    for (auto& k : keys) {
                        FieldElem x = A.count(k) ? A.at(k) : FieldElem();
                        FieldElem y = B.count(k) ? B.at(k) : FieldElem();
                        FieldElem lhs, rhs;
                        if (adjacent) {
                            Monomial z = field_of(k.s[0]), w = field_of(k.s[1]);
                            int ea = c == 'E' ? a : -a;
                            // (d^m z - q^a w) X_i X_j = (d^m q^a z - w) X_j X_i, with a -> -a for F
                            lhs = (F(Monomial::d(m) * z) - F(Monomial::q(ea) * w)) * x;
                            rhs = (F(Monomial::d(m) * Monomial::q(ea) * z) - F(w)) * y;
                        } else {
                            lhs = x;
                            rhs = y;
                        }
                        r.checked[rel]++;
                        if (lhs != rhs)
                            r.failures.push_back({rel, v.str(),
                                                  "i=" + std::to_string(i) + " j=" + std::to_string(j) + " " +
                                                      supports_str(k.s) + " -> " + k.t.str(),
                                                  lhs.str(), rhs.str()});
                    }
                }
            }
        }
    }

    void serre(const Label& v, LabelResult& r) {
        if (n < 3) return;
        FieldElem qsum = F(Monomial::q()) + F(Monomial::q(-1));
        for (char c : {'E', 'F'}) {
            for (int i = 0; i < n; ++i) {
                for (int j : {mod(i + 1, n), mod(i - 1, n)}) {
                    // keys normalized to (t, z1, z2, w)
                    // X_i(z1) X_i(z2) X_j(w): applied j(w), i(z2), i(z1)
                    auto T1 = reorder(paths(h, v, {{c, j}, {c, i}, {c, i}}), {2, 1, 0});
                    // X_i(z1) X_j(w) X_i(z2): applied i(z2), j(w), i(z1)
                    auto T2 = reorder(paths(h, v, {{c, i}, {c, j}, {c, i}}), {2, 0, 1});
                    // X_j(w) X_i(z1) X_i(z2): applied i(z2), i(z1), j(w)
                    auto T3 = reorder(paths(h, v, {{c, i}, {c, i}, {c, j}}), {1, 0, 2});
                    PathMap S;
                    for (auto& [k, x] : T1) S[k] += x;
                    for (auto& [k, x] : T2) S[k] -= qsum * x;
                    for (auto& [k, x] : T3) S[k] += x;
                    PathMap sym;
                    for (auto& [k, x] : S) {
                        sym[k] += x;
                        PathKey sw{k.t, {k.s[1], k.s[0], k.s[2]}};
                        sym[sw] += x;
                    }
                    std::string rel = std::string(1, c) + "-Serre";
                    for (auto& [k, x] : sym) {
                        r.checked[rel]++;
                        if (!x.is_zero())
                            r.failures.push_back({rel, v.str(),
                                                  "i=" + std::to_string(i) + " j=" + std::to_string(j) + " " +
                                                      supports_str(k.s) + " -> " + k.t.str(),
                                                  x.str(), "0"});
                    }
                }
            }
        }
    }

    void ef(const Label& v, LabelResult& r) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                // E_i(z) F_j(w) v - F_j(w) E_i(z) v, keys (t, z, w)
                auto A = reorder(paths(h, v, {{'F', j}, {'E', i}}), {1, 0});
                auto B = paths(h, v, {{'E', i}, {'F', j}});
                PathMap D = A;
                for (auto& [k, x] : B) D[k] -= x;
                std::map<Monomial, FieldElem> diag;
                for (auto& [k, x] : D) {
                    if (x.is_zero()) continue;
                    if (i == j && k.t == v && k.s[0] == k.s[1]) {
                        diag[k.s[0]] += x;
                        continue;
                    }
                    r.failures.push_back({"E-F offdiag", v.str(),
                                          "i=" + std::to_string(i) + " j=" + std::to_string(j) + " " + supports_str(k.s) +
                                              " -> " + k.t.str(),
                                          x.str(), "0"});
                }
                r.checked["E-F offdiag"] += (long)D.size();
                if (i != j) continue;
                auto phi = h.k_eigen(i, v);
                PartialFractions pf;
                try {
                    pf = zeta_partial_fractions(phi);
                } catch (const std::exception& e) {
                    r.failures.push_back({"E-F diag", v.str(), "i=" + std::to_string(i), phi.str(), e.what()});
                    continue;
                }
                std::map<Monomial, FieldElem> expect;
                for (auto& [zp, rp] : pf.poles) expect[Monomial::U() * zp.inv()] += rp / qq;
                std::set<Monomial> sup;
                for (auto& [s, x] : diag) sup.insert(s);
                for (auto& [s, x] : expect) sup.insert(s);
                for (auto& s : sup) {
                    FieldElem x = diag.count(s) ? diag[s] : FieldElem();
                    FieldElem y = expect.count(s) ? expect[s] : FieldElem();
                    r.checked["E-F diag"]++;
                    if (x != y)
                        r.failures.push_back({"E-F diag", v.str(), "i=" + std::to_string(i) + " s=" + s.str(), x.str(),
                                              y.str()});
                }
            }
        }
    }

    LabelResult run(const Label& v) {
        LabelResult r;
        try {
            grading(v, r);
            k_e(v, r);
            quadratic(v, r);
            serre(v, r);
            ef(v, r);
        } catch (const PoleAtOne& e) {
            r.error = std::make_exception_ptr(PoleAtSupport("pole at support " + e.where.str() + " on " + v.str(), e.where));
        } catch (...) {
            r.error = std::current_exception();
        }
        return r;
    }
};

template <class Fn>
std::vector<LabelResult> run_parallel(const std::vector<Label>& labels, Fn fn) {
    std::vector<LabelResult> res(labels.size());
    int nt = std::min<int>(worker_threads(), std::max<size_t>(labels.size(), 1));
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t a; (a = next++) < labels.size();) res[a] = fn(labels[a]);
    };
    if (nt <= 1) {
        work();
    } else {
        std::vector<std::thread> ts;
        for (int t = 0; t < nt; ++t) ts.emplace_back(work);
        for (auto& t : ts) t.join();
    }
    return res;
}

}  // namespace

RelationReport check_relations(const ModuleHandle& h, int max_degree) {
    RelationReport rep;
    rep.module = h.name;
    rep.max_degree = max_degree;
    auto labels = labels_up_to(h, max_degree);
    Checker ck{h, h.n()};
    auto res = run_parallel(labels, [&](const Label& v) { return ck.run(v); });
    for (auto& r : res) {
        if (r.error) std::rethrow_exception(r.error);
        for (auto& [k, c] : r.checked) rep.checked[k] += c;
        for (auto& f : r.failures) rep.failures.push_back(f);
    }
    return rep;
}

void require_pass(const RelationReport& r) {
    if (r.ok()) return;
    auto& f = r.failures.front();
    throw Mismatch(f.relation + " fails on " + f.label + " at " + f.where + ": " + f.lhs + " vs " + f.rhs);
}

nlohmann::json to_json(const RelationReport& r) {
    nlohmann::json j;
    j["module"] = r.module;
    j["max_degree"] = r.max_degree;
    j["ok"] = r.ok();
    j["checked"] = r.checked;
    auto fs = nlohmann::json::array();
    for (auto& f : r.failures)
        fs.push_back({{"relation", f.relation}, {"label", f.label}, {"where", f.where}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    j["failures"] = fs;
    return j;
}

GradedCharacter graded_character(const ModuleHandle& h, int max_degree) {
    GradedCharacter g;
    for (int t : h.degree_window(max_degree)) {
        int td = h.degree_sign * t;
        auto b = h.basis_by_degree(td);
        g.total[td] = (long)b.size();
        for (auto& l : b) g.by_degree[h.degree(l)]++;
    }
    return g;
}

Monomial level_of(const ModuleHandle& h, int probe_degree) {
    std::optional<Monomial> level;
    for (auto& l : labels_up_to(h, probe_degree)) {
        FieldElem prod(1);
        for (int i = 0; i < h.n(); ++i) prod *= h.k_eigen(i, l).value_at_zero();
        Int c;
        Monomial m;
        if (!prod.inv().as_monomial(c, m) || c != 1) throw Inconsistent("level is not a monomial on " + l.str());
        if (level && !(*level == m)) throw Inconsistent("level differs on " + l.str());
        level = m;
    }
    if (!level) throw Inconsistent("empty probe set");
    return *level;
}

bool singular_check(const ModuleHandle& h, const Label& label) {
    for (int i = 0; i < h.n(); ++i)
        if (!combine_terms(h.f_action(i, label)).empty()) return false;
    return true;
}

bool tameness_check(const ModuleHandle& h, int max_degree) {
    for (int t : h.degree_window(max_degree)) {
        std::map<std::vector<int>, std::vector<Label>> pieces;
        for (auto& l : h.basis_by_degree(h.degree_sign * t)) pieces[h.degree(l)].push_back(l);
        for (auto& [d, ls] : pieces) {
            for (size_t a = 0; a < ls.size(); ++a)
                for (size_t b = a + 1; b < ls.size(); ++b) {
                    bool same = true;
                    for (int i = 0; i < h.n() && same; ++i) same = h.k_eigen(i, ls[a]) == h.k_eigen(i, ls[b]);
                    if (same) return false;
                }
        }
    }
    return true;
}

bool quasi_finite_check(const ModuleHandle& h) {
    if (!h.lowest) throw std::invalid_argument("module has no lowest label");
    for (int i = 0; i < h.n(); ++i) {
        auto phi = h.k_eigen(i, *h.lowest);
        if (!(phi.value_at_zero() * phi.value_at_infinity()).is_one()) return false;
    }
    return true;
}

// ---------------------------------------------------------------- twists

namespace {

std::vector<DeltaTerm> map_terms(std::vector<DeltaTerm> ts, const std::function<FieldElem(const FieldElem&)>& fc,
                                 const std::function<Monomial(const Monomial&)>& fs) {
    for (auto& t : ts) {
        t.coeff = fc(t.coeff);
        t.support = fs(t.support);
    }
    return ts;
}

}  // namespace

ModuleHandle twist(const ModuleHandle& h, const Twist& tw) {
    ModuleHandle r = h;
    int n = h.n();
    switch (tw.kind) {
        case Twist::Kind::Tau:
            r.name = "tau(" + h.name + ")";
            r.ctx.k = mod(h.ctx.k - 1, n);
            r.e_action = [h, n](int i, const Label& v) { return h.e_action(mod(i + 1, n), v); };
            r.f_action = [h, n](int i, const Label& v) { return h.f_action(mod(i + 1, n), v); };
            r.k_eigen = [h, n](int i, const Label& v) { return h.k_eigen(mod(i + 1, n), v); };
            r.degree = [h, n](const Label& v) {
                auto d = h.degree(v);
                std::vector<int> o(n);
                for (int i = 0; i < n; ++i) o[i] = d[mod(i + 1, n)];
                return o;
            };
            break;
        case Twist::Kind::Shift: {
            r.name = "shift(" + h.name + "," + tw.a.str() + ")";
            Monomial a = tw.a.field_part();
            auto fc = [](const FieldElem& c) { return c; };
            auto fs = [a](const Monomial& s) { return s * a; };
            r.e_action = [h, fc, fs](int i, const Label& v) { return map_terms(h.e_action(i, v), fc, fs); };
            r.f_action = [h, fc, fs](int i, const Label& v) { return map_terms(h.f_action(i, v), fc, fs); };
            r.k_eigen = [h, a](int i, const Label& v) { return h.k_eigen(i, v).rescaled(a); };
            break;
        }
        case Twist::Kind::Iota: {
            r.name = "iota(" + h.name + ")";
            r.ctx.k = mod(-h.ctx.k, n);
            auto fc = [](const FieldElem& c) { return c.flip(1, -1); };
            auto fs = [](const Monomial& s) { return Monomial{s.u, s.q2, -s.d2, s.K2}; };
            r.e_action = [h, n, fc, fs](int i, const Label& v) { return map_terms(h.e_action(mod(-i, n), v), fc, fs); };
            r.f_action = [h, n, fc, fs](int i, const Label& v) { return map_terms(h.f_action(mod(-i, n), v), fc, fs); };
            r.k_eigen = [h, n](int i, const Label& v) { return h.k_eigen(mod(-i, n), v).flip(1, -1); };
            r.degree = [h, n](const Label& v) {
                auto d = h.degree(v);
                std::vector<int> o(n);
                for (int i = 0; i < n; ++i) o[i] = d[mod(-i, n)];
                return o;
            };
            break;
        }
        case Twist::Kind::Omega: {
            r.name = "omega(" + h.name + ")";
            auto fc = [](const FieldElem& c) { return c.flip(-1, 1); };
            auto fs = [](const Monomial& s) { return Monomial{s.u, -s.q2, s.d2, s.K2}; };
            r.e_action = [h, fc, fs](int i, const Label& v) { return map_terms(h.f_action(i, v), fc, fs); };
            r.f_action = [h, fc, fs](int i, const Label& v) { return map_terms(h.e_action(i, v), fc, fs); };
            r.k_eigen = [h](int i, const Label& v) { return h.k_eigen(i, v).flip(-1, 1); };
            r.degree = [h](const Label& v) {
                auto d = h.degree(v);
                for (auto& x : d) x = -x;
                return d;
            };
            r.basis_by_degree = [h](int t) { return h.basis_by_degree(-t); };
            r.degree_sign = -h.degree_sign;
            break;
        }
    }
    return r;
}

// ---------------------------------------------------------------- memo

namespace {

template <class V>
struct Memo {
    std::mutex mu;
    std::map<std::pair<int, Label>, V> m;
    template <class Fn>
    V get(int i, const Label& l, Fn fn) {
        {
            std::lock_guard<std::mutex> g(mu);
            auto it = m.find({i, l});
            if (it != m.end()) return it->second;
        }
        V v = fn();
        std::lock_guard<std::mutex> g(mu);
        return m.emplace(std::make_pair(i, l), std::move(v)).first->second;
    }
};

}  // namespace

ModuleHandle memoize(const ModuleHandle& h) {
    ModuleHandle r = h;
    auto me = std::make_shared<Memo<std::vector<DeltaTerm>>>();
    auto mf = std::make_shared<Memo<std::vector<DeltaTerm>>>();
    auto mk = std::make_shared<Memo<ZetaFunction>>();
    auto mb = std::make_shared<Memo<std::vector<Label>>>();
    r.e_action = [h, me](int i, const Label& v) { return me->get(i, v, [&] { return h.e_action(i, v); }); };
    r.f_action = [h, mf](int i, const Label& v) { return mf->get(i, v, [&] { return h.f_action(i, v); }); };
    r.k_eigen = [h, mk](int i, const Label& v) { return mk->get(i, v, [&] { return h.k_eigen(i, v); }); };
    r.basis_by_degree = [h, mb](int t) { return mb->get(t, Label(), [&] { return h.basis_by_degree(t); }); };
    return r;
}

}  // namespace toro
