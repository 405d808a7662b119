#include "toro/tensor.hpp"

#include <set>

namespace toro {

namespace {

Monomial zeta_at(const Monomial& support) {
    if (support.u != 1) throw std::invalid_argument("support without a single u factor: " + support.str());
    return support.field_part().inv();
}

}  // namespace

std::vector<DeltaTerm> delta_action(const TensorDescriptor& t, Gen g, int i, const Label& tuple) {
    const auto& fs = t.factors;
    size_t m = fs.size();
    if (tuple.kind != Label::Kind::Tuple || tuple.parts.size() != m)
        throw std::invalid_argument("label " + tuple.str() + " is not a " + std::to_string(m) + "-tuple");
    std::vector<std::optional<ZetaFunction>> phi(m);
    auto k_of = [&](size_t r) -> const ZetaFunction& {
        if (!phi[r]) phi[r] = fs[r].k_eigen(i, tuple.parts[r]);
        return *phi[r];
    };
    std::optional<ZetaFunction> scale;
    std::vector<DeltaTerm> out;
    for (size_t s = 0; s < m; ++s) {
        auto terms = g == Gen::E ? fs[s].e_action(i, tuple.parts[s]) : fs[s].f_action(i, tuple.parts[s]);
        for (auto& term : terms) {
            if (term.coeff.is_zero()) continue;
            FieldElem c = term.coeff;
            Monomial z = zeta_at(term.support);
            size_t lo = g == Gen::E ? 0 : s + 1, hi = g == Gen::E ? s : m;
            for (size_t r = lo; r < hi; ++r) {
                try {
                    c *= k_of(r).at(z);
                } catch (const PoleAtOne&) {
                    throw IllDefined(std::string(g == Gen::E ? "E" : "F") + "_" + std::to_string(i) + " on " +
                                         tuple.str() + ": K of factor " + std::to_string(r + 1) + " has a pole at " +
                                         term.support.str(),
                                     term.support);
                }
                if (c.is_zero()) break;
            }
            if (!c.is_zero() && g == Gen::F && t.renorm) {
                if (!scale) scale = t.renorm(i, tuple);
                try {
                    c *= scale->at(z);
                } catch (const PoleAtOne&) {
                    throw IllDefined("F_" + std::to_string(i) + " on " + tuple.str() +
                                         ": the renormalization has a pole at " + term.support.str(),
                                     term.support);
                }
            }
            if (c.is_zero()) continue;
            Label target = tuple;
            target.parts[s] = term.target;
            if (t.drop && t.drop(target)) continue;
            if (t.admissible && !t.admissible(target)) {
                throw EscapesSubmodule(std::string(g == Gen::E ? "E" : "F") + "_" + std::to_string(i) + " maps " +
                                       tuple.str() + " to " + target.str() + " with coefficient " + c.str());
            }
            out.push_back({std::move(target), c, term.support});
        }
    }
    return combine_terms(std::move(out));
}

ZetaFunction delta_k(const TensorDescriptor& t, int i, const Label& tuple) {
    ZetaFunction phi;
    for (size_t r = 0; r < t.factors.size(); ++r) phi *= t.factors[r].k_eigen(i, tuple.parts[r]);
    if (t.renorm) phi *= t.renorm(i, tuple);
    return phi;
}

std::vector<int> delta_degree(const TensorDescriptor& t, const Label& tuple) {
    std::vector<int> deg(t.factors.empty() ? 0 : t.factors[0].n(), 0);
    for (size_t r = 0; r < t.factors.size(); ++r) {
        auto d = t.factors[r].degree(tuple.parts[r]);
        for (size_t c = 0; c < deg.size(); ++c) deg[c] += d[c];
    }
    return deg;
}

ModuleHandle tensor_module(TensorDescriptor t, std::function<std::vector<Label>(int)> basis, std::string name) {
    ModuleHandle h;
    h.name = std::move(name);
    h.ctx = t.factors.at(0).ctx;
    auto tp = std::make_shared<TensorDescriptor>(std::move(t));
    h.e_action = [tp](int i, const Label& v) { return delta_action(*tp, Gen::E, i, v); };
    h.f_action = [tp](int i, const Label& v) { return delta_action(*tp, Gen::F, i, v); };
    h.k_eigen = [tp](int i, const Label& v) { return delta_k(*tp, i, v); };
    h.degree = [tp](const Label& v) { return delta_degree(*tp, v); };
    h.basis_by_degree = std::move(basis);
    h.min_degree = 0;
    for (auto& f : tp->factors) {
        h.two_sided = h.two_sided || f.two_sided;
        h.min_degree += f.min_degree;
    }
    return h;
}

// ---------------------------------------------------------------- resonances

namespace {

// ratio = q1^x q2^y; false when ratio is off that lattice (K content, odd parity).
bool q12_exponents(const Monomial& r, int& x, int& y) {
    if (r.u != 0 || r.K2 != 0 || r.d2 % 2 != 0) return false;
    x = r.d2 / 2;
    int t = r.q2 + 2 * x;
    if (t % 4 != 0) return false;
    y = t / 4;
    return true;
}

}  // namespace

Resonance resonance_classify(int n, int k, int l, const Monomial& ratio) {
    Resonance res;
    int x, y;
    if (!q12_exponents(ratio, x, y)) return res;
    if (mod(x - (k - l), n) == 0 && y >= -1 && y <= 1) {
        res.m = (x - (k - l)) / n;
        res.vector = y == 0 ? Resonance::Vector::IllDefined
                            : (y == 1 ? Resonance::Vector::SubmoduleShift0 : Resonance::Vector::SubmoduleShift1);
    }
    int b = y - 1, a = b - x;
    if (mod(b - a - (k - l), n) == 0) {
        res.ab = {a, b};
        if (a >= 0 && b >= 0)
            res.fock = Resonance::Fock::Submodule;
        else if (a <= 0 && b <= 0)
            res.fock = Resonance::Fock::Quotient;
        else
            res.fock = Resonance::Fock::MixedSigns;
    }
    return res;
}

std::string to_string(Resonance::Vector v) {
    switch (v) {
        case Resonance::Vector::IllDefined: return "ill-defined";
        case Resonance::Vector::SubmoduleShift0: return "submodule-shift-0";
        case Resonance::Vector::SubmoduleShift1: return "submodule-shift-1";
        case Resonance::Vector::Irreducible: return "irreducible";
    }
    return "";
}

std::string to_string(Resonance::Fock f) {
    switch (f) {
        case Resonance::Fock::Generic: return "generic";
        case Resonance::Fock::Submodule: return "submodule";
        case Resonance::Fock::Quotient: return "quotient";
        case Resonance::Fock::MixedSigns: return "mixed-signs";
    }
    return "";
}

ModuleHandle tensor_vv(int n, int k, int l, const Monomial& ratio, int bound, bool carve) {
    TensorDescriptor t;
    t.factors = {vector_module({{n, k}, Monomial::U(), false}), vector_module({{n, l}, Monomial::U() * ratio, false})};
    auto res = resonance_classify(n, k, l, ratio);
    int shift = 0;
    bool cut = carve && res.m && res.vector != Resonance::Vector::IllDefined &&
               res.vector != Resonance::Vector::Irreducible;
    if (cut) {
        shift = *res.m * n + k - l + (res.vector == Resonance::Vector::SubmoduleShift1 ? 1 : 0);
        t.admissible = [shift](const Label& v) { return v.parts[0].j >= v.parts[1].j + shift; };
    }
    auto adm = t.admissible;
    auto basis = [bound, adm](int deg) {
        std::vector<Label> out;
        for (int a = -bound; a <= bound; ++a) {
            int b = deg - a;
            if (b < -bound || b > bound) continue;
            Label v = Label::tuple({Label::index(a - 1), Label::index(b - 1)});
            if (!adm || adm(v)) out.push_back(v);
        }
        return out;
    };
    return tensor_module(std::move(t), basis,
                         "V(k=" + std::to_string(k) + ")xV(l=" + std::to_string(l) + ",ratio=" + ratio.str() + ")");
}

ModuleHandle tensor_ff(int n, int k, int l, const Monomial& ratio, bool carve) {
    TensorDescriptor t;
    t.factors = {fock_module({{n, k}, Monomial::U()}), fock_module({{n, l}, Monomial::U() * ratio})};
    auto res = resonance_classify(n, k, l, ratio);
    if (carve && res.fock == Resonance::Fock::Submodule) {
        auto [a, b] = *res.ab;
        t.admissible = [a, b](const Label& v) {
            const Partition &la = v.parts[0].p, &mu = v.parts[1].p;
            for (int i = 1; i + b <= mu.length(); ++i)
                if (la[i] < mu[i + b] - a) return false;
            return true;
        };
    }
    auto adm = t.admissible;
    auto basis = [adm](int deg) {
        std::vector<Label> out;
        for (int a = 0; a <= deg; ++a)
            for (auto& la : partitions_of(a))
                for (auto& mu : partitions_of(deg - a)) {
                    Label v = Label::tuple({Label::young(la), Label::young(mu)});
                    if (!adm || adm(v)) out.push_back(v);
                }
        return out;
    };
    return tensor_module(std::move(t), basis,
                         "F(k=" + std::to_string(k) + ")xF(l=" + std::to_string(l) + ",ratio=" + ratio.str() + ")");
}

std::optional<Monomial> find_pole(const ModuleHandle& h, int max_degree) {
    for (auto& v : labels_up_to(h, max_degree))
        for (int i = 0; i < h.n(); ++i) {
            try {
                h.e_action(i, v);
                h.f_action(i, v);
            } catch (const IllDefined& e) {
                return e.where;
            }
        }
    return std::nullopt;
}

// ---------------------------------------------------------------- wedge

Label wedge_label(const Partition& l, int r) {
    std::vector<Label> parts;
    for (int s = 1; s <= r; ++s) parts.push_back(Label::index(l[s] - s));
    return Label::tuple(std::move(parts));
}

ModuleHandle wedge_module(const ColorContext& ctx, int r) {
    TensorDescriptor t;
    for (int s = 0; s < r; ++s) t.factors.push_back(vector_module({ctx, Monomial::U() * Monomial::q2p(-s), false}));
    t.admissible = [](const Label& v) {
        for (size_t s = 0; s + 1 < v.parts.size(); ++s)
            if (v.parts[s].j + (int)s < v.parts[s + 1].j + (int)s + 1) return false;
        return true;
    };
    // Only the partitions (λ_r >= 0) are enumerated; W_r also holds negative tails.
    auto basis = [r](int deg) {
        std::vector<Label> out;
        if (deg < 0) return out;
        for (auto& l : partitions_of(deg))
            if (l.length() <= r) out.push_back(wedge_label(l, r));
        return out;
    };
    return tensor_module(std::move(t), basis, "W_" + std::to_string(r));
}

namespace {

std::optional<Partition> wedge_partition(const Label& v) {
    std::vector<int> parts;
    for (size_t s = 0; s < v.parts.size(); ++s) {
        int l = v.parts[s].j + (int)s + 1;
        if (l < 0) return std::nullopt;
        if (l > 0) parts.push_back(l);
    }
    return Partition(parts);
}

}  // namespace

WedgeReport fock_vs_wedge(const ColorContext& ctx, int r, int max_degree) {
    WedgeReport rep;
    rep.r = r;
    rep.max_degree = max_degree;
    auto fock = fock_module({ctx, Monomial::U()});
    auto wedge = wedge_module(ctx, r);
    auto vac = wedge.degree(wedge_label(Partition(), r));
    auto keyed = [&](const std::vector<DeltaTerm>& ts, bool from_wedge) {
        std::map<std::pair<std::string, Monomial>, FieldElem> m;
        for (auto& t : ts) {
            std::string key;
            if (from_wedge) {
                auto p = wedge_partition(t.target);
                key = p ? Label::young(*p).str() : t.target.str();
            } else {
                key = t.target.str();
            }
            m[{key, t.support}] += t.coeff;
        }
        return m;
    };
    for (auto& l : partitions_up_to(max_degree)) {
        if (l.length() > r) continue;
        Label fl = Label::young(l), wl = wedge_label(l, r);
        auto wd = wedge.degree(wl);
        for (size_t c = 0; c < wd.size(); ++c) wd[c] -= vac[c];
        ++rep.compared;
        if (wd != fock.degree(fl)) rep.discrepancies.push_back({"degree", -1, fl.str(), ""});
        for (int i = 0; i < ctx.n; ++i) {
            for (Gen g : {Gen::E, Gen::F}) {
                auto a = keyed(g == Gen::E ? fock.e_action(i, fl) : fock.f_action(i, fl), false);
                auto b = keyed(g == Gen::E ? wedge.e_action(i, wl) : wedge.f_action(i, wl), true);
                std::string what = g == Gen::E ? "E" : "F";
                ++rep.compared;
                for (auto& [key, c] : a) {
                    auto it = b.find(key);
                    if (it == b.end())
                        rep.discrepancies.push_back({what, i, fl.str(), "missing in wedge: " + key.first});
                    else if (it->second != c)
                        rep.discrepancies.push_back({what, i, fl.str(),
                                                     "to " + key.first + ": " + c.str() + " vs " + it->second.str()});
                }
                for (auto& [key, c] : b)
                    if (!a.count(key))
                        rep.discrepancies.push_back({what, i, fl.str(), "extra in wedge: " + key.first + " " + c.str()});
            }
            ++rep.compared;
            auto ka = fock.k_eigen(i, fl), kb = wedge.k_eigen(i, wl);
            if (ka != kb) rep.discrepancies.push_back({"K", i, fl.str(), ka.str() + " vs " + kb.str()});
        }
    }
    return rep;
}

nlohmann::json to_json(const WedgeReport& r) {
    auto d = nlohmann::json::array();
    for (auto& x : r.discrepancies)
        d.push_back({{"what", x.what}, {"color", x.color}, {"label", x.label}, {"detail", x.detail}});
    return {{"r", r.r}, {"max_degree", r.max_degree}, {"compared", r.compared}, {"ok", r.ok()}, {"discrepancies", d}};
}

}  // namespace toro
