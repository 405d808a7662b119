#include "toro/macmahon.hpp"

#include <memory>
#include <mutex>
#include <set>

namespace toro {

int MacmahonDescriptor::depth() const { return m > 0 ? m : leg_depth(alpha, beta); }

int MacmahonDescriptor::layer_color(int s) const { return mod(ctx.k - alpha[s] + beta[s], ctx.n); }

Monomial MacmahonDescriptor::layer_u(int s) const {
    return u * Monomial::q1(alpha[s]) * Monomial::q3(beta[s]) * Monomial::q2p(s - 1);
}

Partition MacmahonDescriptor::minimal(int s) const { return minimal_layer(alpha, beta, gamma, s); }

namespace {

Partition layer_at(const MacmahonDescriptor& d, const std::vector<Partition>& ls, int s) {
    return s <= (int)ls.size() ? ls[s - 1] : d.minimal(s);
}

bool interlocked(const Partition& upper, const Partition& lower, int a, int b) {
    for (int j = 1; j + b <= lower.length(); ++j)
        if (upper[j] < lower[j + b] - a) return false;
    return true;
}

Monomial half(const Monomial& m) {
    if (m.u != 0 || m.q2 % 2 || m.d2 % 2 || m.K2 % 2) throw std::logic_error("no monomial square root of " + m.str());
    return {0, m.q2 / 2, m.d2 / 2, m.K2 / 2};
}

// K in q1^Z q2^Z
bool on_lattice(const Monomial& K) {
    if (K.u != 0 || K.K2 != 0 || K.d2 % 2 || K.q2 % 2) return false;
    int a = K.d2 / 2, qe = K.q2 / 2;
    return (qe + a) % 2 == 0;
}

}  // namespace

bool layers_contain(const MacmahonDescriptor& d, const std::vector<Partition>& layers, const Box& b) {
    if (b.x < 1 || b.y < 1 || b.z < 1) return false;
    if (!d.tail && b.z > d.depth()) return false;
    Partition l = layer_at(d, layers, b.z);
    int a = d.alpha[b.z], be = d.beta[b.z];
    return b.y <= a || b.x <= be || l[b.x - be] >= b.y - a;
}

Label canonical_layers(const MacmahonDescriptor& d, std::vector<Partition> layers) {
    int m = d.depth();
    while ((int)layers.size() < m) layers.push_back(d.minimal((int)layers.size() + 1));
    if (d.tail)
        while ((int)layers.size() > m && layers.back() == d.minimal((int)layers.size())) layers.pop_back();
    return Label::layer_seq(std::move(layers));
}

bool layers_valid(const MacmahonDescriptor& d, const std::vector<Partition>& layers) {
    int m = d.depth(), L = (int)layers.size();
    if (!d.tail && L != m) return false;
    int last = d.tail ? std::max(L, m) : m - 1;
    for (int s = 1; s <= last; ++s) {
        int a = d.alpha[s] - d.alpha[s + 1], b = d.beta[s] - d.beta[s + 1];
        if (!interlocked(layer_at(d, layers, s), layer_at(d, layers, s + 1), a, b)) return false;
    }
    return true;
}

ZetaFunction tail_renormalization(const ColorContext& ctx, const Monomial& u, const Monomial& K, const Partition& gamma,
                                  int i, int r) {
    auto c = corners(gamma, ctx);
    Monomial uf = u.field_part();
    ZetaFunction f;
    for (auto [x, y] : c.convex)
        if (ctx.color(x, y) == mod(i, ctx.n))
            f *= ZetaFunction::factor(Monomial::one(), Monomial::q2p(r - x) * Monomial::q1(y - x) * uf);
    // the concave factor sits one step of q2 above the convex one
    for (auto [x, y] : c.concave)
        if (ctx.color(x, y) == mod(i, ctx.n))
            f *= ZetaFunction::factor(Monomial::one(), Monomial::q2p(r + 1 - x) * Monomial::q1(y - x) * uf, -1);
    if (mod(i, ctx.n) == ctx.k) f *= ZetaFunction::factor(K.inv(), K * uf);
    FieldElem ends = f.value_at_zero() * f.value_at_infinity();
    Int coef;
    Monomial mono;
    if (!ends.as_monomial(coef, mono) || coef != 1)
        throw std::logic_error("renormalization ends are not a monomial: " + ends.str());
    return f * ZetaFunction(FieldElem(half(mono.inv())));
}

// ---------------------------------------------------------------- the layered engine

namespace {

struct Engine {
    MacmahonDescriptor d;
    BoxWindow w;
    int extra = 0;
    std::mutex mu;
    std::vector<std::vector<Label>> levels;  // down-closed enumeration (exclude only)
    std::map<int, std::shared_ptr<TensorDescriptor>> by_r;

    std::vector<Partition> layers_of(const Label& t) const {
        std::vector<Partition> ls;
        for (auto& p : t.parts) ls.push_back(p.p);
        return ls;
    }

    Label tuple_of(const Label& v, int r) const {
        std::vector<Label> parts;
        for (int s = 1; s <= r; ++s) parts.push_back(Label::young(layer_at(d, v.layers, s)));
        return Label::tuple(std::move(parts));
    }

    int truncation(const Label& v) const { return d.tail ? (int)v.layers.size() + 2 + extra : d.depth(); }

    std::shared_ptr<TensorDescriptor> tensor(int r) {
        std::lock_guard<std::mutex> g(mu);
        auto& slot = by_r[r];
        if (slot) return slot;
        auto t = std::make_shared<TensorDescriptor>();
        for (int s = 1; s <= r; ++s) t->factors.push_back(fock_module({{d.ctx.n, d.layer_color(s)}, d.layer_u(s)}));
        MacmahonDescriptor dd = d;
        BoxWindow ww = w;
        t->admissible = [dd, ww, this](const Label& tp) {
            auto ls = layers_of(tp);
            if (!layers_valid(dd, canonical_layers(dd, ls).layers)) return false;
            return !ww.require || layers_contain(dd, ls, *ww.require);
        };
        if (w.exclude) t->drop = [dd, ww, this](const Label& tp) { return layers_contain(dd, layers_of(tp), *ww.exclude); };
        if (d.tail) {
            int m = d.depth();
            Monomial ut = d.u * Monomial::q2p(m), Kt = d.K * Monomial::q(-m);
            ColorContext tc{d.ctx.n, d.ctx.k};
            Partition g = d.gamma;
            std::vector<ZetaFunction> fs;
            for (int i = 0; i < d.ctx.n; ++i) fs.push_back(tail_renormalization(tc, ut, Kt, g, i, r - m));
            t->renorm = [fs](int i, const Label&) { return fs[mod(i, (int)fs.size())]; };
        }
        slot = t;
        return t;
    }

    std::vector<DeltaTerm> act(Gen g, int i, const Label& v) {
        int r = truncation(v);
        auto t = tensor(r);
        auto terms = delta_action(*t, g, i, tuple_of(v, r));
        for (auto& term : terms) term.target = canonical_layers(d, layers_of(term.target));
        return terms;
    }

    ZetaFunction k(int i, const Label& v) {
        int r = truncation(v);
        return delta_k(*tensor(r), i, tuple_of(v, r));
    }

    std::vector<int> degree(const Label& v) const {
        std::vector<int> deg(d.ctx.n, 0);
        for (int s = 1; s <= (int)v.layers.size(); ++s) {
            FockDescriptor fd{{d.ctx.n, d.layer_color(s)}, d.layer_u(s)};
            auto a = fock_degree(v.layers[s - 1], fd), b = fock_degree(d.minimal(s), fd);
            for (int c = 0; c < d.ctx.n; ++c) deg[c] += a[c] - b[c];
        }
        return deg;
    }

    bool allowed(const std::vector<Partition>& ls) const {
        return layers_valid(d, ls) && !(w.exclude && layers_contain(d, ls, *w.exclude));
    }

    std::vector<Label> basis(int t) {
        if (t < 0) return {};
        std::lock_guard<std::mutex> g(mu);
        if (levels.empty()) {
            auto low = canonical_layers(d, {});
            levels.push_back(allowed(low.layers) ? std::vector<Label>{low} : std::vector<Label>{});
        }
        while ((int)levels.size() <= t) {
            std::set<Label> next;
            for (auto& v : levels.back()) {
                int L = (int)v.layers.size();
                int top = d.tail ? L + 1 : d.depth();
                for (int s = 1; s <= top; ++s) {
                    Partition l = layer_at(d, v.layers, s);
                    for (int j = 1; j <= l.length() + 1; ++j) {
                        if (!l.can_add(j)) continue;
                        auto ls = v.layers;
                        while ((int)ls.size() < s) ls.push_back(d.minimal((int)ls.size() + 1));
                        ls[s - 1] = l.plus_row(j);
                        auto c = canonical_layers(d, ls);
                        if (allowed(c.layers)) next.insert(c);
                    }
                }
            }
            levels.emplace_back(next.begin(), next.end());
        }
        std::vector<Label> out;
        for (auto& v : levels[t])
            if (!w.require || layers_contain(d, v.layers, *w.require)) out.push_back(v);
        return out;
    }
};

void check_shape(const MacmahonDescriptor& d) {
    int m = d.depth();
    if (d.alpha[m] != 0 || d.beta[m] != 0)
        throw std::invalid_argument("alpha_m and beta_m must vanish for m = " + std::to_string(m));
    if (d.tail && !is_colorless(d.gamma, d.ctx.n)) throw NotColorless("gamma " + d.gamma.str() + " is not colorless");
    if (!d.tail && !d.gamma.empty()) throw std::invalid_argument("N carries no gamma");
}

ModuleHandle build(const MacmahonDescriptor& d, const BoxWindow& w, int extra, std::string name) {
    check_shape(d);
    auto e = std::make_shared<Engine>();
    e->d = d;
    e->w = w;
    e->extra = extra;
    ModuleHandle h;
    h.name = name.empty() ? "M(alpha=" + d.alpha.str() + ",beta=" + d.beta.str() + ",gamma=" + d.gamma.str() +
                                ",k=" + std::to_string(d.ctx.k) + ")"
                          : std::move(name);
    h.ctx = d.ctx;
    h.e_action = [e](int i, const Label& v) { return e->act(Gen::E, i, v); };
    h.f_action = [e](int i, const Label& v) { return e->act(Gen::F, i, v); };
    h.k_eigen = [e](int i, const Label& v) { return e->k(i, v); };
    h.degree = [e](const Label& v) { return e->degree(v); };
    h.basis_by_degree = [e](int t) { return e->basis(t); };
    auto low = canonical_layers(d, {});
    if (e->allowed(low.layers) && (!w.require || layers_contain(d, low.layers, *w.require))) h.lowest = low;
    return h;
}

}  // namespace

ModuleHandle layered_module(const MacmahonDescriptor& d, const BoxWindow& w, std::string name) {
    return build(d, w, 0, std::move(name));
}

ModuleHandle layered_module_truncated(const MacmahonDescriptor& d, int extra, const BoxWindow& w) {
    return build(d, w, extra, "");
}

ModuleHandle n_module(const Partition& alpha, const Partition& beta, const ColorContext& ctx, const Monomial& u,
                      int m) {
    MacmahonDescriptor d{ctx, u, Monomial::K(), alpha, beta, Partition(), m, false};
    return layered_module(d, {}, "N(alpha=" + alpha.str() + ",beta=" + beta.str() + ",k=" + std::to_string(ctx.k) + ")");
}

ModuleHandle vacuum_macmahon(const ColorContext& ctx, const Monomial& u, const Monomial& K, bool generic) {
    if (generic && on_lattice(K)) throw NonGenericK("K = " + K.str() + " lies in q1^Z q2^Z");
    MacmahonDescriptor d{ctx, u, K, {}, {}, {}, 0, true};
    return layered_module(d, {}, "M(k=" + std::to_string(ctx.k) + ")");
}

ModuleHandle gamma_macmahon(const ColorContext& ctx, const Partition& gamma, const Monomial& u, const Monomial& K) {
    MacmahonDescriptor d{ctx, u, K, {}, {}, gamma, 0, true};
    return layered_module(d, {}, "M_gamma(gamma=" + gamma.str() + ",k=" + std::to_string(ctx.k) + ")");
}

ModuleHandle general_macmahon(const Partition& alpha, const Partition& beta, const Partition& gamma,
                              const ColorContext& ctx, const Monomial& u, const Monomial& K) {
    MacmahonDescriptor d{ctx, u, K, alpha, beta, gamma, 0, true};
    return layered_module(d);
}

ZetaFunction gamma_lowest_weight(const ColorContext& ctx, const Partition& gamma, const Monomial& u,
                                 const Monomial& K, int i) {
    auto c = corners(gamma, ctx);
    Monomial uf = u.field_part();
    auto q1h = [](int h) { return Monomial{0, -h, h, 0}; };  // q1^{h/2}
    ZetaFunction f;
    for (auto [x, y] : c.convex)
        if (ctx.color(x, y) == mod(i, ctx.n))
            f *= ZetaFunction::factor(Monomial::q(x) * q1h(x - y), Monomial::q(-x) * q1h(y - x) * uf);
    for (auto [x, y] : c.concave)
        if (ctx.color(x, y) == mod(i, ctx.n))
            f *= ZetaFunction::factor(Monomial::q(x - 1) * q1h(x - y), Monomial::q(1 - x) * q1h(y - x) * uf, -1);
    if (mod(i, ctx.n) == ctx.k) f *= ZetaFunction::factor(K.inv(), K * uf);
    return f;
}

PlanePartition lowest_plane(const Partition& alpha, const Partition& beta, const Partition& gamma) {
    return plane_from_layers({}, alpha, beta, gamma);
}

Monomial special_level(const Box& b) { return {0, -b.x - b.y + 2 * b.z, b.y - b.x, 0}; }

ModuleHandle special_k_quotient(MacmahonDescriptor d, const Box& b, int t) {
    if (t < 0) throw std::invalid_argument("t must be non-negative");
    if (!is_special(d.alpha, d.beta, d.gamma, b))
        throw NotSpecial("box (" + std::to_string(b.x) + "," + std::to_string(b.y) + "," + std::to_string(b.z) +
                         ") is not special");
    if (b.color(d.ctx) != d.ctx.k) throw WrongColor("the special box must have color k");
    Monomial K = special_level(b);
    if (d.K != Monomial::K() && d.K != K) throw BadK("K = " + d.K.str() + " but the box requires " + K.str());
    d.K = K;
    BoxWindow w;
    w.exclude = Box{b.x + t, b.y + t, b.z + t};
    if (t >= 1) w.require = Box{b.x + t - 1, b.y + t - 1, b.z + t - 1};
    return layered_module(d, w,
                          "H(alpha=" + d.alpha.str() + ",beta=" + d.beta.str() + ",gamma=" + d.gamma.str() + ",box=(" +
                              std::to_string(b.x) + "," + std::to_string(b.y) + "," + std::to_string(b.z) +
                              "),t=" + std::to_string(t) + ")");
}

ModuleHandle g_module(const Partition& mu, const Partition& nu, const ColorContext& ctx, const Monomial& u) {
    int n = ctx.n;
    if (mu[1] >= n || nu[1] >= n) throw InvalidPair("mu_1 and nu_1 must be below n");
    if (!is_colorless(nu, n)) throw InvalidPair("nu must be colorless");
    MacmahonDescriptor d{ctx, u, Monomial::K(), mu, Partition(), nu, 0, true};
    auto h = special_k_quotient(d, Box{1, n + 1, 1}, 0);
    h.name = "G(mu=" + mu.str() + ",nu=" + nu.str() + ",k=" + std::to_string(ctx.k) + ")";
    return h;
}

MultiBasis multi_macmahon_basis(const std::vector<MultiMacmahonFactor>& fs, int max_degree) {
    size_t m = fs.size();
    MultiBasis out;
    for (size_t i = 0; i < m; ++i) {
        const auto& a = fs[i];
        const auto& b = fs[(i + 1) % m];
        if (a.desc.u.u != 1 || b.desc.u.u != 1) throw BadChain("evaluation parameters must carry one u");
        Monomial want = special_level(b.box).pow(2) * (b.desc.u / a.desc.u);
        if (a.desc.K.pow(2) != want)
            throw BadChain("K_" + std::to_string(i + 1) + "^2 = " + a.desc.K.pow(2).str() + ", chain needs " + want.str());
        out.level *= a.desc.K;
    }
    std::vector<ModuleHandle> hs;
    for (auto& f : fs) {
        BoxWindow w;
        if (f.box.x >= 1 && f.box.y >= 1 && f.box.z >= 1) w.require = f.box;
        w.exclude = Box{f.box.x + 1, f.box.y + 1, f.box.z + 1};
        hs.push_back(layered_module(f.desc, w));
    }
    // convolve the graded bases
    std::vector<std::vector<Label>> acc(max_degree + 1);
    acc[0].push_back(Label::tuple({}));
    for (auto& h : hs) {
        std::vector<std::vector<Label>> next(max_degree + 1);
        for (int t = 0; t <= max_degree; ++t)
            for (int a = 0; a <= t; ++a)
                for (auto& v : h.basis_by_degree(a))
                    for (auto& pre : acc[t - a]) {
                        auto parts = pre.parts;
                        parts.push_back(v);
                        next[t].push_back(Label::tuple(std::move(parts)));
                    }
        acc = std::move(next);
    }
    out.by_degree = acc;
    for (auto& lv : acc) out.character.push_back((long)lv.size());
    return out;
}

}  // namespace toro
