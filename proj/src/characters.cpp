#include "toro/characters.hpp"

#include <sstream>

namespace toro {

PowerSeriesZ PowerSeriesZ::truncated(int order) const {
    std::vector<Int> c(c_.begin(), c_.begin() + std::min<size_t>(c_.size(), order + 1));
    c.resize(order + 1);
    return PowerSeriesZ(std::move(c));
}

PowerSeriesZ PowerSeriesZ::operator+(const PowerSeriesZ& o) const {
    int m = std::min(order(), o.order());
    PowerSeriesZ r(m);
    for (int i = 0; i <= m; ++i) r[i] = c_[i] + o[i];
    return r;
}

PowerSeriesZ PowerSeriesZ::operator*(const PowerSeriesZ& o) const {
    int m = std::min(order(), o.order());
    PowerSeriesZ r(m);
    for (int i = 0; i <= m; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; i + j <= m; ++j) r[i + j] += c_[i] * o[j];
    }
    return r;
}

bool PowerSeriesZ::operator==(const PowerSeriesZ& o) const {
    int m = std::min(order(), o.order());
    for (int i = 0; i <= m; ++i)
        if (c_[i] != o[i]) return false;
    return true;
}

PowerSeriesZ PowerSeriesZ::monomial(int e, int sign, int order) {
    PowerSeriesZ r(order);
    if (e >= 0 && e <= order) r[e] = sign;
    return r;
}

PowerSeriesZ PowerSeriesZ::inverse_pochhammer(int n, int order) {
    // 1/(x)_inf = Σ p(m) x^m, built one factor 1/(1-x^j) at a time
    PowerSeriesZ one(order);
    one[0] = 1;
    for (int j = 1; j <= order; ++j)
        for (int i = j; i <= order; ++i) one[i] += one[i - j];
    PowerSeriesZ r(order);
    r[0] = 1;
    for (int t = 0; t < n; ++t) r = r * one;
    return r;
}

std::string PowerSeriesZ::str() const {
    std::ostringstream os;
    for (int i = 0; i <= order(); ++i) os << (i ? " " : "") << c_[i];
    return os.str();
}

nlohmann::json to_json(const PowerSeriesZ& s) {
    nlohmann::json a = nlohmann::json::array();
    for (auto& c : s.coeffs()) a.push_back(c.str());
    return {{"order", s.order()}, {"coefficients", a}};
}

std::string to_tsv(const PowerSeriesZ& s) {
    std::ostringstream os;
    os << "degree\tdimension\n";
    for (int i = 0; i <= s.order(); ++i) os << i << '\t' << s[i] << '\n';
    return os.str();
}

int first_mismatch(const PowerSeriesZ& a, const PowerSeriesZ& b) {
    int m = std::min(a.order(), b.order());
    for (int i = 0; i <= m; ++i)
        if (a[i] != b[i]) return i;
    return -1;
}

PowerSeriesZ char_enumerate(const ModuleHandle& h, int max_degree) {
    auto g = graded_character(h, max_degree);
    PowerSeriesZ r(max_degree);
    for (auto& [t, c] : g.total)
        if (t >= 0 && t <= max_degree) r[t] = c;
    return r;
}

// ---------------------------------------------------------------- n-tuples

namespace {

bool interlocks(const Partition& upper, const Partition& lower, int c, int d) {
    for (int i = 1; i + c <= lower.length(); ++i)
        if (upper[i] < lower[i + c] - d) return false;
    return true;
}

template <class Visit>
void walk_ntuples(const Partition& mu, const Partition& nu, int n, int budget, Visit&& visit) {
    auto mc = conjugate(mu), nc = conjugate(nu);
    std::vector<Partition> tuple(n);
    auto pool = partitions_up_to(budget);
    std::function<void(int, int)> rec = [&](int j, int left) {
        if (j == 0) {
            visit(tuple, budget - left);
            return;
        }
        for (auto& p : pool) {
            if (p.size() > left) continue;
            if (j < n && !interlocks(p, tuple[j], nc[j] - nc[j + 1], mc[j] - mc[j + 1])) continue;
            tuple[j - 1] = p;
            rec(j - 1, left - p.size());
        }
    };
    rec(n, budget);
}

}  // namespace

std::vector<std::vector<Partition>> ntuple_basis(const Partition& mu, const Partition& nu, int n, int size) {
    std::vector<std::vector<Partition>> out;
    walk_ntuples(mu, nu, n, size, [&](const std::vector<Partition>& t, int used) {
        if (used == size) out.push_back(t);
    });
    return out;
}

PowerSeriesZ ntuple_char(const Partition& mu, const Partition& nu, int n, int max_degree) {
    PowerSeriesZ r(max_degree);
    walk_ntuples(mu, nu, n, max_degree, [&](const std::vector<Partition>&, int used) { r[used] += 1; });
    return r;
}

std::vector<Partition> g_label_to_tuple(const Partition& mu, const Partition& nu, int n, const Label& label) {
    auto p = plane_from_layers(label.layers, mu, Partition(), nu);
    auto mc = conjugate(mu), nc = conjugate(nu);
    std::vector<Partition> out;
    for (int y = 1; y <= n; ++y) {
        std::vector<int> parts;
        for (int j = 1;; ++j) {
            int h = p(nc[y] + j, y) - mc[y];
            if (h <= 0) break;
            parts.push_back(h);
        }
        out.push_back(Partition(parts));
    }
    return out;
}

// ---------------------------------------------------------------- alternating sums

std::vector<WeylSummand> weyl_summands(const Partition& mu, const Partition& nu, int n, WeylConvention c) {
    auto mc = conjugate(mu), nc = conjugate(nu);
    std::vector<int> a(n + 1), b(n + 1);
    for (int i = 1; i <= n; ++i) {
        a[i] = nc[i] + n - i;
        b[i] = mc[i] + n - i;
    }
    std::vector<WeylSummand> out;
    for (auto& s : all_permutations(n)) {
        int e = 0;
        for (int i = 1; i <= n; ++i)
            e += c == WeylConvention::Primary ? b[i] * (a[i] - a[s(i)]) : a[i] * (b[i] - b[s(i)]);
        out.push_back({s, s.length() % 2 ? -1 : 1, e});
    }
    return out;
}

PowerSeriesZ weyl_sum_char(const Partition& mu, const Partition& nu, int n, int max_degree, WeylConvention c) {
    PowerSeriesZ sum(max_degree);
    for (auto& t : weyl_summands(mu, nu, n, c)) sum = sum + PowerSeriesZ::monomial(t.e, t.sign, max_degree);
    return PowerSeriesZ::inverse_pochhammer(n, max_degree) * sum;
}

ConventionChoice select_convention(const Partition& mu, const Partition& nu, int n, int max_degree) {
    ConventionChoice c;
    auto target = char_enumerate(g_module(mu, nu, {n, 0}), max_degree);
    c.primary_mismatch = first_mismatch(weyl_sum_char(mu, nu, n, max_degree, WeylConvention::Primary), target);
    c.swapped_mismatch = first_mismatch(weyl_sum_char(mu, nu, n, max_degree, WeylConvention::Swapped), target);
    if (c.primary_mismatch < 0) c.chosen = WeylConvention::Primary;
    else if (c.swapped_mismatch < 0) c.chosen = WeylConvention::Swapped;
    return c;
}

std::map<Permutation, int> kt_exponents(const LambdaWeight& w, const std::vector<RootVec>& betas) {
    if (betas.size() != w.beta_pairings.size()) throw std::invalid_argument("one pairing per root");
    for (int p : w.beta_pairings)
        if (p <= 0) throw NonIntegralPairing("(λ+ρ, β_i) = " + std::to_string(p) + " is not a positive integer");
    std::map<Permutation, int> out;
    for (auto& [s, c] : reflection_defects(w.beta_pairings)) {
        int e = 0;
        for (size_t j = 0; j < c.size(); ++j) e += c[j] * betas.at(j).height();
        out[s] = e;
    }
    return out;
}

PowerSeriesZ kt_char(const LambdaWeight& w, const std::vector<RootVec>& betas, int max_degree) {
    PowerSeriesZ sum(max_degree);
    for (auto& [s, e] : kt_exponents(w, betas))
        sum = sum + PowerSeriesZ::monomial(e, s.length() % 2 ? -1 : 1, max_degree);
    return PowerSeriesZ::inverse_pochhammer((int)betas.size() + 1, max_degree) * sum;
}

PowerSeriesZ kt_char(const Partition& mu, const Partition& nu, int n, int k, int max_degree) {
    return kt_char(lambda_weight(mu, nu, k, n), beta_roots(nu, n, k, WidthBound::Below), max_degree);
}

// ---------------------------------------------------------------- lowest weight of G

namespace {

Monomial monomial_of(const FieldElem& f) {
    Int c;
    Monomial m;
    if (!f.as_monomial(c, m) || c != 1) throw EigenvalueMismatch("eigenvalue is not a monomial: " + f.str());
    return m;
}

}  // namespace

int sharp(int i, int k, const Partition& nu, int n) {
    auto nc = conjugate(nu);
    int count = 0;
    for (int j = k - i + nc[i + 1]; j <= k - i + nc[i]; ++j)
        if (mod(j - k, n) == 0) ++count;
    return count;
}

bool HwtReport::ok() const {
    if (k_delta != k_delta_expected) return false;
    for (auto& e : entries)
        if (e.eigenvalue != e.expected || e.v1 != e.v1_expected || e.v2 != e.v2_expected) return false;
    return true;
}

nlohmann::json to_json(const HwtReport& r) {
    nlohmann::json es = nlohmann::json::array();
    for (auto& e : r.entries)
        es.push_back({{"i", e.i},
                      {"beta", to_json(e.beta)},
                      {"eigenvalue", e.eigenvalue.str()},
                      {"expected", e.expected.str()},
                      {"v1", e.v1.str()},
                      {"v1_expected", e.v1_expected.str()},
                      {"v2", e.v2.str()},
                      {"v2_expected", e.v2_expected.str()},
                      {"sharp", e.sharp}});
    return {{"ok", r.ok()},
            {"entries", es},
            {"K_delta", r.k_delta.str()},
            {"K_delta_expected", r.k_delta_expected.str()}};
}

HwtReport hwt_check(const Partition& mu, const Partition& nu, const ColorContext& ctx) {
    int n = ctx.n, k = ctx.k;
    auto g = g_module(mu, nu, ctx);
    auto low = *g.lowest;
    MacmahonDescriptor d{ctx, Monomial::U(), special_level({1, n + 1, 1}), mu, Partition(), nu, 0, true};
    std::vector<Monomial> all(n), lead(n);
    for (int j = 0; j < n; ++j) {
        all[j] = monomial_of(g.k_eigen(j, low).value_at_zero());
        for (int s = 1; s <= mu.length(); ++s)
            lead[j] *= monomial_of(fock_k_corner(j, d.minimal(s), {{n, d.layer_color(s)}, d.layer_u(s)}).value_at_zero());
    }
    auto mc = conjugate(mu), nc = conjugate(nu);
    auto betas = beta_roots(nu, n, k, WidthBound::Below);
    HwtReport r;
    for (int i = 1; i <= n - 1; ++i) {
        HwtEntry e;
        e.i = i;
        e.beta = betas[i - 1];
        for (int j = 0; j < n; ++j) {
            e.eigenvalue *= all[j].pow(e.beta.m[j]);
            e.v1 *= lead[j].pow(e.beta.m[j]);
        }
        e.v2 = e.eigenvalue / e.v1;
        e.sharp = sharp(i, k, nu, n);
        e.expected = Monomial::q(mc[i + 1] - mc[i] + nc[i] - nc[i + 1]);
        // every color-k root in β_i carries the factor q^{-μ'_1} of the leading layers
        e.v1_expected = Monomial::q(mc[i + 1] - mc[i] - mc[1] * e.sharp);
        e.v2_expected = Monomial::q(nc[i] - nc[i + 1] + mc[1] * e.sharp);
        r.entries.push_back(e);
    }
    for (int j = 0; j < n; ++j) r.k_delta *= all[j];
    r.k_delta_expected = lambda_weight(mu, nu, k, n).level_monomial.inv();
    return r;
}

void require_hwt(const HwtReport& r) {
    if (!r.ok()) throw EigenvalueMismatch(to_json(r).dump());
}

std::vector<std::pair<Partition, Partition>> admissible_pairs(int n, int max_size) {
    std::vector<Partition> mus, nus;
    for (auto& p : partitions_up_to(max_size)) {
        if (p[1] >= n) continue;
        mus.push_back(p);
        if (is_colorless(p, n)) nus.push_back(p);
    }
    std::vector<std::pair<Partition, Partition>> out;
    for (auto& a : mus)
        for (auto& b : nus) out.push_back({a, b});
    return out;
}

}  // namespace toro
