#include "toro/roots.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace toro {

// ---------------------------------------------------------------- RootVec

RootVec RootVec::simple(int i, int n) {
    RootVec r(n);
    r.m[mod(i, n)] = 1;
    return r;
}

RootVec RootVec::delta(int n) { return RootVec(std::vector<int>(n, 1)); }

RootVec RootVec::segment(int a, int b, int n) {
    RootVec r(n);
    for (int i = a; i <= b; ++i) r.m[mod(i, n)]++;
    return r;
}

int RootVec::height() const { return std::accumulate(m.begin(), m.end(), 0); }

bool RootVec::is_zero() const {
    return std::all_of(m.begin(), m.end(), [](int x) { return x == 0; });
}

RootVec RootVec::operator+(const RootVec& o) const {
    RootVec r = *this;
    for (int i = 0; i < n(); ++i) r.m[i] += o.m[i];
    return r;
}

RootVec RootVec::operator-(const RootVec& o) const { return *this + o * -1; }

RootVec RootVec::operator*(int c) const {
    RootVec r = *this;
    for (auto& x : r.m) x *= c;
    return r;
}

std::string RootVec::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < n(); ++i) {
        if (!m[i]) continue;
        if (!first) os << (m[i] > 0 ? "+" : "");
        if (m[i] == -1) os << "-";
        else if (m[i] != 1) os << m[i];
        os << "a" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

int cartan(int i, int j, int n) {
    i = mod(i, n);
    j = mod(j, n);
    int a = i == j ? 2 : 0;
    if (j == mod(i + 1, n)) a -= 1;
    if (j == mod(i - 1, n)) a -= 1;
    return a;
}

int pairing(const RootVec& a, const RootVec& b) {
    int n = a.n(), s = 0;
    for (int i = 0; i < n; ++i) {
        if (!a.m[i]) continue;
        for (int j = 0; j < n; ++j)
            if (b.m[j]) s += a.m[i] * b.m[j] * cartan(i, j, n);
    }
    return s;
}

RootVec reflect(const RootVec& beta, const RootVec& alpha) {
    // real roots have (alpha, alpha) = 2
    return beta - alpha * pairing(beta, alpha);
}

nlohmann::json to_json(const RootVec& r) { return {{"alpha", r.m}}; }

RootVec rootvec_from_json(const nlohmann::json& j) { return RootVec(j.at("alpha").get<std::vector<int>>()); }

// ---------------------------------------------------------------- Permutation

Permutation Permutation::identity(int n) {
    Permutation p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 1);
    return p;
}

Permutation Permutation::simple(int i, int n) {
    auto p = identity(n);
    std::swap(p.img[i - 1], p.img[i]);
    return p;
}

int Permutation::length() const {
    int l = 0;
    for (int a = 0; a < n(); ++a)
        for (int b = a + 1; b < n(); ++b) l += img[a] > img[b];
    return l;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.img.resize(n());
    for (int p = 1; p <= n(); ++p) r.img[img[p - 1] - 1] = p;
    return r;
}

Permutation Permutation::operator*(const Permutation& o) const {
    Permutation r;
    r.img.resize(n());
    for (int p = 1; p <= n(); ++p) r.img[p - 1] = (*this)(o(p));
    return r;
}

bool Permutation::valid() const {
    auto s = img;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < n(); ++i)
        if (s[i] != i + 1) return false;
    return true;
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < n(); ++i) os << (i ? "," : "") << img[i];
    os << ']';
    return os.str();
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    auto p = Permutation::identity(n);
    do out.push_back(p);
    while (std::next_permutation(p.img.begin(), p.img.end()));
    return out;
}

// ---------------------------------------------------------------- colorless family

namespace {

int colp(const Partition& c, int i) { return c[i]; }

void require_family(const Partition& nu, int n) {
    if (nu[1] > n) throw WidthViolation("ν_1 exceeds n: " + nu.str());
    if (!is_colorless(nu, n)) throw NotColorless(nu.str());
    if (conjugate(nu)[n] >= n) throw WidthViolation("ν'_n >= n: " + nu.str());
}

}  // namespace

std::vector<RootVec> beta_roots(const Partition& nu, int n, int k, WidthBound w) {
    if (n < 2) throw OutOfFamily("n < 2");
    if (w == WidthBound::AtMost ? nu[1] > n : nu[1] >= n) throw OutOfFamily("width bound violated: " + nu.str());
    auto c = conjugate(nu);
    std::vector<RootVec> out;
    for (int i = 1; i <= n - 1; ++i) out.push_back(RootVec::segment(colp(c, i + 1) + k - i, colp(c, i) + k - i, n));
    return out;
}

bool in_family(const Partition& nu, int n) {
    return nu[1] <= n && is_colorless(nu, n) && conjugate(nu)[n] < n;
}

bool is_minimal(const Partition& nu, int n) {
    auto c = conjugate(nu);
    for (int i = 1; i <= n - 1; ++i)
        if (!(c[i] < c[i + 1] + n - 1)) return false;
    return true;
}

namespace {

// Enumerates conjugates (c_1 >= ... >= c_n) with c_n < n and gaps c_i - c_{i+1} in [0, max_gap].
void enum_columns(int n, int max_gap, int max_size, std::vector<int>& cols, int pos, int size,
                  std::vector<Partition>& out) {
    if (pos == 0) {
        std::vector<int> parts;
        // rows from columns
        for (int r = 1; r <= cols[0]; ++r) {
            int len = 0;
            while (len < n && cols[len] >= r) ++len;
            parts.push_back(len);
        }
        Partition p(parts);
        if (is_colorless(p, n)) out.push_back(p);
        return;
    }
    // pos indexes the column being chosen, right to left (pos-1 is 0-based)
    int right = pos == n ? 0 : cols[pos];
    int lo = right, hi = pos == n ? n - 1 : right + max_gap;
    for (int c = lo; c <= hi; ++c) {
        if (max_size >= 0 && size + c > max_size) break;
        cols[pos - 1] = c;
        enum_columns(n, max_gap, max_size, cols, pos - 1, size + c, out);
    }
}

}  // namespace

std::vector<Partition> minimal_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cols(n);
    enum_columns(n, n - 2, -1, cols, n, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> family_up_to(int n, int max_size) {
    std::vector<Partition> out;
    std::vector<int> cols(n);
    enum_columns(n, max_size, max_size, cols, n, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

Permutation sigma_perm(const Partition& nu, int n) {
    require_family(nu, n);
    auto c = conjugate(nu);
    Permutation s;
    s.img.resize(n);
    for (int m = 1; m <= n; ++m) s.img[n - m] = mod(c[m] + 1 - m - 1, n) + 1;
    if (!s.valid()) throw PropertyViolated("σ_ν is not a bijection for " + nu.str());
    return s;
}

namespace {

Partition from_columns(const std::vector<int>& cols) {
    // cols is 1-based in meaning, stored 0-based
    std::vector<int> parts;
    int top = cols.empty() ? 0 : cols[0];
    for (int r = 1; r <= top; ++r) {
        int len = 0;
        while (len < (int)cols.size() && cols[len] >= r) ++len;
        parts.push_back(len);
    }
    return Partition(parts);
}

}  // namespace

Partition orbit_step(const Partition& nu, int i, int n) {
    if (i < 1 || i > n - 1) throw NotAnAscent("index out of range");
    if (!is_minimal(nu, n)) throw OutOfFamily("not minimal: " + nu.str());
    auto sig = sigma_perm(nu, n);
    auto inv = sig.inverse();
    int m1 = inv(i), m2 = inv(i + 1);
    if (!(m1 < m2)) throw NotAnAscent("σ^{-1}(i) > σ^{-1}(i+1) at i=" + std::to_string(i));
    auto c = conjugate(nu);
    std::vector<int> cols(n);
    for (int j = 1; j <= n; ++j) cols[j - 1] = c[j];
    int c1 = n - m1 + 1, c2 = n - m2 + 1;
    if (m2 == m1 + 1) {
        // a box of color i on column c1, a run of the other n-1 colors on column c1-1
        cols[c1 - 1] += 1;
        cols[c1 - 2] += n - 1;
        for (int j = 1; j < c1 - 1; ++j) cols[j - 1] += n;
    } else {
        cols[c1 - 1] += 1;
        cols[c2 - 1] -= 1;
    }
    return from_columns(cols);
}

RibetaReport ribeta_check(const Partition& nu, int i, int n) {
    RibetaReport rep;
    rep.next = orbit_step(nu, i, n);
    auto b0 = beta_roots(nu, n, 0), b1 = beta_roots(rep.next, n, 0);
    auto ai = RootVec::simple(i, n), dl = RootVec::delta(n);
    for (int j = 0; j < n - 1; ++j) {
        auto r = reflect(b0[j], ai);
        if (b1[j] == r) rep.alt.push_back(RibetaAlt::Reflected);
        else if (b1[j] == r + dl) rep.alt.push_back(RibetaAlt::ReflectedPlusDelta);
        else
            throw PropertyViolated("β_" + std::to_string(j + 1) + " of " + rep.next.str() + " is " + b1[j].str() +
                                   ", reflection gives " + r.str());
    }
    return rep;
}

Partition partition_from_betas(const std::vector<RootVec>& betas, int n) {
    if ((int)betas.size() != n - 1) throw NotInFamily("wrong number of roots");
    // each β_i is a segment from ν'_{i+1} - i to ν'_i - i; recover start residue and length
    std::vector<int> start(n - 1), len(n - 1);
    for (int i = 0; i < n - 1; ++i) {
        const auto& b = betas[i];
        if (b.n() != n) throw NotInFamily("rank mismatch");
        int lo = *std::min_element(b.m.begin(), b.m.end());
        auto r = b - RootVec::delta(n) * lo;
        int h = r.height();
        if (lo < 0 || h <= 0 || h >= n) throw NotInFamily("not a positive real root: " + b.str());
        int s = -1;
        for (int a = 0; a < n; ++a) {
            if (r.m[a] == 1 && r.m[mod(a - 1, n)] == 0) s = a;
        }
        if (s < 0 || !(RootVec::segment(s, s + h - 1, n) == r)) throw NotInFamily("not a segment: " + b.str());
        start[i] = s;
        len[i] = h + lo * n;
    }
    std::vector<int> cols(n);
    // β_{n-1} starts at ν'_n - (n-1) mod n with 0 <= ν'_n < n
    cols[n - 1] = mod(start[n - 2] + (n - 1), n);
    for (int i = n - 1; i >= 1; --i) {
        if (mod(cols[i] - i, n) != start[i - 1]) throw NotInFamily("inconsistent segment starts");
        cols[i - 1] = cols[i] + len[i - 1] - 1;
    }
    auto p = from_columns(cols);
    if (!in_family(p, n)) throw NotInFamily("reconstruction leaves the family: " + p.str());
    return p;
}

BetaDecomposition beta_map_decompose(const Partition& nu, int n) {
    if (!in_family(nu, n)) throw NotInFamily(nu.str());
    BetaDecomposition d;
    for (auto& b : beta_roots(nu, n, 0)) {
        int lo = *std::min_element(b.m.begin(), b.m.end());
        d.minimal.push_back(b - RootVec::delta(n) * lo);
        d.shifts.push_back(lo);
    }
    d.reconstructed = partition_from_betas(beta_roots(nu, n, 0), n);
    if (!(d.reconstructed == nu)) throw PropertyViolated("β map reconstruction failed for " + nu.str());
    return d;
}

std::vector<OrbitEdge> orbit_walk(int n) {
    std::vector<OrbitEdge> edges;
    std::set<Partition> seen{Partition()};
    std::deque<Partition> q{Partition()};
    while (!q.empty()) {
        auto p = q.front();
        q.pop_front();
        auto inv = sigma_perm(p, n).inverse();
        for (int i = 1; i <= n - 1; ++i) {
            if (inv(i) > inv(i + 1)) continue;
            auto nx = orbit_step(p, i, n);
            edges.push_back({p, i, nx});
            if (seen.insert(nx).second) q.push_back(nx);
        }
    }
    return edges;
}

nlohmann::json orbit_to_json(const std::vector<OrbitEdge>& edges) {
    auto arr = nlohmann::json::array();
    for (auto& e : edges) arr.push_back({{"from", to_json(e.from)}, {"i", e.i}, {"to", to_json(e.to)}});
    return arr;
}

// ---------------------------------------------------------------- weights

LambdaWeight lambda_weight(const Partition& mu, const Partition& nu, int k, int n) {
    if (n < 2) throw InvalidPair("n < 2");
    if (mu[1] >= n) throw InvalidPair("μ_1 >= n: " + mu.str());
    if (nu[1] >= n) throw InvalidPair("ν_1 >= n: " + nu.str());
    if (!is_colorless(nu, n)) throw InvalidPair("ν is not colorless: " + nu.str());
    (void)k;  // the pairings depend on μ only; k fixes the roots they pair with
    auto mc = conjugate(mu);
    LambdaWeight w;
    for (int i = 1; i <= n - 1; ++i) w.beta_pairings.push_back(mc[i] - mc[i + 1] + 1);
    // q^{(λ,δ)} = q^{(t/2+1)n - n} with q1 = q^t
    w.level_monomial = Monomial{0, -n, n, 0};
    return w;
}

std::map<Permutation, std::vector<int>> reflection_defects(const std::vector<int>& pairings) {
    int r = (int)pairings.size(), n = r + 1;
    auto fin = [&](int i, int j) { return i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0); };
    std::map<Permutation, std::vector<int>> out;
    auto id = Permutation::identity(n);
    out[id] = std::vector<int>(r, 0);
    std::deque<Permutation> q{id};
    while (!q.empty()) {
        auto s = q.front();
        q.pop_front();
        const auto D = out[s];
        for (int i = 1; i <= r; ++i) {
            auto t = Permutation::simple(i, n) * s;
            // D(r_i w) = D(w) + ((x, β_i) - (D(w), β_i)) β_i
            int dp = 0;
            for (int j = 1; j <= r; ++j) dp += D[j - 1] * fin(j, i);
            auto E = D;
            E[i - 1] += pairings[i - 1] - dp;
            auto it = out.find(t);
            if (it == out.end()) {
                out[t] = E;
                q.push_back(t);
            } else if (it->second != E) {
                throw PropertyViolated("reflection defect depends on the word for " + t.str());
            }
        }
    }
    return out;
}

}  // namespace toro
