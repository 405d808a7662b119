#include "toro/fock.hpp"

namespace toro {

namespace {

// u q1^a q3^b for the plain representation; the barred one swaps q1 and q3.
Monomial spec_mono(int a, int b, bool barred) {
    return barred ? Monomial::q3(a) * Monomial::q1(b) : Monomial::q1(a) * Monomial::q3(b);
}

}  // namespace

std::vector<DeltaTerm> vector_e(int i, int j, const VectorRepDescriptor& d) {
    int n = d.ctx.n, k = d.ctx.k;
    bool hit = d.barred ? mod(i - (k + j + 1), n) == 0 : mod(i + j + 1 - k, n) == 0;
    if (!hit) return {};
    return {{Label::index(j + 1), FieldElem(1), d.u * spec_mono(j + 1, 0, d.barred)}};
}

std::vector<DeltaTerm> vector_f(int i, int j, const VectorRepDescriptor& d) {
    int n = d.ctx.n, k = d.ctx.k;
    bool hit = d.barred ? mod(i - (k + j), n) == 0 : mod(i + j - k, n) == 0;
    if (!hit) return {};
    return {{Label::index(j - 1), FieldElem(1), d.u * spec_mono(j, 0, d.barred)}};
}

ZetaFunction vector_k(int i, int j, const VectorRepDescriptor& d) {
    int n = d.ctx.n, k = d.ctx.k;
    Monomial uf = d.u.field_part();
    if (d.barred) {
        if (mod(i - (j + k), n) == 0) return ZetaFunction::psi(uf * spec_mono(j, 0, true));
        if (mod(i - (j + k + 1), n) == 0) return ZetaFunction::psi(uf * spec_mono(j, -1, true), -1);
        return {};
    }
    if (mod(j + i - k, n) == 0) return ZetaFunction::psi(uf * spec_mono(j, 0, false));
    if (mod(j + i + 1 - k, n) == 0) return ZetaFunction::psi(uf * spec_mono(j, -1, false), -1);
    return {};
}

std::vector<int> vector_degree(int j, const VectorRepDescriptor& d) {
    // deg[u]_{-1} = 0 and deg[u]_j - deg[u]_{j-1} = 1_{k-j} (1_{k+j} when barred)
    int n = d.ctx.n, k = d.ctx.k, s = d.barred ? 1 : -1;
    std::vector<int> deg(n, 0);
    int full = 0;
    // j + 1 = full * n + rest with 0 <= rest < n
    int t = j + 1;
    full = t >= 0 ? t / n : -((-t + n - 1) / n);
    int rest = t - full * n;
    for (auto& x : deg) x = full;
    for (int r = 0; r < rest; ++r) deg[mod(k + s * r, n)]++;
    return deg;
}

ModuleHandle vector_module(const VectorRepDescriptor& d) {
    ModuleHandle h;
    h.name = std::string(d.barred ? "Vbar" : "V") + "(k=" + std::to_string(d.ctx.k) + ",n=" + std::to_string(d.ctx.n) + ")";
    h.ctx = d.ctx;
    h.e_action = [d](int i, const Label& v) { return vector_e(i, v.j, d); };
    h.f_action = [d](int i, const Label& v) { return vector_f(i, v.j, d); };
    h.k_eigen = [d](int i, const Label& v) { return vector_k(i, v.j, d); };
    h.basis_by_degree = [](int t) { return std::vector<Label>{Label::index(t - 1)}; };
    h.degree = [d](const Label& v) { return vector_degree(v.j, d); };
    h.two_sided = true;
    return h;
}

// ---------------------------------------------------------------- Fock

int fock_tail_index(int i, const Partition& l, int k, int n, int after) {
    int r = std::max(after + 1, l.length() + 1);
    while (mod(i - r - k, n) != 0) ++r;
    return r;
}

namespace {

// The two filtered psi products over rows s in [from, to).
FieldElem row_product(int i, const Partition& l, int j, int lj, int k, int n, int from, int to) {
    FieldElem c(1);
    for (int s = from; s < to; ++s) {
        int ls = l[s];
        if (mod(ls + i - s - k, n) == 0) c *= psi_eval(Monomial::q1(ls - lj - 1) * Monomial::q3(s - j));
        if (mod(ls + i + 1 - s - k, n) == 0) c *= psi_eval(Monomial::q1(lj - ls) * Monomial::q3(j - s));
    }
    return c;
}

}  // namespace

std::vector<DeltaTerm> fock_e(int i, const Partition& l, int j, const FockDescriptor& d) {
    int n = d.ctx.n, k = d.ctx.k;
    int lj = l[j];
    if (mod(i + lj + 1 - j - k, n) != 0) return {};
    if (j > 1 && l[j - 1] <= lj) return {};
    if (j > l.length() + 1) return {};
    FieldElem c = row_product(i, l, j, lj, k, n, 1, j);
    return {{Label::young(l.plus_row(j)), c, d.u * Monomial::q1(lj) * Monomial::q3(j - 1)}};
}

std::vector<DeltaTerm> fock_f(int i, const Partition& l, int j, const FockDescriptor& d, int tail) {
    int n = d.ctx.n, k = d.ctx.k;
    int lj = l[j];
    if (mod(i + lj + 1 - j - k, n) != 0) return {};
    if (j > 1 && l[j - 1] <= lj) return {};
    if (j > l.length() + 1) return {};
    int r = tail ? tail : fock_tail_index(i, l, k, n, j);
    FieldElem c = row_product(i, l, j, lj, k, n, j + 1, r);
    return {{Label::young(l), c, d.u * Monomial::q1(lj) * Monomial::q3(j - 1)}};
}

ZetaFunction fock_k_row(int i, const Partition& l, const FockDescriptor& d, int tail) {
    int n = d.ctx.n, k = d.ctx.k;
    int r = tail ? tail : fock_tail_index(i, l, k, n, 0);
    Monomial uf = d.u.field_part();
    ZetaFunction phi;
    for (int s = 1; s < r; ++s) {
        int ls = l[s];
        if (mod(ls + i - s - k, n) == 0) phi *= ZetaFunction::psi(uf * Monomial::q1(ls - 1) * Monomial::q3(s - 1));
        if (mod(ls + i + 1 - s - k, n) == 0)
            phi *= ZetaFunction::psi(uf * Monomial::q1(ls - 1) * Monomial::q3(s - 2), -1);
    }
    return phi;
}

ZetaFunction fock_k_corner(int i, const Partition& l, const FockDescriptor& d) {
    auto c = corners(l, d.ctx);
    Monomial uf = d.u.field_part();
    ZetaFunction phi;
    for (auto [x, y] : c.convex)
        if (d.ctx.color(x, y) == mod(i, d.ctx.n))
            phi *= ZetaFunction::psi(uf * Monomial::q3(x) * Monomial::q1(y) * Monomial::q2p());
    for (auto [x, y] : c.concave)
        if (d.ctx.color(x, y) == mod(i, d.ctx.n))
            phi *= ZetaFunction::psi(uf * Monomial::q3(x) * Monomial::q1(y) * Monomial::q2p(2), -1);
    return phi;
}

std::vector<int> fock_degree(const Partition& l, const FockDescriptor& d) {
    std::vector<int> deg(d.ctx.n, 0);
    for (int x = 1; x <= l.length(); ++x)
        for (int y = 1; y <= l[x]; ++y) deg[d.ctx.color(x, y)]++;
    return deg;
}

ModuleHandle fock_module(const FockDescriptor& d) {
    ModuleHandle h;
    h.name = "F(k=" + std::to_string(d.ctx.k) + ",n=" + std::to_string(d.ctx.n) + ")";
    h.ctx = d.ctx;
    h.e_action = [d](int i, const Label& v) {
        std::vector<DeltaTerm> out;
        for (int j = 1; j <= v.p.length() + 1; ++j)
            for (auto& t : fock_e(i, v.p, j, d)) out.push_back(t);
        return out;
    };
    h.f_action = [d](int i, const Label& v) {
        std::vector<DeltaTerm> out;
        for (int j = 1; j <= v.p.length(); ++j) {
            if (!v.p.can_remove(j)) continue;
            for (auto& t : fock_f(i, v.p.minus_row(j), j, d)) out.push_back(t);
        }
        return out;
    };
    h.k_eigen = [d](int i, const Label& v) { return fock_k_row(i, v.p, d); };
    h.basis_by_degree = [](int t) {
        std::vector<Label> out;
        if (t < 0) return out;
        for (auto& p : partitions_of(t)) out.push_back(Label::young(p));
        return out;
    };
    h.degree = [d](const Label& v) { return fock_degree(v.p, d); };
    h.lowest = Label::young(Partition());
    return h;
}

}  // namespace toro
