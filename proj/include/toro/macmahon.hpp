#pragma once

#include "toro/roots.hpp"
#include "toro/tensor.hpp"

namespace toro {

struct NonGenericK : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotSpecial : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct WrongColor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadK : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadChain : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Plane partitions with legs (alpha, beta, gamma) sliced into layers s = 1, 2, ...
// Layer s is a Fock factor F^{(k_s)}(u_s) with k_s = k - alpha_s + beta_s and
// u_s = u q1^{alpha_s} q3^{beta_s} q2^{s-1}; consecutive layers interlock as
//   λ^{(s)}_j >= λ^{(s+1)}_{j+b_s} - a_s,  a_s = alpha_s - alpha_{s+1}, b_s = beta_s - beta_{s+1}.
struct MacmahonDescriptor {
    ColorContext ctx;
    Monomial u = Monomial::U();
    Monomial K = Monomial::K();  // symbolic by default
    Partition alpha, beta, gamma;
    // Number of leading Fock layers before the Macmahon tail; 0 selects the smallest m with alpha_m = beta_m = 0.
    int m = 0;
    // Without a tail only the m Fock layers exist (the module N).
    bool tail = true;

    int depth() const;
    int layer_color(int s) const;
    Monomial layer_u(int s) const;
    Partition minimal(int s) const;
};

// Whether the plane partition of the layer label contains the box.
bool layers_contain(const MacmahonDescriptor& d, const std::vector<Partition>& layers, const Box& b);
// Canonical layer label: at least depth() layers, trailing minimal layers beyond it trimmed.
Label canonical_layers(const MacmahonDescriptor& d, std::vector<Partition> layers);
// Interlocking conditions of all layers (the tail continues with the minimal layers).
bool layers_valid(const MacmahonDescriptor& d, const std::vector<Partition>& layers);

// The scalar f(i, r, z) that makes F_i and K_i independent of the truncation r (the number of tail layers),
// for M_gamma(u; K) in zeta = u/z. Normalized by f(0) f(inf) = 1.
ZetaFunction tail_renormalization(const ColorContext& ctx, const Monomial& u, const Monomial& K, const Partition& gamma,
                                  int i, int r);

// Optional box conditions: the label must contain `require` and must not contain `exclude`.
struct BoxWindow {
    std::optional<Box> require, exclude;
};

ModuleHandle layered_module(const MacmahonDescriptor& d, const BoxWindow& w = {}, std::string name = "");
// Action computed with `extra` additional tail layers (truncation-independence oracle).
ModuleHandle layered_module_truncated(const MacmahonDescriptor& d, int extra, const BoxWindow& w = {});

// m = 0 selects the smallest m with alpha_m = beta_m = 0.
ModuleHandle n_module(const Partition& alpha, const Partition& beta, const ColorContext& ctx,
                      const Monomial& u = Monomial::U(), int m = 0);
// `generic` rejects K in q1^Z q2^Z.
ModuleHandle vacuum_macmahon(const ColorContext& ctx, const Monomial& u = Monomial::U(),
                             const Monomial& K = Monomial::K(), bool generic = true);
ModuleHandle gamma_macmahon(const ColorContext& ctx, const Partition& gamma, const Monomial& u = Monomial::U(),
                            const Monomial& K = Monomial::K());
ModuleHandle general_macmahon(const Partition& alpha, const Partition& beta, const Partition& gamma,
                              const ColorContext& ctx, const Monomial& u = Monomial::U(),
                              const Monomial& K = Monomial::K());

// The lowest weight of M_gamma(u; K) as a corner product, used as an independent check.
ZetaFunction gamma_lowest_weight(const ColorContext& ctx, const Partition& gamma, const Monomial& u,
                                 const Monomial& K, int i);

// Plane partition of the lowest weight vector of the general Macmahon module.
PlanePartition lowest_plane(const Partition& alpha, const Partition& beta, const Partition& gamma);

// (q3^x q1^y q2^z)^{1/2}
Monomial special_level(const Box& b);

// U^{(t-1)} / U^{(t)} for the special box b: contains b + (t-1)(1,1,1), does not contain b + t(1,1,1).
// K is set by K^2 = q3^x q1^y q2^z; a non-symbolic K in the descriptor must agree.
ModuleHandle special_k_quotient(MacmahonDescriptor d, const Box& b, int t);

// G_{mu,nu} = H_{mu, empty, nu} for the box (1, n+1, 1).
ModuleHandle g_module(const Partition& mu, const Partition& nu, const ColorContext& ctx,
                      const Monomial& u = Monomial::U());

struct MultiMacmahonFactor {
    MacmahonDescriptor desc;
    Box box;  // coordinates may be 0
};
struct MultiBasis {
    std::vector<std::vector<Label>> by_degree;  // tuples of layer labels
    std::vector<long> character;
    Monomial level;
};
// Basis and character of the subquotient of M_1 x ... x M_m cut out by the boxes:
// factor i contains box_i (when it is a box) and does not contain box_i + (1,1,1).
MultiBasis multi_macmahon_basis(const std::vector<MultiMacmahonFactor>& fs, int max_degree);

}  // namespace toro
