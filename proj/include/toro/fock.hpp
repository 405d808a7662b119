#pragma once

#include "toro/rep.hpp"

namespace toro {

struct VectorRepDescriptor {
    ColorContext ctx;
    Monomial u = Monomial::U();
    bool barred = false;
};

// E_i(z) on the basis vector j: at most one term.
std::vector<DeltaTerm> vector_e(int i, int j, const VectorRepDescriptor& d);
// F_i(z) on the basis vector j: at most one term (target j-1).
std::vector<DeltaTerm> vector_f(int i, int j, const VectorRepDescriptor& d);
ZetaFunction vector_k(int i, int j, const VectorRepDescriptor& d);
std::vector<int> vector_degree(int j, const VectorRepDescriptor& d);

ModuleHandle vector_module(const VectorRepDescriptor& d);

struct FockDescriptor {
    ColorContext ctx;
    Monomial u = Monomial::U();
};

// Smallest r > after with λ_r = 0 and i ≡ r + k: the product tail from r on telescopes to 1.
int fock_tail_index(int i, const Partition& l, int k, int n, int after);

// <λ+1_j| E_i(z) |λ>; empty unless the color matches and λ+1_j is a partition.
std::vector<DeltaTerm> fock_e(int i, const Partition& l, int j, const FockDescriptor& d);
// <λ| F_i(z) |λ+1_j>; `tail` overrides the truncation index (0 selects the smallest admissible one).
std::vector<DeltaTerm> fock_f(int i, const Partition& l, int j, const FockDescriptor& d, int tail = 0);
// Row product form of the K_i eigenvalue, truncated at the tail index (or at `tail` if given).
ZetaFunction fock_k_row(int i, const Partition& l, const FockDescriptor& d, int tail = 0);
// Corner form: product over convex and concave corners of color i.
ZetaFunction fock_k_corner(int i, const Partition& l, const FockDescriptor& d);
// Box counts per color.
std::vector<int> fock_degree(const Partition& l, const FockDescriptor& d);

ModuleHandle fock_module(const FockDescriptor& d);

}  // namespace toro
