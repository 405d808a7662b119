#pragma once

#include <optional>

#include "toro/fock.hpp"

namespace toro {

struct IllDefined : std::runtime_error {
    Monomial where;  // support at which a K factor has its pole
    explicit IllDefined(const std::string& what, Monomial w = {}) : std::runtime_error(what), where(w) {}
};
struct EscapesSubmodule : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Gen { E, F };

// Tensor product of factor modules acting through the coproduct
//   E -> E x 1 + K^- x E,   F -> F x K^+ + 1 x F,
// extended to m factors by coassociativity. Labels are Label::tuple of factor labels.
struct TensorDescriptor {
    std::vector<ModuleHandle> factors;
    // Carve-out: targets failing the predicate must come with a zero coefficient.
    std::function<bool(const Label&)> admissible;
    // Quotient side: targets satisfying this are projected away (checked before `admissible`).
    std::function<bool(const Label&)> drop;
    // Optional scalar factor multiplying every F_i coefficient (at its support) and K_i.
    std::function<ZetaFunction(int, const Label&)> renorm;
};

// Terms of E_i(z) or F_i(z) on a tuple. Throws IllDefined at a pole, EscapesSubmodule on a leak.
std::vector<DeltaTerm> delta_action(const TensorDescriptor& t, Gen g, int i, const Label& tuple);
ZetaFunction delta_k(const TensorDescriptor& t, int i, const Label& tuple);
std::vector<int> delta_degree(const TensorDescriptor& t, const Label& tuple);

// Handle over the tensor product; the caller supplies the graded basis.
ModuleHandle tensor_module(TensorDescriptor t, std::function<std::vector<Label>(int)> basis, std::string name);

// ---------------------------------------------------------------- resonances

struct Resonance {
    // vector x vector: v/u = q1^{nm+k-l} (ill-defined), q2 q1^{nm+k-l} (submodule i >= j+nm+k-l),
    // q2^{-1} q1^{nm+k-l} (submodule i >= j+nm+k-l+1), or none of these
    enum class Vector { IllDefined, SubmoduleShift0, SubmoduleShift1, Irreducible };
    // Fock x Fock: v/u = q2^{b+1} q1^{b-a} with b-a = k-l mod n
    enum class Fock { Generic, Submodule, Quotient, MixedSigns };
    Vector vector = Vector::Irreducible;
    std::optional<int> m;
    Fock fock = Fock::Generic;
    std::optional<std::pair<int, int>> ab;
};

Resonance resonance_classify(int n, int k, int l, const Monomial& ratio);
std::string to_string(Resonance::Vector v);
std::string to_string(Resonance::Fock f);

// V^{(k)}(u) x V^{(l)}(u ratio). Labels with factor degrees in [-bound, bound].
// With `carve` the submodule of the resonance (if any) is imposed.
ModuleHandle tensor_vv(int n, int k, int l, const Monomial& ratio, int bound, bool carve);
// F^{(k)}(u) x F^{(l)}(u ratio); with `carve` and a resonance with a, b >= 0,
// the submodule λ_i >= μ_{i+b} - a.
ModuleHandle tensor_ff(int n, int k, int l, const Monomial& ratio, bool carve);

// Scans the tuples of the handle up to max_degree for a pole of E or F; returns the first witness.
std::optional<Monomial> find_pole(const ModuleHandle& h, int max_degree);

// ---------------------------------------------------------------- wedge

struct WedgeDiscrepancy {
    std::string what;  // "E", "F", "K" or "degree"
    int color;
    std::string label, detail;
};
struct WedgeReport {
    int r = 0, max_degree = 0;
    long compared = 0;
    std::vector<WedgeDiscrepancy> discrepancies;
    bool ok() const { return discrepancies.empty(); }
};
nlohmann::json to_json(const WedgeReport& r);

// W_r inside V(u) x V(u q2^-1) x ... x V(u q2^{1-r}); |λ> sits at indices λ_s - s.
ModuleHandle wedge_module(const ColorContext& ctx, int r);
Label wedge_label(const Partition& l, int r);
// Compares every E/F/K matrix element and degree of F^{(k)}(u) on |λ| <= max_degree
// with the coproduct action on W_r.
WedgeReport fock_vs_wedge(const ColorContext& ctx, int r, int max_degree);

}  // namespace toro
