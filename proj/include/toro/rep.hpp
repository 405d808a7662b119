#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "toro/partition.hpp"
#include "toro/zeta.hpp"

namespace toro {

// Basis label: a vector-representation index, a Young diagram, a layer sequence
// (plane partition sliced by z), or a tuple of labels for tensor products.
struct Label {
    enum class Kind : unsigned char { Index, Young, Layers, Tuple };
    Kind kind = Kind::Index;
    int j = 0;
    Partition p;
    std::vector<Partition> layers;
    std::vector<Label> parts;

    static Label index(int j);
    static Label young(Partition p);
    static Label layer_seq(std::vector<Partition> l);
    static Label tuple(std::vector<Label> t);

    std::strong_ordering operator<=>(const Label& o) const;
    bool operator==(const Label& o) const { return (*this <=> o) == 0; }
    std::string str() const;
};

nlohmann::json to_json(const Label& l);
Label label_from_json(const nlohmann::json& j);

struct DeltaTerm {
    Label target;
    FieldElem coeff;
    Monomial support;  // u times a (q, d) monomial
};

struct PoleAtSupport : std::runtime_error {
    Monomial where;
    explicit PoleAtSupport(const std::string& what, Monomial w = {}) : std::runtime_error(what), where(w) {}
};
struct Mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Inconsistent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A representation as data. Providers must be pure; they may be called from several threads.
struct ModuleHandle {
    std::string name;
    ColorContext ctx;
    std::function<std::vector<DeltaTerm>(int, const Label&)> e_action, f_action;
    // eigenvalue of K_i(z) as a function of zeta = u/z
    std::function<ZetaFunction(int, const Label&)> k_eigen;
    std::function<std::vector<Label>(int)> basis_by_degree;
    std::function<std::vector<int>(const Label&)> degree;
    // Total degrees carried: [min_degree, inf), or all of Z when two_sided.
    int min_degree = 0;
    bool two_sided = false;
    // +1 for lowest weight gradings, -1 after an omega twist (degrees negated).
    int degree_sign = 1;
    std::optional<Label> lowest;

    int n() const { return ctx.n; }
    // Total degrees to visit when checking up to max_degree.
    std::vector<int> degree_window(int max_degree) const;
};

// Merges terms with the same (target, support) and drops zero coefficients.
std::vector<DeltaTerm> combine_terms(std::vector<DeltaTerm> terms);

// Affine Cartan matrix a_ij and the matrix m_ij (m_{i-1,i} = -1, m_{i,i-1} = 1), indices mod n.
int a_mat(int i, int j, int n);
int m_mat(int i, int j, int n);

struct RelationFailure {
    std::string relation;
    std::string label;
    std::string where;
    std::string lhs, rhs;
};

struct RelationReport {
    std::string module;
    int max_degree = 0;
    std::map<std::string, long> checked;  // relation -> number of identities verified
    std::vector<RelationFailure> failures;
    bool ok() const { return failures.empty(); }
};

nlohmann::json to_json(const RelationReport& r);

// Worker threads: TORO_THREADS if set, else the hardware count; at least 1.
int worker_threads();

// Verifies the defining relations (with q^c = 1) on every label with total degree in the window.
// Throws PoleAtSupport if an action is ill-defined.
RelationReport check_relations(const ModuleHandle& h, int max_degree);
// Throws Mismatch with the first witness if the report has failures.
void require_pass(const RelationReport& r);

struct GradedCharacter {
    std::map<std::vector<int>, long> by_degree;
    std::map<int, long> total;  // total degree -> dimension
};
GradedCharacter graded_character(const ModuleHandle& h, int max_degree);

// Labels with total degree (in the window) at most max_degree.
std::vector<Label> labels_up_to(const ModuleHandle& h, int max_degree);

// prod_i (K_i eigenvalue at zeta = 0)^{-1}, checked constant on labels of degree <= probe_degree.
Monomial level_of(const ModuleHandle& h, int probe_degree = 2);
bool singular_check(const ModuleHandle& h, const Label& label);

// Eigenvalue tuples are pairwise distinct in every graded piece up to max_degree.
bool tameness_check(const ModuleHandle& h, int max_degree);
// value_at_zero * value_at_infinity == 1 for every K_i on the lowest label.
bool quasi_finite_check(const ModuleHandle& h);

struct Twist {
    enum class Kind { Tau, Shift, Iota, Omega };
    Kind kind;
    Monomial a;  // for Shift
    static Twist tau() { return {Kind::Tau, {}}; }
    static Twist shift(Monomial a) { return {Kind::Shift, a}; }
    static Twist iota() { return {Kind::Iota, {}}; }
    static Twist omega() { return {Kind::Omega, {}}; }
};

// tau: E_i acts as E_{i+1}. shift(a): supports multiplied by a. iota: E_i acts as E_{-i},
// then d -> 1/d. omega: E_i and F_i exchanged, then q -> 1/q, degrees negated.
ModuleHandle twist(const ModuleHandle& h, const Twist& t);

// Thread-safe memoization of the providers (transparent: same answers).
ModuleHandle memoize(const ModuleHandle& h);

}  // namespace toro
