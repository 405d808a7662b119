#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "toro/monomial.hpp"
#include "toro/partition.hpp"

namespace toro {

struct OutOfFamily : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotColorless : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct WidthViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotAnAscent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotInFamily : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidPair : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct PropertyViolated : std::logic_error {
    using std::logic_error::logic_error;
};

// Element of the affine root lattice of sl_n-hat in the basis alpha_0..alpha_{n-1}.
struct RootVec {
    std::vector<int> m;

    RootVec() = default;
    explicit RootVec(int n) : m(n, 0) {}
    explicit RootVec(std::vector<int> c) : m(std::move(c)) {}

    static RootVec simple(int i, int n);  // i taken mod n
    static RootVec delta(int n);
    // alpha_a + alpha_{a+1} + ... + alpha_b, indices mod n; empty when b < a.
    static RootVec segment(int a, int b, int n);

    int n() const { return (int)m.size(); }
    int height() const;  // (beta, rho)
    bool is_zero() const;

    RootVec operator+(const RootVec& o) const;
    RootVec operator-(const RootVec& o) const;
    RootVec operator*(int c) const;
    RootVec& operator+=(const RootVec& o) { return *this = *this + o; }

    auto operator<=>(const RootVec&) const = default;
    std::string str() const;
};

int cartan(int i, int j, int n);
int pairing(const RootVec& a, const RootVec& b);
// r_alpha(beta) = beta - (beta, alpha) alpha, for a real root alpha.
RootVec reflect(const RootVec& beta, const RootVec& alpha);

nlohmann::json to_json(const RootVec& r);
RootVec rootvec_from_json(const nlohmann::json& j);

// Permutation of 1..n; img[p-1] = w(p).
struct Permutation {
    std::vector<int> img;

    static Permutation identity(int n);
    static Permutation simple(int i, int n);  // s_i = (i, i+1)

    int n() const { return (int)img.size(); }
    int operator()(int p) const { return img[p - 1]; }
    int length() const;
    Permutation inverse() const;
    // (a * b)(p) = a(b(p))
    Permutation operator*(const Permutation& o) const;
    bool valid() const;

    auto operator<=>(const Permutation&) const = default;
    std::string str() const;
};

std::vector<Permutation> all_permutations(int n);

// ---------------------------------------------------------------- colorless family

// Anchor color of the corner box (1,1). Width bound: ν_1 <= n (`WidthBound::AtMost`) as in the
// family with n-colored corner, or ν_1 < n (`WidthBound::Below`) for the family with color k.
enum class WidthBound { AtMost, Below };

// beta_i(ν) = alpha_{ν'_{i+1}+k-i} + ... + alpha_{ν'_i+k-i}, i = 1..n-1.
std::vector<RootVec> beta_roots(const Partition& nu, int n, int k, WidthBound w = WidthBound::AtMost);

// Membership in the family: colorless, ν_1 <= n, ν'_n < n.
bool in_family(const Partition& nu, int n);
bool is_minimal(const Partition& nu, int n);
// Finite list of minimal members (ν'_n < n and consecutive column gaps <= n-2).
std::vector<Partition> minimal_partitions(int n);
// All members with |ν| <= max_size.
std::vector<Partition> family_up_to(int n, int max_size);

// σ_ν(n-m+1) = ν'_m + 1 - m reduced into 1..n.
Permutation sigma_perm(const Partition& nu, int n);

Partition orbit_step(const Partition& nu, int i, int n);

enum class RibetaAlt { Reflected, ReflectedPlusDelta };
struct RibetaReport {
    Partition next;
    std::vector<RibetaAlt> alt;  // index j-1
};
RibetaReport ribeta_check(const Partition& nu, int i, int n);

struct BetaDecomposition {
    std::vector<RootVec> minimal;
    std::vector<int> shifts;
    Partition reconstructed;
};
BetaDecomposition beta_map_decompose(const Partition& nu, int n);
// Inverse of the beta map for the anchor-0 family. Throws NotInFamily.
Partition partition_from_betas(const std::vector<RootVec>& betas, int n);

// Edges (ν, i, ν^{(i)}) of the orbit walk from the empty partition.
struct OrbitEdge {
    Partition from;
    int i;
    Partition to;
};
std::vector<OrbitEdge> orbit_walk(int n);
nlohmann::json orbit_to_json(const std::vector<OrbitEdge>& edges);

// ---------------------------------------------------------------- weights

struct LambdaWeight {
    std::vector<int> beta_pairings;  // (λ+ρ, β_i), i = 1..n-1
    Monomial level_monomial;         // q^{(λ,δ)}
};

LambdaWeight lambda_weight(const Partition& mu, const Partition& nu, int k, int n);

// For each s in S_n, the coefficients c of λ+ρ - w_s(λ+ρ) = Σ c_i β_i where w_s is the image of s
// under r_{α_i} -> r_{β_i} and the β_i have the finite Cartan matrix as Gram matrix.
// Only the integer pairings (λ+ρ, β_i) enter.
std::map<Permutation, std::vector<int>> reflection_defects(const std::vector<int>& pairings);

}  // namespace toro
