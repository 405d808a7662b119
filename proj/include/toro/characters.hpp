#pragma once

#include "toro/macmahon.hpp"

namespace toro {

struct EigenvalueMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonIntegralPairing : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Integer power series truncated after x^order.
class PowerSeriesZ {
public:
    explicit PowerSeriesZ(int order = 0) : c_(order + 1) {}
    PowerSeriesZ(std::vector<Int> c) : c_(std::move(c)) {}

    int order() const { return (int)c_.size() - 1; }
    const Int& operator[](int i) const { return c_.at(i); }
    Int& operator[](int i) { return c_.at(i); }
    const std::vector<Int>& coeffs() const { return c_; }

    PowerSeriesZ truncated(int order) const;
    // Results carry the smaller of the two orders.
    PowerSeriesZ operator+(const PowerSeriesZ& o) const;
    PowerSeriesZ operator*(const PowerSeriesZ& o) const;
    bool operator==(const PowerSeriesZ& o) const;  // compared up to the smaller order

    // sign * x^e
    static PowerSeriesZ monomial(int e, int sign, int order);
    // 1 / (x)_inf^n
    static PowerSeriesZ inverse_pochhammer(int n, int order);

    std::string str() const;

private:
    std::vector<Int> c_;
};

nlohmann::json to_json(const PowerSeriesZ& s);
std::string to_tsv(const PowerSeriesZ& s);
// First degree where the two series differ, or -1.
int first_mismatch(const PowerSeriesZ& a, const PowerSeriesZ& b);

// Sum of x^{total degree} over the basis.
PowerSeriesZ char_enumerate(const ModuleHandle& h, int max_degree);

// ---------------------------------------------------------------- the n-tuple description of G

// n-tuples with λ^{(j)}_i >= λ^{(j+1)}_{i+ν'_j-ν'_{j+1}} - μ'_j + μ'_{j+1} (j = 1..n-1), graded by total size.
std::vector<std::vector<Partition>> ntuple_basis(const Partition& mu, const Partition& nu, int n, int size);
PowerSeriesZ ntuple_char(const Partition& mu, const Partition& nu, int n, int max_degree);
// Column slices of a G label: λ^{(y)}_j = Λ_{ν'_y+j, y} - μ'_y for y = 1..n.
std::vector<Partition> g_label_to_tuple(const Partition& mu, const Partition& nu, int n, const Label& label);

// ---------------------------------------------------------------- alternating sums

struct WeylSummand {
    Permutation s;
    int sign;
    int e;
};

// e(s) = Σ_i b_i (a_i - a_{s(i)}) with a_i = ν'_i + n - i, b_i = μ'_i + n - i (Primary), or
// Σ_i a_i (b_i - b_{s(i)}) (Swapped).
enum class WeylConvention { Primary, Swapped };
std::vector<WeylSummand> weyl_summands(const Partition& mu, const Partition& nu, int n,
                                       WeylConvention c = WeylConvention::Primary);
PowerSeriesZ weyl_sum_char(const Partition& mu, const Partition& nu, int n, int max_degree,
                           WeylConvention c = WeylConvention::Primary);

// Picks the convention whose series matches the enumeration of G to max_degree; Primary first.
struct ConventionChoice {
    std::optional<WeylConvention> chosen;
    int primary_mismatch = -1, swapped_mismatch = -1;
};
ConventionChoice select_convention(const Partition& mu, const Partition& nu, int n, int max_degree);

// Exponent (λ+ρ - w(λ+ρ), ρ) for each w in W(λ), keyed by the permutation s with w = w_s.
// The pairings (λ+ρ, β_i) must be positive (NonIntegralPairing otherwise).
std::map<Permutation, int> kt_exponents(const LambdaWeight& w, const std::vector<RootVec>& betas);
PowerSeriesZ kt_char(const LambdaWeight& w, const std::vector<RootVec>& betas, int max_degree);
PowerSeriesZ kt_char(const Partition& mu, const Partition& nu, int n, int k, int max_degree);

// ---------------------------------------------------------------- lowest weight of G

struct HwtEntry {
    int i;
    RootVec beta;
    Monomial eigenvalue, expected;
    // split over the leading Fock layers (v') and the Macmahon part (v''); the expected split
    // shifts by q^{∓μ'_1 ♯_i}
    Monomial v1, v2, v1_expected, v2_expected;
    int sharp;
};
struct HwtReport {
    std::vector<HwtEntry> entries;
    Monomial k_delta, k_delta_expected;
    bool ok() const;
};
nlohmann::json to_json(const HwtReport& r);

HwtReport hwt_check(const Partition& mu, const Partition& nu, const ColorContext& ctx);
// Throws EigenvalueMismatch.
void require_hwt(const HwtReport& r);

// ♯_i(k, ν): number of j ≡ k (mod n) with k-i+ν'_{i+1} <= j <= k-i+ν'_i.
int sharp(int i, int k, const Partition& nu, int n);

// Partitions μ with μ_1 < n and colorless ν with ν_1 < n, |μ|, |ν| <= max_size.
std::vector<std::pair<Partition, Partition>> admissible_pairs(int n, int max_size);

}  // namespace toro
