#pragma once

#include <climits>
#include <compare>
#include <initializer_list>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "toro/monomial.hpp"

namespace toro {

inline int mod(int a, int n) { return ((a % n) + n) % n; }

// Young diagram; parts weakly decreasing and positive. Indexing is 1-based.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p);
    explicit Partition(std::vector<int> p);

    int operator[](int i) const { return (i >= 1 && i <= (int)parts.size()) ? parts[i - 1] : 0; }
    int length() const { return (int)parts.size(); }
    int size() const;
    bool empty() const { return parts.empty(); }

    // Adds a box at the end of row j (j may be length()+1). Result may be invalid.
    Partition plus_row(int j) const;
    Partition minus_row(int j) const;
    bool can_add(int j) const;
    bool can_remove(int j) const;

    auto operator<=>(const Partition&) const = default;
    std::string str() const;
};

struct MalformedPartition : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Partition conjugate(const Partition& l);
Partition lambda_shift(const Partition& l, int a, int b);
// Parses "7,4,2,2"; the empty string is the empty partition. Rejects non-monotone input.
Partition parse_partition(const std::string& s);
std::vector<Partition> partitions_of(int size);
std::vector<Partition> partitions_up_to(int size);

struct ColorContext {
    int n = 3;
    int k = 0;
    int color(int x, int y) const { return mod(k + x - y, n); }
};

struct CornerData {
    std::vector<std::pair<int, int>> concave;  // addable positions (row x, column y)
    std::vector<std::pair<int, int>> convex;   // removable boxes
    std::vector<int> CC, CV;                   // per color tallies
};

CornerData corners(const Partition& l, const ColorContext& ctx);
bool is_colorless(const Partition& g, int n);
std::vector<int> v_vec(const Partition& g, int n, int k);

std::string render_young(const Partition& l, const ColorContext& ctx);

// ---------------------------------------------------------------- plane partitions

struct Box {
    int x, y, z;
    int color(const ColorContext& ctx) const { return mod(ctx.k + x - y, ctx.n); }
    // u q3^x q1^y q2^z
    Monomial evaluation() const { return Monomial::U() * Monomial::q3(x) * Monomial::q1(y) * Monomial::q2p(z); }
    auto operator<=>(const Box&) const = default;
};

struct MalformedLayers : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Plane partition with asymptotics (alpha, beta, gamma). Stored as the cells where
// the height exceeds the minimal profile max(alpha'_y, beta'_x).
class PlanePartition {
public:
    static constexpr int INF = INT_MAX;

    PlanePartition() = default;
    PlanePartition(Partition a, Partition b, Partition g);

    const Partition& alpha() const { return alpha_; }
    const Partition& beta() const { return beta_; }
    const Partition& gamma() const { return gamma_; }
    const std::map<std::pair<int, int>, int>& deviation() const { return dev_; }

    int base(int x, int y) const;
    int operator()(int x, int y) const;
    void set(int x, int y, int h);
    bool contains(const Box& b) const { return b.z <= (*this)(b.x, b.y); }
    // Number of boxes above the minimal configuration.
    int degree() const;
    // Search bounds: outside x <= extent_x(), y <= extent_y() nothing changes.
    int extent_x() const;
    int extent_y() const;
    bool valid() const;

    bool operator==(const PlanePartition& o) const {
        return alpha_ == o.alpha_ && beta_ == o.beta_ && gamma_ == o.gamma_ && dev_ == o.dev_;
    }

private:
    Partition alpha_, beta_, gamma_, ac_, bc_;
    std::map<std::pair<int, int>, int> dev_;
};

// Number of leading layers carrying asymptotic data: smallest m with alpha_m = beta_m = 0.
int leg_depth(const Partition& a, const Partition& b);
// The minimal layer at position s: gamma[alpha_s, beta_s].
Partition minimal_layer(const Partition& a, const Partition& b, const Partition& g, int s);

PlanePartition plane_from_layers(const std::vector<Partition>& layers, const Partition& a, const Partition& b,
                                 const Partition& g);
// Canonical layer list: length max(leg_depth, last layer differing from its minimum).
std::vector<Partition> layers_from_plane(const PlanePartition& p);

struct AddRemove {
    std::vector<Box> addable, removable;
};
AddRemove addable_removable(const PlanePartition& p, int color, const ColorContext& ctx);

// Boxes within the bound satisfying the special-box clauses (legs indexed as alpha'_y, beta'_x).
std::set<Box> special_boxes(const Partition& a, const Partition& b, const Partition& g, int bound);
bool is_special(const Partition& a, const Partition& b, const Partition& g, const Box& box);
// First box of its diagonal ray lying outside the minimal configuration.
bool is_ray_start(const Partition& a, const Partition& b, const Partition& g, const Box& box);

std::string render_plane(const PlanePartition& p, const ColorContext& ctx);

nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);
nlohmann::json plane_to_json(const PlanePartition& p);
PlanePartition plane_from_json(const nlohmann::json& j);

}  // namespace toro
