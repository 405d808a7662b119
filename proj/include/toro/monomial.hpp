#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace toro {

// Multiplicative word u^u q^(q2/2) d^(d2/2) K^(K2/2).
// Exponents of q, d and K are stored doubled so half-integer powers are exact.
struct Monomial {
    int u = 0;
    int q2 = 0;
    int d2 = 0;
    int K2 = 0;

    constexpr Monomial() = default;
    constexpr Monomial(int u_, int q2_, int d2_, int K2_) : u(u_), q2(q2_), d2(d2_), K2(K2_) {}

    static constexpr Monomial one() { return {}; }
    static constexpr Monomial U() { return {1, 0, 0, 0}; }
    static constexpr Monomial q(int e = 1) { return {0, 2 * e, 0, 0}; }
    static constexpr Monomial d(int e = 1) { return {0, 0, 2 * e, 0}; }
    static constexpr Monomial K(int e = 1) { return {0, 0, 0, 2 * e}; }
    static constexpr Monomial q1(int e = 1) { return {0, -2 * e, 2 * e, 0}; }
    static constexpr Monomial q2p(int e = 1) { return {0, 4 * e, 0, 0}; }
    static constexpr Monomial q3(int e = 1) { return {0, -2 * e, -2 * e, 0}; }

    constexpr bool is_one() const { return u == 0 && q2 == 0 && d2 == 0 && K2 == 0; }
    constexpr bool has_u() const { return u != 0; }

    constexpr Monomial operator*(const Monomial& o) const { return {u + o.u, q2 + o.q2, d2 + o.d2, K2 + o.K2}; }
    constexpr Monomial operator/(const Monomial& o) const { return {u - o.u, q2 - o.q2, d2 - o.d2, K2 - o.K2}; }
    constexpr Monomial& operator*=(const Monomial& o) { return *this = *this * o; }
    constexpr Monomial inv() const { return {-u, -q2, -d2, -K2}; }
    constexpr Monomial pow(int e) const { return {u * e, q2 * e, d2 * e, K2 * e}; }
    // Drops the u part, leaving the coefficient-field monomial.
    constexpr Monomial field_part() const { return {0, q2, d2, K2}; }

    constexpr auto operator<=>(const Monomial&) const = default;

    std::string str() const;
};

// Inverse of str(); also accepts q1, q2, q3 and "q^-1" style exponents. Throws std::invalid_argument.
Monomial parse_monomial(const std::string& s);

// u^u_exp q1^a q2^b q3^c in canonical form.
Monomial mono_from_q123(int a, int b, int c, int u_exp = 0);

struct MonomialHash {
    size_t operator()(const Monomial& m) const noexcept {
        uint64_t h = (uint32_t)m.u;
        h = h * 0x9E3779B97F4A7C15ull ^ (uint32_t)m.q2;
        h = h * 0x9E3779B97F4A7C15ull ^ (uint32_t)m.d2;
        h = h * 0x9E3779B97F4A7C15ull ^ (uint32_t)m.K2;
        return (size_t)(h ^ (h >> 29));
    }
};

}  // namespace toro
