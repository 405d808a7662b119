#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toro/monomial.hpp"

namespace toro {

using Int = boost::multiprecision::cpp_int;

// Raised when an expression would divide by zero, e.g. psi at 1.
struct PoleAtOne : std::runtime_error {
    Monomial where;
    explicit PoleAtOne(Monomial m) : std::runtime_error("pole at " + m.str()), where(m) {}
};

// Packed (q2, d2, K2) exponent triple. Integer order is lexicographic in (K2, q2, d2).
using Key = uint64_t;
Key pack(int q2, int d2, int K2);
Key pack(const Monomial& m);
Monomial unpack(Key k);
Key key_mul(Key a, Key b);
extern const Key kOneKey;

// Sparse Laurent polynomial in q, d, K with exact integer coefficients, sorted by key.
class Poly {
public:
    std::vector<std::pair<Key, Int>> terms;

    Poly() = default;
    static Poly constant(const Int& c);
    static Poly monomial(const Monomial& m, const Int& c = 1);

    bool is_zero() const { return terms.empty(); }
    bool is_one() const;
    size_t size() const { return terms.size(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly shifted(Key k, const Int& c = 1) const;
    bool operator==(const Poly& o) const { return terms == o.terms; }

    std::string str() const;
};

// Element of Q(q^(1/2), d^(1/2), K^(1/2)).
//
// Stored as num/den times a product of binomial atoms (1 - m)^e or (1 + m)^e,
// with m a nontrivial monomial normalized so that its leading exponent is positive.
// Products only add atom exponents, so psi cancellations stay exact and cheap.
class FieldElem {
public:
    using Atom = uint64_t;  // bit 63 set for (1 + m), clear for (1 - m)

    FieldElem();
    FieldElem(long long c);
    FieldElem(const Int& c);
    explicit FieldElem(const Monomial& m, const Int& c = 1);

    static FieldElem zero() { return FieldElem(); }
    static FieldElem from_polys(Poly num, Poly den);
    // (1 - m)^e; m must be free of u. Throws PoleAtOne when m = 1 and e < 0.
    static FieldElem one_minus(const Monomial& m, int e = 1);
    // (1 + m)^e
    static FieldElem one_plus(const Monomial& m, int e = 1);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    // True when the value is c * m for an integer c and monomial m; fills them.
    bool as_monomial(Int& c, Monomial& m) const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
    FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }
    FieldElem inv() const;
    FieldElem pow(int e) const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    // Exponent substitution q -> q^sq, d -> d^sd with sq, sd in {+1, -1}.
    FieldElem flip(int sq, int sd) const;

    // Fully expanded numerator and denominator with the denominator normalized
    // to zero monomial content and positive leading coefficient.
    std::pair<Poly, Poly> expanded() const;
    std::string str() const;

    const Poly& num_poly() const { return num_; }
    const Poly& den_poly() const { return den_; }
    const std::vector<std::pair<Atom, int>>& atoms() const { return atoms_; }

private:
    Poly num_;
    Poly den_;
    std::vector<std::pair<Atom, int>> atoms_;

    void normalize();
    void mul_atom(const Monomial& m, bool plus, int e);
};

nlohmann::json to_json(const FieldElem& f);
FieldElem field_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Monomial& m);
Monomial monomial_from_json(const nlohmann::json& j);

// psi(x) = (q - q^-1 x) / (1 - x)
FieldElem psi_eval(const Monomial& x);

}  // namespace toro
