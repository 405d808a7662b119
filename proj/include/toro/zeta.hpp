#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "toro/field.hpp"

namespace toro {

struct RepeatedPole : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateFactor : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rational function of zeta = u/z in the canonical form
//   c * zeta^p * prod_m (1 - m zeta)^e_m
// with c in the parameter field and m field monomials. Two values are equal
// as rational functions exactly when their canonical forms agree.
class ZetaFunction {
public:
    ZetaFunction() : c_(1) {}
    ZetaFunction(const FieldElem& c) : c_(c) {}

    // (A - B zeta)^e
    static ZetaFunction factor(const Monomial& A, const Monomial& B, int e = 1);
    // psi(x zeta)^e
    static ZetaFunction psi(const Monomial& x, int e = 1);

    ZetaFunction operator*(const ZetaFunction& o) const;
    ZetaFunction& operator*=(const ZetaFunction& o) { return *this = *this * o; }
    ZetaFunction inv() const;
    bool operator==(const ZetaFunction& o) const;
    bool operator!=(const ZetaFunction& o) const { return !(*this == o); }

    // Value at zeta = s. Throws PoleAtOne(s) at a pole.
    FieldElem at(const Monomial& s) const;
    FieldElem value_at_zero() const;
    FieldElem value_at_infinity() const;
    // Degree in zeta at infinity: p + sum e_m.
    int degree() const;

    // f(a zeta)
    ZetaFunction rescaled(const Monomial& a) const;
    ZetaFunction flip(int sq, int sd) const;

    const FieldElem& constant() const { return c_; }
    int zeta_power() const { return p_; }
    const std::map<Monomial, int>& factors() const { return f_; }
    // Factors as (A, B, e) triples meaning (A - B zeta)^e.
    std::vector<std::tuple<Monomial, Monomial, int>> factor_list() const;

    std::string str() const;

private:
    FieldElem c_;
    int p_ = 0;
    std::map<Monomial, int> f_;
};

enum class Direction { AtZero, AtInfinity };

// Coefficients of zeta^0..zeta^order (AtZero) or zeta^0..zeta^-order (AtInfinity).
std::vector<FieldElem> zeta_expand(const ZetaFunction& f, Direction dir, int order);

struct PartialFractions {
    FieldElem constant;
    // (zeta_p, r_p): f = constant + sum r_p / (1 - zeta / zeta_p)
    std::vector<std::pair<Monomial, FieldElem>> poles;
};

PartialFractions zeta_partial_fractions(const ZetaFunction& f);

}  // namespace toro
