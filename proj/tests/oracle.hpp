#pragma once

// Test-side oracles that do not reuse library arithmetic.

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "toro/field.hpp"

namespace oracle {

using Rat = boost::multiprecision::cpp_rational;

// A numeric point for (q^(1/2), d^(1/2), K^(1/2)).
struct Point {
    Rat sq, sd, sK;
};

inline Rat rpow(const Rat& b, int e) {
    Rat r = 1;
    Rat x = e < 0 ? Rat(1) / b : b;
    for (int i = 0; i < std::abs(e); ++i) r *= x;
    return r;
}

inline Rat mono_value(const toro::Monomial& m, const Point& p) {
    return rpow(p.sq, m.q2) * rpow(p.sd, m.d2) * rpow(p.sK, m.K2);
}

inline Rat poly_value(const toro::Poly& poly, const Point& p) {
    Rat r = 0;
    for (auto& [k, c] : poly.terms) r += Rat(c) * mono_value(toro::unpack(k), p);
    return r;
}

// Value of a field element at a numeric point, computed from the raw representation.
inline Rat value(const toro::FieldElem& f, const Point& p) {
    Rat r = poly_value(f.num_poly(), p) / poly_value(f.den_poly(), p);
    for (auto& [a, e] : f.atoms()) {
        bool plus = a >> 63;
        toro::Monomial m = toro::unpack(a & ~(uint64_t(1) << 63));
        Rat base = plus ? 1 + mono_value(m, p) : 1 - mono_value(m, p);
        r *= rpow(base, e);
    }
    return r;
}

inline std::vector<Point> points() {
    return {{Rat(3, 2), Rat(5, 7), Rat(11, 13)}, {Rat(7, 3), Rat(2, 9), Rat(4, 5)}, {Rat(13, 11), Rat(17, 5), Rat(3, 8)}};
}

}  // namespace oracle
