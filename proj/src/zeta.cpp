#include "toro/zeta.hpp"

#include <sstream>

namespace toro {

ZetaFunction ZetaFunction::factor(const Monomial& A, const Monomial& B, int e) {
    if (A.has_u() || B.has_u()) throw std::invalid_argument("zeta factor carries u");
    ZetaFunction z;
    // A - B zeta = A (1 - (B/A) zeta)
    z.c_ = FieldElem(A).pow(e);
    Monomial m = B / A;
    z.f_[m] = e;
    return z;
}

ZetaFunction ZetaFunction::psi(const Monomial& x, int e) {
    // psi(x zeta) = q (1 - q^-2 x zeta) / (1 - x zeta)
    ZetaFunction z;
    z.c_ = FieldElem(Monomial::q(e));
    z.f_[Monomial::q(-2) * x] += e;
    z.f_[x] -= e;
    return z;
}

ZetaFunction ZetaFunction::operator*(const ZetaFunction& o) const {
    ZetaFunction r = *this;
    r.c_ *= o.c_;
    r.p_ += o.p_;
    for (auto& [m, e] : o.f_) {
        int& x = r.f_[m];
        x += e;
        if (x == 0) r.f_.erase(m);
    }
    if (r.c_.is_zero()) {
        r.f_.clear();
        r.p_ = 0;
    }
    return r;
}

ZetaFunction ZetaFunction::inv() const {
    ZetaFunction r;
    r.c_ = c_.inv();
    r.p_ = -p_;
    for (auto& [m, e] : f_) r.f_[m] = -e;
    return r;
}

bool ZetaFunction::operator==(const ZetaFunction& o) const {
    if (c_.is_zero() || o.c_.is_zero()) return c_.is_zero() && o.c_.is_zero();
    return p_ == o.p_ && f_ == o.f_ && c_ == o.c_;
}

FieldElem ZetaFunction::at(const Monomial& s) const {
    if (s.has_u()) throw std::invalid_argument("zeta value carries u");
    if (c_.is_zero()) return {};
    FieldElem r = c_ * FieldElem(s.pow(p_));
    for (auto& [m, e] : f_) {
        if ((m * s).is_one() && e < 0) throw PoleAtOne(s);
    }
    for (auto& [m, e] : f_) r *= FieldElem::one_minus(m * s, e);
    return r;
}

int ZetaFunction::degree() const {
    int d = p_;
    for (auto& [m, e] : f_) d += e;
    return d;
}

FieldElem ZetaFunction::value_at_zero() const {
    if (c_.is_zero() || p_ > 0) return {};
    if (p_ < 0) throw PoleAtOne(Monomial::one());
    return c_;
}

FieldElem ZetaFunction::value_at_infinity() const {
    if (c_.is_zero()) return {};
    int d = degree();
    if (d < 0) return {};
    if (d > 0) throw PoleAtOne(Monomial::one());
    FieldElem r = c_;
    for (auto& [m, e] : f_) r *= FieldElem(m, -1).pow(e);
    return r;
}

ZetaFunction ZetaFunction::rescaled(const Monomial& a) const {
    ZetaFunction r;
    r.c_ = c_ * FieldElem(a.pow(p_));
    r.p_ = p_;
    for (auto& [m, e] : f_) r.f_[m * a] = e;
    return r;
}

ZetaFunction ZetaFunction::flip(int sq, int sd) const {
    ZetaFunction r;
    r.c_ = c_.flip(sq, sd);
    r.p_ = p_;
    for (auto& [m, e] : f_) r.f_[Monomial{0, m.q2 * sq, m.d2 * sd, m.K2}] = e;
    return r;
}

std::vector<std::tuple<Monomial, Monomial, int>> ZetaFunction::factor_list() const {
    std::vector<std::tuple<Monomial, Monomial, int>> v;
    for (auto& [m, e] : f_) v.emplace_back(Monomial::one(), m, e);
    return v;
}

std::string ZetaFunction::str() const {
    std::ostringstream os;
    os << '[' << c_.str() << ']';
    if (p_) os << "*z^" << p_;
    for (auto& [m, e] : f_) os << "*(1-" << m.str() << "*z)^" << e;
    return os.str();
}

namespace {

// Series of (1 - m w)^e in w up to order.
std::vector<FieldElem> binomial_series(const Monomial& m, int e, int order) {
    std::vector<FieldElem> s(order + 1);
    // coefficient of w^j is binom(e, j) (-m)^j, with generalized binomial for e < 0
    Int num = 1, den = 1;
    for (int j = 0; j <= order; ++j) {
        if (j > 0) {
            num *= (e - j + 1);
            den *= j;
        }
        Int c = num / den;
        if (j % 2) c = -c;
        s[j] = c == 0 ? FieldElem() : FieldElem(m.pow(j), c);
    }
    return s;
}

std::vector<FieldElem> series_mul(const std::vector<FieldElem>& a, const std::vector<FieldElem>& b) {
    std::vector<FieldElem> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; i + j < a.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

}  // namespace

std::vector<FieldElem> zeta_expand(const ZetaFunction& f, Direction dir, int order) {
    if (order < 0) throw std::invalid_argument("negative order");
    std::vector<FieldElem> s(order + 1);
    if (f.constant().is_zero()) return s;
    s[0] = f.constant();
    int shift;
    if (dir == Direction::AtZero) {
        shift = f.zeta_power();
        for (auto& [m, e] : f.factors()) s = series_mul(s, binomial_series(m, e, order));
    } else {
        // (1 - m zeta) = -m zeta (1 - m^-1 w) with w = 1/zeta
        shift = -f.degree();
        for (auto& [m, e] : f.factors()) {
            s = series_mul(s, binomial_series(m.inv(), e, order));
            FieldElem unit = FieldElem(m, -1).pow(e);
            for (auto& x : s) x *= unit;
        }
    }
    if (shift < 0) throw PoleAtOne(Monomial::one());
    std::vector<FieldElem> out(order + 1);
    for (int j = 0; j + shift <= order; ++j) out[j + shift] = s[j];
    return out;
}

PartialFractions zeta_partial_fractions(const ZetaFunction& f) {
    PartialFractions pf;
    if (f.constant().is_zero()) return pf;
    if (f.zeta_power() < 0) throw RepeatedPole("pole at zeta = 0");
    if (f.degree() > 0) throw std::domain_error("numerator degree exceeds denominator degree");
    pf.constant = f.value_at_infinity();
    for (auto& [m, e] : f.factors()) {
        if (e >= 0) continue;
        if (e < -1) throw RepeatedPole("repeated factor " + m.str());
        Monomial zp = m.inv();
        // r_p = [f (1 - m zeta)] at zeta = 1/m
        FieldElem r = f.constant() * FieldElem(zp.pow(f.zeta_power()));
        for (auto& [m2, e2] : f.factors()) {
            if (m2 == m) continue;
            r *= FieldElem::one_minus(m2 * zp, e2);
        }
        pf.poles.emplace_back(zp, r);
    }
    return pf;
}

}  // namespace toro
