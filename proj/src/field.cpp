#include "toro/field.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace toro {

namespace {

constexpr int kBits = 21;
constexpr int64_t kOff = int64_t(1) << (kBits - 1);
constexpr uint64_t kMask = (uint64_t(1) << kBits) - 1;
constexpr uint64_t kPlusBit = uint64_t(1) << 63;

Key key_inv(Key a) { return 2 * kOneKey - a; }

Key key_pow(Key a, int e) {
    Monomial m = unpack(a).pow(e);
    return pack(m);
}

Int binom(int n, int k) {
    Int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// (1 - m)^e or (1 + m)^e expanded for e >= 0.
Poly atom_power(Key m, bool plus, int e) {
    Poly p;
    p.terms.reserve(e + 1);
    Key cur = kOneKey;
    for (int j = 0; j <= e; ++j) {
        Int c = binom(e, j);
        if (!plus && (j % 2)) c = -c;
        p.terms.emplace_back(cur, c);
        cur = key_mul(cur, m);
    }
    return p;
}

Poly expand_atoms(const std::vector<std::pair<FieldElem::Atom, int>>& atoms, int sign) {
    Poly r = Poly::constant(1);
    for (auto& [a, e] : atoms) {
        int f = e * sign;
        if (f <= 0) continue;
        r = r * atom_power(a & ~kPlusBit, (a & kPlusBit) != 0, f);
    }
    return r;
}

Int int_pow(const Int& b, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

const Key kOneKey = pack(0, 0, 0);

Key pack(int q2, int d2, int K2) {
    return (uint64_t(K2 + kOff) << (2 * kBits)) | (uint64_t(q2 + kOff) << kBits) | uint64_t(d2 + kOff);
}

Key pack(const Monomial& m) { return pack(m.q2, m.d2, m.K2); }

Monomial unpack(Key k) {
    int d2 = int(int64_t(k & kMask) - kOff);
    int q2 = int(int64_t((k >> kBits) & kMask) - kOff);
    int K2 = int(int64_t((k >> (2 * kBits)) & kMask) - kOff);
    return {0, q2, d2, K2};
}

Key key_mul(Key a, Key b) { return a + b - kOneKey; }

// ---------------------------------------------------------------- Poly

Poly Poly::constant(const Int& c) {
    Poly p;
    if (c != 0) p.terms.emplace_back(kOneKey, c);
    return p;
}

Poly Poly::monomial(const Monomial& m, const Int& c) {
    Poly p;
    if (c != 0) p.terms.emplace_back(pack(m), c);
    return p;
}

bool Poly::is_one() const { return terms.size() == 1 && terms[0].first == kOneKey && terms[0].second == 1; }

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.terms.reserve(terms.size() + o.terms.size());
    size_t i = 0, j = 0;
    while (i < terms.size() || j < o.terms.size()) {
        if (j == o.terms.size() || (i < terms.size() && terms[i].first < o.terms[j].first)) {
            r.terms.push_back(terms[i++]);
        } else if (i == terms.size() || o.terms[j].first < terms[i].first) {
            r.terms.push_back(o.terms[j++]);
        } else {
            Int c = terms[i].second + o.terms[j].second;
            if (c != 0) r.terms.emplace_back(terms[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms) t.second = -t.second;
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (o.terms.size() == 1) return shifted(o.terms[0].first, o.terms[0].second);
    if (terms.size() == 1) return o.shifted(terms[0].first, terms[0].second);
    std::vector<std::pair<Key, Int>> raw;
    raw.reserve(terms.size() * o.terms.size());
    for (auto& a : terms)
        for (auto& b : o.terms) raw.emplace_back(key_mul(a.first, b.first), a.second * b.second);
    std::sort(raw.begin(), raw.end(), [](auto& x, auto& y) { return x.first < y.first; });
    Poly r;
    for (auto& t : raw) {
        if (!r.terms.empty() && r.terms.back().first == t.first) {
            r.terms.back().second += t.second;
            if (r.terms.back().second == 0) r.terms.pop_back();
        } else {
            r.terms.push_back(std::move(t));
        }
    }
    return r;
}

Poly Poly::shifted(Key k, const Int& c) const {
    Poly r;
    if (c == 0) return r;
    r.terms.reserve(terms.size());
    for (auto& t : terms) r.terms.emplace_back(key_mul(t.first, k), t.second * c);
    return r;
}

std::string Poly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const Int& c = it->second;
        Monomial m = unpack(it->first);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << '-';
        first = false;
        Int a = c < 0 ? Int(-c) : c;
        if (m.is_one()) {
            os << a;
        } else {
            if (a != 1) os << a << '*';
            os << m.str();
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- FieldElem

FieldElem::FieldElem() : den_(Poly::constant(1)) {}
FieldElem::FieldElem(long long c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}
FieldElem::FieldElem(const Int& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}
FieldElem::FieldElem(const Monomial& m, const Int& c) : num_(Poly::monomial(m.field_part(), c)), den_(Poly::constant(1)) {
    if (m.has_u()) throw std::invalid_argument("field monomial carries u: " + m.str());
}

FieldElem FieldElem::from_polys(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    FieldElem f;
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    f.normalize();
    return f;
}

FieldElem FieldElem::one_minus(const Monomial& m, int e) {
    FieldElem f(1);
    f.mul_atom(m, false, e);
    f.normalize();
    return f;
}

FieldElem FieldElem::one_plus(const Monomial& m, int e) {
    FieldElem f(1);
    f.mul_atom(m, true, e);
    f.normalize();
    return f;
}

void FieldElem::mul_atom(const Monomial& m0, bool plus, int e) {
    if (e == 0) return;
    if (m0.has_u()) throw std::invalid_argument("field monomial carries u: " + m0.str());
    Key m = pack(m0);
    if (m == kOneKey) {
        if (plus) {
            Int p = int_pow(2, std::abs(e));
            if (e > 0) num_ = num_.shifted(kOneKey, p);
            else den_ = den_.shifted(kOneKey, p);
        } else if (e > 0) {
            num_ = Poly();
        } else {
            throw PoleAtOne(m0);
        }
        return;
    }
    if (m < kOneKey) {
        // (1 - m) = -m (1 - 1/m) and (1 + m) = m (1 + 1/m)
        Key unit = key_pow(m, e);
        Int sign = (!plus && (e % 2)) ? -1 : 1;
        num_ = num_.shifted(unit, sign);
        m = key_inv(m);
    }
    Atom a = m | (plus ? kPlusBit : 0);
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a, [](auto& p, Atom v) { return p.first < v; });
    if (it != atoms_.end() && it->first == a) {
        it->second += e;
        if (it->second == 0) atoms_.erase(it);
    } else {
        atoms_.insert(it, {a, e});
    }
}

void FieldElem::normalize() {
    if (num_.is_zero()) {
        atoms_.clear();
        den_ = Poly::constant(1);
        return;
    }
    if (den_.size() == 1) {
        Key k = den_.terms[0].first;
        Int c = den_.terms[0].second;
        if (k != kOneKey) num_ = num_.shifted(key_inv(k));
        if (c < 0) {
            num_ = -num_;
            c = -c;
        }
        den_ = Poly::constant(c);
        return;
    }
    // strip monomial content of the denominator
    Monomial lo = unpack(den_.terms[0].first);
    for (auto& t : den_.terms) {
        Monomial m = unpack(t.first);
        lo.q2 = std::min(lo.q2, m.q2);
        lo.d2 = std::min(lo.d2, m.d2);
        lo.K2 = std::min(lo.K2, m.K2);
    }
    if (!lo.is_one()) {
        Key s = key_inv(pack(lo));
        den_ = den_.shifted(s);
        num_ = num_.shifted(s);
    }
    if (den_.terms.back().second < 0) {
        den_ = -den_;
        num_ = -num_;
    }
}

bool FieldElem::is_one() const {
    if (atoms_.empty() && num_ == den_) return true;
    return (*this - FieldElem(1)).is_zero();
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    if (is_zero() || o.is_zero()) return {};
    FieldElem r;
    r.num_ = num_ * o.num_;
    r.den_ = den_ * o.den_;
    r.atoms_.reserve(atoms_.size() + o.atoms_.size());
    size_t i = 0, j = 0;
    while (i < atoms_.size() || j < o.atoms_.size()) {
        if (j == o.atoms_.size() || (i < atoms_.size() && atoms_[i].first < o.atoms_[j].first)) {
            r.atoms_.push_back(atoms_[i++]);
        } else if (i == atoms_.size() || o.atoms_[j].first < atoms_[i].first) {
            r.atoms_.push_back(o.atoms_[j++]);
        } else {
            int e = atoms_[i].second + o.atoms_[j].second;
            if (e) r.atoms_.emplace_back(atoms_[i].first, e);
            ++i;
            ++j;
        }
    }
    r.normalize();
    return r;
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    FieldElem r;
    r.num_ = den_;
    r.den_ = num_;
    r.atoms_ = atoms_;
    for (auto& a : r.atoms_) a.second = -a.second;
    if (r.den_.size() == 2 && abs(r.den_.terms[0].second) == abs(r.den_.terms[1].second)) {
        // c1 m1 + c2 m2 = c1 m1 (1 + s m2/m1) with m2/m1 positive
        auto [k1, c1] = r.den_.terms[0];
        auto [k2, c2] = r.den_.terms[1];
        bool plus = (c1 > 0) == (c2 > 0);
        r.den_ = Poly::monomial(unpack(k1), c1);
        r.mul_atom(unpack(key_mul(k2, key_inv(k1))), plus, -1);
    }
    r.normalize();
    return r;
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

FieldElem FieldElem::pow(int e) const {
    FieldElem b = e < 0 ? inv() : *this;
    FieldElem r(1);
    for (int i = 0; i < std::abs(e); ++i) r = r * b;
    return r;
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    r.num_ = -r.num_;
    return r;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // common atom exponent: min over both sides (missing means 0)
    std::vector<std::pair<Atom, int>> common, ra, rb;
    size_t i = 0, j = 0;
    while (i < atoms_.size() || j < o.atoms_.size()) {
        Atom a;
        int ea = 0, eb = 0;
        if (j == o.atoms_.size() || (i < atoms_.size() && atoms_[i].first < o.atoms_[j].first)) {
            a = atoms_[i].first;
            ea = atoms_[i++].second;
        } else if (i == atoms_.size() || o.atoms_[j].first < atoms_[i].first) {
            a = o.atoms_[j].first;
            eb = o.atoms_[j++].second;
        } else {
            a = atoms_[i].first;
            ea = atoms_[i++].second;
            eb = o.atoms_[j++].second;
        }
        int e = std::min(ea, eb);
        if (e) common.emplace_back(a, e);
        if (ea - e) ra.emplace_back(a, ea - e);
        if (eb - e) rb.emplace_back(a, eb - e);
    }
    Poly na = num_ * expand_atoms(ra, 1);
    Poly nb = o.num_ * expand_atoms(rb, 1);
    FieldElem r;
    if (den_ == o.den_) {
        r.num_ = na + nb;
        r.den_ = den_;
    } else {
        r.num_ = na * o.den_ + nb * den_;
        r.den_ = den_ * o.den_;
    }
    r.atoms_ = std::move(common);
    r.normalize();
    return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

bool FieldElem::operator==(const FieldElem& o) const {
    if (num_ == o.num_ && den_ == o.den_ && atoms_ == o.atoms_) return true;
    return (*this - o).is_zero();
}

std::pair<Poly, Poly> FieldElem::expanded() const {
    Poly n = num_ * expand_atoms(atoms_, 1);
    Poly d = den_ * expand_atoms(atoms_, -1);
    if (n.is_zero()) return {Poly(), Poly::constant(1)};
    Monomial lo = unpack(d.terms[0].first);
    for (auto& t : d.terms) {
        Monomial m = unpack(t.first);
        lo.q2 = std::min(lo.q2, m.q2);
        lo.d2 = std::min(lo.d2, m.d2);
        lo.K2 = std::min(lo.K2, m.K2);
    }
    Key s = key_inv(pack(lo));
    n = n.shifted(s);
    d = d.shifted(s);
    if (d.terms.back().second < 0) {
        n = -n;
        d = -d;
    }
    return {n, d};
}

bool FieldElem::as_monomial(Int& c, Monomial& m) const {
    auto [n, d] = expanded();
    if (n.size() != 1 || d.size() != 1) return false;
    if (d.terms[0].first != kOneKey) return false;
    const Int& dc = d.terms[0].second;
    if (n.terms[0].second % dc != 0) return false;
    c = n.terms[0].second / dc;
    m = unpack(n.terms[0].first);
    return true;
}

FieldElem FieldElem::flip(int sq, int sd) const {
    auto map = [&](Key k) {
        Monomial m = unpack(k);
        return Monomial{0, m.q2 * sq, m.d2 * sd, m.K2};
    };
    auto map_poly = [&](const Poly& p) {
        Poly r;
        for (auto& t : p.terms) r = r + Poly::monomial(map(t.first), t.second);
        return r;
    };
    FieldElem r = from_polys(map_poly(num_), map_poly(den_));
    for (auto& [a, e] : atoms_) r.mul_atom(map(a & ~kPlusBit), (a & kPlusBit) != 0, e);
    r.normalize();
    return r;
}

std::string FieldElem::str() const {
    auto [n, d] = expanded();
    if (d.is_one()) return n.str();
    return "(" + n.str() + ")/(" + d.str() + ")";
}

// ---------------------------------------------------------------- JSON

namespace {

nlohmann::json int_json(const Int& c) {
    if (c >= std::numeric_limits<int64_t>::min() && c <= std::numeric_limits<int64_t>::max())
        return static_cast<int64_t>(c);
    return c.str();
}

Int int_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<int64_t>());
}

nlohmann::json poly_json(const Poly& p) {
    auto a = nlohmann::json::array();
    for (auto& t : p.terms) {
        Monomial m = unpack(t.first);
        a.push_back({int_json(t.second), m.q2, m.d2, m.K2});
    }
    return a;
}

Poly poly_from_json(const nlohmann::json& a) {
    Poly p;
    for (auto& t : a) p = p + Poly::monomial({0, t.at(1).get<int>(), t.at(2).get<int>(), t.at(3).get<int>()}, int_from_json(t.at(0)));
    return p;
}

}  // namespace

nlohmann::json to_json(const FieldElem& f) {
    auto [n, d] = f.expanded();
    return {{"num", poly_json(n)}, {"den", poly_json(d)}};
}

FieldElem field_from_json(const nlohmann::json& j) {
    return FieldElem::from_polys(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

nlohmann::json to_json(const Monomial& m) { return {{"u", m.u}, {"q2", m.q2}, {"d2", m.d2}, {"K2", m.K2}}; }

Monomial monomial_from_json(const nlohmann::json& j) {
    return {j.at("u").get<int>(), j.at("q2").get<int>(), j.at("d2").get<int>(), j.at("K2").get<int>()};
}

FieldElem psi_eval(const Monomial& x) {
    if (x.has_u()) throw std::invalid_argument("psi argument carries u: " + x.str());
    if (x.is_one()) throw PoleAtOne(x);
    return FieldElem(Monomial::q()) * FieldElem::one_minus(Monomial::q(-2) * x) * FieldElem::one_minus(x, -1);
}

}  // namespace toro
