#include "toro/monomial.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>

namespace toro {

namespace {

void put(std::ostringstream& os, bool& first, const char* name, int e, bool doubled) {
    if (e == 0) return;
    if (!first) os << '*';
    first = false;
    os << name;
    if (doubled) {
        if (e == 2) return;
        if (e % 2 == 0)
            os << '^' << e / 2;
        else
            os << "^(" << e << "/2)";
    } else if (e != 1) {
        os << '^' << e;
    }
}

}  // namespace

std::string Monomial::str() const {
    std::ostringstream os;
    bool first = true;
    put(os, first, "u", u, false);
    put(os, first, "q", q2, true);
    put(os, first, "d", d2, true);
    put(os, first, "K", K2, true);
    if (first) os << '1';
    return os.str();
}

Monomial parse_monomial(const std::string& s) {
    static const std::regex factor(R"(\s*(q1|q2|q3|u|q|d|K)(?:\^(-?\d+|\((-?\d+)/2\)))?\s*)");
    std::string t = s;
    t.erase(0, t.find_first_not_of(" \t"));
    t.erase(t.find_last_not_of(" \t") + 1);
    if (t == "1") return Monomial::one();
    Monomial m;
    size_t start = 0;
    while (true) {
        size_t stop = t.find('*', start);
        std::string f = t.substr(start, stop == std::string::npos ? std::string::npos : stop - start);
        std::smatch sm;
        if (!std::regex_match(f, sm, factor)) throw std::invalid_argument("bad monomial factor '" + f + "' in '" + s + "'");
        std::string name = sm[1];
        // doubled exponent
        int e2 = !sm[2].matched ? 2 : sm[3].matched ? std::stoi(sm[3]) : 2 * std::stoi(sm[2]);
        bool half = e2 % 2 != 0;
        if (name == "u") {
            if (half) throw std::invalid_argument("half-integer power of u in '" + s + "'");
            m.u += e2 / 2;
        } else if (name == "q") {
            m.q2 += e2;
        } else if (name == "d") {
            m.d2 += e2;
        } else if (name == "K") {
            m.K2 += e2;
        } else {
            if (half) throw std::invalid_argument("half-integer power of " + name + " in '" + s + "'");
            int e = e2 / 2;
            m *= name == "q1" ? Monomial::q1(e) : name == "q2" ? Monomial::q2p(e) : Monomial::q3(e);
        }
        if (stop == std::string::npos) break;
        start = stop + 1;
    }
    return m;
}

Monomial mono_from_q123(int a, int b, int c, int u_exp) {
    Monomial m = Monomial::q1(a) * Monomial::q2p(b) * Monomial::q3(c);
    m.u = u_exp;
    return m;
}

}  // namespace toro
