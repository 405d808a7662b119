#include "toro/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace toro {

Partition::Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw MalformedPartition("non-positive part");
        if (i && parts[i] > parts[i - 1]) throw MalformedPartition("parts must be weakly decreasing");
    }
}

int Partition::size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

bool Partition::can_add(int j) const { return j >= 1 && j <= length() + 1 && (j == 1 || (*this)[j - 1] > (*this)[j]); }

bool Partition::can_remove(int j) const { return j >= 1 && j <= length() && (*this)[j] > (*this)[j + 1]; }

Partition Partition::plus_row(int j) const {
    Partition r = *this;
    if (j == length() + 1) r.parts.push_back(1);
    else r.parts[j - 1] += 1;
    return r;
}

Partition Partition::minus_row(int j) const {
    Partition r = *this;
    if (--r.parts[j - 1] == 0) r.parts.pop_back();
    return r;
}

std::string Partition::str() const {
    if (parts.empty()) return "()";
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ')';
    return os.str();
}

Partition conjugate(const Partition& l) {
    std::vector<int> c;
    for (int i = 1; i <= l[1]; ++i) {
        int cnt = 0;
        for (int p : l.parts) cnt += p >= i;
        c.push_back(cnt);
    }
    return Partition(c);
}

Partition lambda_shift(const Partition& l, int a, int b) {
    std::vector<int> r;
    for (int i = 1; l[i + b] - a > 0; ++i) r.push_back(l[i + b] - a);
    return Partition(r);
}

Partition parse_partition(const std::string& s) {
    std::vector<int> v;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) {
        if (cur.empty()) continue;
        size_t pos = 0;
        int x = std::stoi(cur, &pos);
        if (pos != cur.size()) throw MalformedPartition("bad part '" + cur + "'");
        v.push_back(x);
    }
    if (!v.empty() && v.back() == 0) throw MalformedPartition("zero part");
    return Partition(v);
}

std::vector<Partition> partitions_of(int size) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxp) {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rest, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(size, size);
    return out;
}

std::vector<Partition> partitions_up_to(int size) {
    std::vector<Partition> out;
    for (int s = 0; s <= size; ++s) {
        auto v = partitions_of(s);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

CornerData corners(const Partition& l, const ColorContext& ctx) {
    CornerData c;
    c.CC.assign(ctx.n, 0);
    c.CV.assign(ctx.n, 0);
    Partition lc = conjugate(l);
    for (int y = 1; y <= l[1] + 1; ++y) {
        int x = lc[y] + 1;
        if (y == 1 || lc[y - 1] > x - 1) {
            c.concave.emplace_back(x, y);
            c.CC[ctx.color(x, y)]++;
        }
    }
    for (int y = 1; y <= l[1]; ++y) {
        if (lc[y + 1] < lc[y]) {
            c.convex.emplace_back(lc[y], y);
            c.CV[ctx.color(lc[y], y)]++;
        }
    }
    return c;
}

bool is_colorless(const Partition& g, int n) {
    std::vector<int> cnt(n, 0);
    for (int x = 1; x <= g.length(); ++x)
        for (int y = 1; y <= g[x]; ++y) cnt[mod(x - y, n)]++;
    return std::all_of(cnt.begin(), cnt.end(), [&](int c) { return c == cnt[0]; });
}

std::vector<int> v_vec(const Partition& g, int n, int k) {
    auto c = corners(g, {n, k});
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = c.CC[i] - c.CV[i];
    return v;
}

std::string render_young(const Partition& l, const ColorContext& ctx) {
    // digits are box colors; [c] marks a convex corner, (c) a concave corner
    auto c = corners(l, ctx);
    std::set<std::pair<int, int>> cv(c.convex.begin(), c.convex.end()), cc(c.concave.begin(), c.concave.end());
    std::ostringstream os;
    if (l.empty()) os << "(empty)\n";
    for (int x = 1; x <= l.length() + 1; ++x) {
        std::string row;
        int width = (x <= l.length()) ? l[x] : 0;
        for (int y = 1; y <= std::max(width, l[x - 1 > 0 ? x - 1 : 1]) + 1; ++y) {
            int col = ctx.color(x, y);
            char d = col < 10 ? char('0' + col) : char('a' + col - 10);
            if (y <= width) row += cv.count({x, y}) ? std::string("[") + d + "]" : std::string(" ") + d + " ";
            else if (cc.count({x, y})) row += std::string("(") + d + ")";
            else row += "   ";
        }
        while (!row.empty() && row.back() == ' ') row.pop_back();
        os << row << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------- plane partitions

PlanePartition::PlanePartition(Partition a, Partition b, Partition g)
    : alpha_(std::move(a)), beta_(std::move(b)), gamma_(std::move(g)) {
    ac_ = conjugate(alpha_);
    bc_ = conjugate(beta_);
}

int PlanePartition::base(int x, int y) const {
    if (y <= gamma_[x]) return INF;
    return std::max(ac_[y], bc_[x]);
}

int PlanePartition::operator()(int x, int y) const {
    auto it = dev_.find({x, y});
    if (it != dev_.end()) return it->second;
    return base(x, y);
}

void PlanePartition::set(int x, int y, int h) {
    int b = base(x, y);
    if (b == INF) {
        if (h != INF) throw MalformedLayers("finite height inside the gamma region");
        return;
    }
    if (h < b) throw MalformedLayers("height below the minimal profile");
    if (h == b) dev_.erase({x, y});
    else dev_[{x, y}] = h;
}

int PlanePartition::degree() const {
    int d = 0;
    for (auto& [c, h] : dev_) d += h - base(c.first, c.second);
    return d;
}

int PlanePartition::extent_x() const {
    int e = std::max(beta_[1], gamma_.length());
    for (auto& [c, h] : dev_) e = std::max(e, c.first);
    return e + 1;
}

int PlanePartition::extent_y() const {
    int e = std::max(alpha_[1], gamma_[1]);
    for (auto& [c, h] : dev_) e = std::max(e, c.second);
    return e + 1;
}

bool PlanePartition::valid() const {
    int X = extent_x() + 1, Y = extent_y() + 1;
    for (int x = 1; x <= X; ++x)
        for (int y = 1; y <= Y; ++y) {
            int h = (*this)(x, y);
            if ((*this)(x + 1, y) > h || (*this)(x, y + 1) > h) return false;
        }
    return true;
}

int leg_depth(const Partition& a, const Partition& b) { return std::max(a.length(), b.length()) + 1; }

Partition minimal_layer(const Partition& a, const Partition& b, const Partition& g, int s) {
    return lambda_shift(g, a[s], b[s]);
}

PlanePartition plane_from_layers(const std::vector<Partition>& layers, const Partition& a, const Partition& b,
                                 const Partition& g) {
    PlanePartition p(a, b, g);
    int R = std::max((int)layers.size(), leg_depth(a, b));
    auto layer = [&](int s) { return s <= (int)layers.size() ? layers[s - 1] : minimal_layer(a, b, g, s); };
    int X = std::max(b[1], g.length()) + 1, Y = std::max(a[1], g[1]) + 1;
    for (int s = 1; s <= R; ++s) {
        Partition l = layer(s), lo = minimal_layer(a, b, g, s);
        for (int i = 1; i <= lo.length(); ++i)
            if (l[i] < lo[i]) throw MalformedLayers("layer " + std::to_string(s) + " misses the gamma region");
        X = std::max(X, b[s] + l.length() + 1);
        Y = std::max(Y, a[s] + l[1] + 1);
    }
    for (int x = 1; x <= X; ++x)
        for (int y = 1; y <= Y; ++y) {
            if (y <= g[x]) continue;
            int cnt = 0;
            for (int s = 1; s <= R; ++s) {
                Partition l = layer(s);
                bool in = y <= a[s] || x <= b[s] || l[x - b[s]] >= y - a[s];
                if (in) {
                    if (cnt != s - 1) throw MalformedLayers("layers are not nested");
                    ++cnt;
                }
            }
            // layers beyond R equal gamma, which holds no cell outside its region
            p.set(x, y, cnt);
        }
    if (!p.valid()) throw MalformedLayers("heights are not monotone");
    return p;
}

std::vector<Partition> layers_from_plane(const PlanePartition& p) {
    const Partition &a = p.alpha(), &b = p.beta(), &g = p.gamma();
    int S = leg_depth(a, b);
    for (auto& [c, h] : p.deviation()) S = std::max(S, h);
    int Y = p.extent_y() + 1;
    std::vector<Partition> out;
    for (int s = 1; s <= S; ++s) {
        std::vector<int> rows;
        for (int i = 1;; ++i) {
            int x = i + b[s];
            int len = 0;
            while (len < Y + 2 && p(x, len + 1) >= s) ++len;
            int part = len - a[s];
            if (part <= 0) break;
            rows.push_back(part);
        }
        out.push_back(Partition(rows));
    }
    while ((int)out.size() > leg_depth(a, b) && out.back() == g) out.pop_back();
    return out;
}

AddRemove addable_removable(const PlanePartition& p, int color, const ColorContext& ctx) {
    AddRemove r;
    int X = p.extent_x(), Y = p.extent_y();
    for (int x = 1; x <= X; ++x)
        for (int y = 1; y <= Y; ++y) {
            int h = p(x, y);
            if (h == PlanePartition::INF) continue;
            Box add{x, y, h + 1};
            if ((x == 1 || p(x - 1, y) > h) && (y == 1 || p(x, y - 1) > h) && add.color(ctx) == color)
                r.addable.push_back(add);
            Box rem{x, y, h};
            if (h >= 1 && h > p.base(x, y) && p(x + 1, y) < h && p(x, y + 1) < h && rem.color(ctx) == color)
                r.removable.push_back(rem);
        }
    return r;
}

bool is_special(const Partition& a, const Partition& b, const Partition& g, const Box& box) {
    Partition ac = conjugate(a), bc = conjugate(b), gc = conjugate(g);
    int A = ac[box.y], B = bc[box.x];
    bool outside = box.y >= g[box.x] + 1;
    bool c1 = box.z == A + 1 && A >= B && outside;
    bool c2 = box.z == B + 1 && B >= A && outside;
    bool c3 = (box.y == g[box.x] + 1 || box.x == gc[box.y] + 1) && box.z >= A + 1 && box.z >= B + 1;
    return c1 || c2 || c3;
}

std::set<Box> special_boxes(const Partition& a, const Partition& b, const Partition& g, int bound) {
    std::set<Box> s;
    for (int x = 1; x <= bound; ++x)
        for (int y = 1; y <= bound; ++y)
            for (int z = 1; z <= bound; ++z)
                if (is_special(a, b, g, {x, y, z})) s.insert({x, y, z});
    return s;
}

bool is_ray_start(const Partition& a, const Partition& b, const Partition& g, const Box& box) {
    PlanePartition m(a, b, g);
    if (box.z <= m(box.x, box.y)) return false;
    if (std::min({box.x, box.y, box.z}) == 1) return true;
    return box.z - 1 <= m(box.x - 1, box.y - 1);
}

std::string render_plane(const PlanePartition& p, const ColorContext& ctx) {
    // Height map (rows x, columns y; '*' is infinite) followed by the color of each top box.
    int X = p.extent_x(), Y = p.extent_y();
    std::ostringstream os;
    os << "heights\n";
    for (int x = 1; x <= X; ++x) {
        for (int y = 1; y <= Y; ++y) {
            int h = p(x, y);
            std::string c = h == PlanePartition::INF ? "*" : std::to_string(h);
            os << std::string(3 - std::min<size_t>(3, c.size()), ' ') << c;
        }
        os << '\n';
    }
    os << "top colors\n";
    for (int x = 1; x <= X; ++x) {
        for (int y = 1; y <= Y; ++y) {
            int h = p(x, y);
            if (h == PlanePartition::INF) os << "  *";
            else if (h == 0) os << "  .";
            else os << "  " << Box{x, y, h}.color(ctx);
        }
        os << '\n';
    }
    return os.str();
}

nlohmann::json to_json(const Partition& p) { return {{"parts", p.parts}}; }

Partition partition_from_json(const nlohmann::json& j) { return Partition(j.at("parts").get<std::vector<int>>()); }

nlohmann::json plane_to_json(const PlanePartition& p) {
    auto layers = nlohmann::json::array();
    for (auto& l : layers_from_plane(p)) layers.push_back(l.parts);
    return {{"alpha", p.alpha().parts}, {"beta", p.beta().parts}, {"gamma", p.gamma().parts}, {"layers", layers}};
}

PlanePartition plane_from_json(const nlohmann::json& j) {
    std::vector<Partition> layers;
    for (auto& l : j.at("layers")) layers.push_back(Partition(l.get<std::vector<int>>()));
    return plane_from_layers(layers, Partition(j.at("alpha").get<std::vector<int>>()),
                             Partition(j.at("beta").get<std::vector<int>>()),
                             Partition(j.at("gamma").get<std::vector<int>>()));
}

}  // namespace toro
