#include "pchaos/geometry.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pchaos {

Point::Point(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.empty() || coords_.size() > 2)
        throw std::invalid_argument("point dimension must be 1 or 2");
    for (const auto& c : coords_) {
        if (c < 0 || c > 1) throw std::invalid_argument("point coordinate outside [0,1]: " + c.str());
    }
}

std::string Point::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ",";
        s += coords_[i].str();
    }
    return s + ")";
}

std::ostream& operator<<(std::ostream& os, const Point& p) { return os << p.str(); }

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw std::invalid_argument("interval with lo > hi");
}

Box::Box(std::vector<Interval> axes) : axes_(std::move(axes)) {
    if (axes_.empty() || axes_.size() > 2) throw std::invalid_argument("box dimension must be 1 or 2");
}

Box Box::unit(std::size_t dim) { return Box(std::vector<Interval>(dim, Interval(0, 1))); }

Box Box::around(const Point& c, const Rational& radius) {
    std::vector<Interval> axes;
    axes.reserve(c.dim());
    for (const auto& x : c.coords()) axes.emplace_back(x - radius, x + radius);
    return Box(std::move(axes));
}

Point Box::lo_corner() const {
    std::vector<Rational> c;
    for (const auto& a : axes_) c.push_back(a.lo);
    return Point(std::move(c));
}

Point Box::hi_corner() const {
    std::vector<Rational> c;
    for (const auto& a : axes_) c.push_back(a.hi);
    return Point(std::move(c));
}

Point Box::midpoint() const {
    std::vector<Rational> c;
    for (const auto& a : axes_) c.push_back((a.lo + a.hi) / 2);
    return Point(std::move(c));
}

Rational Box::diameter() const {
    Rational d = 0;
    for (const auto& a : axes_) d = max(d, a.length());
    return d;
}

bool Box::contains(const Point& p) const {
    if (p.dim() != dim()) throw std::invalid_argument("dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!axes_[i].contains(p[i])) return false;
    }
    return true;
}

bool Box::contains(const Box& b) const {
    for (std::size_t i = 0; i < dim(); ++i) {
        if (b.axes_[i].lo < axes_[i].lo || b.axes_[i].hi > axes_[i].hi) return false;
    }
    return true;
}

bool Box::meets(const Box& b) const {
    for (std::size_t i = 0; i < dim(); ++i) {
        if (b.axes_[i].hi < axes_[i].lo || axes_[i].hi < b.axes_[i].lo) return false;
    }
    return true;
}

std::optional<Box> Box::intersect(const Box& b) const {
    if (b.dim() != dim()) throw std::invalid_argument("dimension mismatch");
    if (!meets(b)) return std::nullopt;
    std::vector<Interval> axes;
    for (std::size_t i = 0; i < dim(); ++i)
        axes.emplace_back(max(axes_[i].lo, b.axes_[i].lo), min(axes_[i].hi, b.axes_[i].hi));
    return Box(std::move(axes));
}

std::strong_ordering operator<=>(const Box& a, const Box& b) {
    for (std::size_t i = 0; i < a.axes_.size() && i < b.axes_.size(); ++i) {
        if (auto c = a.axes_[i].lo <=> b.axes_[i].lo; c != 0) return c;
    }
    for (std::size_t i = 0; i < a.axes_.size() && i < b.axes_.size(); ++i) {
        if (auto c = a.axes_[i].hi <=> b.axes_[i].hi; c != 0) return c;
    }
    return a.axes_.size() <=> b.axes_.size();
}

namespace {

// Merge closed intervals into sorted maximal components.
std::vector<Interval> merge_intervals(std::vector<Interval> v) {
    std::sort(v.begin(), v.end());
    std::vector<Interval> out;
    for (auto& iv : v) {
        if (!out.empty() && iv.lo <= out.back().hi) {
            if (out.back().hi < iv.hi) out.back().hi = iv.hi;
        } else {
            out.push_back(std::move(iv));
        }
    }
    return out;
}

// An elementary piece of the x-axis: a breakpoint {lo} (lo == hi) or the open
// interval (lo, hi) between consecutive breakpoints.
struct Piece {
    Rational lo;
    Rational hi;
    bool is_point;
};

std::vector<Piece> x_pieces(const std::vector<Rational>& breaks) {
    std::vector<Piece> out;
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        out.push_back({breaks[i], breaks[i], true});
        if (i + 1 < breaks.size()) out.push_back({breaks[i], breaks[i + 1], false});
    }
    return out;
}

std::vector<Rational> x_breaks(const std::vector<const std::vector<Box>*>& sets) {
    std::vector<Rational> b;
    for (const auto* boxes : sets) {
        for (const auto& box : *boxes) {
            b.push_back(box[0].lo);
            b.push_back(box[0].hi);
        }
    }
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
}

// y-section of a 2-d box union over one x-piece, as merged components.
std::vector<Interval> section(const std::vector<Box>& boxes, const Piece& p) {
    std::vector<Interval> ys;
    for (const auto& b : boxes) {
        if (b[0].lo <= p.lo && p.hi <= b[0].hi) ys.push_back(b[1]);
    }
    return merge_intervals(std::move(ys));
}

bool intervals_subset(const std::vector<Interval>& a, const std::vector<Interval>& merged_b) {
    for (const auto& iv : a) {
        const bool inside = std::any_of(merged_b.begin(), merged_b.end(), [&](const Interval& c) {
            return c.lo <= iv.lo && iv.hi <= c.hi;
        });
        if (!inside) return false;
    }
    return true;
}

std::vector<Box> canonicalize(std::vector<Box> boxes) {
    if (boxes.empty()) throw std::invalid_argument("region must contain at least one box");
    const std::size_t d = boxes.front().dim();
    for (const auto& b : boxes) {
        if (b.dim() != d) throw std::invalid_argument("region boxes differ in dimension");
    }
    if (boxes.size() == 1) return boxes;

    if (d == 1) {
        std::vector<Interval> ivs;
        for (const auto& b : boxes) ivs.push_back(b[0]);
        std::vector<Box> out;
        for (auto& iv : merge_intervals(std::move(ivs))) out.emplace_back(std::move(iv));
        return out;
    }

    const auto pieces = x_pieces(x_breaks({&boxes}));
    std::vector<Box> out;
    std::size_t i = 0;
    while (i < pieces.size()) {
        auto sec = section(boxes, pieces[i]);
        std::size_t j = i + 1;
        while (j < pieces.size() && !sec.empty() && section(boxes, pieces[j]) == sec) ++j;
        if (!sec.empty()) {
            const Interval xs(pieces[i].lo, pieces[j - 1].hi);
            for (auto& ys : sec) out.emplace_back(xs, std::move(ys));
        }
        i = j;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Region::Region(std::vector<Box> boxes) : boxes_(canonicalize(std::move(boxes))) {}

Region::Region(Box box) : Region(std::vector<Box>{std::move(box)}) {}

bool Region::contains(const Point& p) const {
    return std::any_of(boxes_.begin(), boxes_.end(), [&](const Box& b) { return b.contains(p); });
}

Box Region::bounding_box() const {
    std::vector<Interval> axes = boxes_.front().axes();
    for (const auto& b : boxes_) {
        for (std::size_t i = 0; i < axes.size(); ++i) {
            axes[i].lo = min(axes[i].lo, b[i].lo);
            axes[i].hi = max(axes[i].hi, b[i].hi);
        }
    }
    return Box(std::move(axes));
}

Point Region::lex_min() const {
    Point best = boxes_.front().lo_corner();
    for (const auto& b : boxes_) best = std::min(best, b.lo_corner());
    return best;
}

Point Region::lex_max() const {
    Point best = boxes_.front().hi_corner();
    for (const auto& b : boxes_) best = std::max(best, b.hi_corner());
    return best;
}

Point Region::first_midpoint() const { return boxes_.front().midpoint(); }

std::string Region::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < boxes_.size(); ++i) {
        if (i) os << " u ";
        for (std::size_t a = 0; a < boxes_[i].dim(); ++a) {
            if (a) os << "x";
            os << "[" << boxes_[i][a].lo << "," << boxes_[i][a].hi << "]";
        }
    }
    return os.str() + "}";
}

std::ostream& operator<<(std::ostream& os, const Region& r) { return os << r.str(); }

Rational distance(const Point& p, const Point& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("distance: dimension mismatch");
    Rational d = 0;
    for (std::size_t i = 0; i < p.dim(); ++i) d = max(d, (p[i] - q[i]).abs());
    return d;
}

Rational diameter(const Region& r) {
    Rational d = 0;
    const auto& bs = r.boxes();
    for (std::size_t i = 0; i < bs.size(); ++i) {
        for (std::size_t j = i; j < bs.size(); ++j) {
            for (std::size_t a = 0; a < r.dim(); ++a)
                d = max(d, max(bs[i][a].hi, bs[j][a].hi) - min(bs[i][a].lo, bs[j][a].lo));
        }
    }
    return d;
}

Rational gap(const Region& a, const Region& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("gap: dimension mismatch");
    std::optional<Rational> best;
    for (const auto& x : a.boxes()) {
        for (const auto& y : b.boxes()) {
            Rational g = 0;
            for (std::size_t i = 0; i < a.dim(); ++i) {
                if (x[i].hi < y[i].lo) g = max(g, y[i].lo - x[i].hi);
                else if (y[i].hi < x[i].lo) g = max(g, x[i].lo - y[i].hi);
            }
            if (!best || g < *best) best = g;
        }
    }
    return *best;
}

std::optional<Region> intersect(const Region& a, const Box& b) {
    std::vector<Box> parts;
    for (const auto& x : a.boxes()) {
        if (auto c = x.intersect(b)) parts.push_back(std::move(*c));
    }
    if (parts.empty()) return std::nullopt;
    return Region(std::move(parts));
}

std::optional<Region> intersect(const Region& a, const Region& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("intersect: dimension mismatch");
    std::vector<Box> parts;
    for (const auto& x : a.boxes()) {
        for (const auto& y : b.boxes()) {
            if (auto c = x.intersect(y)) parts.push_back(std::move(*c));
        }
    }
    if (parts.empty()) return std::nullopt;
    return Region(std::move(parts));
}

Region unite(const Region& a, const Region& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("unite: dimension mismatch");
    std::vector<Box> all = a.boxes();
    all.insert(all.end(), b.boxes().begin(), b.boxes().end());
    return Region(std::move(all));
}

bool disjoint(const Region& a, const Region& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("disjoint: dimension mismatch");
    for (const auto& x : a.boxes()) {
        for (const auto& y : b.boxes()) {
            if (x.meets(y)) return false;
        }
    }
    return true;
}

bool subset(const Region& a, const Region& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("subset: dimension mismatch");
    if (a.dim() == 1) {
        std::vector<Interval> ivs;
        for (const auto& box : a.boxes()) ivs.push_back(box[0]);
        std::vector<Interval> comps;
        for (const auto& box : b.boxes()) comps.push_back(box[0]);
        return intervals_subset(ivs, comps);
    }
    if (std::any_of(a.boxes().begin(), a.boxes().end(), [&](const Box& x) {
            return std::none_of(b.boxes().begin(), b.boxes().end(),
                                [&](const Box& y) { return x.meets(y); });
        })) {
        return false;
    }
    for (const auto& p : x_pieces(x_breaks({&a.boxes(), &b.boxes()}))) {
        if (!intervals_subset(section(a.boxes(), p), section(b.boxes(), p))) return false;
    }
    return true;
}

}  // namespace pchaos
