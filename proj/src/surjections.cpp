#include "pchaos/surjections.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "pchaos/cantor.hpp"

namespace pchaos {

namespace {

void require_binary(const Address& a) {
    if (a.alphabet() != 2) throw std::invalid_argument("Cantor maps take binary addresses");
}

// Extensions of a to length max(n, |a|), in lexicographic order.
std::vector<Address> extensions(const Address& a, std::size_t n) {
    if (a.size() >= n) return {a};
    std::vector<Address> out;
    for (const auto& tail : Address::all_binary(n - a.size())) out.push_back(a.concat(tail));
    return out;
}

Rational dyadic_value(const std::vector<std::uint8_t>& bits) {
    Rational v = 0;
    Rational place(1, 2);
    for (auto b : bits) {
        if (b) v += place;
        place /= 2;
    }
    return v;
}

std::uint64_t floor_to_u64(const Rational& r) {
    const mpz_class f = r.floor();
    if (f < 0) return 0;
    return f.get_ui();
}

}  // namespace

Region binary_expansion_map(const Address& prefix) {
    require_binary(prefix);
    const Rational lo = dyadic_value(prefix.symbols());
    return Region(Box(Interval(lo, lo + Rational::pow2(-static_cast<long>(prefix.size())))));
}

Region interleave_map(const Address& prefix) {
    require_binary(prefix);
    std::vector<std::uint8_t> xs;
    std::vector<std::uint8_t> ys;
    for (std::size_t i = 0; i < prefix.size(); ++i) (i % 2 == 0 ? xs : ys).push_back(prefix[i]);
    const Rational x = dyadic_value(xs);
    const Rational y = dyadic_value(ys);
    return Region(Box(Interval(x, x + Rational::pow2(-static_cast<long>(xs.size()))),
                      Interval(y, y + Rational::pow2(-static_cast<long>(ys.size())))));
}

ClopenBlock::ClopenBlock(std::vector<Address> cylinders) : cylinders_(std::move(cylinders)) {
    if (cylinders_.empty()) throw std::invalid_argument("clopen block needs at least one cylinder");
    for (const auto& c : cylinders_) require_binary(c);
    std::sort(cylinders_.begin(), cylinders_.end());
    for (std::size_t i = 0; i < cylinders_.size(); ++i) {
        for (std::size_t j = i + 1; j < cylinders_.size(); ++j) {
            if (comparable(cylinders_[i], cylinders_[j]))
                throw std::invalid_argument("cylinders '" + cylinders_[i].str() + "' and '" + cylinders_[j].str() +
                                            "' overlap");
        }
    }
}

ClopenBlock ClopenBlock::parse(std::string_view text) {
    std::vector<Address> cyl;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        if (item.empty()) throw std::invalid_argument("empty cylinder in block '" + std::string(text) + "' (write e)");
        cyl.push_back(item == "e" ? Address() : Address::parse(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return ClopenBlock(std::move(cyl));
}

Region ClopenBlock::region() const {
    std::vector<Box> boxes;
    for (const auto& c : cylinders_) boxes.push_back(cylinder(c).boxes().front());
    return Region(std::move(boxes));
}

bool ClopenBlock::contains_cylinder(const Address& a) const {
    return std::any_of(cylinders_.begin(), cylinders_.end(), [&](const Address& c) { return c.is_prefix_of(a); });
}

bool ClopenBlock::overlaps(const ClopenBlock& other) const {
    for (const auto& a : cylinders_) {
        for (const auto& b : other.cylinders_) {
            if (comparable(a, b)) return true;
        }
    }
    return false;
}

std::string ClopenBlock::str() const {
    std::string s;
    for (std::size_t i = 0; i < cylinders_.size(); ++i) {
        if (i) s += ",";
        s += cylinders_[i].empty() ? "e" : cylinders_[i].str();
    }
    return s;
}

std::vector<ClopenBlock> clopen_partition(std::size_t n) {
    if (n == 0) throw std::invalid_argument("clopen_partition needs n >= 1");
    std::vector<ClopenBlock> out;
    std::vector<std::uint8_t> ones;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        auto w = ones;
        w.push_back(0);
        out.emplace_back(std::vector<Address>{Address(std::move(w))});
        ones.push_back(1);
    }
    out.emplace_back(std::vector<Address>{Address(ones)});
    return out;
}

std::string_view to_string(CantorMapKind k) {
    switch (k) {
        case CantorMapKind::binary_expansion: return "binary_expansion";
        case CantorMapKind::interleave: return "interleave";
        case CantorMapKind::block_glued: return "block_glued";
        case CantorMapKind::bit_flip: return "bit_flip";
    }
    return "?";
}

std::string_view to_string(TargetKind k) {
    switch (k) {
        case TargetKind::interval: return "interval";
        case TargetKind::square: return "square";
        case TargetKind::cantor: return "cantor";
    }
    return "?";
}

CantorMap CantorMap::binary_expansion() { return {CantorMapKind::binary_expansion, TargetKind::interval}; }

CantorMap CantorMap::interleave() { return {CantorMapKind::interleave, TargetKind::square}; }

CantorMap CantorMap::bit_flip() {
    CantorMap f(CantorMapKind::bit_flip, TargetKind::cantor);
    f.rules_ = {{Address::parse("0"), Address::parse("1")}, {Address::parse("1"), Address::parse("0")}};
    return f;
}

std::vector<Address> CantorMap::image_cylinders(const Address& prefix) const {
    require_binary(prefix);
    if (target_ != TargetKind::cantor) throw std::logic_error("image_cylinders needs a Cantor-valued map");
    std::vector<Address> out;
    for (const auto& r : rules_) {
        if (r.source.is_prefix_of(prefix)) return {r.target.concat(prefix.suffix_from(r.source.size()))};
        if (prefix.is_prefix_of(r.source)) out.push_back(r.target);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    // Drop cylinders already inside a shorter one.
    std::vector<Address> kept;
    for (const auto& a : out) {
        if (std::none_of(kept.begin(), kept.end(), [&](const Address& k) { return k.is_prefix_of(a); }))
            kept.push_back(a);
    }
    return kept;
}

Region CantorMap::evaluate(const Address& prefix) const {
    switch (target_) {
        case TargetKind::interval: return binary_expansion_map(prefix);
        case TargetKind::square: return interleave_map(prefix);
        case TargetKind::cantor: break;
    }
    std::vector<Box> boxes;
    for (const auto& c : image_cylinders(prefix)) boxes.push_back(cylinder(c).boxes().front());
    return Region(std::move(boxes));
}

Rational CantorMap::modulus(std::size_t n) const {
    const auto ln = static_cast<long>(n);
    switch (kind_) {
        case CantorMapKind::binary_expansion: return Rational::pow2(-ln);
        case CantorMapKind::interleave: return Rational::pow2(-(ln / 2));
        case CantorMapKind::block_glued:
        case CantorMapKind::bit_flip: break;
    }
    std::size_t longest = 0;
    long shift = 0;
    bool first = true;
    for (const auto& r : rules_) {
        longest = std::max(longest, r.source.size());
        const long s = static_cast<long>(r.target.size()) - static_cast<long>(r.source.size());
        shift = first ? s : std::min(shift, s);
        first = false;
    }
    const long e = ln + shift;
    if (n < longest || e <= 0) return 1;
    return Rational::pow3(-e);
}

CantorMap block_surjection(std::vector<ClopenBlock> a, std::vector<ClopenBlock> b) {
    if (a.empty()) throw std::invalid_argument("block_surjection needs at least one block");
    if (a.size() != b.size()) throw std::invalid_argument("block_surjection: block counts differ");
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a[i].overlaps(a[j]))
                throw std::invalid_argument("domain blocks " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
        }
    }
    CantorMap f(CantorMapKind::block_glued, TargetKind::cantor);
    std::vector<Address> covered;
    for (const auto& blk : a) covered.insert(covered.end(), blk.cylinders().begin(), blk.cylinders().end());
    if (auto rest = complement_cylinders(covered); !rest.empty()) {
        a.emplace_back(std::move(rest));
        b.emplace_back(std::vector<Address>{Address()});
        f.padded_ = true;
    }

    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& src = a[i].cylinders();
        const auto& dst = b[i].cylinders();
        const std::size_t m = src.size();
        const std::size_t r = dst.size();
        if (m >= r) {
            for (std::size_t j = 0; j < m; ++j) f.rules_.push_back({src[j], dst[std::min(j, r - 1)]});
            continue;
        }
        for (std::size_t j = 0; j + 1 < m; ++j) f.rules_.push_back({src[j], dst[j]});
        const auto stairs = clopen_partition(r - m + 1);
        for (std::size_t k = 0; k < stairs.size(); ++k)
            f.rules_.push_back({src[m - 1].concat(stairs[k].cylinders().front()), dst[m - 1 + k]});
    }
    f.domain_blocks_ = std::move(a);
    f.target_blocks_ = std::move(b);
    return f;
}

CheckReport verify_block_surjection(const CantorMap& f, const std::vector<ClopenBlock>& a,
                                    const std::vector<ClopenBlock>& b, std::size_t n) {
    CheckReport rep(std::string(to_string(f.kind())) + " map, " + std::to_string(a.size()) + " blocks, depth " +
                    std::to_string(n));
    if (f.target() != TargetKind::cantor) throw std::invalid_argument("verify_block_surjection needs a Cantor-valued map");
    if (a.size() != b.size()) throw std::invalid_argument("verify_block_surjection: block counts differ");

    std::size_t inside_count = 0;
    std::string inside_fail;
    std::size_t cover_count = 0;
    std::string cover_fail;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Region target = b[i].region();
        std::unordered_set<std::string> images;
        std::set<std::string> sorted_images;
        for (const auto& c : a[i].cylinders()) {
            for (const auto& x : extensions(c, n)) {
                ++inside_count;
                const auto cyl = f.image_cylinders(x);
                const bool symbolic = std::all_of(cyl.begin(), cyl.end(),
                                                  [&](const Address& y) { return b[i].contains_cylinder(y); });
                if ((!symbolic || !subset(f.evaluate(x), target)) && inside_fail.empty())
                    inside_fail = "block " + std::to_string(i) + ": image of '" + x.str() + "' leaves B";
                for (const auto& y : cyl) {
                    images.insert(y.str());
                    sorted_images.insert(y.str());
                }
            }
        }
        // Middle-third cylinders meet exactly when their words are comparable.
        for (const auto& d : b[i].cylinders()) {
            for (const auto& y : extensions(d, n)) {
                ++cover_count;
                const std::string w = y.str();
                bool met = false;
                for (std::size_t len = 0; len <= w.size() && !met; ++len) met = images.count(w.substr(0, len)) > 0;
                if (!met) {
                    auto it = sorted_images.lower_bound(w);
                    met = it != sorted_images.end() && it->compare(0, w.size(), w) == 0;
                }
                if (!met && cover_fail.empty())
                    cover_fail = "block " + std::to_string(i) + ": cylinder '" + w + "' missed";
            }
        }
    }
    rep.add("image_in_block", inside_fail.empty(),
            inside_fail.empty() ? std::to_string(inside_count) + " depth-" + std::to_string(n) + " cylinders inside"
                                : inside_fail);
    rep.add("block_covered", cover_fail.empty(),
            cover_fail.empty() ? std::to_string(cover_count) + " target cylinders met, eps = " + f.modulus(n).str()
                               : cover_fail);
    return rep;
}

CheckReport verify_covering(const CantorMap& f, std::size_t n) {
    if (f.target() == TargetKind::cantor) throw std::invalid_argument("verify_covering needs an interval or square map");
    if (n > 20) throw std::invalid_argument("verify_covering depth capped at 20");
    CheckReport rep(std::string(to_string(f.kind())) + " map, depth " + std::to_string(n));
    const auto prefixes = Address::all_binary(n);
    std::vector<Box> boxes;
    boxes.reserve(prefixes.size());
    for (const auto& p : prefixes) boxes.push_back(f.evaluate(p).boxes().front());
    const Region unit = Region::unit(f.target() == TargetKind::square ? 2 : 1);
    const bool covers = Region(boxes) == unit;
    rep.add("covers_target", covers, std::to_string(boxes.size()) + " enclosures, union " +
                                         (covers ? "equals the target" : "misses part of the target"));

    bool nested = true;
    bool modulus = true;
    std::string note;
    for (std::size_t len = 0; len < n && nested && modulus; ++len) {
        for (const auto& p : Address::all_binary(len)) {
            const Region parent = f.evaluate(p);
            if (!(diameter(parent) <= f.modulus(len))) {
                modulus = false;
                note = "prefix '" + p.str() + "' exceeds modulus";
                break;
            }
            if (!subset(f.evaluate(p.child(0)), parent) || !subset(f.evaluate(p.child(1)), parent)) {
                nested = false;
                note = "children of '" + p.str() + "' leave its enclosure";
                break;
            }
        }
    }
    rep.add("nested_within_modulus", nested && modulus,
            note.empty() ? "all prefixes below depth " + std::to_string(n) : note);
    return rep;
}

Box hilbert_cell(std::size_t k, std::uint64_t j) {
    if (k > 31) throw std::invalid_argument("hilbert_cell depth capped at 31");
    const std::uint64_t side = std::uint64_t{1} << k;
    if (j >= side * side) throw std::invalid_argument("hilbert_cell index out of range");
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    std::uint64_t t = j;
    for (std::uint64_t s = 1; s < side; s *= 2) {
        const std::uint64_t rx = 1 & (t / 2);
        const std::uint64_t ry = 1 & (t ^ rx);
        if (ry == 0) {
            if (rx == 1) {
                x = s - 1 - x;
                y = s - 1 - y;
            }
            std::swap(x, y);
        }
        x += s * rx;
        y += s * ry;
        t /= 4;
    }
    const Rational w = Rational::pow2(-static_cast<long>(k));
    const Rational bx = Rational(static_cast<long>(x)) * w;
    const Rational by = Rational(static_cast<long>(y)) * w;
    return Box(Interval(bx, bx + w), Interval(by, by + w));
}

Region hilbert_enclosure(const Interval& t_cell) {
    const Rational len = t_cell.length();
    if (len.sign() <= 0 || len.numerator() != 1) throw std::invalid_argument("hilbert_enclosure: not a 4-adic cell");
    const mpz_class den = len.denominator();
    std::size_t k = 0;
    mpz_class p = 1;
    while (p < den) {
        p *= 4;
        ++k;
    }
    if (p != den) throw std::invalid_argument("hilbert_enclosure: cell length is not a power of 1/4");
    const Rational idx = t_cell.lo / len;
    if (!idx.is_integer() || idx.sign() < 0 || t_cell.hi > 1)
        throw std::invalid_argument("hilbert_enclosure: cell not aligned inside [0,1]");
    return Region(hilbert_cell(k, idx.numerator().get_ui()));
}

WaypointMap::WaypointMap(TargetKind target, std::vector<std::pair<Rational, Point>> waypoints)
    : target_(target), waypoints_(std::move(waypoints)) {
    if (target_ == TargetKind::cantor) throw std::invalid_argument("waypoint maps target the interval or the square");
    if (waypoints_.empty()) throw std::invalid_argument("waypoint map needs at least one waypoint");
    const std::size_t d = target_ == TargetKind::square ? 2 : 1;
    for (std::size_t i = 0; i < waypoints_.size(); ++i) {
        const auto& [x, y] = waypoints_[i];
        if (x < 0 || x > 1) throw std::invalid_argument("waypoint parameter outside [0,1]");
        if (i > 0 && !(waypoints_[i - 1].first < x)) throw std::invalid_argument("waypoints out of order");
        if (y.dim() != d) throw std::invalid_argument("waypoint target has the wrong dimension");
    }
}

namespace {

Point sweep_start(TargetKind t) { return t == TargetKind::square ? Point(0, 0) : Point(0); }
Point sweep_end(TargetKind t) { return t == TargetKind::square ? Point(1, 0) : Point(0); }

void push_thirds(std::vector<Segment>& out, TargetKind t, const Rational& lo, const Rational& hi, const Point& from,
                 const Point& to) {
    const Rational a = lo + (hi - lo) / 3;
    const Rational b = lo + 2 * (hi - lo) / 3;
    out.push_back({Segment::Kind::linear, lo, a, from, sweep_start(t)});
    out.push_back({Segment::Kind::sweep, a, b, sweep_start(t), sweep_end(t)});
    out.push_back({Segment::Kind::linear, b, hi, sweep_end(t), to});
}

Point lerp(const Point& a, const Point& b, const Rational& s) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < a.dim(); ++i) c.push_back(a[i] + s * (b[i] - a[i]));
    return Point(std::move(c));
}

}  // namespace

WaypointSurjection::WaypointSurjection(WaypointMap w) : map_(std::move(w)) {
    const auto t = map_.target();
    const auto& wp = map_.waypoints();
    const Rational& first = wp.front().first;
    const Rational& last = wp.back().first;
    const bool loop_after = wp.size() == 1 && last < 1;
    const bool loop_before = wp.size() == 1 && !loop_after;

    if (first > 0) {
        if (loop_before)
            push_thirds(segments_, t, 0, first, wp.front().second, wp.front().second);
        else
            segments_.push_back({Segment::Kind::constant, 0, first, wp.front().second, wp.front().second});
    }
    for (std::size_t i = 0; i + 1 < wp.size(); ++i)
        push_thirds(segments_, t, wp[i].first, wp[i + 1].first, wp[i].second, wp[i + 1].second);
    if (last < 1) {
        if (loop_after)
            push_thirds(segments_, t, last, 1, wp.back().second, wp.back().second);
        else
            segments_.push_back({Segment::Kind::constant, last, 1, wp.back().second, wp.back().second});
    }
}

std::optional<Point> WaypointSurjection::exact_value(const Rational& t) const {
    if (t < 0 || t > 1) throw std::invalid_argument("parameter outside [0,1]");
    for (const auto& seg : segments_) {
        if (t < seg.lo || t > seg.hi) continue;
        const Rational s = (t - seg.lo) / (seg.hi - seg.lo);
        switch (seg.kind) {
            case Segment::Kind::constant: return seg.from;
            case Segment::Kind::linear: return lerp(seg.from, seg.to, s);
            case Segment::Kind::sweep:
                if (s.is_zero()) return seg.from;
                if (s == 1) return seg.to;
                if (map_.target() == TargetKind::interval) return Point(s <= Rational(1, 2) ? 2 * s : 2 - 2 * s);
                return std::nullopt;
        }
    }
    throw std::logic_error("segments do not cover the parameter interval");
}

Region WaypointSurjection::evaluate(const Rational& t, std::size_t depth) const {
    if (auto p = exact_value(t)) {
        std::vector<Interval> axes;
        for (const auto& c : p->coords()) axes.emplace_back(c, c);
        return Region(Box(std::move(axes)));
    }
    if (depth > 31) throw std::invalid_argument("square sweep depth capped at 31");
    for (const auto& seg : segments_) {
        if (t < seg.lo || t > seg.hi) continue;
        const Rational s = (t - seg.lo) / (seg.hi - seg.lo);
        const std::uint64_t cells = std::uint64_t{1} << (2 * depth);
        const std::uint64_t j = std::min(floor_to_u64(s * Rational::pow2(static_cast<long>(2 * depth))), cells - 1);
        return Region(hilbert_cell(depth, j));
    }
    throw std::logic_error("segments do not cover the parameter interval");
}

WaypointSurjection waypoint_surjection(WaypointMap w) { return WaypointSurjection(std::move(w)); }

CheckReport verify_waypoints(const WaypointSurjection& f, std::size_t bits) {
    const auto target = f.waypoint_map().target();
    CheckReport rep("waypoint map onto " + std::string(to_string(target)) + " with " +
                    std::to_string(f.waypoint_map().waypoints().size()) +
                    (f.waypoint_map().waypoints().size() == 1 ? " waypoint" : " waypoints"));
    if (bits > 10) throw std::invalid_argument("verify_waypoints resolution capped at 2^-10");

    bool pinned = true;
    std::string pin_note;
    for (const auto& [x, y] : f.waypoint_map().waypoints()) {
        const auto v = f.exact_value(x);
        std::vector<Interval> axes;
        for (const auto& c : y.coords()) axes.emplace_back(c, c);
        if (!v || *v != y || f.evaluate(x, bits) != Region(Box(axes))) {
            pinned = false;
            pin_note = "f(" + x.str() + ") != " + y.str();
            break;
        }
        pin_note += (pin_note.empty() ? "" : " ") + std::string("f(") + x.str() + ")=" + y.str();
    }
    rep.add("waypoints_exact", pinned, pin_note);

    const std::uint64_t side = std::uint64_t{1} << bits;
    bool covered = true;
    std::size_t sweeps = 0;
    std::string cover_note;
    for (const auto& seg : f.segments()) {
        if (seg.kind != Segment::Kind::sweep) continue;
        ++sweeps;
        const Rational width = seg.hi - seg.lo;
        std::vector<bool> hit;
        if (target == TargetKind::interval) {
            hit.assign(side, false);
            const std::uint64_t steps = 2 * side;
            for (std::uint64_t m = 0; m <= steps; ++m) {
                const Rational t = seg.lo + width * Rational(static_cast<long>(m), static_cast<long>(steps));
                const Rational v = f.evaluate(t, bits).boxes().front()[0].lo;
                hit[std::min(floor_to_u64(v * Rational(static_cast<long>(side))), side - 1)] = true;
            }
        } else {
            hit.assign(side * side, false);
            const std::uint64_t cells = side * side;
            for (std::uint64_t j = 0; j < cells; ++j) {
                const Rational t =
                    seg.lo + width * Rational(static_cast<long>(2 * j + 1), static_cast<long>(2 * cells));
                const Box b = f.evaluate(t, bits).boxes().front();
                const auto ix = floor_to_u64(b[0].lo * Rational(static_cast<long>(side)));
                const auto iy = floor_to_u64(b[1].lo * Rational(static_cast<long>(side)));
                hit[std::min(iy, side - 1) * side + std::min(ix, side - 1)] = true;
            }
        }
        if (std::find(hit.begin(), hit.end(), false) != hit.end() && covered) {
            covered = false;
            cover_note = "sweep on [" + seg.lo.str() + "," + seg.hi.str() + "] misses a cell";
        }
    }
    if (sweeps == 0) {
        covered = false;
        cover_note = "no sweep segment";
    }
    if (covered)
        cover_note = std::to_string(sweeps) + (sweeps == 1 ? " sweep meets" : " sweeps each meet") + " every cell of side " + Rational::pow2(-static_cast<long>(bits)).str();
    rep.add("sweeps_cover", covered, cover_note);

    bool nested = true;
    std::string nest_note = "enclosures nest and halve through depth " + std::to_string(bits);
    for (const auto& seg : f.segments()) {
        for (long m = 0; m <= 16 && nested; ++m) {
            const Rational t = seg.lo + (seg.hi - seg.lo) * Rational(m, 16) * Rational(5, 7);
            Region prev = f.evaluate(t, 0);
            for (std::size_t k = 1; k <= bits; ++k) {
                Region cur = f.evaluate(t, k);
                if (!subset(cur, prev) || diameter(cur) * 2 > diameter(prev)) {
                    nested = false;
                    nest_note = "enclosure at t=" + t.str() + " fails to nest at depth " + std::to_string(k);
                    break;
                }
                prev = std::move(cur);
            }
        }
    }
    rep.add("enclosures_nest", nested, nest_note);
    return rep;
}

}  // namespace pchaos
