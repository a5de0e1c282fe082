#include "pchaos/primitive_chaos.hpp"

#include <stdexcept>

#include "pchaos/cantor.hpp"

namespace pchaos {

std::string_view to_string(SystemKind k) {
    switch (k) {
        case SystemKind::shift_cantor: return "shift_cantor";
        case SystemKind::doubling: return "doubling";
        case SystemKind::tent: return "tent";
        case SystemKind::baker: return "baker";
    }
    return "?";
}

SystemKind parse_system_kind(std::string_view name) {
    if (name == "shift_cantor") return SystemKind::shift_cantor;
    if (name == "doubling") return SystemKind::doubling;
    if (name == "tent") return SystemKind::tent;
    if (name == "baker") return SystemKind::baker;
    throw std::invalid_argument("unknown system '" + std::string(name) + "'");
}

Point AffineBranch::apply(const Point& p) const {
    if (p.dim() != scale.size()) throw std::invalid_argument("affine branch: dimension mismatch");
    std::vector<Rational> c;
    for (std::size_t i = 0; i < p.dim(); ++i) c.push_back(scale[i] * p[i] + offset[i]);
    return Point(std::move(c));
}

Box AffineBranch::preimage(const Box& b) const {
    std::vector<Interval> axes;
    for (std::size_t i = 0; i < b.dim(); ++i) {
        Rational u = (b[i].lo - offset[i]) / scale[i];
        Rational v = (b[i].hi - offset[i]) / scale[i];
        if (v < u) std::swap(u, v);
        axes.emplace_back(std::move(u), std::move(v));
    }
    return Box(std::move(axes));
}

AffineBranch AffineBranch::after(const AffineBranch& first) const {
    AffineBranch out;
    for (std::size_t i = 0; i < scale.size(); ++i) {
        out.scale.push_back(scale[i] * first.scale[i]);
        out.offset.push_back(scale[i] * first.offset[i] + offset[i]);
    }
    return out;
}

Point ChaosSystem::step(const Point& p) const {
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (events[i].contains(p)) return laws[i].apply(p);
    }
    throw std::invalid_argument("point " + p.str() + " lies in no event");
}

ChaosSystem make_system(SystemKind kind) {
    const Rational half(1, 2);
    switch (kind) {
        case SystemKind::shift_cantor:
            return {kind,
                    Region::unit(1),
                    {cylinder(Address::parse("0")), cylinder(Address::parse("1"))},
                    {{{3}, {0}}, {{3}, {-2}}}};
        case SystemKind::doubling:
            return {kind,
                    Region::unit(1),
                    {Region(Box(Interval(0, half))), Region(Box(Interval(half, 1)))},
                    {{{2}, {0}}, {{2}, {-1}}}};
        case SystemKind::tent:
            return {kind,
                    Region::unit(1),
                    {Region(Box(Interval(0, half))), Region(Box(Interval(half, 1)))},
                    {{{2}, {0}}, {{-2}, {2}}}};
        case SystemKind::baker:
            return {kind,
                    Region::unit(2),
                    {Region(Box(Interval(0, half), Interval(0, 1))), Region(Box(Interval(half, 1), Interval(0, 1)))},
                    {{{2, half}, {0, 0}}, {{2, half}, {-1, half}}}};
    }
    throw std::invalid_argument("unknown system kind");
}

namespace {

void check_word(const ChaosSystem& s, const Address& word) {
    if (word.empty()) throw std::invalid_argument("word must be nonempty");
    for (auto sym : word.symbols()) {
        if (sym >= s.symbols())
            throw std::invalid_argument("symbol " + std::to_string(sym) + " names no event of " +
                                        std::string(to_string(s.kind)));
    }
}

std::optional<Region> pull_back(const ChaosSystem& s, std::size_t event, const Region& target) {
    std::vector<Box> pre;
    for (const auto& b : target.boxes()) pre.push_back(s.laws[event].preimage(b));
    return intersect(s.events[event], Region(std::move(pre)));
}

Region cell_of(const ChaosSystem& s, const Address& word) { return realize_witness(s, word).enclosure; }

}  // namespace

WitnessResult realize_witness(const ChaosSystem& s, const Address& word) {
    check_word(s, word);
    Region k = s.events[word[word.size() - 1]];
    for (std::size_t i = word.size() - 1; i-- > 0;) {
        auto next = pull_back(s, word[i], k);
        if (!next) throw std::logic_error("empty witness set for word '" + word.str() + "'");
        k = std::move(*next);
    }
    Point x = s.kind == SystemKind::shift_cantor ? k.lex_min() : k.first_midpoint();
    std::vector<Point> orbit{x};
    for (std::size_t i = 0; i + 1 < word.size(); ++i) orbit.push_back(s.laws[word[i]].apply(orbit.back()));
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!s.events[word[i]].contains(orbit[i]))
            throw std::logic_error("orbit of the witness for '" + word.str() + "' leaves event " +
                                   std::to_string(word[i]) + " at step " + std::to_string(i));
    }
    return {s.kind, word, std::move(k), std::move(x), std::move(orbit)};
}

PeriodicPoint periodic_point(const ChaosSystem& s, const Address& word) {
    check_word(s, word);
    PeriodicPoint out;
    out.word = word.primitive_root();
    out.reduced = out.word.size() != word.size();
    const Address& w = out.word;
    const std::size_t n = w.size();

    AffineBranch composed = s.laws[w[0]];
    for (std::size_t i = 1; i < n; ++i) composed = s.laws[w[i]].after(composed);
    std::vector<Rational> fixed;
    for (std::size_t a = 0; a < s.dim(); ++a) {
        if (composed.scale[a] == 1) throw std::runtime_error("composed branch of '" + w.str() + "' has unit slope");
        fixed.push_back(composed.offset[a] / (1 - composed.scale[a]));
        if (fixed.back() < 0 || fixed.back() > 1)
            throw std::runtime_error("fixed point of '" + w.str() + "' lies outside the space");
    }
    out.point = Point(std::move(fixed));

    out.orbit = {out.point};
    for (std::size_t i = 0; i < n; ++i) {
        if (!s.events[w[i]].contains(out.orbit.back()))
            throw std::runtime_error("periodic orbit of '" + w.str() + "' leaves event at step " + std::to_string(i));
        out.orbit.push_back(s.laws[w[i]].apply(out.orbit.back()));
    }
    if (out.orbit.back() != out.point) throw std::runtime_error("orbit of '" + w.str() + "' does not close");
    out.orbit.pop_back();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d == 0 && out.orbit[d] == out.point)
            throw std::runtime_error("point for '" + w.str() + "' has period " + std::to_string(d));
    }
    out.prime_period = n;
    return out;
}

Address dense_orbit_word(std::size_t d) {
    if (d == 0) throw std::invalid_argument("dense_orbit_word needs d >= 1");
    Address w;
    for (std::size_t len = 1; len <= d; ++len) {
        for (const auto& u : Address::all_binary(len)) w = w.concat(u);
    }
    return w;
}

CheckReport dense_orbit_check(const ChaosSystem& s, std::size_t d) {
    CheckReport rep(std::string(to_string(s.kind)) + " dense orbit, depth " + std::to_string(d));
    const auto r = realize_witness(s, dense_orbit_word(d));
    std::size_t visited = 0;
    std::string missed;
    for (const auto& u : Address::all_binary(d)) {
        const Region cell = cell_of(s, u);
        bool hit = false;
        for (const auto& p : r.orbit) {
            if (cell.contains(p)) {
                hit = true;
                break;
            }
        }
        if (hit) ++visited;
        else if (missed.empty()) missed = u.str();
    }
    rep.add("visits_every_cell", missed.empty(),
            missed.empty() ? "orbit of length " + std::to_string(r.orbit.size()) + " visits all " +
                                 std::to_string(visited) + " cells"
                           : "cell '" + missed + "' never visited");
    return rep;
}

std::optional<std::size_t> separation_steps(const ChaosSystem& s, const Rational& x, const Rational& delta,
                                            std::size_t budget) {
    if (s.dim() != 1) throw std::invalid_argument("separation_steps needs a 1-d system");
    const Rational quarter(1, 4);
    std::optional<std::size_t> best;
    for (const Rational& off : {delta, -delta, delta / 2, -delta / 2}) {
        const Rational y0 = x + off;
        if (y0 < 0 || y0 > 1 || off.is_zero()) continue;
        Point a(x);
        Point b(y0);
        for (std::size_t n = 0; n <= budget && (!best || n < *best); ++n) {
            if ((a[0] - b[0]).abs() >= quarter) {
                best = n;
                break;
            }
            a = s.step(a);
            b = s.step(b);
        }
    }
    return best;
}

CheckReport sensitivity_check(const ChaosSystem& s, const Rational& delta, std::size_t samples) {
    if (s.kind != SystemKind::doubling && s.kind != SystemKind::tent)
        throw std::invalid_argument("sensitivity_check supports the doubling and tent systems");
    if (delta.sign() <= 0) throw std::invalid_argument("delta must be positive");
    CheckReport rep(std::string(to_string(s.kind)) + " sensitivity, delta " + delta.str() + ", " +
                    std::to_string(samples) + " samples");
    // bits(1/delta) + 2
    const mpz_class inv = (Rational(1) / delta).floor();
    const std::size_t budget = mpz_sizeinbase(inv.get_mpz_t(), 2) + 2;
    std::size_t worst = 0;
    std::string failed;
    for (std::size_t i = 0; i < samples; ++i) {
        const Rational x(static_cast<long>(i + 1), static_cast<long>(samples + 1));
        const auto n = separation_steps(s, x, delta, budget);
        if (!n) {
            if (failed.empty()) failed = "x = " + x.str() + " not separated within " + std::to_string(budget) + " steps";
            continue;
        }
        worst = std::max(worst, *n);
    }
    rep.add("separates_by_quarter", failed.empty(),
            failed.empty() ? "worst n = " + std::to_string(worst) + " (budget " + std::to_string(budget) + ")" : failed);
    return rep;
}

CheckReport transitivity_check(const ChaosSystem& s, std::size_t d) {
    if (d < 1 || d > 12) throw std::invalid_argument("transitivity_check needs 1 <= d <= 12");
    CheckReport rep(std::string(to_string(s.kind)) + " transitivity, depth " + std::to_string(d));
    const auto words = Address::all_binary(d);
    std::vector<Region> cells;
    for (const auto& u : words) cells.push_back(cell_of(s, u));
    std::size_t joined = 0;
    std::string missing;
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
            const auto r = realize_witness(s, words[i].concat(words[j]));
            if (cells[i].contains(r.witness) && cells[j].contains(r.orbit[d])) {
                ++joined;
            } else if (missing.empty()) {
                missing = "(" + words[i].str() + ", " + words[j].str() + ")";
            }
        }
    }
    rep.add("all_pairs_joined", missing.empty(),
            missing.empty() ? std::to_string(joined) + " ordered pairs joined in " + std::to_string(d) + " steps"
                            : "pair " + missing + " not joined");
    return rep;
}

}  // namespace pchaos
