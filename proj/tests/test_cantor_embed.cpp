#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "pchaos/cantor_embed.hpp"

using namespace pchaos;
using oracle::Frac;

namespace {

Rational R(const Frac& f) { return Rational(f.n, f.d); }

Region iv(const Rational& lo, const Rational& hi) { return Region(Box(Interval(lo, hi))); }

// 1-d refinement by hand: a cell [lo, hi] with marks lo and hi splits into
// [lo, lo + L] and [hi - L, hi] with L = (hi - lo) / 4.
std::vector<std::pair<Frac, Frac>> interval_leaves(int depth) {
    std::vector<std::pair<Frac, Frac>> cells{{Frac(0), Frac(1)}};
    for (int k = 0; k < depth; ++k) {
        std::vector<std::pair<Frac, Frac>> next;
        for (const auto& [lo, hi] : cells) {
            const Frac l = (hi - lo) / Frac(4);
            next.emplace_back(lo, lo + l);
            next.emplace_back(hi - l, hi);
        }
        cells = next;
    }
    return cells;
}

const ModelKind all_models[] = {ModelKind::interval, ModelKind::square, ModelKind::tripod};

}  // namespace

TEST_SUITE("cantor_embed") {

TEST_CASE("subdivide examples") {
    const auto m = PeanoModel::make(ModelKind::interval);
    auto kids = subdivide(m, Region::unit(1), {Point(0), Point(1)});
    CHECK(kids[0].region == iv(0, Rational(1, 4)));
    CHECK(kids[1].region == iv(Rational(3, 4), 1));

    kids = subdivide(m, iv(0, Rational(1, 4)), {Point(0), Point(Rational(1, 4))});
    CHECK(kids[0].region == iv(0, Rational(1, 16)));
    CHECK(kids[1].region == iv(Rational(3, 16), Rational(1, 4)));

    const auto sq = PeanoModel::make(ModelKind::square);
    kids = subdivide(sq, Region::unit(2), {Point(0, 0), Point(1, 1)});
    const Rational q(1, 4);
    CHECK(kids[0].region == Region(Box(Interval(0, q), Interval(0, q))));
    CHECK(kids[1].region == Region(Box(Interval(1 - q, 1), Interval(1 - q, 1))));

    CHECK_THROWS_AS(subdivide(m, Region::unit(1), {Point(0), Point(0)}), std::invalid_argument);
}

TEST_CASE("build_refinement examples") {
    const auto m = PeanoModel::make(ModelKind::interval);
    const auto t0 = build_refinement(m, 0);
    CHECK(t0.cells().size() == 1);
    CHECK(t0.cell(Address()).region == Region::unit(1));

    const auto t2 = build_refinement(m, 2);
    const auto leaves = t2.level(2);
    const auto expect = interval_leaves(2);
    REQUIRE(leaves.size() == expect.size());
    for (std::size_t i = 0; i < leaves.size(); ++i)
        CHECK(leaves[i].second->region == iv(R(expect[i].first), R(expect[i].second)));
    CHECK(leaves[1].second->region == iv(Rational(3, 16), Rational(1, 4)));
    CHECK(leaves[3].second->region == iv(Rational(15, 16), 1));

    const auto s1 = build_refinement(PeanoModel::make(ModelKind::square), 1);
    const Rational q(1, 4);
    CHECK(s1.cell(Address::parse("0")).region == Region(Box(Interval(0, q), Interval(0, q))));
    CHECK(s1.cell(Address::parse("1")).region == Region(Box(Interval(1 - q, 1), Interval(1 - q, 1))));
}

TEST_CASE("interval leaves match the hand recursion through depth 8") {
    const auto t = build_refinement(PeanoModel::make(ModelKind::interval), 8);
    const auto leaves = t.level(8);
    const auto expect = interval_leaves(8);
    REQUIRE(leaves.size() == expect.size());
    for (std::size_t i = 0; i < leaves.size(); ++i)
        REQUIRE(leaves[i].second->region == iv(R(expect[i].first), R(expect[i].second)));
}

TEST_CASE("evaluate_address examples") {
    const auto t = build_refinement(PeanoModel::make(ModelKind::interval), 2);
    CHECK(evaluate_address(t, Address()) == Region::unit(1));
    CHECK(evaluate_address(t, Address::parse("00")) == iv(0, Rational(1, 16)));
    CHECK(evaluate_address(t, Address::parse("1")) == iv(Rational(3, 4), 1));
    CHECK_THROWS_AS(evaluate_address(t, Address::parse("000")), std::invalid_argument);
}

TEST_CASE("tripod cells stay on the tripod") {
    const auto m = PeanoModel::make(ModelKind::tripod);
    CHECK(m.root.lex_min() == Point(0, Rational(1, 2)));
    CHECK(m.root.lex_max() == Point(Rational(1, 2), 1));
    const auto t = build_refinement(m, 6);
    for (const auto& [a, c] : t.cells()) REQUIRE(subset(c.region, m.root));
}

TEST_CASE("stage invariants hold for every model through depth 10") {
    for (auto kind : all_models) {
        const auto t = build_refinement(PeanoModel::make(kind), 10);
        CHECK(t.level(10).size() == 1024);
        for (std::size_t k = 0; k <= 10; ++k) {
            const auto rep = check_stage_invariants(t, k);
            INFO(to_string(kind), " level ", k);
            REQUIRE(rep.all_passed());
            REQUIRE(rep.total() == 5);
        }
    }
}

TEST_CASE("leaf diameters shrink by at least 4 per level") {
    for (auto kind : all_models) {
        const auto m = PeanoModel::make(kind);
        const auto t = build_refinement(m, 10);
        const Rational root = diameter(m.root);
        for (std::size_t n = 0; n <= 10; ++n) {
            const Rational bound4 = root * Rational::pow2(-2 * static_cast<long>(n));
            const Rational bound3 = root * Rational::pow3(-static_cast<long>(n));
            for (const auto& [a, c] : t.level(n)) {
                REQUIRE(diameter(c->region) <= bound4);
                REQUIRE(diameter(c->region) <= bound3);
            }
        }
    }
}

TEST_CASE("nesting and sibling separation") {
    for (auto kind : all_models) {
        const auto t = build_refinement(PeanoModel::make(kind), 10);
        for (const auto& [a, c] : t.cells()) {
            if (a.size() == 10) continue;
            const auto& c0 = t.cell(a.child(0));
            const auto& c1 = t.cell(a.child(1));
            REQUIRE(subset(c0.region, c.region));
            REQUIRE(subset(c1.region, c.region));
            REQUIRE(gap(c0.region, c1.region) >= distance(c.marked[0], c.marked[1]) / 2);
            REQUIRE(c0.region.contains(c.marked[0]));
            REQUIRE(c1.region.contains(c.marked[1]));
        }
    }
}

TEST_CASE("addresses that differ give disjoint deeper enclosures") {
    for (auto kind : all_models) {
        const auto t = build_refinement(PeanoModel::make(kind), 6);
        const auto leaves = Address::all_binary(6);
        for (const auto& a : leaves) {
            for (const auto& b : leaves) {
                if (a == b) continue;
                REQUIRE(disjoint(evaluate_address(t, a), evaluate_address(t, b)));
            }
        }
    }
}

TEST_CASE("a corrupted tree fails the disjointness check") {
    const auto good = build_refinement(PeanoModel::make(ModelKind::interval), 2);
    auto cells = good.cells();
    cells.at(Address::parse("01")).region = iv(0, Rational(1, 8));
    const RefinementTree bad(good.model(), 2, cells);
    const auto rep = check_stage_invariants(bad, 2);
    CHECK_FALSE(rep.find("disjoint").pass);
    CHECK_FALSE(rep.all_passed());
}

TEST_CASE("stage check examples") {
    CHECK(check_stage_invariants(build_refinement(PeanoModel::make(ModelKind::interval), 3), 2).all_passed());
    CHECK(check_stage_invariants(build_refinement(PeanoModel::make(ModelKind::square), 2), 1).all_passed());
}

}  // TEST_SUITE
