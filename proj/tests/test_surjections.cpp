#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "pchaos/cantor.hpp"
#include "pchaos/surjections.hpp"

using namespace pchaos;

namespace {

Region iv(const Rational& lo, const Rational& hi) { return Region(Box(Interval(lo, hi))); }

Region sq(const Rational& x0, const Rational& x1, const Rational& y0, const Rational& y1) {
    return Region(Box(Interval(x0, x1), Interval(y0, y1)));
}

std::vector<ClopenBlock> blocks(std::initializer_list<const char*> texts) {
    std::vector<ClopenBlock> out;
    for (const char* t : texts) out.push_back(ClopenBlock::parse(t));
    return out;
}

Address random_address(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint8_t> s(n);
    for (auto& b : s) b = static_cast<std::uint8_t>(rng() & 1U);
    return Address(s);
}

// Extends a with random bits so two images can be compared at a common
// deeper resolution.
Address extend(std::mt19937_64& rng, const Address& a, std::size_t to) {
    return a.concat(random_address(rng, to - a.size()));
}

bool edge_adjacent(const Box& a, const Box& b) {
    const bool x_touch = a[0].hi == b[0].lo || b[0].hi == a[0].lo;
    const bool y_touch = a[1].hi == b[1].lo || b[1].hi == a[1].lo;
    const bool x_same = a[0] == b[0];
    const bool y_same = a[1] == b[1];
    return (x_touch && y_same) || (y_touch && x_same);
}

}  // namespace

TEST_SUITE("surjections") {

TEST_CASE("binary expansion examples") {
    CHECK(binary_expansion_map(Address::parse("")) == Region::unit(1));
    CHECK(binary_expansion_map(Address::parse("1")) == iv(Rational(1, 2), 1));
    // 0/2 + 1/4 + 1/8 = 3/8, width 1/8.
    const oracle::Frac lo = oracle::Frac(0, 2) + oracle::Frac(1, 4) + oracle::Frac(1, 8);
    CHECK(binary_expansion_map(Address::parse("011")) == iv(Rational(lo.n, lo.d), Rational(lo.n, lo.d) + Rational(1, 8)));
}

TEST_CASE("interleave examples") {
    const Rational h(1, 2);
    CHECK(interleave_map(Address::parse("")) == Region::unit(2));
    CHECK(interleave_map(Address::parse("11")) == sq(h, 1, h, 1));
    CHECK(interleave_map(Address::parse("10")) == sq(h, 1, 0, h));
    CHECK(interleave_map(Address::parse("1")) == sq(h, 1, 0, 1));
}

TEST_CASE("moduli of continuity on random pairs") {
    std::mt19937_64 rng(99);
    const auto bin = CantorMap::binary_expansion();
    const auto inter = CantorMap::interleave();
    for (std::size_t n = 0; n <= 20; ++n) {
        for (int i = 0; i < 1000; ++i) {
            const Address common = random_address(rng, n);
            const Address a = extend(rng, common, 24);
            const Address b = extend(rng, common, 24);
            REQUIRE(distance(binary_expansion_map(a).lex_min(), binary_expansion_map(b).lex_min()) <= bin.modulus(n));
            REQUIRE(distance(interleave_map(a).lex_min(), interleave_map(b).lex_min()) <= inter.modulus(n));
        }
    }
}

TEST_CASE("covering at resolution") {
    CHECK(verify_covering(CantorMap::binary_expansion(), 12).all_passed());
    CHECK(verify_covering(CantorMap::interleave(), 8).all_passed());
    CHECK_THROWS_AS(verify_covering(CantorMap::bit_flip(), 4), std::invalid_argument);
}

TEST_CASE("clopen partition examples") {
    CHECK(clopen_partition(1) == blocks({"e"}));
    CHECK(clopen_partition(2) == blocks({"0", "1"}));
    CHECK(clopen_partition(3) == blocks({"0", "10", "11"}));
    CHECK_THROWS_AS(clopen_partition(0), std::invalid_argument);
}

TEST_CASE("clopen partitions are disjoint nonempty covers through n = 64") {
    for (std::size_t n = 1; n <= 64; ++n) {
        const auto p = clopen_partition(n);
        REQUIRE(p.size() == n);
        std::vector<Address> all;
        for (std::size_t i = 0; i < n; ++i) {
            REQUIRE(!p[i].cylinders().empty());
            for (std::size_t j = i + 1; j < n; ++j) REQUIRE_FALSE(p[i].overlaps(p[j]));
            all.insert(all.end(), p[i].cylinders().begin(), p[i].cylinders().end());
        }
        REQUIRE(complement_cylinders(all).empty());
        if (n <= 30) {
            // A complete prefix code: cylinder weights 2^-|a| sum to 1.
            Rational mass = 0;
            for (const auto& a : all) mass = mass + Rational::pow2(-static_cast<long>(a.size()));
            REQUIRE(mass == 1);
        }
    }
}

TEST_CASE("block surjection examples") {
    // Leading-bit flip as a block map.
    auto a = blocks({"0", "1"});
    auto b = blocks({"1", "0"});
    const auto flip = block_surjection(a, b);
    CHECK_FALSE(flip.padded());
    CHECK(flip.image_cylinders(Address::parse("0110")) == std::vector<Address>{Address::parse("1110")});
    auto rep = verify_block_surjection(flip, a, b, 8);
    CHECK(rep.all_passed());
    CHECK(flip.modulus(8) == Rational::pow3(-8));

    // Each half onto everything.
    const auto whole = blocks({"e", "e"});
    const auto onto = block_surjection(a, whole);
    CHECK(onto.evaluate(Address::parse("0")) == Region::unit(1));
    CHECK(verify_block_surjection(onto, a, whole, 6).all_passed());

    // Non-covering domain gets a padding block onto the whole target.
    const auto pa = blocks({"00"});
    const auto pb = blocks({"1"});
    const auto padded = block_surjection(pa, pb);
    CHECK(padded.padded());
    REQUIRE(padded.domain_blocks().size() == 2);
    CHECK(padded.target_blocks()[1] == ClopenBlock::parse("e"));
    CHECK(padded.evaluate(Address::parse("00")) == cylinder(Address::parse("1")));
    CHECK(verify_block_surjection(padded, padded.domain_blocks(), padded.target_blocks(), 8).all_passed());

    // Wrong targets fail the containment direction.
    rep = verify_block_surjection(flip, a, blocks({"0", "1"}), 6);
    CHECK_FALSE(rep.find("image_in_block").pass);

    CHECK_THROWS_AS(block_surjection(blocks({"0", "01"}), blocks({"0", "1"})), std::invalid_argument);
    CHECK_THROWS_AS(ClopenBlock::parse(""), std::invalid_argument);
}

TEST_CASE("block surjections with more targets than domain cylinders") {
    const auto a = blocks({"0", "1"});
    const auto b = blocks({"00,01,10", "11"});
    const auto f = block_surjection(a, b);
    CHECK(verify_block_surjection(f, a, b, 10).all_passed());
}

TEST_CASE("bit flip map") {
    const auto f = CantorMap::bit_flip();
    CHECK(f.image_cylinders(Address::parse("01")) == std::vector<Address>{Address::parse("11")});
    CHECK(f.evaluate(Address::parse("")) == unite(cylinder(Address::parse("0")), cylinder(Address::parse("1"))));
}

TEST_CASE("hilbert enclosure orientation and tiling") {
    const Rational h(1, 2);
    CHECK(hilbert_enclosure(Interval(0, 1)) == Region::unit(2));
    CHECK(hilbert_enclosure(Interval(0, Rational(1, 4))) == sq(0, h, 0, h));
    CHECK(hilbert_enclosure(Interval(Rational(3, 4), 1)) == sq(h, 1, 0, h));
    CHECK_THROWS_AS(hilbert_enclosure(Interval(0, Rational(1, 3))), std::invalid_argument);
}

TEST_CASE("consecutive hilbert cells are edge-adjacent and tile the square through depth 6") {
    for (std::size_t k = 1; k <= 6; ++k) {
        const std::uint64_t cells = std::uint64_t{1} << (2 * k);
        std::vector<Box> all;
        for (std::uint64_t j = 0; j < cells; ++j) {
            all.push_back(hilbert_cell(k, j));
            REQUIRE(all.back()[0].length() == Rational::pow2(-static_cast<long>(k)));
            if (j > 0) REQUIRE(edge_adjacent(all[j - 1], all[j]));
        }
        REQUIRE(Region(all) == Region::unit(2));
        std::sort(all.begin(), all.end());
        REQUIRE(std::adjacent_find(all.begin(), all.end()) == all.end());
        // Children of a depth-(k-1) cell are its four quadrants.
        for (std::uint64_t j = 0; j < cells; ++j) REQUIRE(hilbert_cell(k - 1, j / 4).contains(hilbert_cell(k, j)));
    }
}

TEST_CASE("waypoint examples") {
    const Rational h(1, 2);
    const auto f1 = waypoint_surjection(WaypointMap(TargetKind::interval, {{h, Point(0)}}));
    CHECK(f1.exact_value(h) == Point(0));
    CHECK(verify_waypoints(f1, 8).all_passed());

    const auto f2 = waypoint_surjection(
        WaypointMap(TargetKind::square, {{Rational(1, 4), Point(0, 0)}, {Rational(3, 4), Point(1, 1)}}));
    CHECK(f2.exact_value(Rational(1, 4)) == Point(0, 0));
    CHECK(f2.exact_value(Rational(3, 4)) == Point(1, 1));
    CHECK(f2.exact_value(0) == Point(0, 0));
    CHECK(f2.exact_value(1) == Point(1, 1));
    CHECK(verify_waypoints(f2, 8).all_passed());

    const auto f3 = waypoint_surjection(WaypointMap(TargetKind::square, {{h, Point(h, h)}}));
    CHECK(f3.evaluate(h, 5) == Region(Box(Interval(h, h), Interval(h, h))));
    CHECK(verify_waypoints(f3, 8).all_passed());

    CHECK_THROWS_AS(WaypointMap(TargetKind::interval, {{h, Point(0)}, {Rational(1, 4), Point(1)}}),
                    std::invalid_argument);
}

TEST_CASE("interval sweeps are exact triangle waves") {
    const auto f = waypoint_surjection(
        WaypointMap(TargetKind::interval, {{0, Point(Rational(1, 3))}, {1, Point(Rational(2, 3))}}));
    // Gap [0,1] split in thirds; the sweep on [1/3, 2/3] peaks at 1/2.
    CHECK(f.exact_value(Rational(1, 2)) == Point(1));
    CHECK(f.exact_value(Rational(5, 12)) == Point(Rational(1, 2)));
    CHECK(f.exact_value(Rational(1, 6)) == Point(Rational(1, 6)));
}

TEST_CASE("square enclosures nest and halve per depth") {
    const auto f = waypoint_surjection(WaypointMap(TargetKind::square, {{0, Point(0, 1)}, {1, Point(1, 1)}}));
    const Rational t(37, 100);
    for (std::size_t k = 1; k <= 10; ++k) {
        const Region prev = f.evaluate(t, k - 1);
        const Region cur = f.evaluate(t, k);
        REQUIRE(subset(cur, prev));
        REQUIRE(diameter(cur) * 2 == diameter(prev));
    }
}

}  // TEST_SUITE
