#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "pchaos/address.hpp"
#include "pchaos/cantor.hpp"
#include "pchaos/geometry.hpp"
#include "pchaos/rational.hpp"

using namespace pchaos;
using oracle::Frac;

namespace {

Rational R(const Frac& f) { return Rational(f.n, f.d); }

Rational random_rational(std::mt19937_64& rng, long max_den = 1000) {
    std::uniform_int_distribution<long> den(1, max_den);
    const long d = den(rng);
    std::uniform_int_distribution<long> num(-5 * d, 5 * d);
    return Rational(num(rng), d);
}

Rational random_unit(std::mt19937_64& rng, long max_den = 64) {
    std::uniform_int_distribution<long> den(1, max_den);
    const long d = den(rng);
    std::uniform_int_distribution<long> num(0, d);
    return Rational(num(rng), d);
}

Point random_point(std::mt19937_64& rng, std::size_t dim) {
    return dim == 1 ? Point(random_unit(rng)) : Point(random_unit(rng), random_unit(rng));
}

}  // namespace

TEST_SUITE("core_geometry") {

TEST_CASE("rationals are normalized and print as p/q") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-3, -6).str() == "1/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(5).str() == "5/1");
    CHECK(Rational(0).str() == "0/1");
    CHECK(Rational::parse("6/8") == Rational(3, 4));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::pow3(-2) == Rational(1, 9));
    CHECK(Rational::pow2(3) == Rational(8));
    CHECK(Rational(7, 3).floor() == 2);
    CHECK(Rational(-7, 3).floor() == -3);
    CHECK(Rational(1, 3).decimal(4) == "0.3333");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic round-trips on random pairs") {
    std::mt19937_64 rng(20261018);
    for (int i = 0; i < 10000; ++i) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        REQUIRE((a + b) - b == a);
        if (!b.is_zero()) REQUIRE((a * b) / b == a);
        // Normalization is idempotent through the string form.
        REQUIRE(Rational::parse(a.str()) == a);
        REQUIRE(Rational::parse(a.str()).str() == a.str());
    }
}

TEST_CASE("distance examples") {
    CHECK(distance(Point(0, 0), Point(1, 1)) == 1);
    CHECK(distance(Point(Rational(1, 3)), Point(Rational(2, 3))) == Rational(1, 3));
    const Frac expect = oracle::chebyshev({Frac(1, 4), Frac(0)}, {Frac(3, 4), Frac(1, 8)});
    CHECK(distance(Point(Rational(1, 4), 0), Point(Rational(3, 4), Rational(1, 8))) == R(expect));
    CHECK(R(expect) == Rational(1, 2));
    CHECK_THROWS_AS(distance(Point(0), Point(0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(Point(Rational(3, 2)), std::invalid_argument);
}

TEST_CASE("distance satisfies the metric axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t dim = 1 + static_cast<std::size_t>(i % 2);
        const Point p = random_point(rng, dim);
        const Point q = random_point(rng, dim);
        const Point r = random_point(rng, dim);
        REQUIRE(distance(p, q) == distance(q, p));
        REQUIRE((distance(p, q).is_zero()) == (p == q));
        REQUIRE(distance(p, p).is_zero());
        REQUIRE(distance(p, r) <= distance(p, q) + distance(q, r));
    }
}

TEST_CASE("diameter examples") {
    CHECK(diameter(Region(Box(Interval(0, Rational(1, 4))))) == Rational(1, 4));
    const Region two({Box(Interval(0, Rational(1, 16))), Box(Interval(Rational(3, 16), Rational(1, 4)))});
    const Frac expect = oracle::corner_diameter({{{Frac(0), Frac(1, 16)}}, {{Frac(3, 16), Frac(1, 4)}}});
    CHECK(diameter(two) == R(expect));
    CHECK(diameter(Region::unit(2)) == 1);
}

TEST_CASE("diameter agrees with the corner-pair oracle on random box unions") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const std::size_t dim = 1 + static_cast<std::size_t>(i % 2);
        std::vector<Box> boxes;
        std::vector<oracle::OBox> obox;
        const int count = 1 + i % 4;
        for (int k = 0; k < count; ++k) {
            std::vector<Interval> axes;
            oracle::OBox ob;
            for (std::size_t a = 0; a < dim; ++a) {
                std::uniform_int_distribution<long> v(0, 16);
                long lo = v(rng);
                long hi = v(rng);
                if (hi < lo) std::swap(lo, hi);
                axes.emplace_back(Rational(lo, 16), Rational(hi, 16));
                ob.emplace_back(Frac(lo, 16), Frac(hi, 16));
            }
            boxes.emplace_back(axes);
            obox.push_back(ob);
        }
        REQUIRE(diameter(Region(boxes)) == R(oracle::corner_diameter(obox)));
    }
}

TEST_CASE("cylinder examples") {
    CHECK(cylinder(Address::parse("")) == Region::unit(1));
    CHECK(cylinder(Address::parse("0")) == Region(Box(Interval(0, Rational(1, 3)))));
    const auto [lo, hi] = oracle::cantor_cylinder("01");
    CHECK(cylinder(Address::parse("01")) == Region(Box(Interval(R(lo), R(hi)))));
    CHECK(R(lo) == Rational(2, 9));
    CHECK_THROWS_AS(cylinder(Address::parse("012", 3)), std::invalid_argument);
}

TEST_CASE("cylinder diameters are 3^-|a| through length 12") {
    for (std::size_t n = 0; n <= 12; ++n) {
        const Rational expect = Rational::pow3(-static_cast<long>(n));
        for (const auto& a : Address::all_binary(n)) REQUIRE(diameter(cylinder(a)) == expect);
    }
}

TEST_CASE("children of a cylinder are disjoint and inside it through length 10") {
    for (std::size_t n = 0; n <= 10; ++n) {
        for (const auto& a : Address::all_binary(n)) {
            const Region p = cylinder(a);
            const Region c0 = cylinder(a.child(0));
            const Region c1 = cylinder(a.child(1));
            REQUIRE(subset(unite(c0, c1), p));
            REQUIRE(disjoint(c0, c1));
        }
    }
}

TEST_CASE("ternary address evaluation") {
    CHECK(eval_ternary_address(Address::parse(""), ZerosTail{}) == 0);
    CHECK(eval_ternary_address(Address::parse(""), OnesTail{}) == 1);
    const Frac expect = oracle::ternary("", 'p', "10");
    CHECK(eval_ternary_address(Address::parse(""), PeriodicTail{Address::parse("10")}) == R(expect));
    CHECK(R(expect) == Rational(3, 4));
    // Tail values land inside the prefix cylinder; geometric-series oracle.
    for (std::size_t n = 0; n <= 6; ++n) {
        for (const auto& a : Address::all_binary(n)) {
            for (const char* w : {"1", "01", "110"}) {
                const Rational v = eval_ternary_address(a, PeriodicTail{Address::parse(w)});
                REQUIRE(v == R(oracle::ternary(a.str(), 'p', w)));
                REQUIRE(cylinder(a).contains(Point(v)));
            }
            REQUIRE(eval_ternary_address(a, ZerosTail{}) == R(oracle::ternary(a.str(), 'z')));
            REQUIRE(eval_ternary_address(a, OnesTail{}) == R(oracle::ternary(a.str(), 'o')));
        }
    }
}

TEST_CASE("complement cylinders cover exactly what is missing") {
    const auto rest = complement_cylinders({Address::parse("00")});
    REQUIRE(rest.size() == 2);
    CHECK(rest[0] == Address::parse("1"));
    CHECK(rest[1] == Address::parse("01"));
    CHECK(complement_cylinders({Address::parse("0"), Address::parse("1")}).empty());
}

TEST_CASE("region canonical form is idempotent and matches point-set semantics") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const std::size_t dim = 1 + static_cast<std::size_t>(i % 2);
        std::vector<Box> boxes;
        const int count = 1 + i % 5;
        for (int k = 0; k < count; ++k) {
            std::vector<Interval> axes;
            for (std::size_t a = 0; a < dim; ++a) {
                std::uniform_int_distribution<long> v(0, 8);
                long lo = v(rng);
                long hi = v(rng);
                if (hi < lo) std::swap(lo, hi);
                axes.emplace_back(Rational(lo, 8), Rational(hi, 8));
            }
            boxes.emplace_back(axes);
        }
        const Region r(boxes);
        REQUIRE(Region(r.boxes()) == r);
        // Membership on a grid finer than every corner.
        for (long x = 0; x <= 16; ++x) {
            for (long y = 0; y <= (dim == 2 ? 16 : 0); ++y) {
                const Point p = dim == 1 ? Point(Rational(x, 16)) : Point(Rational(x, 16), Rational(y, 16));
                bool raw = false;
                for (const auto& b : boxes) raw = raw || b.contains(p);
                REQUIRE(r.contains(p) == raw);
            }
        }
        // Shuffled input gives the same canonical region.
        std::shuffle(boxes.begin(), boxes.end(), rng);
        REQUIRE(Region(boxes) == r);
    }
}

TEST_CASE("region set operations") {
    const Region a({Box(Interval(0, Rational(1, 2)))});
    const Region b({Box(Interval(Rational(1, 4), 1))});
    CHECK(unite(a, b) == Region::unit(1));
    CHECK(*intersect(a, b) == Region(Box(Interval(Rational(1, 4), Rational(1, 2)))));
    CHECK(!disjoint(a, b));
    CHECK(gap(cylinder(Address::parse("0")), cylinder(Address::parse("1"))) == Rational(1, 3));
    const Region l({Box(Interval(0, Rational(1, 2)), Interval(0, 1)), Box(Interval(Rational(1, 2), 1), Interval(0, Rational(1, 2)))});
    CHECK(subset(Region(Box(Interval(Rational(3, 4), 1), Interval(0, Rational(1, 4)))), l));
    CHECK(!subset(Region(Box(Interval(Rational(3, 4), 1), Interval(0, Rational(3, 4)))), l));
    CHECK(l.lex_min() == Point(0, 0));
    CHECK(l.lex_max() == Point(1, Rational(1, 2)));
}

TEST_CASE("addresses") {
    const Address a = Address::parse("0110");
    CHECK(a.str() == "0110");
    CHECK(a.prefix(2).str() == "01");
    CHECK(a.suffix_from(1).str() == "110");
    CHECK(a.index() == 6);
    CHECK(Address::from_index(6, 4) == a);
    CHECK(Address::parse("0101").primitive_root().str() == "01");
    CHECK(Address::parse("0110").primitive_root().str() == "0110");
    CHECK(Address::parse("01").repeat(3).str() == "010101");
    CHECK(Address::parse("01").is_prefix_of(a));
    CHECK(Address::parse("1") > Address::parse("0"));
    CHECK(Address::parse("1") < Address::parse("00"));
    CHECK_THROWS_AS(Address::parse("2"), std::invalid_argument);
    CHECK(Address::all_binary(3).size() == 8);
}

}  // TEST_SUITE
