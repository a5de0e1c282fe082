#ifndef PCHAOS_GEOMETRY_HPP
#define PCHAOS_GEOMETRY_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pchaos/rational.hpp"

namespace pchaos {

/// A point of [0,1]^d, d in {1, 2}.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<Rational> coords);
    Point(Rational x) : Point(std::vector<Rational>{std::move(x)}) {}  // NOLINT(google-explicit-constructor)
    Point(Rational x, Rational y) : Point(std::vector<Rational>{std::move(x), std::move(y)}) {}

    std::size_t dim() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }

    friend bool operator==(const Point&, const Point&) = default;
    /// Lexicographic order on coordinates.
    friend auto operator<=>(const Point& a, const Point& b) { return a.coords_ <=> b.coords_; }

    std::string str() const;

private:
    std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(Rational l, Rational h);

    Rational length() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Closed axis-aligned box; degenerate (zero-width) axes are allowed.
class Box {
public:
    Box() = default;
    explicit Box(std::vector<Interval> axes);
    Box(Interval x) : Box(std::vector<Interval>{std::move(x)}) {}  // NOLINT(google-explicit-constructor)
    Box(Interval x, Interval y) : Box(std::vector<Interval>{std::move(x), std::move(y)}) {}

    /// [0,1]^dim
    static Box unit(std::size_t dim);
    /// Chebyshev ball of the given radius around c (not clipped).
    static Box around(const Point& c, const Rational& radius);

    std::size_t dim() const { return axes_.size(); }
    const Interval& operator[](std::size_t i) const { return axes_[i]; }
    const std::vector<Interval>& axes() const { return axes_; }

    Point lo_corner() const;
    Point hi_corner() const;
    Point midpoint() const;
    Rational diameter() const;
    bool contains(const Point& p) const;
    bool contains(const Box& b) const;
    bool meets(const Box& b) const;
    std::optional<Box> intersect(const Box& b) const;

    friend bool operator==(const Box&, const Box&) = default;
    /// Lexicographic by lower corner, then upper corner.
    friend std::strong_ordering operator<=>(const Box& a, const Box& b);

private:
    std::vector<Interval> axes_;
};

/// Nonempty finite union of closed boxes of a common dimension, held in
/// canonical form.
///
/// Canonical form: in 1-d the maximal connected components in increasing
/// order. In 2-d the x-axis is cut at every box edge; consecutive slabs with
/// identical y-sections are merged, and each y-section component becomes one
/// box. Boxes are pairwise interior-disjoint and sorted lexicographically by
/// corners. The form depends only on the point set, so `==` is set equality.
class Region {
public:
    explicit Region(std::vector<Box> boxes);
    Region(Box box);  // NOLINT(google-explicit-constructor)

    static Region unit(std::size_t dim) { return Region(Box::unit(dim)); }

    std::size_t dim() const { return boxes_.front().dim(); }
    const std::vector<Box>& boxes() const { return boxes_; }

    bool contains(const Point& p) const;
    Box bounding_box() const;
    /// Lexicographically smallest / largest point of the region.
    Point lex_min() const;
    Point lex_max() const;
    /// Midpoint of the first box in canonical order.
    Point first_midpoint() const;

    friend bool operator==(const Region&, const Region&) = default;

    std::string str() const;

private:
    std::vector<Box> boxes_;
};

std::ostream& operator<<(std::ostream& os, const Region& r);

/// Chebyshev (max-coordinate) distance.
Rational distance(const Point& p, const Point& q);
/// Largest Chebyshev distance between two points of the region.
Rational diameter(const Region& r);
/// Smallest Chebyshev distance between a point of a and a point of b; zero
/// when they meet.
Rational gap(const Region& a, const Region& b);

std::optional<Region> intersect(const Region& a, const Region& b);
std::optional<Region> intersect(const Region& a, const Box& b);
Region unite(const Region& a, const Region& b);
bool disjoint(const Region& a, const Region& b);
/// a ⊆ b as point sets.
bool subset(const Region& a, const Region& b);

}  // namespace pchaos

#endif
