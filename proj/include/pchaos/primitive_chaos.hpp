#ifndef PCHAOS_PRIMITIVE_CHAOS_HPP
#define PCHAOS_PRIMITIVE_CHAOS_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "pchaos/address.hpp"
#include "pchaos/check_report.hpp"
#include "pchaos/geometry.hpp"
#include "pchaos/rational.hpp"

namespace pchaos {

enum class SystemKind { shift_cantor, doubling, tent, baker };

std::string_view to_string(SystemKind k);
SystemKind parse_system_kind(std::string_view name);

/// x -> scale * x + offset, coordinate-wise, with nonzero scales.
struct AffineBranch {
    std::vector<Rational> scale;
    std::vector<Rational> offset;

    Point apply(const Point& p) const;
    /// Exact preimage of a box (always a box, flipped on negative scales).
    Box preimage(const Box& b) const;
    /// this after first: x -> this(first(x)).
    AffineBranch after(const AffineBranch& first) const;
};

/// Events X_0..X_{k-1} with one affine law per event.
///
///   shift_cantor  cyl "0" = [0,1/3] -> 3x, cyl "1" = [2/3,1] -> 3x - 2
///   doubling      [0,1/2] -> 2x, [1/2,1] -> 2x - 1
///   tent          [0,1/2] -> 2x, [1/2,1] -> 2 - 2x
///   baker         [0,1/2]x[0,1] -> (2x, y/2), [1/2,1]x[0,1] -> (2x-1, (y+1)/2)
///
/// Events are closed and may share boundary points.
struct ChaosSystem {
    SystemKind kind;
    Region space;
    std::vector<Region> events;
    std::vector<AffineBranch> laws;

    std::size_t dim() const { return space.dim(); }
    std::size_t symbols() const { return events.size(); }
    /// Law of the first event containing p (the dynamics on the space).
    Point step(const Point& p) const;
};

ChaosSystem make_system(SystemKind kind);

struct WitnessResult {
    SystemKind system;
    Address word;
    /// Exactly the set of points whose orbit follows the word.
    Region enclosure;
    Point witness;
    /// witness and its first |word|-1 images; orbit[i] lies in event word[i].
    std::vector<Point> orbit;
};

/// K = X_w0 ∩ f_w0^-1(X_w1 ∩ f_w1^-1(...)) by backward exact preimages. The
/// witness is the midpoint of K's first box (its left end, a point of the
/// middle-third set, for shift_cantor). Throws std::invalid_argument for
/// empty words or foreign symbols and std::logic_error if K is empty or the
/// orbit leaves its events.
WitnessResult realize_witness(const ChaosSystem& s, const Address& word);

struct PeriodicPoint {
    /// Word whose branch composition was solved (primitive root of the
    /// input).
    Address word;
    bool reduced = false;
    Point point;
    std::size_t prime_period = 0;
    std::vector<Point> orbit;
};

/// Exact fixed point of the composed branch of a word, with a prime-period
/// certificate: the orbit follows the word cyclically, returns after |word|
/// steps and not after any proper divisor. Throws std::runtime_error when
/// the composed branch has no admissible fixed point.
PeriodicPoint periodic_point(const ChaosSystem& s, const Address& word);

/// All binary words of lengths 1..d concatenated in lexicographic order.
Address dense_orbit_word(std::size_t d);

/// The witness orbit of dense_orbit_word(d) meets every depth-d cell.
CheckReport dense_orbit_check(const ChaosSystem& s, std::size_t d);

/// Steps until the orbits of x and some y with |x - y| <= delta are at
/// least 1/4 apart, within the budget; nullopt if none separates.
std::optional<std::size_t> separation_steps(const ChaosSystem& s, const Rational& x, const Rational& delta,
                                            std::size_t budget);

/// Sensitivity constant 1/4 on `samples` points (i+1)/(samples+1), step
/// budget bits(1/delta) + 2. Doubling and tent only (std::invalid_argument
/// otherwise).
CheckReport sensitivity_check(const ChaosSystem& s, const Rational& delta, std::size_t samples);

/// Every ordered pair (u, v) of depth-d cells is joined by an orbit that
/// starts in u and is in v after d steps. Requires 1 <= d <= 12.
CheckReport transitivity_check(const ChaosSystem& s, std::size_t d);

}  // namespace pchaos

#endif
