#ifndef PCHAOS_SURJECTIONS_HPP
#define PCHAOS_SURJECTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "pchaos/address.hpp"
#include "pchaos/check_report.hpp"
#include "pchaos/geometry.hpp"
#include "pchaos/rational.hpp"

namespace pchaos {

// ---------------------------------------------------------------------------
// Cantor set onto [0,1] and [0,1]^2

/// [sum b_i 2^-i, that + 2^-n]: image of the cylinder of `prefix` under the
/// binary-expansion map.
Region binary_expansion_map(const Address& prefix);

/// Bits at odd positions (1-based) refine x, even positions refine y.
Region interleave_map(const Address& prefix);

// ---------------------------------------------------------------------------
// Clopen blocks of the Cantor model

/// Finite union of pairwise disjoint cylinders, held sorted in shortlex
/// order.
class ClopenBlock {
public:
    explicit ClopenBlock(std::vector<Address> cylinders);
    /// Parses "0,10" (comma separated; "e" names the empty word).
    static ClopenBlock parse(std::string_view text);

    const std::vector<Address>& cylinders() const { return cylinders_; }
    /// The block in the middle-third model.
    Region region() const;
    bool contains_cylinder(const Address& a) const;
    bool overlaps(const ClopenBlock& other) const;
    std::string str() const;

    friend bool operator==(const ClopenBlock&, const ClopenBlock&) = default;

private:
    std::vector<Address> cylinders_;
};

/// Staircase partition into n blocks: "0", "10", "110", ..., "1..10", "1..1".
std::vector<ClopenBlock> clopen_partition(std::size_t n);

// ---------------------------------------------------------------------------
// Evaluable maps out of the Cantor set

enum class CantorMapKind { binary_expansion, interleave, block_glued, bit_flip };
enum class TargetKind { interval, square, cantor };

std::string_view to_string(CantorMapKind k);
std::string_view to_string(TargetKind k);

/// x = source.t is sent to target.t. The sources of a map form a complete
/// prefix code.
struct PrefixRule {
    Address source;
    Address target;
};

/// Continuous surjection from the Cantor set, evaluated on cylinder
/// prefixes. Cantor-valued kinds are prefix substitutions; their image of a
/// cylinder is a finite union of cylinders, computed exactly.
class CantorMap {
public:
    static CantorMap binary_expansion();
    static CantorMap interleave();
    /// Leading-bit flip, "0" <-> "1".
    static CantorMap bit_flip();

    CantorMapKind kind() const { return kind_; }
    TargetKind target() const { return target_; }
    const std::vector<PrefixRule>& rules() const { return rules_; }
    /// Domain blocks (with any padding block last) and their targets;
    /// empty for the non-block kinds.
    const std::vector<ClopenBlock>& domain_blocks() const { return domain_blocks_; }
    const std::vector<ClopenBlock>& target_blocks() const { return target_blocks_; }
    bool padded() const { return padded_; }

    /// Enclosure of the image of cyl(prefix).
    Region evaluate(const Address& prefix) const;
    /// Cantor-valued kinds: cylinders whose union is exactly f(cyl(prefix)).
    std::vector<Address> image_cylinders(const Address& prefix) const;
    /// Upper bound on the diameter of f(cyl(a)) over all |a| = n.
    Rational modulus(std::size_t n) const;

private:
    friend CantorMap block_surjection(std::vector<ClopenBlock> a, std::vector<ClopenBlock> b);
    CantorMap(CantorMapKind kind, TargetKind target) : kind_(kind), target_(target) {}

    CantorMapKind kind_;
    TargetKind target_;
    std::vector<PrefixRule> rules_;
    std::vector<ClopenBlock> domain_blocks_;
    std::vector<ClopenBlock> target_blocks_;
    bool padded_ = false;
};

/// Glues per-block surjections g_i : A_i -> B_i of the Cantor set onto
/// itself. Each g_i re-roots the cylinders of A_i onto those of B_i,
/// splitting the last A_i cylinder along a staircase partition when B_i has
/// more cylinders. If the A_i do not cover, the complement is appended as a
/// padding block mapped onto the whole space. Throws std::invalid_argument
/// for overlapping A blocks, size mismatch or empty input.
CantorMap block_surjection(std::vector<ClopenBlock> a, std::vector<ClopenBlock> b);

/// Checks f(A_i) ⊆ B_i on every depth-n cylinder of A_i, and that every
/// depth-n cylinder of B_i meets an image enclosure (B_i within modulus(n)
/// of f(A_i)). `a` and `b` need not be the blocks f was built from.
CheckReport verify_block_surjection(const CantorMap& f, const std::vector<ClopenBlock>& a,
                                    const std::vector<ClopenBlock>& b, std::size_t n);

/// Checks that the depth-n images of all 2^n prefixes cover the target
/// exactly. Interval and square kinds only.
CheckReport verify_covering(const CantorMap& f, std::size_t n);

// ---------------------------------------------------------------------------
// Space-filling curve and waypoint maps

/// Depth-k Hilbert cell index j as a box of side 2^-k. Index 0 touches
/// (0,0), index 4^k-1 touches (1,0), consecutive cells share an edge.
Box hilbert_cell(std::size_t k, std::uint64_t j);

/// Box for a parameter cell [j 4^-k, (j+1) 4^-k]; std::invalid_argument for
/// anything else.
Region hilbert_enclosure(const Interval& t_cell);

/// Waypoints x_1 < ... < x_n in [0,1] with targets y_i.
class WaypointMap {
public:
    WaypointMap(TargetKind target, std::vector<std::pair<Rational, Point>> waypoints);

    TargetKind target() const { return target_; }
    const std::vector<std::pair<Rational, Point>>& waypoints() const { return waypoints_; }

private:
    TargetKind target_;
    std::vector<std::pair<Rational, Point>> waypoints_;
};

/// One piece of a waypoint surjection on the parameter interval [lo, hi].
struct Segment {
    enum class Kind { constant, linear, sweep };
    Kind kind;
    Rational lo;
    Rational hi;
    Point from;  // constant value, or linear start
    Point to;    // linear end (equal to `from` otherwise)
};

/// Continuous map [0,1] onto the interval or square with f(x_i) = y_i.
///
/// Outside [x_1, x_n] it is constant. Each gap [x_i, x_{i+1}] is cut into
/// thirds: a straight path from y_i to the sweep start, a full sweep of the
/// target, a straight path from the sweep end to y_{i+1}. The interval sweep
/// is the triangle wave 0 -> 1 -> 0; the square sweep is the Hilbert curve
/// from (0,0) to (1,0). With a single waypoint the outer piece after x_1
/// (before it, if x_1 = 1) becomes a loop y_1 -> sweep -> y_1 instead of a
/// constant.
class WaypointSurjection {
public:
    explicit WaypointSurjection(WaypointMap w);

    const WaypointMap& waypoint_map() const { return map_; }
    const std::vector<Segment>& segments() const { return segments_; }
    std::size_t dim() const { return map_.target() == TargetKind::square ? 2 : 1; }

    /// Enclosure of f(t) of width <= 2^-depth. Exact (a single point) off the
    /// square sweeps.
    Region evaluate(const Rational& t, std::size_t depth) const;
    /// f(t) when it is exactly representable at any depth.
    std::optional<Point> exact_value(const Rational& t) const;

private:
    WaypointMap map_;
    std::vector<Segment> segments_;
};

WaypointSurjection waypoint_surjection(WaypointMap w);

/// Exact pinning f(x_i) = y_i, sweep coverage of the target at resolution
/// 2^-bits, and nesting/halving of enclosures across depths.
CheckReport verify_waypoints(const WaypointSurjection& f, std::size_t bits);

}  // namespace pchaos

#endif
