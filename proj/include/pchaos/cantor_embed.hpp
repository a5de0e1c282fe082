#ifndef PCHAOS_CANTOR_EMBED_HPP
#define PCHAOS_CANTOR_EMBED_HPP

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pchaos/address.hpp"
#include "pchaos/check_report.hpp"
#include "pchaos/geometry.hpp"

namespace pchaos {

enum class ModelKind { interval, square, tripod };

std::string_view to_string(ModelKind k);
/// Throws std::invalid_argument for unknown names.
ModelKind parse_model_kind(std::string_view name);

/// A concrete nondegenerate Peano continuum.
///
///   interval  [0,1]
///   square    [0,1]^2
///   tripod    three unit-half segments from (1/2,1/2) to (0,1/2), (1/2,0)
///             and (1/2,1), stored as degenerate boxes
struct PeanoModel {
    ModelKind kind;
    Region root;

    static PeanoModel make(ModelKind kind);
    std::size_t dim() const { return root.dim(); }
};

struct Cell {
    Region region;
    std::array<Point, 2> marked;

    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Nested cells X ⊇ X^1 ⊇ ... ⊇ X^depth keyed by binary address; level k
/// holds the 2^k cells with |address| = k.
class RefinementTree {
public:
    RefinementTree(PeanoModel model, std::size_t depth, std::map<Address, Cell> cells);

    const PeanoModel& model() const { return model_; }
    std::size_t depth() const { return depth_; }
    const std::map<Address, Cell>& cells() const { return cells_; }
    const Cell& cell(const Address& a) const;
    /// Cells of one level in address order.
    std::vector<std::pair<Address, const Cell*>> level(std::size_t k) const;

private:
    PeanoModel model_;
    std::size_t depth_;
    std::map<Address, Cell> cells_;
};

/// Splits a cell around its two marked points.
///
/// With d = distance(marked[0], marked[1]) and L = d/4, child i is the
/// Chebyshev ball of radius L about marked[i] clipped to the cell, and its
/// marked points are its own lexicographic extremes. Children are at least
/// d/2 apart. When the marked points are corners or arm tips of the cell
/// (the case for every cell build_refinement produces) each child has
/// diameter L < d/3. Throws std::invalid_argument if the marked points
/// coincide or leave the cell.
std::array<Cell, 2> subdivide(const PeanoModel& model, const Region& cell, const std::array<Point, 2>& marked);

/// Root cell marked at its lexicographic extremes, subdivided `depth` times.
RefinementTree build_refinement(const PeanoModel& model, std::size_t depth);

/// Region of the cell at `a`; throws std::invalid_argument if |a| > depth.
Region evaluate_address(const RefinementTree& tree, const Address& a);

/// Finite-stage witnesses at one level: pairwise disjointness, nesting
/// inside parents, diameter shrink below a third of the parent's marked
/// distance, persistence of marked points (perfectness), and separation of
/// each cell from the rest of the level (clopen trace).
CheckReport check_stage_invariants(const RefinementTree& tree, std::size_t level);

}  // namespace pchaos

#endif
