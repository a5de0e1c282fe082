#include "pchaos/cantor_embed.hpp"

#include <optional>
#include <stdexcept>

namespace pchaos {

std::string_view to_string(ModelKind k) {
    switch (k) {
        case ModelKind::interval: return "interval";
        case ModelKind::square: return "square";
        case ModelKind::tripod: return "tripod";
    }
    return "?";
}

ModelKind parse_model_kind(std::string_view name) {
    if (name == "interval") return ModelKind::interval;
    if (name == "square") return ModelKind::square;
    if (name == "tripod") return ModelKind::tripod;
    throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

PeanoModel PeanoModel::make(ModelKind kind) {
    const Rational half(1, 2);
    switch (kind) {
        case ModelKind::interval: return {kind, Region::unit(1)};
        case ModelKind::square: return {kind, Region::unit(2)};
        case ModelKind::tripod:
            return {kind, Region({Box(Interval(0, half), Interval(half, half)),
                                  Box(Interval(half, half), Interval(0, half)),
                                  Box(Interval(half, half), Interval(half, 1))})};
    }
    throw std::invalid_argument("unknown model kind");
}

RefinementTree::RefinementTree(PeanoModel model, std::size_t depth, std::map<Address, Cell> cells)
    : model_(std::move(model)), depth_(depth), cells_(std::move(cells)) {
    if (!cells_.count(Address())) throw std::invalid_argument("refinement tree without a root cell");
}

const Cell& RefinementTree::cell(const Address& a) const {
    auto it = cells_.find(a);
    if (it == cells_.end()) throw std::out_of_range("no cell at address '" + a.str() + "'");
    return it->second;
}

std::vector<std::pair<Address, const Cell*>> RefinementTree::level(std::size_t k) const {
    std::vector<std::pair<Address, const Cell*>> out;
    for (const auto& [a, c] : cells_) {
        if (a.size() == k) out.emplace_back(a, &c);
    }
    return out;
}

std::array<Cell, 2> subdivide(const PeanoModel& model, const Region& cell, const std::array<Point, 2>& marked) {
    if (marked[0].dim() != model.dim() || marked[1].dim() != model.dim())
        throw std::invalid_argument("subdivide: marked point dimension does not match the model");
    if (marked[0] == marked[1]) throw std::invalid_argument("subdivide: marked points coincide");
    if (!cell.contains(marked[0]) || !cell.contains(marked[1]))
        throw std::invalid_argument("subdivide: marked point outside the cell");

    const Rational reach = distance(marked[0], marked[1]) / 4;
    auto make_child = [&](const Point& anchor) {
        // Nonempty: the anchor itself lies in both operands.
        Region r = *intersect(cell, Box::around(anchor, reach));
        Point lo = r.lex_min();
        Point hi = r.lex_max();
        return Cell{std::move(r), {std::move(lo), std::move(hi)}};
    };
    return {make_child(marked[0]), make_child(marked[1])};
}

RefinementTree build_refinement(const PeanoModel& model, std::size_t depth) {
    std::map<Address, Cell> cells;
    cells.emplace(Address(), Cell{model.root, {model.root.lex_min(), model.root.lex_max()}});
    std::vector<Address> frontier{Address()};
    for (std::size_t k = 0; k < depth; ++k) {
        std::vector<Address> next;
        next.reserve(frontier.size() * 2);
        for (const auto& a : frontier) {
            const Cell& parent = cells.at(a);
            auto children = subdivide(model, parent.region, parent.marked);
            for (std::uint8_t j = 0; j < 2; ++j) {
                cells.emplace(a.child(j), std::move(children[j]));
                next.push_back(a.child(j));
            }
        }
        frontier = std::move(next);
    }
    return RefinementTree(model, depth, std::move(cells));
}

Region evaluate_address(const RefinementTree& tree, const Address& a) {
    if (a.size() > tree.depth())
        throw std::invalid_argument("address '" + a.str() + "' is deeper than the tree (depth " +
                                    std::to_string(tree.depth()) + ")");
    return tree.cell(a).region;
}

CheckReport check_stage_invariants(const RefinementTree& tree, std::size_t k) {
    if (k > tree.depth()) throw std::invalid_argument("check_stage_invariants: level beyond tree depth");
    CheckReport rep(std::string(to_string(tree.model().kind)) + " depth " + std::to_string(tree.depth()) +
                    " level " + std::to_string(k));
    const auto cells = tree.level(k);

    // Pairwise overlap and the smallest gap seen, in one pass.
    std::optional<std::pair<Address, Address>> overlap;
    std::optional<Rational> min_gap;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
            const Region& a = cells[i].second->region;
            const Region& b = cells[j].second->region;
            if (!disjoint(a, b)) {
                if (!overlap) overlap = {cells[i].first, cells[j].first};
                min_gap = Rational(0);
                continue;
            }
            Rational g = gap(a, b);
            if (!min_gap || g < *min_gap) min_gap = std::move(g);
        }
    }
    const bool count_ok = cells.size() == (std::size_t{1} << k);
    if (overlap)
        rep.add("disjoint", false, "cells '" + overlap->first.str() + "' and '" + overlap->second.str() + "' meet");
    else
        rep.add("disjoint", count_ok, std::to_string(cells.size()) + " cells, pairwise disjoint");

    bool nested = true;
    bool shrink = true;
    std::string nest_note = "every cell inside its parent";
    std::string shrink_note;
    Rational worst_ratio = 0;
    for (const auto& [addr, c] : cells) {
        if (addr.empty()) continue;
        const Cell& parent = tree.cell(addr.prefix(addr.size() - 1));
        if (nested && !subset(c->region, parent.region)) {
            nested = false;
            nest_note = "cell '" + addr.str() + "' leaves its parent";
        }
        const Rational bound = distance(parent.marked[0], parent.marked[1]) / 3;
        const Rational dia = diameter(c->region);
        if (!(dia < bound) && shrink) {
            shrink = false;
            shrink_note = "cell '" + addr.str() + "' diameter " + dia.str() + " >= " + bound.str();
        }
        worst_ratio = max(worst_ratio, dia / (bound * 3));
    }
    rep.add("nested", nested, nest_note);
    if (shrink)
        shrink_note = k == 0 ? "root level, no parent" : "max dia/d(parent marks) = " + worst_ratio.str() + " < 1/3";
    rep.add("shrink", shrink, shrink_note);

    // Each cell holds two distinct marked points; below the last level,
    // marked point j persists as a marked point of child j and lies in no
    // other cell of the next level.
    bool perfect = true;
    std::string perfect_note = "two persistent marked points per cell";
    const auto next = k < tree.depth() ? tree.level(k + 1) : decltype(tree.level(0)){};
    for (const auto& [addr, c] : cells) {
        if (!perfect) break;
        const auto& m = c->marked;
        if (m[0] == m[1] || !c->region.contains(m[0]) || !c->region.contains(m[1])) {
            perfect = false;
            perfect_note = "cell '" + addr.str() + "' lacks two distinct marked points";
            break;
        }
        if (next.empty()) continue;
        for (std::uint8_t j = 0; j < 2 && perfect; ++j) {
            const Cell& ch = tree.cell(addr.child(j));
            if (ch.marked[0] != m[j] && ch.marked[1] != m[j]) {
                perfect = false;
                perfect_note = "marked point " + m[j].str() + " of '" + addr.str() + "' not kept by its child";
                break;
            }
            std::size_t holders = 0;
            for (const auto& [a2, c2] : next) holders += c2->region.contains(m[j]) ? 1 : 0;
            if (holders != 1) {
                perfect = false;
                perfect_note = "marked point " + m[j].str() + " lies in " + std::to_string(holders) + " next-level cells";
            }
        }
    }
    rep.add("perfect", perfect, perfect_note);

    // X^k minus a cell is the union of the remaining cells, which is closed
    // and at positive distance from it.
    if (cells.size() <= 1)
        rep.add("clopen_trace", count_ok, "single cell, complement empty");
    else if (min_gap && min_gap->sign() > 0)
        rep.add("clopen_trace", true, "complements are unions of closed cells at distance >= " + min_gap->str());
    else
        rep.add("clopen_trace", false, "a cell touches the rest of its level");
    return rep;
}

}  // namespace pchaos
