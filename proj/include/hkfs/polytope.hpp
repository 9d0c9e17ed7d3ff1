#pragma once

#include "hkfs/lp.hpp"
#include "hkfs/rational.hpp"
#include "hkfs/regions.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hkfs {

/// Conjunction of closed halfspaces. Strict atoms are relaxed to their
/// closures; that changes the solution set only by a null set.
struct ConvexCell {
    std::size_t dim = 0;
    std::vector<HalfSpace> rows;

    static ConvexCell from_atoms(std::size_t dim, std::span<const LinearAtom> atoms);

    void add(const LinearAtom& atom);
    void add(HalfSpace h) { rows.push_back(std::move(h)); }

    bool contains(std::span<const BigRational> point) const;
};

/// Closed relaxation of a single atom.
HalfSpace to_halfspace(const LinearAtom& atom);

bool is_feasible(const ConvexCell& cell);
bool is_full_dimensional(const ConvexCell& cell);
/// Recession cone is {0}. Precondition: the cell is feasible.
bool is_bounded(const ConvexCell& cell);

struct Interval {
    BigRational lo;
    BigRational hi;
};

/// Exact per-coordinate extent, or nullopt when the cell is unbounded.
/// Precondition: the cell is feasible.
std::optional<std::vector<Interval>> bounding_box(const ConvexCell& cell);

/// Same solution set with duplicate and redundant rows removed. For a
/// full-dimensional cell the remaining rows are exactly its facets.
ConvexCell irredundant(const ConvexCell& cell);

struct Vertex {
    std::vector<BigRational> x;
    std::vector<std::uint32_t> tight;  // indices of rows through the vertex
};

/// Distinct solutions of every uniquely solvable system formed by `dim` of
/// the cell's boundary hyperplanes, feasible or not. Sorted.
std::vector<std::vector<BigRational>> basic_solutions(const ConvexCell& cell);

/// Vertices of a bounded cell, lexicographically sorted.
std::vector<Vertex> vertices(const ConvexCell& cell);

/// Exact volume by a pulling triangulation of the vertex set. Throws
/// Error(UnboundedCell) if the cell is unbounded; empty and lower-dimensional
/// cells have volume zero.
BigRational cell_volume(const ConvexCell& cell);

/// |det(v_1 - v_0, ..., v_d - v_0)| / d!
BigRational simplex_volume(std::span<const std::vector<BigRational>> points);

}  // namespace hkfs
