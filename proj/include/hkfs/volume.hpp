#pragma once

#include "hkfs/fan.hpp"
#include "hkfs/polytope.hpp"
#include "hkfs/rational.hpp"
#include "hkfs/regions.hpp"

#include <cstddef>
#include <vector>

namespace hkfs {

struct ShannonStats {
    std::size_t nodes = 0;  // branch-tree nodes visited
    std::size_t cells = 0;  // leaves kept
};

/// Splits region into convex cells that are pairwise disjoint up to a null
/// set and whose union is the region up to a null set. Clauses are expanded
/// in order; for (A_1 | ... | A_k) child j adds A_j and not A_1 .. not A_{j-1}.
/// Branches without interior are pruned, and a clause already implied by the
/// current cell is skipped without branching.
std::vector<ConvexCell> shannon_cells(const RegionFormula& region, ShannonStats* stats = nullptr);

/// Exact volume: cells are expanded and integrated in parallel (OpenMP).
/// Throws Error(UnboundedRegion) if some cell is unbounded.
BigRational region_volume(const RegionFormula& region, ShannonStats* stats = nullptr);

struct Invariants {
    BigRational hilbert_kunz;
    BigRational f_signature;
};

Invariants compute_invariants(const ExponentData& data);

namespace reference {

/// Literal Shannon expansion: branches are pruned only when their closed
/// constraint set is infeasible. Serial.
std::vector<ConvexCell> shannon_cells(const RegionFormula& region, ShannonStats* stats = nullptr);

/// Serial sum of slicing volumes over the literal expansion.
BigRational region_volume(const RegionFormula& region, ShannonStats* stats = nullptr);

}  // namespace reference
}  // namespace hkfs
