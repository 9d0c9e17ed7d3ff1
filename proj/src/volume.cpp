#include "hkfs/volume.hpp"

#include "hkfs/error.hpp"
#include "hkfs/slicing.hpp"

#include <omp.h>

#include <functional>

namespace hkfs {
namespace {

struct Node {
    ConvexCell cell;
    std::size_t next_clause = 0;
};

bool has_interior_with(const ConvexCell& cell, const HalfSpace& extra) {
    ConvexCell probe = cell;
    probe.add(extra);
    return is_full_dimensional(probe);
}

/// Children of `node` after splitting on its next clause.
std::vector<Node> expand(const RegionFormula& region, const Node& node) {
    const auto& clause = region.clauses[node.next_clause];
    const std::size_t k = node.next_clause + 1;

    std::vector<HalfSpace> live;
    for (const auto& atom : clause.atoms) {
        HalfSpace yes = to_halfspace(atom);
        HalfSpace no = to_halfspace(atom.negated());
        if (!has_interior_with(node.cell, no)) return {Node{node.cell, k}};
        if (has_interior_with(node.cell, yes)) live.push_back(std::move(yes));
    }

    std::vector<Node> children;
    ConvexCell rest = node.cell;
    for (std::size_t j = 0; j < live.size(); ++j) {
        ConvexCell child = rest;
        child.add(live[j]);
        // The first child is known to have interior.
        if (j == 0 || is_full_dimensional(child)) children.push_back({std::move(child), k});
        if (j + 1 == live.size()) break;
        HalfSpace no = live[j];
        for (auto& c : no.a) c = -c;
        no.b = -no.b;
        rest.add(std::move(no));
        if (!is_full_dimensional(rest)) break;
    }
    return children;
}

void expand_all(const RegionFormula& region, Node node, ShannonStats& stats,
                const std::function<void(ConvexCell&&)>& emit) {
    ++stats.nodes;
    if (node.next_clause == region.clauses.size()) {
        ++stats.cells;
        emit(std::move(node.cell));
        return;
    }
    for (auto& child : expand(region, node)) expand_all(region, std::move(child), stats, emit);
}

Node root(const RegionFormula& region) {
    Node n{ConvexCell::from_atoms(region.dim(), region.base), 0};
    return n;
}

/// Breadth-limited expansion that keeps depth-first order, so that the
/// frontier can be handed to independent workers.
std::vector<Node> frontier(const RegionFormula& region, std::size_t target, ShannonStats& stats) {
    std::vector<Node> nodes;
    Node r = root(region);
    if (!is_full_dimensional(r.cell)) return nodes;
    nodes.push_back(std::move(r));
    for (;;) {
        bool progressed = false;
        std::vector<Node> next;
        for (auto& n : nodes) {
            if (n.next_clause == region.clauses.size() || nodes.size() >= target) {
                next.push_back(std::move(n));
                continue;
            }
            ++stats.nodes;
            for (auto& c : expand(region, n)) next.push_back(std::move(c));
            progressed = true;
        }
        nodes = std::move(next);
        if (!progressed || nodes.size() >= target) break;
    }
    return nodes;
}

std::size_t frontier_target() { return static_cast<std::size_t>(omp_get_max_threads()) * 16; }

}  // namespace

std::vector<ConvexCell> shannon_cells(const RegionFormula& region, ShannonStats* stats) {
    ShannonStats local;
    auto nodes = frontier(region, frontier_target(), local);
    std::vector<std::vector<ConvexCell>> parts(nodes.size());
    std::vector<ShannonStats> part_stats(nodes.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        expand_all(region, std::move(nodes[i]), part_stats[i],
                   [&](ConvexCell&& c) { parts[i].push_back(std::move(c)); });
    }
    std::vector<ConvexCell> cells;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        local.nodes += part_stats[i].nodes;
        local.cells += part_stats[i].cells;
        for (auto& c : parts[i]) cells.push_back(std::move(c));
    }
    if (stats != nullptr) *stats = local;
    return cells;
}

BigRational region_volume(const RegionFormula& region, ShannonStats* stats) {
    ShannonStats local;
    auto nodes = frontier(region, frontier_target(), local);
    std::vector<BigRational> partial(nodes.size());
    std::vector<ShannonStats> part_stats(nodes.size());
    std::vector<std::exception_ptr> failures(nodes.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        try {
            expand_all(region, std::move(nodes[i]), part_stats[i], [&](ConvexCell&& c) {
                partial[i] += cell_volume(c);
            });
        } catch (...) {
            failures[i] = std::current_exception();
        }
    }
    BigRational total = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (failures[i]) {
            try {
                std::rethrow_exception(failures[i]);
            } catch (const Error& e) {
                if (e.code() == ErrorCode::UnboundedCell) {
                    throw Error(ErrorCode::UnboundedRegion, "region is unbounded");
                }
                throw;
            }
        }
        total += partial[i];
        local.nodes += part_stats[i].nodes;
        local.cells += part_stats[i].cells;
    }
    if (stats != nullptr) *stats = local;
    return total;
}

Invariants compute_invariants(const ExponentData& data) {
    Invariants inv;
    inv.f_signature = region_volume(fsig_region(data));
    inv.hilbert_kunz = region_volume(hk_region(data));
    return inv;
}

namespace reference {
namespace {

void expand_literal(const RegionFormula& region, const ConvexCell& cell, std::size_t k,
                    ShannonStats& stats, std::vector<ConvexCell>& out) {
    ++stats.nodes;
    if (k == region.clauses.size()) {
        ++stats.cells;
        out.push_back(cell);
        return;
    }
    ConvexCell rest = cell;
    for (const auto& atom : region.clauses[k].atoms) {
        ConvexCell child = rest;
        child.add(atom);
        if (is_feasible(child)) expand_literal(region, child, k + 1, stats, out);
        rest.add(atom.negated());
        if (!is_feasible(rest)) break;
    }
}

}  // namespace

std::vector<ConvexCell> shannon_cells(const RegionFormula& region, ShannonStats* stats) {
    ShannonStats local;
    std::vector<ConvexCell> out;
    const ConvexCell base = ConvexCell::from_atoms(region.dim(), region.base);
    if (is_feasible(base)) expand_literal(region, base, 0, local, out);
    if (stats != nullptr) *stats = local;
    return out;
}

BigRational region_volume(const RegionFormula& region, ShannonStats* stats) {
    BigRational total = 0;
    for (const auto& cell : reference::shannon_cells(region, stats)) {
        try {
            total += cell_volume_slicing(cell);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::UnboundedCell) {
                throw Error(ErrorCode::UnboundedRegion, "region is unbounded");
            }
            throw;
        }
    }
    return total;
}

}  // namespace reference
}  // namespace hkfs
