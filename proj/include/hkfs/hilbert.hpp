#pragma once

#include "hkfs/fan.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace hkfs {

struct LatticePoint {
    std::int64_t r = 0;
    std::int64_t s = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Union of the per-cone Hilbert bases of a fan.
struct HilbertSet {
    std::vector<LatticePoint> points;               // sorted, deduplicated
    std::vector<std::vector<LatticePoint>> per_cone;  // one sorted basis per cone, fan order
};

/// Unique minimal generating set of the monoid cone(u, v) ∩ Z², sorted.
/// Throws Error(DegenerateCone) when u and v are parallel.
std::vector<LatticePoint> cone_hilbert_basis(const Ray& u, const Ray& v);

/// Whether w lies in the closed cone spanned by u and v (exact).
bool cone_contains(const Ray& u, const Ray& v, const LatticePoint& w);

HilbertSet hilbert_set(const Fan& fan);

}  // namespace hkfs
