#pragma once

// Test-only oracles. Nothing here calls into the volume engine.

#include "hkfs/fan.hpp"
#include "hkfs/hilbert.hpp"
#include "hkfs/regions.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace hkfs::testing {

/// Lattice points of cone(u, v) with 0 <= r, s <= limit.
inline std::vector<LatticePoint> cone_points(const Ray& u, const Ray& v, std::int64_t limit) {
    std::vector<LatticePoint> out;
    for (std::int64_t r = 0; r <= limit; ++r) {
        for (std::int64_t s = 0; s <= limit; ++s) {
            if ((r != 0 || s != 0) && cone_contains(u, v, {r, s})) out.push_back({r, s});
        }
    }
    return out;
}

/// Irreducible cone lattice points in the sweep box: not a sum of two
/// nonzero cone lattice points.
inline std::set<LatticePoint> brute_force_irreducibles(const Ray& u, const Ray& v, std::int64_t limit) {
    const auto pts = cone_points(u, v, limit);
    const std::set<LatticePoint> in_cone(pts.begin(), pts.end());
    std::set<LatticePoint> out;
    for (const auto& w : pts) {
        bool reducible = false;
        for (const auto& p : pts) {
            if (p.r > w.r || p.s > w.s || p == w) continue;
            if (in_cone.count({w.r - p.r, w.s - p.s}) != 0) {
                reducible = true;
                break;
            }
        }
        if (!reducible) out.insert(w);
    }
    return out;
}

/// Every cone lattice point in the sweep box is a nonnegative integer
/// combination of `basis` (dynamic programming over the box).
inline bool generates_box(const Ray& u, const Ray& v, const std::vector<LatticePoint>& basis,
                          std::int64_t limit) {
    const auto n = static_cast<std::size_t>(limit + 1);
    std::vector<char> reach(n * n, 0);
    reach[0] = 1;
    for (std::int64_t r = 0; r <= limit; ++r) {
        for (std::int64_t s = 0; s <= limit; ++s) {
            if (!reach[static_cast<std::size_t>(r) * n + static_cast<std::size_t>(s)]) continue;
            for (const auto& h : basis) {
                const auto r2 = r + h.r;
                const auto s2 = s + h.s;
                if (r2 <= limit && s2 <= limit) reach[static_cast<std::size_t>(r2) * n + static_cast<std::size_t>(s2)] = 1;
            }
        }
    }
    for (const auto& w : cone_points(u, v, limit)) {
        if (!reach[static_cast<std::size_t>(w.r) * n + static_cast<std::size_t>(w.s)]) return false;
    }
    return true;
}

/// Double-precision membership with the region's own strictness.
inline bool holds_double(const LinearAtom& a, const std::vector<double>& p) {
    double v = a.constant.get_d();
    for (std::size_t j = 0; j < p.size(); ++j) v += a.coeffs[j].get_d() * p[j];
    switch (a.relation) {
        case Relation::GE: return v >= 0;
        case Relation::GT: return v > 0;
        case Relation::LE: return v <= 0;
        case Relation::LT: return v < 0;
    }
    return false;
}

inline bool contains_double(const RegionFormula& r, const std::vector<double>& p) {
    for (const auto& a : r.base) {
        if (!holds_double(a, p)) return false;
    }
    for (const auto& c : r.clauses) {
        if (std::none_of(c.atoms.begin(), c.atoms.end(), [&](const LinearAtom& a) { return holds_double(a, p); })) {
            return false;
        }
    }
    return true;
}

/// Length of the fiber {z : (x, y, z) in region} of a three-variable region.
/// The fiber is a finite union of intervals whose endpoints are roots of the
/// atoms in z, so testing the midpoint of every gap between roots is exact
/// up to rounding.
inline double fiber_length(const RegionFormula& region, double x, double y) {
    std::vector<double> roots;
    auto collect = [&](const LinearAtom& a) {
        const double cz = a.coeffs[2].get_d();
        if (cz == 0) return;
        roots.push_back(-(a.constant.get_d() + a.coeffs[0].get_d() * x + a.coeffs[1].get_d() * y) / cz);
    };
    for (const auto& a : region.base) collect(a);
    for (const auto& c : region.clauses) {
        for (const auto& a : c.atoms) collect(a);
    }
    std::sort(roots.begin(), roots.end());
    double len = 0;
    for (std::size_t k = 0; k + 1 < roots.size(); ++k) {
        if (roots[k + 1] <= roots[k]) continue;
        const double mid = 0.5 * (roots[k] + roots[k + 1]);
        if (contains_double(region, {x, y, mid})) len += roots[k + 1] - roots[k];
    }
    return len;
}

/// Midpoint-rule integral of fiber_length over [0, X] x [0, Y].
inline double fiber_quadrature(const RegionFormula& region, double max_x, double max_y, int steps) {
    const double hx = max_x / steps;
    const double hy = max_y / steps;
    double acc = 0;
    for (int i = 0; i < steps; ++i) {
        for (int j = 0; j < steps; ++j) acc += fiber_length(region, (i + 0.5) * hx, (j + 0.5) * hy);
    }
    return acc * hx * hy;
}

/// Deterministic random exponent data.
inline ExponentData random_data(std::mt19937& rng, std::size_t max_n, std::int64_t max_entry) {
    std::uniform_int_distribution<std::size_t> dn(1, max_n);
    std::uniform_int_distribution<std::int64_t> de(1, max_entry);
    ExponentData d;
    const auto n = dn(rng);
    for (std::size_t i = 0; i < n; ++i) {
        d.a.push_back(de(rng));
        d.b.push_back(de(rng));
    }
    return d;
}

}  // namespace hkfs::testing
