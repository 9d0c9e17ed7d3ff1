#include "hkfs/hilbert.hpp"

#include "hkfs/error.hpp"

#include <algorithm>

namespace hkfs {
namespace {

std::int64_t det2(std::int64_t ux, std::int64_t uy, std::int64_t vx, std::int64_t vy) {
    return ux * vy - uy * vx;
}

/// Cone coordinates of w = lambda u + mu v, as numerators over D = det[u v],
/// normalized so that D > 0.
struct ConeCoords {
    std::int64_t lambda;
    std::int64_t mu;
    std::int64_t d;
};

ConeCoords coords(const Ray& u, const Ray& v, const LatticePoint& w) {
    std::int64_t d = det(u, v);
    std::int64_t lambda = det2(w.r, w.s, v.x, v.y);
    std::int64_t mu = det2(u.x, u.y, w.r, w.s);
    if (d < 0) {
        d = -d;
        lambda = -lambda;
        mu = -mu;
    }
    return {lambda, mu, d};
}

}  // namespace

bool cone_contains(const Ray& u, const Ray& v, const LatticePoint& w) {
    const auto c = coords(u, v, w);
    return c.lambda >= 0 && c.mu >= 0;
}

std::vector<LatticePoint> cone_hilbert_basis(const Ray& u, const Ray& v) {
    if (det(u, v) == 0) {
        throw Error(ErrorCode::DegenerateCone, "cone rays are parallel");
    }
    // Every irreducible element lies in the closed fundamental parallelogram
    // {lambda u + mu v : 0 <= lambda, mu <= 1}.
    std::vector<LatticePoint> candidates;
    const auto max_r = std::max<std::int64_t>(0, u.x) + std::max<std::int64_t>(0, v.x);
    const auto max_s = std::max<std::int64_t>(0, u.y) + std::max<std::int64_t>(0, v.y);
    const auto min_r = std::min<std::int64_t>(0, u.x) + std::min<std::int64_t>(0, v.x);
    const auto min_s = std::min<std::int64_t>(0, u.y) + std::min<std::int64_t>(0, v.y);
    for (auto r = min_r; r <= max_r; ++r) {
        for (auto s = min_s; s <= max_s; ++s) {
            if (r == 0 && s == 0) continue;
            const auto c = coords(u, v, {r, s});
            if (c.lambda >= 0 && c.mu >= 0 && c.lambda <= c.d && c.mu <= c.d) {
                candidates.push_back({r, s});
            }
        }
    }

    std::vector<LatticePoint> basis;
    for (const auto& w : candidates) {
        const bool reducible = std::any_of(candidates.begin(), candidates.end(), [&](const LatticePoint& c) {
            if (c == w) return false;
            const LatticePoint rest{w.r - c.r, w.s - c.s};
            return cone_contains(u, v, rest);
        });
        if (!reducible) basis.push_back(w);
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

HilbertSet hilbert_set(const Fan& fan) {
    HilbertSet h;
    for (const auto& cone : fan.cones()) {
        auto basis = cone_hilbert_basis(cone.first, cone.second);
        h.points.insert(h.points.end(), basis.begin(), basis.end());
        h.per_cone.push_back(std::move(basis));
    }
    std::sort(h.points.begin(), h.points.end());
    h.points.erase(std::unique(h.points.begin(), h.points.end()), h.points.end());
    return h;
}

}  // namespace hkfs
