#include "hkfs/polytope.hpp"

#include "hkfs/error.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hkfs {

HalfSpace to_halfspace(const LinearAtom& atom) {
    HalfSpace h;
    h.a.resize(atom.coeffs.size());
    // c·v + k <= 0  <=>  c·v <= -k ;  c·v + k >= 0  <=>  -c·v <= k
    const bool upper = atom.relation == Relation::LE || atom.relation == Relation::LT;
    for (std::size_t j = 0; j < atom.coeffs.size(); ++j) h.a[j] = upper ? atom.coeffs[j] : -atom.coeffs[j];
    h.b = upper ? -atom.constant : atom.constant;
    return h;
}

ConvexCell ConvexCell::from_atoms(std::size_t dim, std::span<const LinearAtom> atoms) {
    ConvexCell cell{dim, {}};
    for (const auto& atom : atoms) cell.add(atom);
    return cell;
}

void ConvexCell::add(const LinearAtom& atom) {
    if (atom.coeffs.size() != dim) {
        throw Error(ErrorCode::DimensionMismatch, "atom dimension does not match the cell");
    }
    rows.push_back(to_halfspace(atom));
}

bool ConvexCell::contains(std::span<const BigRational> point) const {
    return std::all_of(rows.begin(), rows.end(), [&](const HalfSpace& h) { return h.holds(point); });
}

bool is_feasible(const ConvexCell& cell) { return lp::feasible(cell.rows, cell.dim); }

bool is_full_dimensional(const ConvexCell& cell) { return lp::full_dimensional(cell.rows, cell.dim); }

std::optional<std::vector<Interval>> bounding_box(const ConvexCell& cell) {
    std::vector<Interval> box(cell.dim);
    std::vector<BigRational> objective(cell.dim);
    for (std::size_t k = 0; k < cell.dim; ++k) {
        objective.assign(cell.dim, BigRational(0));
        objective[k] = 1;
        auto hi = lp::maximize(cell.rows, objective, cell.dim);
        if (hi.status != lp::Status::Optimal) return std::nullopt;
        objective[k] = -1;
        auto lo = lp::maximize(cell.rows, objective, cell.dim);
        if (lo.status != lp::Status::Optimal) return std::nullopt;
        box[k] = {-lo.value, hi.value};
    }
    return box;
}

bool is_bounded(const ConvexCell& cell) {
    // A nonzero recession direction has some nonzero coordinate, so one of
    // the 2d coordinate maximizations is unbounded.
    return bounding_box(cell).has_value();
}

ConvexCell irredundant(const ConvexCell& cell) {
    std::vector<HalfSpace> rows;
    rows.reserve(cell.rows.size());
    std::set<std::pair<std::vector<BigRational>, BigRational>> seen;
    for (const auto& h : cell.rows) {
        HalfSpace n = normalized(h);
        const bool trivial = std::all_of(n.a.begin(), n.a.end(), [](const BigRational& c) { return sgn(c) == 0; });
        if (trivial && sgn(n.b) >= 0) continue;
        if (seen.emplace(n.a, n.b).second) rows.push_back(std::move(n));
    }
    // Parallel rows with the same normal: keep the tightest.
    std::map<std::vector<BigRational>, std::size_t> tightest;
    std::vector<bool> keep(rows.size(), true);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto [it, inserted] = tightest.emplace(rows[i].a, i);
        if (inserted) continue;
        if (rows[i].b < rows[it->second].b) {
            keep[it->second] = false;
            it->second = i;
        } else {
            keep[i] = false;
        }
    }
    std::vector<HalfSpace> pruned;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (keep[i]) pruned.push_back(std::move(rows[i]));
    }
    rows = std::move(pruned);

    // Drop row j when the others already imply it.
    for (std::size_t j = rows.size(); j-- > 0;) {
        std::vector<HalfSpace> others;
        others.reserve(rows.size() - 1);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != j) others.push_back(rows[i]);
        }
        const auto r = lp::maximize(others, rows[j].a, cell.dim);
        if (r.status == lp::Status::Optimal && r.value <= rows[j].b) {
            rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(j));
        }
    }
    return {cell.dim, std::move(rows)};
}

namespace {

/// Calls fn(x) once per uniquely solvable d-subset of rows (duplicates included).
template <typename Fn>
void for_each_basic_solution(const ConvexCell& cell, Fn&& fn) {
    const std::size_t d = cell.dim;
    const std::size_t m = cell.rows.size();
    if (d == 0 || m < d) return;
    std::vector<std::size_t> pick(d);
    for (std::size_t k = 0; k < d; ++k) pick[k] = k;
    Matrix system(d, d + 1);
    for (;;) {
        for (std::size_t r = 0; r < d; ++r) {
            const auto& h = cell.rows[pick[r]];
            for (std::size_t c = 0; c < d; ++c) system(r, c) = h.a[c];
            system(r, d) = h.b;
        }
        if (auto x = solve_unique(system)) fn(std::move(*x));
        // next d-subset of [0, m)
        std::size_t k = d;
        while (k > 0 && pick[k - 1] == m - d + k - 1) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t j = k; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

std::vector<std::vector<BigRational>> basic_solutions(const ConvexCell& cell) {
    std::set<std::vector<BigRational>> found;
    for_each_basic_solution(cell, [&](std::vector<BigRational> x) { found.insert(std::move(x)); });
    return {found.begin(), found.end()};
}

std::vector<Vertex> vertices(const ConvexCell& cell) {
    std::map<std::vector<BigRational>, Vertex> found;
    for_each_basic_solution(cell, [&](std::vector<BigRational> x) {
        if (found.find(x) != found.end() || !cell.contains(x)) return;
        Vertex v;
        v.x = x;
        for (std::size_t i = 0; i < cell.rows.size(); ++i) {
            if (sgn(cell.rows[i].slack(v.x)) == 0) v.tight.push_back(static_cast<std::uint32_t>(i));
        }
        found.emplace(std::move(x), std::move(v));
    });
    std::vector<Vertex> out;
    out.reserve(found.size());
    for (auto& [key, v] : found) out.push_back(std::move(v));
    return out;
}

BigRational simplex_volume(std::span<const std::vector<BigRational>> points) {
    const std::size_t d = points.size() - 1;
    Matrix m(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) m(r, c) = points[r + 1][c] - points[0][c];
    }
    BigRational v = abs(determinant(m));
    BigInt fact = 1;
    for (std::size_t k = 2; k <= d; ++k) fact *= static_cast<unsigned long>(k);
    return v / BigRational(fact);
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
std::size_t popcount(const Bits& b) {
    std::size_t n = 0;
    for (auto w : b) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
}

/// Pulling triangulation of a bounded full-dimensional polytope given by its
/// facets and vertices. Faces are identified by their vertex sets.
class Triangulator {
public:
    Triangulator(const std::vector<Vertex>& verts, std::size_t facet_count, std::size_t dim)
        : verts_(verts), dim_(dim), words_((verts.size() + 63) / 64) {
        facet_vertices_.assign(facet_count, Bits(words_, 0));
        for (std::size_t v = 0; v < verts.size(); ++v) {
            for (auto f : verts[v].tight) set_bit(facet_vertices_[f], v);
        }
    }

    BigRational volume() {
        Bits all(words_, 0);
        for (std::size_t v = 0; v < verts_.size(); ++v) set_bit(all, v);
        BigRational total = 0;
        std::vector<std::size_t> stack;
        walk(all, dim_, stack, total);
        BigInt fact = 1;
        for (std::size_t k = 2; k <= dim_; ++k) fact *= static_cast<unsigned long>(k);
        return total / BigRational(fact);
    }

private:
    /// Accumulates |det| of every simplex apex_stack + (simplex of face).
    void walk(const Bits& face, std::size_t k, std::vector<std::size_t>& apexes, BigRational& total) {
        std::size_t apex = 0;
        while (!test_bit(face, apex)) ++apex;
        if (k == 0) {
            apexes.push_back(apex);
            total += abs_det(apexes);
            apexes.pop_back();
            return;
        }
        apexes.push_back(apex);
        for (const auto& sub : facets_of(face, k, apex)) walk(sub, k - 1, apexes, total);
        apexes.pop_back();
    }

    const std::vector<Bits>& facets_of(const Bits& face, std::size_t k, std::size_t apex) {
        auto it = facet_cache_.find(face);
        if (it != facet_cache_.end()) return it->second;
        std::vector<Bits> out;
        std::set<Bits> seen;
        for (const auto& fv : facet_vertices_) {
            Bits g(words_);
            for (std::size_t w = 0; w < words_; ++w) g[w] = face[w] & fv[w];
            if (g == face || test_bit(g, apex)) continue;
            if (popcount(g) < k) continue;
            if (!seen.insert(g).second) continue;
            if (affine_dimension(g) + 1 != k) continue;
            out.push_back(std::move(g));
        }
        return facet_cache_.emplace(face, std::move(out)).first->second;
    }

    std::size_t affine_dimension(const Bits& g) const {
        std::vector<std::size_t> ids;
        for (std::size_t v = 0; v < verts_.size(); ++v) {
            if (test_bit(g, v)) ids.push_back(v);
        }
        Matrix m(ids.size() - 1, dim_);
        for (std::size_t r = 1; r < ids.size(); ++r) {
            for (std::size_t c = 0; c < dim_; ++c) m(r - 1, c) = verts_[ids[r]].x[c] - verts_[ids[0]].x[c];
        }
        return rank(m);
    }

    BigRational abs_det(const std::vector<std::size_t>& simplex) const {
        Matrix m(dim_, dim_);
        const auto& origin = verts_[simplex.back()].x;
        for (std::size_t r = 0; r < dim_; ++r) {
            for (std::size_t c = 0; c < dim_; ++c) m(r, c) = verts_[simplex[r]].x[c] - origin[c];
        }
        return abs(determinant(m));
    }

    const std::vector<Vertex>& verts_;
    std::size_t dim_;
    std::size_t words_;
    std::vector<Bits> facet_vertices_;
    std::map<Bits, std::vector<Bits>> facet_cache_;
};

}  // namespace

BigRational cell_volume(const ConvexCell& cell) {
    if (cell.dim == 0) return 0;
    if (!is_full_dimensional(cell)) return 0;
    if (!is_bounded(cell)) throw Error(ErrorCode::UnboundedCell, "cell is unbounded");
    const ConvexCell facets = irredundant(cell);
    const auto verts = vertices(facets);
    if (verts.size() <= cell.dim) return 0;
    Triangulator tri(verts, facets.rows.size(), cell.dim);
    return tri.volume();
}

}  // namespace hkfs
