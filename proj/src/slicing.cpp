#include "hkfs/slicing.hpp"

#include "hkfs/error.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <numeric>

namespace hkfs::reference {

BigRational Polynomial::operator()(const BigRational& t) const {
    BigRational acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * t + coeffs[k];
    return acc;
}

BigRational Polynomial::integrate(const BigRational& lo, const BigRational& hi) const {
    BigRational acc = 0;
    BigRational hi_pow = hi;
    BigRational lo_pow = lo;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (sgn(coeffs[k]) != 0) acc += coeffs[k] * (hi_pow - lo_pow) / BigRational(static_cast<long>(k + 1));
        hi_pow *= hi;
        lo_pow *= lo;
    }
    return acc;
}

Polynomial interpolate(std::span<const BigRational> ts, std::span<const BigRational> vs) {
    const std::size_t n = ts.size();
    Matrix vandermonde(n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        BigRational p = 1;
        for (std::size_t c = 0; c < n; ++c) {
            vandermonde(r, c) = p;
            p *= ts[r];
        }
        vandermonde(r, n) = vs[r];
    }
    auto coeffs = solve_unique(vandermonde);
    if (!coeffs) throw std::invalid_argument("interpolation nodes must be distinct");
    return {std::move(*coeffs)};
}

BigRational PiecewisePoly::integral() const {
    BigRational acc = 0;
    for (std::size_t k = 0; k < pieces.size(); ++k) acc += pieces[k].integrate(breakpoints[k], breakpoints[k + 1]);
    return acc;
}

namespace {

/// Length of {t : rows}, 1-dimensional.
BigRational interval_length(const ConvexCell& cell) {
    bool has_lo = false;
    bool has_hi = false;
    BigRational lo;
    BigRational hi;
    for (const auto& h : cell.rows) {
        const int s = sgn(h.a[0]);
        if (s == 0) {
            if (sgn(h.b) < 0) return 0;
            continue;
        }
        const BigRational bound = h.b / h.a[0];
        if (s > 0) {
            if (!has_hi || bound < hi) hi = bound;
            has_hi = true;
        } else {
            if (!has_lo || bound > lo) lo = bound;
            has_lo = true;
        }
    }
    if (!has_lo || !has_hi) throw Error(ErrorCode::UnboundedCell, "cell is unbounded");
    return hi > lo ? BigRational(hi - lo) : BigRational(0);
}

/// Rows of cell ∩ {x_last = t} in the first d-1 coordinates.
ConvexCell slice_at(const ConvexCell& cell, const BigRational& t) {
    const std::size_t last = cell.dim - 1;
    ConvexCell out{last, {}};
    out.rows.reserve(cell.rows.size());
    for (const auto& h : cell.rows) {
        HalfSpace s;
        s.a.assign(h.a.begin(), h.a.begin() + static_cast<std::ptrdiff_t>(last));
        s.b = h.b - h.a[last] * t;
        out.rows.push_back(std::move(s));
    }
    return out;
}

BigRational volume_rec(const ConvexCell& cell);

PiecewisePoly profile_of(const ConvexCell& raw, std::span<const BigRational> extra) {
    PiecewisePoly out;
    const std::size_t d = raw.dim;
    if (!is_feasible(raw)) return out;
    const auto box = bounding_box(raw);
    if (!box) throw Error(ErrorCode::UnboundedCell, "cell is unbounded");
    const BigRational t_min = (*box)[d - 1].lo;
    const BigRational t_max = (*box)[d - 1].hi;
    if (t_min >= t_max) return out;

    const ConvexCell cell = is_full_dimensional(raw) ? irredundant(raw) : raw;
    std::vector<BigRational> bps{t_min, t_max};
    for (const auto& x : basic_solutions(cell)) {
        if (x[d - 1] > t_min && x[d - 1] < t_max) bps.push_back(x[d - 1]);
    }
    for (const auto& t : extra) {
        if (t > t_min && t < t_max) bps.push_back(t);
    }
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

    out.breakpoints = bps;
    std::vector<BigRational> ts(d);
    std::vector<BigRational> vs(d);
    for (std::size_t j = 0; j + 1 < bps.size(); ++j) {
        const BigRational step = (bps[j + 1] - bps[j]) / BigRational(static_cast<long>(d + 1));
        for (std::size_t k = 0; k < d; ++k) {
            ts[k] = bps[j] + step * BigRational(static_cast<long>(k + 1));
            vs[k] = volume_rec(slice_at(cell, ts[k]));
        }
        out.pieces.push_back(interpolate(ts, vs));
    }
    return out;
}

BigRational volume_rec(const ConvexCell& cell) {
    if (cell.dim == 1) return interval_length(cell);
    return profile_of(cell, {}).integral();
}

ConvexCell permuted(const ConvexCell& cell, std::span<const std::size_t> order) {
    ConvexCell out{cell.dim, {}};
    for (const auto& h : cell.rows) {
        HalfSpace p;
        p.a.resize(cell.dim);
        for (std::size_t k = 0; k < cell.dim; ++k) p.a[k] = h.a[order[k]];
        p.b = h.b;
        out.rows.push_back(std::move(p));
    }
    return out;
}

}  // namespace

PiecewisePoly slice_profile(const ConvexCell& cell, std::span<const BigRational> extra_breakpoints) {
    if (cell.dim == 0) return {};
    return profile_of(cell, extra_breakpoints);
}

BigRational cell_volume_slicing(const ConvexCell& cell, std::span<const std::size_t> order,
                                std::span<const BigRational> extra_breakpoints) {
    if (cell.dim == 0) return 0;
    const ConvexCell c = order.empty() ? cell : permuted(cell, order);
    if (!is_feasible(c)) return 0;
    if (!is_bounded(c)) throw Error(ErrorCode::UnboundedCell, "cell is unbounded");
    if (c.dim == 1) return interval_length(c);
    return profile_of(c, extra_breakpoints).integral();
}

}  // namespace hkfs::reference
