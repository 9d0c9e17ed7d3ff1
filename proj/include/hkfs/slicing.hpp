#pragma once

#include "hkfs/polytope.hpp"
#include "hkfs/rational.hpp"

#include <span>
#include <vector>

namespace hkfs::reference {

/// Univariate polynomial, ascending coefficients.
struct Polynomial {
    std::vector<BigRational> coeffs;

    BigRational operator()(const BigRational& t) const;
    /// Definite integral over [lo, hi].
    BigRational integrate(const BigRational& lo, const BigRational& hi) const;
};

/// Interpolating polynomial of degree < points.size() through (ts[k], vs[k]).
Polynomial interpolate(std::span<const BigRational> ts, std::span<const BigRational> vs);

/// A function of t given by one polynomial per open interval between
/// consecutive breakpoints; zero outside [front, back].
struct PiecewisePoly {
    std::vector<BigRational> breakpoints;  // strictly increasing
    std::vector<Polynomial> pieces;        // breakpoints.size() - 1 entries

    BigRational integral() const;
};

/// Cross-section volume of `cell` as a function of its last coordinate:
/// t -> vol_{d-1}(cell ∩ {x_d = t}). `extra_breakpoints` are merged into the
/// natural breakpoint set (values outside the t-range are ignored).
PiecewisePoly slice_profile(const ConvexCell& cell,
                            std::span<const BigRational> extra_breakpoints = {});

/// Exact volume by recursive slicing with polynomial interpolation. Slices
/// along order.back() first, then order[size-2], ...; an empty order means
/// the natural one. Throws Error(UnboundedCell) on unbounded input.
BigRational cell_volume_slicing(const ConvexCell& cell, std::span<const std::size_t> order = {},
                                std::span<const BigRational> extra_breakpoints = {});

}  // namespace hkfs::reference
