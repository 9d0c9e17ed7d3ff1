#pragma once

#include "hkfs/fan.hpp"
#include "hkfs/rational.hpp"
#include "hkfs/regions.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace hkfs::oracle {

/// Axis box [0, upper_v] per variable.
struct Box {
    std::vector<BigRational> upper;

    BigRational volume() const;
    Box scaled(const BigRational& factor) const;
};

/// Box from the region's export hints.
Box hint_box(const RegionFormula& region);

/// A box that provably contains the region. For the Hilbert-Kunz region the
/// (x, y) extent is bounded by the fundamental parallelograms of the fan
/// cones (translating by a ray generator stays in the cone) and every z_i lies
/// below max(a_i x, b_i y) + 1; the F-signature box follows from x, y <= 1.
Box default_box(const ExponentData& data, RegionKind kind);

/// Exact membership. Throws Error(DimensionMismatch).
bool contains(const RegionFormula& region, std::span<const BigRational> point);

struct Estimate {
    BigRational estimate;
    BigRational stderr_;  // binomial standard error, scaled by the box volume
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
};

/// Name of the pseudo-random generator used by mc_volume.
inline constexpr const char* kGeneratorId = "mt19937_64/split64";

/// Hit-or-miss volume estimate over `box`, which must contain the region
/// for the estimate to be meaningful. Samples are drawn from 64 fixed
/// sub-streams seeded from (seed, stream index), so the result depends only
/// on (region, box, samples, seed), not on the thread count.
Estimate mc_volume(const RegionFormula& region, const Box& box, std::uint64_t samples,
                   std::uint64_t seed);

/// |exact - estimate| <= sigmas * stderr
bool agrees(const BigRational& exact, const Estimate& e, double sigmas = 4.0);

}  // namespace hkfs::oracle
