#pragma once

#include <cstdint>
#include <compare>
#include <span>
#include <vector>

namespace hkfs {

/// Exponent vectors of I = (x^a) and J = (x^b); all entries positive.
struct ExponentData {
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> b;

    std::size_t n() const noexcept { return a.size(); }

    /// Throws Error(NonPositiveExponent / OddCount) if the invariants fail.
    void validate() const;

    /// Same pairs with (a_i, b_i) exchanged, i.e. the algebra B(J, I).
    ExponentData swapped() const { return {b, a}; }

    friend bool operator==(const ExponentData&, const ExponentData&) = default;
};

/// Splits 2n positive integers into a (first half) and b (second half).
ExponentData parse_exponents(std::span<const std::int64_t> values);

/// Primitive lattice direction in the closed first quadrant.
struct Ray {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend auto operator<=>(const Ray&, const Ray&) = default;
};

/// Primitive vector in the direction of (x, y); (x, y) must be nonzero.
Ray primitive_ray(std::int64_t x, std::int64_t y);

/// det[u v] = u.x v.y - u.y v.x
inline std::int64_t det(const Ray& u, const Ray& v) noexcept { return u.x * v.y - u.y * v.x; }

struct Cone {
    Ray first;
    Ray second;
};

/// Rays ordered by strictly decreasing slope, from (0,1) down to (1,0).
struct Fan {
    std::vector<Ray> rays;

    std::vector<Cone> cones() const;
    std::size_t cone_count() const noexcept { return rays.empty() ? 0 : rays.size() - 1; }

    friend bool operator==(const Fan&, const Fan&) = default;
};

/// Fan of the first quadrant cut out by the rays through (b_i, a_i). Input
/// order does not matter; proportional pairs collapse to a single ray.
Fan build_fan(const ExponentData& data);

}  // namespace hkfs
