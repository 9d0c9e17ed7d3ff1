#pragma once

#include "hkfs/fan.hpp"
#include "hkfs/hilbert.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace hkfs {

/// Point (p, q, t_1..t_n) in the coordinates (x, y, z_1..z_n).
struct Generator {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::vector<std::int64_t> t;

    friend auto operator<=>(const Generator&, const Generator&) = default;
};

struct GeneratorSet {
    std::vector<Generator> units;    // (0, 0, e_j), j = 1..n
    std::vector<Generator> hilbert;  // lifts of the Hilbert set, sorted by (p, q)

    /// Units first, then the lifted Hilbert set.
    std::vector<Generator> all() const;
};

/// (max(a_i r, b_i s))_i
std::vector<std::int64_t> t_vector(const LatticePoint& v, const ExponentData& data);

GeneratorSet generator_set(const HilbertSet& h, const ExponentData& data);

/// Fan, Hilbert set and lift in one call.
GeneratorSet generator_set(const ExponentData& data);

}  // namespace hkfs
