#pragma once

#include "hkfs/rational.hpp"

#include <span>
#include <vector>

namespace hkfs {

/// Closed halfspace a·x <= b.
struct HalfSpace {
    std::vector<BigRational> a;
    BigRational b;

    bool holds(std::span<const BigRational> x) const;
    /// b - a·x
    BigRational slack(std::span<const BigRational> x) const;

    friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// Rescales to a primitive integer normal (same halfspace, canonical form).
HalfSpace normalized(const HalfSpace& h);

namespace lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
    Status status = Status::Infeasible;
    BigRational value;               // valid when Optimal
    std::vector<BigRational> point;  // an optimal point when Optimal
};

/// Exact maximization of objective·x over {x : rows}, x free. Fraction-free
/// integer simplex; Dantzig pricing with a switch to Bland's rule once the
/// solve stalls on degenerate pivots.
Result maximize(std::span<const HalfSpace> rows, std::span<const BigRational> objective,
                std::size_t dim);

/// Nonempty closed solution set.
bool feasible(std::span<const HalfSpace> rows, std::size_t dim);

/// Nonempty interior.
bool full_dimensional(std::span<const HalfSpace> rows, std::size_t dim);

}  // namespace lp
}  // namespace hkfs
