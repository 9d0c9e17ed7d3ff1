#include "hkfs/fan.hpp"

#include "hkfs/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hkfs {

void ExponentData::validate() const {
    if (a.empty() || a.size() != b.size()) {
        throw Error(ErrorCode::OddCount, "exponent vectors must be nonempty and of equal length");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 1 || b[i] < 1) {
            throw Error(ErrorCode::NonPositiveExponent,
                        "exponents must be positive integers (pair " + std::to_string(i + 1) + ")");
        }
    }
}

ExponentData parse_exponents(std::span<const std::int64_t> values) {
    if (values.empty() || values.size() % 2 != 0) {
        throw Error(ErrorCode::OddCount, "expected an even, nonzero number of exponents, got " +
                                             std::to_string(values.size()));
    }
    for (const auto v : values) {
        if (v < 1) {
            throw Error(ErrorCode::NonPositiveExponent,
                        "exponents must be positive integers, got " + std::to_string(v));
        }
    }
    const auto half = values.size() / 2;
    ExponentData data;
    data.a.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(half));
    data.b.assign(values.begin() + static_cast<std::ptrdiff_t>(half), values.end());
    return data;
}

Ray primitive_ray(std::int64_t x, std::int64_t y) {
    const auto g = std::gcd(x, y);
    return g == 0 ? Ray{x, y} : Ray{x / g, y / g};
}

std::vector<Cone> Fan::cones() const {
    std::vector<Cone> out;
    for (std::size_t k = 0; k + 1 < rays.size(); ++k) out.push_back({rays[k], rays[k + 1]});
    return out;
}

Fan build_fan(const ExponentData& data) {
    data.validate();
    std::vector<Ray> interior;
    for (std::size_t i = 0; i < data.n(); ++i) interior.push_back(primitive_ray(data.b[i], data.a[i]));

    // Decreasing slope y/x: u before v iff u.y v.x > v.y u.x, i.e. det[u v] < 0.
    std::sort(interior.begin(), interior.end(),
              [](const Ray& u, const Ray& v) { return det(u, v) < 0; });
    interior.erase(std::unique(interior.begin(), interior.end()), interior.end());

    Fan fan;
    fan.rays.push_back({0, 1});
    for (const auto& r : interior) {
        if (r == fan.rays.back() || r == Ray{1, 0}) continue;
        fan.rays.push_back(r);
    }
    fan.rays.push_back({1, 0});
    return fan;
}

}  // namespace hkfs
