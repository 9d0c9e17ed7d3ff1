#include "hkfs/generators.hpp"

#include <algorithm>

namespace hkfs {

std::vector<Generator> GeneratorSet::all() const {
    std::vector<Generator> out = units;
    out.insert(out.end(), hilbert.begin(), hilbert.end());
    return out;
}

std::vector<std::int64_t> t_vector(const LatticePoint& v, const ExponentData& data) {
    std::vector<std::int64_t> t(data.n());
    for (std::size_t i = 0; i < data.n(); ++i) t[i] = std::max(data.a[i] * v.r, data.b[i] * v.s);
    return t;
}

GeneratorSet generator_set(const HilbertSet& h, const ExponentData& data) {
    GeneratorSet g;
    for (std::size_t j = 0; j < data.n(); ++j) {
        Generator unit{0, 0, std::vector<std::int64_t>(data.n(), 0)};
        unit.t[j] = 1;
        g.units.push_back(std::move(unit));
    }
    for (const auto& v : h.points) g.hilbert.push_back({v.r, v.s, t_vector(v, data)});
    std::sort(g.hilbert.begin(), g.hilbert.end());
    return g;
}

GeneratorSet generator_set(const ExponentData& data) {
    return generator_set(hilbert_set(build_fan(data)), data);
}

}  // namespace hkfs
