#include "hkfs/oracle.hpp"

#include "hkfs/error.hpp"
#include "hkfs/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace hkfs::oracle {

BigRational Box::volume() const {
    BigRational v = 1;
    for (const auto& u : upper) v *= u;
    return v;
}

Box Box::scaled(const BigRational& factor) const {
    Box out = *this;
    for (auto& u : out.upper) u *= factor;
    return out;
}

Box hint_box(const RegionFormula& region) {
    if (region.box_hints.size() != region.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "region carries no box hints");
    }
    return {region.box_hints};
}

Box default_box(const ExponentData& data, RegionKind kind) {
    data.validate();
    Box box;
    if (kind == RegionKind::FSignature) {
        box.upper = {1, 1};
        for (std::size_t i = 0; i < data.n(); ++i) box.upper.emplace_back(std::max(data.a[i], data.b[i]) + 1);
        return box;
    }
    const Fan fan = build_fan(data);
    std::int64_t max_x = 0;
    std::int64_t max_y = 0;
    for (const auto& cone : fan.cones()) {
        max_x = std::max(max_x, cone.first.x + cone.second.x);
        max_y = std::max(max_y, cone.first.y + cone.second.y);
    }
    box.upper = {max_x, max_y};
    for (std::size_t i = 0; i < data.n(); ++i) {
        box.upper.emplace_back(std::max(data.a[i] * max_x, data.b[i] * max_y) + 1);
    }
    return box;
}

bool contains(const RegionFormula& region, std::span<const BigRational> point) {
    return region.contains(point);
}

namespace {

/// Floating-point copy of the formula. An atom whose double value is too
/// close to zero to trust is re-evaluated exactly, so membership is exact.
struct CompiledAtom {
    std::vector<double> coeffs;
    double constant = 0;
    Relation relation = Relation::GE;
    const LinearAtom* source = nullptr;

    bool holds(const std::vector<double>& x) const {
        double v = constant;
        double mag = std::abs(constant);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            const double t = coeffs[j] * x[j];
            v += t;
            mag += std::abs(t);
        }
        if (std::abs(v) <= 1e-9 * (mag + 1.0)) {
            std::vector<BigRational> exact(x.begin(), x.end());
            return source->holds(exact);
        }
        switch (relation) {
            case Relation::GE:
            case Relation::GT: return v > 0;
            case Relation::LE:
            case Relation::LT: return v < 0;
        }
        return false;
    }
};

CompiledAtom compile(const LinearAtom& atom) {
    CompiledAtom c;
    for (const auto& q : atom.coeffs) c.coeffs.push_back(q.get_d());
    c.constant = atom.constant.get_d();
    c.relation = atom.relation;
    c.source = &atom;
    return c;
}

struct CompiledRegion {
    std::vector<CompiledAtom> base;
    std::vector<std::vector<CompiledAtom>> clauses;

    explicit CompiledRegion(const RegionFormula& r) {
        for (const auto& a : r.base) base.push_back(compile(a));
        for (const auto& cl : r.clauses) {
            auto& out = clauses.emplace_back();
            for (const auto& a : cl.atoms) out.push_back(compile(a));
        }
    }

    bool contains(const std::vector<double>& x) const {
        for (const auto& a : base) {
            if (!a.holds(x)) return false;
        }
        for (const auto& cl : clauses) {
            if (std::none_of(cl.begin(), cl.end(), [&](const CompiledAtom& a) { return a.holds(x); })) return false;
        }
        return true;
    }
};

constexpr std::uint64_t kStreams = 64;

}  // namespace

Estimate mc_volume(const RegionFormula& region, const Box& box, std::uint64_t samples,
                   std::uint64_t seed) {
    if (box.upper.size() != region.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "box dimension does not match the region");
    }
    if (samples == 0) throw std::invalid_argument("mc_volume needs at least one sample");
    const CompiledRegion compiled(region);
    std::vector<double> upper;
    for (const auto& u : box.upper) upper.push_back(u.get_d());

    std::vector<std::uint64_t> hits(kStreams, 0);
#pragma omp parallel for schedule(static)
    for (std::uint64_t s = 0; s < kStreams; ++s) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(s)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const std::uint64_t count = samples / kStreams + (s < samples % kStreams ? 1 : 0);
        std::vector<double> x(upper.size());
        std::uint64_t local = 0;
        for (std::uint64_t k = 0; k < count; ++k) {
            for (std::size_t j = 0; j < x.size(); ++j) x[j] = unit(rng) * upper[j];
            if (compiled.contains(x)) ++local;
        }
        hits[s] = local;
    }

    Estimate e;
    e.samples = samples;
    for (auto h : hits) e.hits += h;
    const BigRational vol = box.volume();
    e.estimate = vol * BigRational(static_cast<unsigned long>(e.hits), static_cast<unsigned long>(samples));
    e.estimate.canonicalize();
    const double p = static_cast<double>(e.hits) / static_cast<double>(samples);
    e.stderr_ = vol * BigRational(std::sqrt(p * (1.0 - p) / static_cast<double>(samples)));
    return e;
}

bool agrees(const BigRational& exact, const Estimate& e, double sigmas) {
    return abs(exact - e.estimate) <= BigRational(sigmas) * e.stderr_;
}

}  // namespace hkfs::oracle
