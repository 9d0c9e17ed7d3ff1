// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "hkfs/emit.hpp"
#include "hkfs/fan.hpp"
#include "hkfs/generators.hpp"
#include "hkfs/hilbert.hpp"
#include "hkfs/oracle.hpp"
#include "hkfs/polytope.hpp"
#include "hkfs/slicing.hpp"
#include "hkfs/volume.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace hkfs;

namespace {

using Failures = std::vector<std::string>;

struct Golden {
    ExponentData data;
    BigRational hk;
    BigRational fsig;
    double hk_budget;  // seconds
    double fsig_budget;
};

const std::vector<Golden>& goldens() {
    static const std::vector<Golden> g{
        {{{3}, {2}}, BigRational(41, 18), BigRational(11, 36), 1, 1},
        {{{5, 2}, {2, 3}}, BigRational(37283, 9900), BigRational(1087, 29700), 60, 60},
        {{{1, 6, 5}, {1, 6, 5}}, BigRational(1633, 864), BigRational(95, 864), 3600, 3600},
        {{{2, 7, 4}, {1, 5, 6}}, BigRational("1874881259711/391184640000"), BigRational("27251293/1564738560"),
         4 * 3600, 10},
    };
    return g;
}

std::string describe(const ExponentData& d) {
    std::ostringstream os;
    os << "a=(";
    for (std::size_t i = 0; i < d.n(); ++i) os << (i ? "," : "") << d.a[i];
    os << ") b=(";
    for (std::size_t i = 0; i < d.n(); ++i) os << (i ? "," : "") << d.b[i];
    os << ")";
    return os.str();
}

template <class F>
auto timed(F&& f, double& seconds) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = f();
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

void expect(Failures& out, bool ok, const std::string& what) {
    if (!ok) out.push_back(what);
}

Failures golden_values() {
    Failures f;
    for (const auto& g : goldens()) {
        double t_fs = 0;
        double t_hk = 0;
        const auto fs = timed([&] { return region_volume(fsig_region(g.data)); }, t_fs);
        const auto hk = timed([&] { return region_volume(hk_region(g.data)); }, t_hk);
        const auto name = describe(g.data);
        expect(f, hk == g.hk, name + ": e_HK = " + to_string(hk));
        expect(f, fs == g.fsig, name + ": s = " + to_string(fs));
        expect(f, t_hk <= g.hk_budget, name + ": e_HK took " + std::to_string(t_hk) + " s");
        expect(f, t_fs <= g.fsig_budget, name + ": s took " + std::to_string(t_fs) + " s");
        if (g.data.a == g.data.b) expect(f, hk + fs == 2, name + ": e_HK + s != 2");
        std::cout << "  " << name << ": e_HK " << hk << " (" << t_hk << " s), s " << fs << " (" << t_fs
                  << " s)\n";
    }
    return f;
}

/// Direction-independent atom key (relations folded to > and >=).
using AtomKey = std::pair<std::vector<BigRational>, bool>;

AtomKey key(const LinearAtom& a) {
    const bool flip = a.relation == Relation::LE || a.relation == Relation::LT;
    std::vector<BigRational> v = a.coeffs;
    v.push_back(a.constant);
    if (flip) {
        for (auto& c : v) c = -c;
    }
    return {v, is_strict(a.relation)};
}

std::set<AtomKey> keys(const Clause& c) {
    std::set<AtomKey> out;
    for (const auto& a : c.atoms) out.insert(key(a));
    return out;
}

// The Hilbert-Kunz system for a = (5, 2), b = (2, 3) as printed by the
// original Mathematica toolchain.
constexpr const char* kKnownGoodHk =
    "Integrate[Boole[((x >= 0 && y >= 0 && z >= 5*x && z >= 2*y && w >= 2*x && w >= 3*y)) "
    "&& ((z < 5*x + 1 || z < 2*y + 1)) && ((w < 2*x + 1 || w < 3*y + 1)) "
    "&& ((x < 1 || z < 2*y + 5 || w < 3*y + 2)) && ((y < 1 || z < 5*x + 2 || w < 2*x + 3)) "
    "&& ((x < 2 || y < 5 || w < 2*x + 11)) && ((x < 3 || y < 2 || z < 2*y + 11)) "
    "&& ((x < 2 || y < 1 || z < 2*y + 8 || w < 3*y + 1)) && ((x < 1 || y < 2 || z < 2*y + 1 || w < 2*x + 4)) "
    "&& ((x < 1 || y < 1 || z < 2*y + 3 || w < 2*x + 1)) && ((x < 1 || y < 3 || z < 5*x + 1 || w < 2*x + 7))], "
    "{x, 0, 100}, {y, 0, 100}, {z, 0, 500}, {w, 0, 500}]";

Failures pipeline_intermediates() {
    Failures f;
    const ExponentData d{{5, 2}, {2, 3}};
    const Fan fan = build_fan(d);
    expect(f, fan.rays == std::vector<Ray>{{0, 1}, {2, 5}, {3, 2}, {1, 0}}, "fan rays");

    const auto h = hilbert_set(fan);
    using P = std::vector<LatticePoint>;
    expect(f, h.per_cone.size() == 3, "three cones");
    if (h.per_cone.size() == 3) {
        expect(f, h.per_cone[0] == P{{0, 1}, {1, 3}, {2, 5}}, "H_0");
        expect(f, h.per_cone[1] == P{{1, 1}, {1, 2}, {2, 5}, {3, 2}}, "H_1");
        expect(f, h.per_cone[2] == P{{1, 0}, {2, 1}, {3, 2}}, "H_2");
    }
    expect(f, h.points.size() == 8, "|H| = 8");

    const auto g = generator_set(h, d);
    const std::set<Generator> lifted(g.hilbert.begin(), g.hilbert.end());
    const std::set<Generator> want{{1, 0, {5, 2}}, {0, 1, {2, 3}}, {2, 5, {10, 15}}, {3, 2, {15, 6}},
                                   {2, 1, {10, 4}}, {1, 2, {5, 6}},  {1, 1, {5, 3}},   {1, 3, {6, 9}}};
    expect(f, lifted == want, "lifted generator set G");
    expect(f, lifted.count({2, 5, {10, 15}}) == 1 && lifted.count({1, 1, {5, 3}}) == 1,
           "G contains (2,5,10,15) and (1,1,5,3)");

    const auto region = hk_region(d);
    const auto printed = emit::parse_wolfram(kKnownGoodHk);
    std::set<AtomKey> base;
    std::set<std::set<AtomKey>> clauses;
    for (const auto& c : printed.conjuncts) {
        if (c.atoms.size() == 1) {
            base.insert(key(c.atoms[0]));
        } else {
            clauses.insert(keys(c));
        }
    }
    std::set<AtomKey> ours_base;
    for (const auto& a : region.base) ours_base.insert(key(a));
    std::set<std::set<AtomKey>> ours;
    for (const auto& c : region.clauses) ours.insert(keys(c));
    expect(f, region.clauses.size() == 10, "10 negation clauses");
    expect(f, ours_base == base, "initial inequalities match the printed listing");
    expect(f, ours == clauses, "negation clauses match the printed listing");
    return f;
}

Failures derived_oracle_case() {
    Failures f;
    const ExponentData d{{1}, {1}};
    const auto hk = hk_region(d);
    const auto fs = fsig_region(d);

    // Hand integration: the F-signature fiber over (x, y) has length 1 - |x - y|.
    const double q_fs = testing::fiber_quadrature(fs, 1, 1, 400);
    const double hand_fs = 2.0 / 3;
    expect(f, std::abs(q_fs - hand_fs) < 1e-3, "fiber quadrature of s: " + std::to_string(q_fs));
    const auto box = oracle::default_box(d, RegionKind::HilbertKunz);
    const double q_hk = testing::fiber_quadrature(hk, box.upper[0].get_d(), box.upper[1].get_d(), 400);
    const double hand_hk = 1 + 1.0 / 6 + 1.0 / 6;
    expect(f, std::abs(q_hk - hand_hk) < 1e-2, "fiber quadrature of e_HK: " + std::to_string(q_hk));

    const auto mc_hk = oracle::mc_volume(hk, box, 1'000'000, 1);
    const auto mc_fs = oracle::mc_volume(fs, oracle::default_box(d, RegionKind::FSignature), 1'000'000, 1);
    expect(f, oracle::agrees(BigRational(4, 3), mc_hk), "Monte Carlo e_HK " + to_string(mc_hk.estimate));
    expect(f, oracle::agrees(BigRational(2, 3), mc_fs), "Monte Carlo s " + to_string(mc_fs.estimate));

    const auto inv = compute_invariants(d);
    expect(f, inv.hilbert_kunz == BigRational(4, 3), "e_HK = " + to_string(inv.hilbert_kunz));
    expect(f, inv.f_signature == BigRational(2, 3), "s = " + to_string(inv.f_signature));
    return f;
}

Failures property_suites() {
    Failures f;
    std::mt19937 rng(20240601);

    // (i) e_HK + s = 2 when a = b
    for (int k = 0; k < 20; ++k) {
        ExponentData d = testing::random_data(rng, 2, 4);
        d.b = d.a;
        const auto inv = compute_invariants(d);
        expect(f, inv.hilbert_kunz + inv.f_signature == 2, "(i) " + describe(d));
    }

    // (ii) swap symmetry and joint permutation invariance
    for (int k = 0; k < 20; ++k) {
        const ExponentData d = testing::random_data(rng, 2, 5);
        const auto base = compute_invariants(d);
        const auto sw = compute_invariants(d.swapped());
        ExponentData perm{{d.a.rbegin(), d.a.rend()}, {d.b.rbegin(), d.b.rend()}};
        const auto pm = compute_invariants(perm);
        expect(f, base.hilbert_kunz == sw.hilbert_kunz && base.f_signature == sw.f_signature, "(ii) swap " + describe(d));
        expect(f, base.hilbert_kunz == pm.hilbert_kunz && base.f_signature == pm.f_signature,
               "(ii) permutation " + describe(d));
    }

    // (iii) Hilbert bases of every cone that a fan with entries <= 5 can produce
    std::set<std::pair<Ray, Ray>> cones;
    for (std::int64_t a = 1; a <= 5; ++a) {
        for (std::int64_t b = 1; b <= 5; ++b) {
            for (std::int64_t a2 = 1; a2 <= 5; ++a2) {
                for (std::int64_t b2 = 1; b2 <= 5; ++b2) {
                    for (const auto& c : build_fan({{a, a2}, {b, b2}}).cones()) cones.insert({c.first, c.second});
                }
            }
        }
    }
    for (const auto& [u, v] : cones) {
        const auto basis = cone_hilbert_basis(u, v);
        const std::string name = "(iii) cone (" + std::to_string(u.x) + "," + std::to_string(u.y) + ")-(" +
                                 std::to_string(v.x) + "," + std::to_string(v.y) + ")";
        expect(f, testing::generates_box(u, v, basis, 25), name + " generation");
        const auto irreducible = testing::brute_force_irreducibles(u, v, 25);
        expect(f, std::set<LatticePoint>(basis.begin(), basis.end()) == irreducible, name + " minimality");
    }
    std::cout << "  (iii) checked " << cones.size() << " cones\n";

    // (iv) Monte Carlo agreement for every golden case with n <= 2
    std::vector<std::tuple<ExponentData, BigRational, BigRational>> mc_cases{
        {{{1}, {1}}, BigRational(4, 3), BigRational(2, 3)}};
    for (const auto& g : goldens()) {
        if (g.data.n() <= 2) mc_cases.emplace_back(g.data, g.hk, g.fsig);
    }
    for (const auto& [d, hk, fs] : mc_cases) {
        const auto e_hk = oracle::mc_volume(hk_region(d), oracle::default_box(d, RegionKind::HilbertKunz), 1'000'000, 2);
        const auto e_fs = oracle::mc_volume(fsig_region(d), oracle::default_box(d, RegionKind::FSignature), 1'000'000, 2);
        expect(f, oracle::agrees(hk, e_hk), "(iv) e_HK " + describe(d) + " estimate " + to_string(e_hk.estimate));
        expect(f, oracle::agrees(fs, e_fs), "(iv) s " + describe(d) + " estimate " + to_string(e_fs.estimate));
    }

    // (v) volume engine self-checks
    auto axis = [](std::size_t d, std::size_t k, int sign, int bound) {
        std::vector<BigRational> a(d, BigRational(0));
        a[k] = sign;
        return HalfSpace{a, bound};
    };
    ConvexCell cube{3, {}};
    for (std::size_t k = 0; k < 3; ++k) {
        cube.add(axis(3, k, -1, 0));
        cube.add(axis(3, k, 1, 1));
    }
    ConvexCell simplex{3, {axis(3, 0, -1, 0), axis(3, 1, -1, 0), axis(3, 2, -1, 0), HalfSpace{{1, 1, 1}, 1}}};
    expect(f, cell_volume(cube) == 1 && reference::cell_volume_slicing(cube) == 1, "(v) unit cube");
    expect(f, cell_volume(simplex) == BigRational(1, 6) && reference::cell_volume_slicing(simplex) == BigRational(1, 6),
           "(v) standard simplex");

    std::vector<ConvexCell> cells = shannon_cells(hk_region({{3}, {2}}));
    cells.push_back(shannon_cells(fsig_region({{3}, {2}})).front());
    cells.push_back(simplex);
    const std::vector<BigRational> extra{BigRational(1, 3), BigRational(5, 7), 2, BigRational(13, 4), 17};
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const BigRational v = cell_volume(cells[c]);
        std::vector<std::size_t> order{0, 1, 2};
        do {
            expect(f, reference::cell_volume_slicing(cells[c], order) == v, "(v) order independence, cell " + std::to_string(c));
        } while (std::next_permutation(order.begin(), order.end()));
        expect(f, reference::cell_volume_slicing(cells[c], {}, extra) == v, "(v) breakpoint superset, cell " + std::to_string(c));
    }
    const auto hk = hk_region({{3}, {2}});
    expect(f, reference::region_volume(hk) == region_volume(hk), "(v) reference engine agrees on (3;2)");
    return f;
}

/// Grid of the box with `per_axis` values per coordinate, mixing integer
/// lattice points (which sit on many boundaries) and interior rationals.
std::vector<std::vector<BigRational>> grid(const std::vector<BigRational>& upper, int per_axis) {
    std::vector<std::vector<BigRational>> axes;
    for (const auto& u : upper) {
        std::vector<BigRational> vals;
        for (int k = 0; k < per_axis; ++k) {
            BigRational v = u * k / (per_axis - 1);
            if (k % 2 == 1) v = BigRational(mpz_class(v.get_num() / v.get_den()));  // snap to an integer
            vals.push_back(v);
        }
        axes.push_back(vals);
    }
    std::vector<std::vector<BigRational>> pts{{}};
    for (const auto& ax : axes) {
        std::vector<std::vector<BigRational>> next;
        for (const auto& p : pts) {
            for (const auto& v : ax) {
                next.push_back(p);
                next.back().push_back(v);
            }
        }
        pts = std::move(next);
    }
    return pts;
}

Failures export_fidelity() {
    Failures f;
    std::vector<ExponentData> cases{{{1}, {1}}};
    for (const auto& g : goldens()) cases.push_back(g.data);
    for (const auto& d : cases) {
        for (const auto& region : {hk_region(d), fsig_region(d)}) {
            const std::string name = describe(d) + (region.kind == RegionKind::HilbertKunz ? " HK" : " F-sig");
            const auto back = emit::from_json(emit::to_json(region));
            expect(f, back == region, name + ": JSON round trip");
            const auto parsed = emit::parse_wolfram(emit::to_wolfram(region));
            expect(f, parsed.vars == region.vars, name + ": Wolfram variables");

            auto upper = oracle::default_box(d, region.kind).upper;
            for (auto& u : upper) u += 1;  // reach outside the region too
            const int per_axis = d.n() >= 3 ? 7 : 11;
            std::size_t mismatches = 0;
            std::size_t inside = 0;
            const auto pts = grid(upper, per_axis);
            for (const auto& p : pts) {
                const bool r = region.contains(p);
                inside += r;
                if (back.contains(p) != r || parsed.holds(p) != r) ++mismatches;
            }
            expect(f, mismatches == 0, name + ": " + std::to_string(mismatches) + " grid mismatches");
            expect(f, inside > 0 && inside < pts.size(), name + ": grid does not straddle the region");
        }
    }
    return f;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Failures()>>> criteria{
        {"1 exact golden values", golden_values},
        {"2 pipeline intermediates for a=(5,2) b=(2,3)", pipeline_intermediates},
        {"3 derived oracle case a=b=(1)", derived_oracle_case},
        {"4 property suites", property_suites},
        {"5 export fidelity", export_fidelity},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Failures fails;
        try {
            fails = run();
        } catch (const std::exception& e) {
            fails.push_back(std::string("exception: ") + e.what());
        }
        std::cout << (fails.empty() ? "PASS " : "FAIL ") << name << "\n";
        for (const auto& m : fails) std::cout << "    " << m << "\n";
        failed += !fails.empty();
        std::cout.flush();
    }
    return failed == 0 ? 0 : 1;
}
