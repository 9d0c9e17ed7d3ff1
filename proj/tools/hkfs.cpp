// hkfs: Hilbert-Kunz multiplicity and F-signature of intersection algebras
// of two principal monomial ideals.
//
//   hkfs compute      a_1 .. a_n b_1 .. b_n   (exact values)
//   hkfs inequalities a_1 .. a_n b_1 .. b_n   (region export, no integration)

#include "hkfs/emit.hpp"
#include "hkfs/error.hpp"
#include "hkfs/oracle.hpp"
#include "hkfs/regions.hpp"
#include "hkfs/volume.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOracle = 3;

struct Options {
    std::vector<std::string> values;
    std::string only = "both";
    std::string format = "wolfram";
    bool paper_names = false;
    std::uint64_t mc_samples = 0;
    std::uint64_t seed = 1;
    std::vector<std::string> box;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_values(const std::vector<std::string>& raw) {
    std::vector<std::int64_t> out;
    for (const auto& s : raw) {
        std::int64_t v = 0;
        const auto* end = s.data() + s.size();
        auto [ptr, ec] = std::from_chars(s.data(), end, v);
        if (ec != std::errc() || ptr != end) throw UsageError("not an integer: '" + s + "'");
        out.push_back(v);
    }
    return out;
}

/// VAR=BOUND pairs; names are checked against the region's variables later.
std::map<std::string, hkfs::BigRational> parse_box(const std::vector<std::string>& raw) {
    std::map<std::string, hkfs::BigRational> out;
    for (const auto& item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--box expects VAR=BOUND, got '" + item + "'");
        hkfs::BigRational bound;
        try {
            bound = hkfs::parse_rational(item.substr(eq + 1));
        } catch (const std::invalid_argument&) {
            throw UsageError("bad bound in '" + item + "'");
        }
        if (sgn(bound) <= 0) throw UsageError("box bounds must be positive: '" + item + "'");
        out[item.substr(0, eq)] = bound;
    }
    return out;
}

struct Selection {
    bool hk = true;
    bool fsig = true;
};

Selection parse_only(const std::string& only) {
    if (only == "both") return {true, true};
    if (only == "hk") return {true, false};
    if (only == "fsig") return {false, true};
    throw UsageError("--only expects hk, fsig or both");
}

/// Resolves --box overrides against a region's variable names (indexed, or
/// x, y, z, w for n <= 2).
hkfs::oracle::Box resolve_box(hkfs::oracle::Box box, const std::map<std::string, hkfs::BigRational>& overrides,
                              std::size_t n) {
    const auto indexed = hkfs::emit::variable_names(n, hkfs::emit::Naming::Indexed);
    std::vector<std::string> short_names;
    if (n <= 2) short_names = hkfs::emit::variable_names(n, hkfs::emit::Naming::Short);
    for (const auto& [name, bound] : overrides) {
        std::size_t idx = indexed.size();
        for (std::size_t v = 0; v < indexed.size(); ++v) {
            if (indexed[v] == name || (!short_names.empty() && short_names[v] == name)) idx = v;
        }
        if (idx == indexed.size()) throw UsageError("--box: unknown variable '" + name + "'");
        box.upper[idx] = bound;
    }
    return box;
}

std::map<std::string, hkfs::BigRational> export_box(const std::map<std::string, hkfs::BigRational>& overrides,
                                                    std::size_t n) {
    std::map<std::string, hkfs::BigRational> out;
    hkfs::oracle::Box dummy{std::vector<hkfs::BigRational>(n + 2, hkfs::BigRational(0))};
    const auto resolved = resolve_box(dummy, overrides, n);
    const auto indexed = hkfs::emit::variable_names(n, hkfs::emit::Naming::Indexed);
    for (std::size_t v = 0; v < indexed.size(); ++v) {
        if (sgn(resolved.upper[v]) > 0) out[indexed[v]] = resolved.upper[v];
    }
    return out;
}

int run_compute(const Options& opt) {
    const auto data = hkfs::parse_exponents(parse_values(opt.values));
    const auto sel = parse_only(opt.only);
    const auto overrides = parse_box(opt.box);

    struct Job {
        const char* label;
        const char* short_label;
        hkfs::RegionFormula region;
        hkfs::BigRational value;
    };
    std::vector<Job> jobs;
    if (sel.hk) jobs.push_back({"Hilbert-Kunz Multiplicity", "HK", hkfs::hk_region(data), 0});
    if (sel.fsig) jobs.push_back({"F-Signature", "F-signature", hkfs::fsig_region(data), 0});
    for (auto& job : jobs) job.value = hkfs::region_volume(job.region);

    bool oracle_ok = true;
    if (opt.mc_samples > 0) {
        for (const auto& job : jobs) {
            const auto box = resolve_box(hkfs::oracle::default_box(data, job.region.kind), overrides, data.n());
            const auto est = hkfs::oracle::mc_volume(job.region, box, opt.mc_samples, opt.seed);
            const bool ok = hkfs::oracle::agrees(job.value, est);
            oracle_ok = oracle_ok && ok;
            std::cerr << "Monte-Carlo " << job.short_label << ": estimate " << est.estimate.get_d() << " +/- "
                      << est.stderr_.get_d() << " (" << est.samples << " samples, seed " << opt.seed << ", "
                      << hkfs::oracle::kGeneratorId << "), exact " << job.value.get_d() << ": "
                      << (ok ? "agrees" : "DISAGREES") << '\n';
        }
    }
    for (const auto& job : jobs) std::cout << job.label << " = " << hkfs::to_string(job.value) << '\n';
    return oracle_ok ? kExitOk : kExitOracle;
}

int run_inequalities(const Options& opt) {
    const auto data = hkfs::parse_exponents(parse_values(opt.values));
    const auto sel = parse_only(opt.only);
    hkfs::emit::ExportOptions eo;
    if (opt.format == "wolfram") {
        eo.format = hkfs::emit::Format::Wolfram;
    } else if (opt.format == "json") {
        eo.format = hkfs::emit::Format::Json;
    } else {
        throw UsageError("--format expects wolfram or json");
    }
    eo.names = opt.paper_names ? hkfs::emit::Naming::Short : hkfs::emit::Naming::Indexed;
    eo.box = export_box(parse_box(opt.box), data.n());

    std::vector<hkfs::RegionFormula> regions;
    if (sel.hk) regions.push_back(hkfs::hk_region(data));
    if (sel.fsig) regions.push_back(hkfs::fsig_region(data));
    std::string out;
    for (auto& region : regions) {
        if (eo.format == hkfs::emit::Format::Json) {
            for (std::size_t v = 0; v < region.dim(); ++v) {
                auto it = eo.box.find(region.vars[v]);
                if (it != eo.box.end()) region.box_hints[v] = it->second;
            }
            out += hkfs::emit::to_json(region) + '\n';
        } else {
            out += hkfs::emit::to_wolfram(region, eo) + '\n';
        }
    }
    std::cout << out;
    return kExitOk;
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("values", opt.values, "a_1 .. a_n b_1 .. b_n (positive integers)")->required();
    cmd->add_option("--only", opt.only, "Region selector: hk, fsig or both")->capture_default_str();
    cmd->add_option("--format", opt.format, "Export format: wolfram or json")->capture_default_str();
    cmd->add_flag("--paper-names", opt.paper_names, "Name variables x, y, z, w (n <= 2)");
    cmd->add_option("--mc-check", opt.mc_samples, "Cross-check with N Monte-Carlo samples");
    cmd->add_option("--seed", opt.seed, "Monte-Carlo seed")->capture_default_str();
    cmd->add_option("--box", opt.box, "Bound override VAR=BOUND (repeatable)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert-Kunz multiplicity and F-signature of intersection algebras"};
    app.require_subcommand(1);
    Options opt;
    auto* compute = app.add_subcommand("compute", "Print the exact invariants");
    auto* inequalities = app.add_subcommand("inequalities", "Print the regions without integrating");
    add_common(compute, opt);
    add_common(inequalities, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "hkfs: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        return compute->parsed() ? run_compute(opt) : run_inequalities(opt);
    } catch (const UsageError& e) {
        std::cerr << "hkfs: " << e.what() << '\n';
        return kExitUsage;
    } catch (const hkfs::Error& e) {
        std::cerr << "hkfs: " << e.what() << '\n';
        return e.is_usage_error() ? kExitUsage : kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "hkfs: internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
