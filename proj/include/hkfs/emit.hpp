#pragma once

#include "hkfs/rational.hpp"
#include "hkfs/regions.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hkfs::emit {

enum class Format { Wolfram, Json };

/// Indexed: x, y, z1..zn. Short: x, y, z, w (only for n <= 2).
enum class Naming { Indexed, Short };

struct ExportOptions {
    Format format = Format::Wolfram;
    Naming names = Naming::Indexed;
    /// Upper integration bounds by variable name; overrides the box hints.
    std::map<std::string, BigRational> box;
};

inline constexpr const char* kJsonSchema = "hk-fsig/1";

/// Throws Error(NameOverflow) for short names with n > 2.
std::vector<std::string> variable_names(std::size_t n, Naming naming);

/// Renders one atom with its highest-index variable isolated on the left,
/// e.g. "z < 2*y + 5". F-signature regions put the constant first.
std::string render_atom(const LinearAtom& atom, std::span<const std::string> names,
                        bool constant_first = false);

/// Integrate[Boole[...], {v, 0, B}, ...]
std::string to_wolfram(const RegionFormula& region, const ExportOptions& opts = {});

/// Versioned JSON document, single line.
std::string to_json(const RegionFormula& region);

/// Inverse of to_json. Throws Error(ParseError).
RegionFormula from_json(std::string_view text);

/// Result of reading back an Integrate[Boole[...]] expression: a conjunction
/// of disjunctions of linear comparisons plus integration bounds.
struct ParsedIntegral {
    std::vector<std::string> vars;     // in bound order
    std::vector<BigRational> lower;
    std::vector<std::optional<BigRational>> upper;  // nullopt for Infinity
    std::vector<Clause> conjuncts;     // single-atom clauses are plain conjuncts

    bool holds(std::span<const BigRational> point) const;
};

/// Parses the subset of the Wolfram language that to_wolfram emits, plus
/// chained comparisons such as "5*x <= z < 1 + 5*x". Throws Error(ParseError).
ParsedIntegral parse_wolfram(std::string_view text);

}  // namespace hkfs::emit
