#pragma once

#include "hkfs/fan.hpp"
#include "hkfs/generators.hpp"
#include "hkfs/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace hkfs {

enum class Relation { GE, GT, LE, LT };

const char* relation_symbol(Relation rel);
Relation parse_relation(std::string_view symbol);
Relation negate(Relation rel);
bool is_strict(Relation rel);

/// sum_j coeffs[j] * v_j + constant  REL  0
struct LinearAtom {
    std::vector<BigRational> coeffs;
    BigRational constant;
    Relation relation = Relation::GE;

    /// Left-hand side value at a point.
    BigRational evaluate(std::span<const BigRational> point) const;
    bool holds(std::span<const BigRational> point) const;

    /// The complementary atom (strictness flips with the direction).
    LinearAtom negated() const;

    friend bool operator==(const LinearAtom&, const LinearAtom&) = default;
};

/// Convenience constructors. `var` indexes (x, y, z_1..z_n).
LinearAtom atom_var_rel_const(std::size_t dim, std::size_t var, Relation rel, const BigRational& c);
/// v_subject REL coeff * v_other + c
LinearAtom atom_var_rel_affine(std::size_t dim, std::size_t subject, Relation rel,
                               const BigRational& coeff, std::size_t other, const BigRational& c);

/// Disjunction of atoms.
struct Clause {
    std::vector<LinearAtom> atoms;

    bool holds(std::span<const BigRational> point) const;

    friend bool operator==(const Clause&, const Clause&) = default;
};

enum class RegionKind { HilbertKunz, FSignature, Generic };

struct RegionFormula {
    RegionKind kind = RegionKind::Generic;
    std::vector<std::string> vars;
    std::vector<LinearAtom> base;
    std::vector<Clause> clauses;
    std::vector<BigRational> box_hints;  // advisory export bounds, may be empty

    std::size_t dim() const noexcept { return vars.size(); }

    /// Exact membership: every base atom and at least one atom per clause.
    bool contains(std::span<const BigRational> point) const;

    friend bool operator==(const RegionFormula&, const RegionFormula&) = default;
};

/// Indexed variable names x, y, z1..zn.
std::vector<std::string> indexed_names(std::size_t n);

std::vector<LinearAtom> initial_constraints(const ExponentData& data);

/// Atoms of "g + cone" negated, with the atoms that the base already refutes
/// dropped. Throws Error(EmptyClause) if nothing remains.
Clause negation_clause(const Generator& g, const ExponentData& data);

RegionFormula hk_region(const ExponentData& data);
RegionFormula fsig_region(const ExponentData& data);

}  // namespace hkfs
