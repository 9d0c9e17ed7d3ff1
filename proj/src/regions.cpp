#include "hkfs/regions.hpp"

#include "hkfs/error.hpp"

#include <algorithm>

namespace hkfs {

const char* relation_symbol(Relation rel) {
    switch (rel) {
        case Relation::GE: return ">=";
        case Relation::GT: return ">";
        case Relation::LE: return "<=";
        case Relation::LT: return "<";
    }
    return "?";
}

Relation parse_relation(std::string_view symbol) {
    if (symbol == ">=") return Relation::GE;
    if (symbol == ">") return Relation::GT;
    if (symbol == "<=") return Relation::LE;
    if (symbol == "<") return Relation::LT;
    throw Error(ErrorCode::ParseError, "unknown relation '" + std::string(symbol) + "'");
}

Relation negate(Relation rel) {
    switch (rel) {
        case Relation::GE: return Relation::LT;
        case Relation::GT: return Relation::LE;
        case Relation::LE: return Relation::GT;
        case Relation::LT: return Relation::GE;
    }
    return rel;
}

bool is_strict(Relation rel) { return rel == Relation::GT || rel == Relation::LT; }

BigRational LinearAtom::evaluate(std::span<const BigRational> point) const {
    if (point.size() != coeffs.size()) {
        throw Error(ErrorCode::DimensionMismatch, "point dimension does not match the atom");
    }
    BigRational v = constant;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (sgn(coeffs[j]) != 0) v += coeffs[j] * point[j];
    }
    return v;
}

bool LinearAtom::holds(std::span<const BigRational> point) const {
    const int s = sgn(evaluate(point));
    switch (relation) {
        case Relation::GE: return s >= 0;
        case Relation::GT: return s > 0;
        case Relation::LE: return s <= 0;
        case Relation::LT: return s < 0;
    }
    return false;
}

LinearAtom LinearAtom::negated() const { return {coeffs, constant, negate(relation)}; }

LinearAtom atom_var_rel_const(std::size_t dim, std::size_t var, Relation rel, const BigRational& c) {
    LinearAtom atom{std::vector<BigRational>(dim), -c, rel};
    atom.coeffs[var] = 1;
    return atom;
}

LinearAtom atom_var_rel_affine(std::size_t dim, std::size_t subject, Relation rel,
                               const BigRational& coeff, std::size_t other, const BigRational& c) {
    LinearAtom atom{std::vector<BigRational>(dim), -c, rel};
    atom.coeffs[subject] = 1;
    atom.coeffs[other] -= coeff;
    return atom;
}

bool Clause::holds(std::span<const BigRational> point) const {
    return std::any_of(atoms.begin(), atoms.end(), [&](const LinearAtom& a) { return a.holds(point); });
}

bool RegionFormula::contains(std::span<const BigRational> point) const {
    if (point.size() != dim()) {
        throw Error(ErrorCode::DimensionMismatch, "expected a point of dimension " +
                                                      std::to_string(dim()) + ", got " +
                                                      std::to_string(point.size()));
    }
    return std::all_of(base.begin(), base.end(), [&](const LinearAtom& a) { return a.holds(point); }) &&
           std::all_of(clauses.begin(), clauses.end(), [&](const Clause& c) { return c.holds(point); });
}

std::vector<std::string> indexed_names(std::size_t n) {
    std::vector<std::string> names{"x", "y"};
    for (std::size_t i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));
    return names;
}

namespace {
constexpr std::size_t kX = 0;
constexpr std::size_t kY = 1;
constexpr std::size_t z_index(std::size_t i) { return 2 + i; }
}  // namespace

std::vector<LinearAtom> initial_constraints(const ExponentData& data) {
    const std::size_t dim = data.n() + 2;
    std::vector<LinearAtom> atoms;
    atoms.push_back(atom_var_rel_const(dim, kX, Relation::GE, 0));
    atoms.push_back(atom_var_rel_const(dim, kY, Relation::GE, 0));
    for (std::size_t i = 0; i < data.n(); ++i) {
        atoms.push_back(atom_var_rel_affine(dim, z_index(i), Relation::GE, data.a[i], kX, 0));
        atoms.push_back(atom_var_rel_affine(dim, z_index(i), Relation::GE, data.b[i], kY, 0));
    }
    return atoms;
}

Clause negation_clause(const Generator& g, const ExponentData& data) {
    const std::size_t dim = data.n() + 2;
    Clause clause;
    if (g.p > 0) clause.atoms.push_back(atom_var_rel_const(dim, kX, Relation::LT, g.p));
    if (g.q > 0) clause.atoms.push_back(atom_var_rel_const(dim, kY, Relation::LT, g.q));
    for (std::size_t i = 0; i < data.n(); ++i) {
        // z_i - t_i < a_i (x - p)  <=>  z_i < a_i x + (t_i - a_i p)
        const auto ca = g.t[i] - data.a[i] * g.p;
        const auto cb = g.t[i] - data.b[i] * g.q;
        if (ca > 0) clause.atoms.push_back(atom_var_rel_affine(dim, z_index(i), Relation::LT, data.a[i], kX, ca));
        if (cb > 0) clause.atoms.push_back(atom_var_rel_affine(dim, z_index(i), Relation::LT, data.b[i], kY, cb));
    }
    if (clause.atoms.empty()) {
        throw Error(ErrorCode::EmptyClause, "generator yields no satisfiable negation atom");
    }
    return clause;
}

RegionFormula hk_region(const ExponentData& data) {
    data.validate();
    RegionFormula region;
    region.kind = RegionKind::HilbertKunz;
    region.vars = indexed_names(data.n());
    region.base = initial_constraints(data);
    for (const auto& g : generator_set(data).all()) region.clauses.push_back(negation_clause(g, data));
    region.box_hints = {100, 100};
    for (std::size_t i = 0; i < data.n(); ++i) region.box_hints.emplace_back(500);
    return region;
}

RegionFormula fsig_region(const ExponentData& data) {
    data.validate();
    const std::size_t dim = data.n() + 2;
    RegionFormula region;
    region.kind = RegionKind::FSignature;
    region.vars = indexed_names(data.n());
    region.base.push_back(atom_var_rel_const(dim, kX, Relation::GE, 0));
    region.base.push_back(atom_var_rel_const(dim, kX, Relation::LE, 1));
    region.base.push_back(atom_var_rel_const(dim, kY, Relation::GE, 0));
    region.base.push_back(atom_var_rel_const(dim, kY, Relation::LE, 1));
    for (std::size_t i = 0; i < data.n(); ++i) {
        const auto z = z_index(i);
        region.base.push_back(atom_var_rel_affine(dim, z, Relation::GE, data.a[i], kX, 0));
        region.base.push_back(atom_var_rel_affine(dim, z, Relation::LT, data.a[i], kX, 1));
        region.base.push_back(atom_var_rel_affine(dim, z, Relation::GE, data.b[i], kY, 0));
        region.base.push_back(atom_var_rel_affine(dim, z, Relation::LT, data.b[i], kY, 1));
    }
    region.box_hints = {1, 1};
    for (std::size_t i = 0; i < data.n(); ++i) {
        region.box_hints.emplace_back(5 * std::max(data.a[i], data.b[i]));
    }
    return region;
}

}  // namespace hkfs
