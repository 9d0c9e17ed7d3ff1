#include "hkfs/emit.hpp"

#include "hkfs/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hkfs::emit {

std::vector<std::string> variable_names(std::size_t n, Naming naming) {
    if (naming == Naming::Indexed) return indexed_names(n);
    if (n > 2) {
        throw Error(ErrorCode::NameOverflow,
                    "short names (x, y, z, w) need n <= 2, got n = " + std::to_string(n));
    }
    std::vector<std::string> names{"x", "y", "z", "w"};
    names.resize(n + 2);
    return names;
}

namespace {

Relation flip(Relation rel) {
    switch (rel) {
        case Relation::GE: return Relation::LE;
        case Relation::GT: return Relation::LT;
        case Relation::LE: return Relation::GE;
        case Relation::LT: return Relation::GT;
    }
    return rel;
}

void append_signed(std::string& out, const BigRational& value, const std::string& body) {
    if (out.empty()) {
        out = (sgn(value) < 0 ? "-" : "") + body;
    } else {
        out += sgn(value) < 0 ? " - " : " + ";
        out += body;
    }
}

}  // namespace

std::string render_atom(const LinearAtom& atom, std::span<const std::string> names, bool constant_first) {
    std::size_t subject = atom.coeffs.size();
    for (std::size_t j = atom.coeffs.size(); j-- > 0;) {
        if (sgn(atom.coeffs[j]) != 0) {
            subject = j;
            break;
        }
    }
    if (subject == atom.coeffs.size()) {
        // Constant atom: render as "0 REL -constant".
        return "0 " + std::string(relation_symbol(atom.relation)) + " " + to_string(-atom.constant);
    }
    BigRational sign = sgn(atom.coeffs[subject]) < 0 ? -1 : 1;
    Relation rel = sign < 0 ? flip(atom.relation) : atom.relation;

    std::string lhs;
    const BigRational lead = atom.coeffs[subject] * sign;
    lhs = lead == 1 ? names[subject] : to_string(lead) + "*" + names[subject];

    std::string rhs;
    const BigRational constant = -atom.constant * sign;
    auto add_constant = [&] {
        if (sgn(constant) != 0) append_signed(rhs, constant, to_string(abs(constant)));
    };
    if (constant_first) add_constant();
    for (std::size_t j = 0; j < atom.coeffs.size(); ++j) {
        if (j == subject || sgn(atom.coeffs[j]) == 0) continue;
        const BigRational c = -atom.coeffs[j] * sign;
        append_signed(rhs, c, to_string(abs(c)) + "*" + names[j]);
    }
    if (!constant_first) add_constant();
    if (rhs.empty()) rhs = "0";
    return lhs + " " + relation_symbol(rel) + " " + rhs;
}

std::string to_wolfram(const RegionFormula& region, const ExportOptions& opts) {
    // Generic regions keep their own names.
    const auto names = region.kind == RegionKind::Generic || region.dim() < 2
                           ? region.vars
                           : variable_names(region.dim() - 2, opts.names);
    const bool constant_first = region.kind == RegionKind::FSignature;

    std::string base;
    for (const auto& atom : region.base) {
        if (!base.empty()) base += " && ";
        base += render_atom(atom, names, constant_first);
    }
    std::string body;
    if (region.clauses.empty()) {
        body = base;
    } else {
        body = base.empty() ? "" : "(" + base + ")";
        for (const auto& clause : region.clauses) {
            std::string alt;
            for (const auto& atom : clause.atoms) {
                if (!alt.empty()) alt += " || ";
                alt += render_atom(atom, names, constant_first);
            }
            body += (body.empty() ? "(" : " && (") + alt + ")";
        }
    }
    if (body.empty()) body = "True";

    std::string out = "Integrate[Boole[" + body + "]";
    const auto& indexed = region.vars;
    for (std::size_t v = 0; v < region.dim(); ++v) {
        std::string bound = "Infinity";
        auto it = opts.box.find(names[v]);
        if (it == opts.box.end()) it = opts.box.find(indexed[v]);
        if (it != opts.box.end()) {
            bound = to_string(it->second);
        } else if (v < region.box_hints.size()) {
            bound = to_string(region.box_hints[v]);
        }
        out += ", {" + names[v] + ", 0, " + bound + "}";
    }
    out += "]";
    return out;
}

namespace {

using nlohmann::json;

const char* kind_name(RegionKind kind) {
    switch (kind) {
        case RegionKind::HilbertKunz: return "hilbert-kunz";
        case RegionKind::FSignature: return "f-signature";
        case RegionKind::Generic: return "generic";
    }
    return "generic";
}

RegionKind parse_kind(const std::string& s) {
    if (s == "hilbert-kunz") return RegionKind::HilbertKunz;
    if (s == "f-signature") return RegionKind::FSignature;
    if (s == "generic") return RegionKind::Generic;
    throw Error(ErrorCode::ParseError, "unknown region kind '" + s + "'");
}

json atom_to_json(const LinearAtom& atom) {
    json coeffs = json::array();
    for (const auto& c : atom.coeffs) coeffs.push_back(to_string(c));
    return {{"coeffs", coeffs}, {"constant", to_string(atom.constant)}, {"relation", relation_symbol(atom.relation)}};
}

BigRational rational_from_json(const json& j) {
    if (!j.is_string()) throw Error(ErrorCode::ParseError, "rationals are encoded as strings");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

LinearAtom atom_from_json(const json& j, std::size_t dim) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "atom must be an object");
    LinearAtom atom;
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != dim) {
        throw Error(ErrorCode::ParseError, "atom coefficient count does not match the variables");
    }
    for (const auto& c : coeffs) atom.coeffs.push_back(rational_from_json(c));
    atom.constant = rational_from_json(j.at("constant"));
    atom.relation = parse_relation(j.at("relation").get<std::string>());
    return atom;
}

}  // namespace

std::string to_json(const RegionFormula& region) {
    json doc;
    doc["schema"] = kJsonSchema;
    doc["kind"] = kind_name(region.kind);
    doc["variables"] = region.vars;
    json base = json::array();
    for (const auto& a : region.base) base.push_back(atom_to_json(a));
    doc["base"] = base;
    json clauses = json::array();
    for (const auto& c : region.clauses) {
        json atoms = json::array();
        for (const auto& a : c.atoms) atoms.push_back(atom_to_json(a));
        clauses.push_back(atoms);
    }
    doc["clauses"] = clauses;
    json hints = json::array();
    for (const auto& h : region.box_hints) hints.push_back(to_string(h));
    doc["box_hints"] = hints;
    return doc.dump();
}

RegionFormula from_json(std::string_view text) {
    try {
        const json doc = json::parse(text);
        if (!doc.is_object() || doc.value("schema", "") != kJsonSchema) {
            throw Error(ErrorCode::ParseError, std::string("expected schema ") + kJsonSchema);
        }
        RegionFormula region;
        region.kind = parse_kind(doc.at("kind").get<std::string>());
        region.vars = doc.at("variables").get<std::vector<std::string>>();
        const std::size_t dim = region.vars.size();
        for (const auto& a : doc.at("base")) region.base.push_back(atom_from_json(a, dim));
        for (const auto& c : doc.at("clauses")) {
            Clause clause;
            for (const auto& a : c) clause.atoms.push_back(atom_from_json(a, dim));
            if (clause.atoms.empty()) throw Error(ErrorCode::ParseError, "empty clause");
            region.clauses.push_back(std::move(clause));
        }
        for (const auto& h : doc.at("box_hints")) region.box_hints.push_back(rational_from_json(h));
        if (!region.box_hints.empty() && region.box_hints.size() != dim) {
            throw Error(ErrorCode::ParseError, "box_hints must have one entry per variable");
        }
        return region;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid region document: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Wolfram reader

bool ParsedIntegral::holds(std::span<const BigRational> point) const {
    return std::all_of(conjuncts.begin(), conjuncts.end(), [&](const Clause& c) { return c.holds(point); });
}

namespace {

struct Token {
    enum Kind { Ident, Number, Symbol, End } kind = End;
    std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Ident, std::string(s.substr(i, j - i))});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Number, std::string(s.substr(i, j - i))});
            i = j;
        } else {
            static const char* two[] = {"&&", "||", ">=", "<="};
            bool matched = false;
            for (const char* t : two) {
                if (s.substr(i, 2) == t) {
                    out.push_back({Token::Symbol, t});
                    i += 2;
                    matched = true;
                    break;
                }
            }
            if (matched) continue;
            if (std::string_view("<>+-*/()[]{},").find(c) == std::string_view::npos) {
                throw Error(ErrorCode::ParseError, std::string("unexpected character '") + c + "'");
            }
            out.push_back({Token::Symbol, std::string(1, c)});
            ++i;
        }
    }
    out.push_back({Token::End, ""});
    return out;
}

struct LinExpr {
    std::map<std::string, BigRational> coeffs;
    BigRational constant;
};

struct Comparison {
    LinExpr lhs;
    LinExpr rhs;
    Relation rel;
};

struct BoolExpr {
    enum Kind { And, Or, Cmp } kind = Cmp;
    std::vector<BoolExpr> kids;
    Comparison cmp;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    ParsedIntegral integral() {
        expect_ident("Integrate");
        expect("[");
        expect_ident("Boole");
        expect("[");
        BoolExpr body = parse_or();
        expect("]");
        ParsedIntegral out;
        while (accept(",")) {
            expect("{");
            out.vars.push_back(ident());
            expect(",");
            out.lower.push_back(bound().value_or(0));
            expect(",");
            out.upper.push_back(bound());
            expect("}");
        }
        expect("]");
        if (peek().kind != Token::End) fail("trailing input");
        flatten_and(body, out);
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorCode::ParseError, "wolfram: " + msg + " near '" + peek().text + "'");
    }
    const Token& peek() const { return toks_[pos_]; }
    bool accept(std::string_view sym) {
        if (peek().kind == Token::Symbol && peek().text == sym) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(std::string_view sym) {
        if (!accept(sym)) fail("expected '" + std::string(sym) + "'");
    }
    std::string ident() {
        if (peek().kind != Token::Ident) fail("expected identifier");
        return toks_[pos_++].text;
    }
    void expect_ident(std::string_view name) {
        if (ident() != name) fail("expected " + std::string(name));
    }

    BigRational number() {
        if (peek().kind != Token::Number) fail("expected number");
        BigRational v(toks_[pos_++].text, 10);
        if (accept("/")) {
            if (peek().kind != Token::Number) fail("expected denominator");
            BigRational d(toks_[pos_++].text, 10);
            if (d == 0) fail("zero denominator");
            v /= d;
        }
        return v;
    }

    std::optional<BigRational> bound() {
        if (peek().kind == Token::Ident && peek().text == "Infinity") {
            ++pos_;
            return std::nullopt;
        }
        const bool neg = accept("-");
        BigRational v = number();
        return neg ? -v : v;
    }

    BoolExpr parse_or() {
        BoolExpr first = parse_and();
        if (!(peek().kind == Token::Symbol && peek().text == "||")) return first;
        BoolExpr node{BoolExpr::Or, {std::move(first)}, {}};
        while (accept("||")) node.kids.push_back(parse_and());
        return node;
    }

    BoolExpr parse_and() {
        BoolExpr first = parse_primary();
        if (!(peek().kind == Token::Symbol && peek().text == "&&")) return first;
        BoolExpr node{BoolExpr::And, {std::move(first)}, {}};
        while (accept("&&")) node.kids.push_back(parse_primary());
        return node;
    }

    BoolExpr parse_primary() {
        if (peek().kind == Token::Ident && peek().text == "True") {
            ++pos_;
            return {BoolExpr::And, {}, {}};
        }
        if (accept("(")) {
            BoolExpr inner = parse_or();
            expect(")");
            return inner;
        }
        LinExpr left = sum();
        std::vector<BoolExpr> chain;
        while (auto rel = relation()) {
            LinExpr right = sum();
            chain.push_back({BoolExpr::Cmp, {}, {left, right, *rel}});
            left = std::move(right);
        }
        if (chain.empty()) fail("expected comparison");
        if (chain.size() == 1) return std::move(chain.front());
        return {BoolExpr::And, std::move(chain), {}};
    }

    std::optional<Relation> relation() {
        if (peek().kind != Token::Symbol) return std::nullopt;
        const auto& t = peek().text;
        if (t == ">=" || t == "<=" || t == ">" || t == "<") {
            ++pos_;
            return parse_relation(t);
        }
        return std::nullopt;
    }

    LinExpr sum() {
        LinExpr e;
        bool neg = accept("-");
        if (!neg) accept("+");
        term(e, neg ? -1 : 1);
        for (;;) {
            if (accept("+")) {
                term(e, 1);
            } else if (accept("-")) {
                term(e, -1);
            } else {
                break;
            }
        }
        return e;
    }

    void term(LinExpr& e, const BigRational& sign) {
        BigRational coeff = sign;
        std::string var;
        for (;;) {
            if (peek().kind == Token::Number) {
                coeff *= number();
            } else if (peek().kind == Token::Ident) {
                if (!var.empty()) fail("nonlinear term");
                var = ident();
            } else {
                fail("expected term");
            }
            if (!accept("*")) break;
        }
        if (var.empty()) {
            e.constant += coeff;
        } else {
            e.coeffs[var] += coeff;
        }
    }

    LinearAtom to_atom(const Comparison& c, const std::vector<std::string>& vars) const {
        LinearAtom atom;
        atom.coeffs.assign(vars.size(), BigRational(0));
        atom.constant = c.lhs.constant - c.rhs.constant;
        atom.relation = c.rel;
        auto add = [&](const LinExpr& e, int sign) {
            for (const auto& [name, coeff] : e.coeffs) {
                auto it = std::find(vars.begin(), vars.end(), name);
                if (it == vars.end()) {
                    throw Error(ErrorCode::ParseError, "wolfram: variable '" + name + "' has no bounds");
                }
                atom.coeffs[static_cast<std::size_t>(it - vars.begin())] += sign * coeff;
            }
        };
        add(c.lhs, 1);
        add(c.rhs, -1);
        return atom;
    }

    void flatten_or(const BoolExpr& e, Clause& out, const std::vector<std::string>& vars) const {
        if (e.kind == BoolExpr::Cmp) {
            out.atoms.push_back(to_atom(e.cmp, vars));
        } else if (e.kind == BoolExpr::Or) {
            for (const auto& k : e.kids) flatten_or(k, out, vars);
        } else {
            throw Error(ErrorCode::ParseError, "wolfram: conjunction nested inside a disjunction");
        }
    }

    void flatten_and(const BoolExpr& e, ParsedIntegral& out) const {
        if (e.kind == BoolExpr::And) {
            for (const auto& k : e.kids) flatten_and(k, out);
            return;
        }
        Clause clause;
        flatten_or(e, clause, out.vars);
        out.conjuncts.push_back(std::move(clause));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

ParsedIntegral parse_wolfram(std::string_view text) { return Parser(tokenize(text)).integral(); }

}  // namespace hkfs::emit
