#include "hkfs/rational.hpp"

#include "hkfs/error.hpp"

#include <stdexcept>

namespace hkfs {

std::string to_string(const BigRational& q) {
    BigRational c = q;
    c.canonicalize();
    return c.get_str();
}

BigRational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    const auto slash = text.find('/');
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
        }
        return true;
    };
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) {
        throw std::invalid_argument("malformed rational: " + std::string(text));
    }
    std::string n(num);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    BigInt p(n, 10);
    BigInt q(std::string(den), 10);
    if (q == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    BigRational r(p, q);
    r.canonicalize();
    return r;
}

double to_double(const BigRational& q) { return q.get_d(); }

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::OddCount: return "OddCount";
        case ErrorCode::NonPositiveExponent: return "NonPositiveExponent";
        case ErrorCode::DegenerateCone: return "DegenerateCone";
        case ErrorCode::EmptyClause: return "EmptyClause";
        case ErrorCode::UnboundedCell: return "UnboundedCell";
        case ErrorCode::UnboundedRegion: return "UnboundedRegion";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NameOverflow: return "NameOverflow";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace hkfs
