#include "linalg.hpp"

#include <utility>

namespace hkfs {
namespace {

/// Gaussian elimination on the first `pivot_cols` columns; returns the rank
/// and the sign/product bookkeeping needed by the determinant.
std::size_t eliminate(Matrix& m, std::size_t pivot_cols, BigRational* det) {
    std::size_t row = 0;
    BigRational factor;
    for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
        if (p == m.rows()) {
            if (det != nullptr) *det = 0;
            continue;
        }
        if (p != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
            if (det != nullptr) *det = -*det;
        }
        if (det != nullptr) *det *= m(row, col);
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            if (sgn(m(r, col)) == 0) continue;
            factor = m(r, col) / m(row, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (sgn(m(row, c)) != 0) m(r, c) -= factor * m(row, c);
            }
        }
        ++row;
    }
    return row;
}

}  // namespace

BigRational determinant(Matrix m) {
    if (m.rows() != m.cols()) return 0;
    BigRational det = 1;
    const auto r = eliminate(m, m.cols(), &det);
    return r == m.rows() ? det : BigRational(0);
}

std::size_t rank(Matrix m) { return eliminate(m, m.cols(), nullptr); }

std::optional<std::vector<BigRational>> solve_unique(Matrix m) {
    const std::size_t n = m.rows();
    BigRational det = 1;
    if (eliminate(m, n, &det) != n || sgn(det) == 0) return std::nullopt;
    std::vector<BigRational> x(n);
    for (std::size_t r = n; r-- > 0;) {
        BigRational acc = m(r, n);
        for (std::size_t c = r + 1; c < n; ++c) {
            if (sgn(m(r, c)) != 0) acc -= m(r, c) * x[c];
        }
        x[r] = acc / m(r, r);
    }
    return x;
}

}  // namespace hkfs
