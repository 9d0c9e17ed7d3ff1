#include "hkfs/lp.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace hkfs {

bool HalfSpace::holds(std::span<const BigRational> x) const { return sgn(slack(x)) >= 0; }

BigRational HalfSpace::slack(std::span<const BigRational> x) const {
    BigRational lhs = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (sgn(a[j]) != 0) lhs += a[j] * x[j];
    }
    return b - lhs;
}

namespace {

BigInt lcm_of_denominators(std::span<const BigRational> values, const BigRational* extra) {
    BigInt l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    if (extra != nullptr) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), extra->get_den_mpz_t());
    return l;
}

}  // namespace

HalfSpace normalized(const HalfSpace& h) {
    const BigInt l = lcm_of_denominators(h.a, &h.b);
    BigInt g = 0;
    std::vector<BigInt> ints(h.a.size());
    for (std::size_t j = 0; j < h.a.size(); ++j) {
        BigRational scaled = h.a[j] * l;
        ints[j] = scaled.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[j].get_mpz_t());
    }
    HalfSpace out;
    out.a.resize(h.a.size());
    if (g == 0) {
        // 0 <= b: keep a canonical trivial row.
        for (auto& c : out.a) c = 0;
        out.b = sgn(h.b) >= 0 ? 1 : -1;
        return out;
    }
    for (std::size_t j = 0; j < h.a.size(); ++j) out.a[j] = BigRational(ints[j] / g);
    out.b = h.b * l / g;
    out.b.canonicalize();
    return out;
}

namespace lp {
namespace {

/// max c·y  s.t.  A y <= b, y >= 0, integer data. Fraction-free tableau: the
/// true entry is T / den with den > 0.
class Tableau {
public:
    Tableau(std::size_t m, std::size_t n) : m_(m), n_(n), width_(n + 2), t_((m + 2) * (n + 2)) {
        basis_.resize(m);
        nonbasis_.resize(n + 1);
        for (std::size_t i = 0; i < m; ++i) basis_[i] = static_cast<long>(n + i);
        for (std::size_t j = 0; j < n; ++j) nonbasis_[j] = static_cast<long>(j);
        nonbasis_[n] = -1;
        for (std::size_t i = 0; i < m; ++i) at(i, n) = -1;
        at(m + 1, n) = 1;
    }

    mpz_class& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return t_[i * width_ + j]; }

    Status solve() {
        std::size_t r = 0;
        for (std::size_t i = 1; i < m_; ++i) {
            if (at(i, n_ + 1) < at(r, n_ + 1)) r = i;
        }
        if (m_ > 0 && sgn(at(r, n_ + 1)) < 0) {
            pivot(r, n_);
            if (!simplex(1) || sgn(at(m_ + 1, n_ + 1)) < 0) return Status::Infeasible;
            for (std::size_t i = 0; i < m_; ++i) {
                if (basis_[i] != -1) continue;
                for (std::size_t j = 0; j <= n_; ++j) {
                    if (sgn(at(i, j)) != 0) {
                        pivot(i, j);
                        break;
                    }
                }
            }
        }
        return simplex(2) ? Status::Optimal : Status::Unbounded;
    }

    BigRational value() const {
        BigRational v(at(m_, n_ + 1), den_);
        v.canonicalize();
        return v;
    }

    std::vector<BigRational> primal() const {
        std::vector<BigRational> y(n_);
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] >= 0 && static_cast<std::size_t>(basis_[i]) < n_) {
                BigRational v(at(i, n_ + 1), den_);
                v.canonicalize();
                y[static_cast<std::size_t>(basis_[i])] = v;
            }
        }
        return y;
    }

private:
    void pivot(std::size_t r, std::size_t s) {
        mpz_class p = at(r, s);
        mpz_class tmp;
        for (std::size_t i = 0; i < m_ + 2; ++i) {
            if (i == r) continue;
            const mpz_class is = at(i, s);
            for (std::size_t j = 0; j < width_; ++j) {
                if (j == s) continue;
                mpz_class& cell = at(i, j);
                cell *= p;
                if (sgn(is) != 0 && sgn(at(r, j)) != 0) {
                    tmp = is * at(r, j);
                    cell -= tmp;
                }
                if (den_ != 1) mpz_divexact(cell.get_mpz_t(), cell.get_mpz_t(), den_.get_mpz_t());
            }
            at(i, s) = -is;
        }
        at(r, s) = den_;
        den_ = p;
        if (sgn(den_) < 0) {
            for (auto& v : t_) v = -v;
            den_ = -den_;
        }
        std::swap(basis_[r], nonbasis_[s]);
    }

    bool simplex(int phase) {
        const std::size_t x = phase == 1 ? m_ + 1 : m_;
        std::size_t stalled = 0;
        bool bland = false;
        mpz_class lhs, rhs;
        for (;;) {
            std::size_t s = width_;
            for (std::size_t j = 0; j <= n_; ++j) {
                if (phase == 2 && nonbasis_[j] == -1) continue;
                if (sgn(at(x, j)) >= 0) continue;
                if (s == width_) {
                    s = j;
                } else if (bland) {
                    if (nonbasis_[j] < nonbasis_[s]) s = j;
                } else if (at(x, j) < at(x, s) ||
                           (at(x, j) == at(x, s) && nonbasis_[j] < nonbasis_[s])) {
                    s = j;
                }
            }
            if (s == width_) return true;

            std::size_t r = m_;
            for (std::size_t i = 0; i < m_; ++i) {
                if (sgn(at(i, s)) <= 0) continue;
                if (r == m_) {
                    r = i;
                    continue;
                }
                // rhs_i / a_is < rhs_r / a_rs, both denominators positive
                lhs = at(i, n_ + 1) * at(r, s);
                rhs = at(r, n_ + 1) * at(i, s);
                if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[r])) r = i;
            }
            if (r == m_) return false;

            const bool degenerate = sgn(at(r, n_ + 1)) == 0;
            pivot(r, s);
            stalled = degenerate ? stalled + 1 : 0;
            if (stalled > 8) bland = true;
        }
    }

    std::size_t m_;
    std::size_t n_;
    std::size_t width_;
    std::vector<mpz_class> t_;
    mpz_class den_ = 1;
    std::vector<long> basis_;
    std::vector<long> nonbasis_;
};

/// Integer row data with each row scaled by a positive factor.
struct IntegerRow {
    std::vector<BigInt> a;
    BigInt b;
};

IntegerRow to_integer(const HalfSpace& h) {
    const BigInt l = lcm_of_denominators(h.a, &h.b);
    IntegerRow row;
    row.a.resize(h.a.size());
    for (std::size_t j = 0; j < h.a.size(); ++j) row.a[j] = BigRational(h.a[j] * l).get_num();
    row.b = BigRational(h.b * l).get_num();
    return row;
}

/// Free variables x split as u - w. Extra nonnegative columns (beyond 2*dim)
/// are appended by the caller through `extra`.
Tableau build(std::span<const HalfSpace> rows, std::size_t dim, std::size_t extra_rows,
              std::size_t extra_cols) {
    const std::size_t m = rows.size() + extra_rows;
    const std::size_t n = 2 * dim + extra_cols;
    Tableau tab(m, n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const IntegerRow row = to_integer(rows[i]);
        for (std::size_t j = 0; j < dim; ++j) {
            if (sgn(row.a[j]) == 0) continue;
            tab.at(i, j) = row.a[j];
            tab.at(i, dim + j) = -row.a[j];
        }
        tab.at(i, n + 1) = row.b;
    }
    return tab;
}

}  // namespace

Result maximize(std::span<const HalfSpace> rows, std::span<const BigRational> objective,
                std::size_t dim) {
    Tableau tab = build(rows, dim, 0, 0);
    const BigInt scale = lcm_of_denominators(objective, nullptr);
    for (std::size_t j = 0; j < dim; ++j) {
        const BigInt c = BigRational(objective[j] * scale).get_num();
        if (sgn(c) == 0) continue;
        tab.at(rows.size(), j) = -c;
        tab.at(rows.size(), dim + j) = c;
    }
    Result result;
    result.status = tab.solve();
    if (result.status != Status::Optimal) return result;
    result.value = tab.value() / BigRational(scale);
    const auto y = tab.primal();
    result.point.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) result.point[j] = y[j] - y[dim + j];
    return result;
}

bool feasible(std::span<const HalfSpace> rows, std::size_t dim) {
    Tableau tab = build(rows, dim, 0, 0);
    return tab.solve() != Status::Infeasible;
}

bool full_dimensional(std::span<const HalfSpace> rows, std::size_t dim) {
    // max s  s.t.  a_i·x + s <= b_i,  s <= 1,  s >= 0
    const std::size_t s_col = 2 * dim;
    Tableau tab = build(rows, dim, 1, 1);
    for (std::size_t i = 0; i < rows.size(); ++i) tab.at(i, s_col) = 1;
    tab.at(rows.size(), s_col) = 1;
    tab.at(rows.size(), s_col + 1 + 1) = 1;  // rhs column is n + 1 = s_col + 2
    tab.at(rows.size() + 1, s_col) = -1;
    if (tab.solve() != Status::Optimal) return false;
    return sgn(tab.value()) > 0;
}

}  // namespace lp
}  // namespace hkfs
