#include "hessk3/zmatrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hessk3 {

ZMatrix ZMatrix::identity(std::size_t n) {
    ZMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMatrix ZMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) return ZMatrix();
    ZMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("ZMatrix: ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

ZMatrix ZMatrix::transpose() const {
    ZMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ZMatrix ZMatrix::operator*(const ZMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("ZMatrix: shape mismatch in product");
    ZMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

ZMatrix ZMatrix::operator+(const ZMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ZMatrix: shape mismatch");
    ZMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

ZMatrix ZMatrix::operator-() const {
    ZMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

std::vector<mpz_class> ZMatrix::apply(const std::vector<mpz_class>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("ZMatrix: vector length mismatch");
    std::vector<mpz_class> r(rows_, mpz_class(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

bool ZMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

ZMatrix ZMatrix::submatrix(const std::vector<std::size_t>& keep_rows,
                           const std::vector<std::size_t>& keep_cols) const {
    ZMatrix r(keep_rows.size(), keep_cols.size());
    for (std::size_t i = 0; i < keep_rows.size(); ++i)
        for (std::size_t j = 0; j < keep_cols.size(); ++j)
            r.at(i, j) = at(keep_rows[i], keep_cols[j]);
    return r;
}

mpz_class ZMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("ZMatrix: det of non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return 1;
    ZMatrix w(*this);
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : mpz_class(-w.at(n - 1, n - 1));
}

std::size_t ZMatrix::rank() const {
    // Rational Gaussian elimination; rank over Q equals rank over Z.
    std::vector<std::vector<Rational>> w(rows_, std::vector<Rational>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) w[i][j] = Rational(at(i, j));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && w[pivot][col].is_zero()) ++pivot;
        if (pivot == rows_) continue;
        std::swap(w[pivot], w[rank]);
        for (std::size_t i = rank + 1; i < rows_; ++i) {
            if (w[i][col].is_zero()) continue;
            Rational f = w[i][col] / w[rank][col];
            for (std::size_t j = col; j < cols_; ++j) w[i][j] -= f * w[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::pair<std::size_t, std::size_t> ZMatrix::signature() const {
    if (!is_symmetric()) throw std::invalid_argument("ZMatrix: signature needs symmetric matrix");
    std::size_t n = rows_;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(at(i, j));
    std::vector<bool> done(n, false);
    std::size_t pos = 0, neg = 0;
    for (;;) {
        std::size_t d = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && !a[i][i].is_zero()) { d = i; break; }
        if (d < n) {
            const Rational piv = a[d][d];
            (piv.sign() > 0 ? pos : neg) += 1;
            for (std::size_t i = 0; i < n; ++i) {
                if (done[i] || i == d || a[i][d].is_zero()) continue;
                Rational f = a[i][d] / piv;
                for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[d][j];
                for (std::size_t j = 0; j < n; ++j) a[j][i] = a[i][j];
            }
            done[d] = true;
            continue;
        }
        // No nonzero diagonal left: look for a hyperbolic off-diagonal pair.
        std::size_t bi = n, bj = n;
        for (std::size_t i = 0; i < n && bi == n; ++i) {
            if (done[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j)
                if (!done[j] && !a[i][j].is_zero()) { bi = i; bj = j; break; }
        }
        if (bi == n) break;
        const Rational b = a[bi][bj];
        pos += 1;
        neg += 1;
        for (std::size_t k = 0; k < n; ++k) {
            if (done[k] || k == bi || k == bj) continue;
            Rational x = a[bi][k], y = a[bj][k];
            if (x.is_zero() && y.is_zero()) continue;
            for (std::size_t l = 0; l < n; ++l) {
                a[k][l] -= (x * a[bj][l] + y * a[bi][l]) / b;
            }
            for (std::size_t l = 0; l < n; ++l) a[l][k] = a[k][l];
        }
        done[bi] = done[bj] = true;
    }
    return {pos, neg};
}

std::string ZMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j) os << at(i, j).get_str() << (j + 1 < cols_ ? " " : "");
        os << (i + 1 < rows_ ? "\n" : "]");
    }
    return os.str();
}

namespace {

// One elimination pass used by smith_normal_form. Returns true if the
// pivot at (t,t) is the only nonzero entry in its row and column.
bool clear_pivot(ZMatrix& s, ZMatrix& u, ZMatrix& v, std::size_t t) {
    std::size_t n = s.rows(), m = s.cols();
    bool clean = true;
    for (std::size_t i = t + 1; i < n; ++i) {
        if (s.at(i, t) == 0) continue;
        mpz_class q = s.at(i, t) / s.at(t, t);  // truncated division
        if (q != 0) {
            for (std::size_t j = 0; j < m; ++j) s.at(i, j) -= q * s.at(t, j);
            for (std::size_t j = 0; j < n; ++j) u.at(i, j) -= q * u.at(t, j);
        }
        if (s.at(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < m; ++j) {
        if (s.at(t, j) == 0) continue;
        mpz_class q = s.at(t, j) / s.at(t, t);
        if (q != 0) {
            for (std::size_t i = 0; i < n; ++i) s.at(i, j) -= q * s.at(i, t);
            for (std::size_t i = 0; i < m; ++i) v.at(i, j) -= q * v.at(i, t);
        }
        if (s.at(t, j) != 0) clean = false;
    }
    return clean;
}

}  // namespace

SmithForm smith_normal_form(const ZMatrix& mat) {
    std::size_t n = mat.rows(), m = mat.cols();
    SmithForm f{ZMatrix::identity(n), mat, ZMatrix::identity(m)};
    ZMatrix& s = f.s;
    ZMatrix& u = f.u;
    ZMatrix& v = f.v;
    std::size_t t = 0;
    while (t < n && t < m) {
        // Locate a minimal-absolute-value nonzero pivot in the trailing block.
        std::size_t pi = n, pj = m;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = t; j < m; ++j) {
                if (s.at(i, j) == 0) continue;
                if (pi == n || cmp(abs(s.at(i, j)), abs(s.at(pi, pj))) < 0) { pi = i; pj = j; }
            }
        if (pi == n) break;  // trailing block is zero
        if (pi != t)
            for (std::size_t j = 0; j < m; ++j) { std::swap(s.at(t, j), s.at(pi, j)); }
        if (pi != t)
            for (std::size_t j = 0; j < n; ++j) { std::swap(u.at(t, j), u.at(pi, j)); }
        if (pj != t) {
            for (std::size_t i = 0; i < n; ++i) std::swap(s.at(i, t), s.at(i, pj));
            for (std::size_t i = 0; i < m; ++i) std::swap(v.at(i, t), v.at(i, pj));
        }
        if (!clear_pivot(s, u, v, t)) continue;  // residues remain, repeat with smaller pivot
        // Enforce divisibility s[t][t] | s[i][j] on the trailing block.
        bool fixed = false;
        for (std::size_t i = t + 1; i < n && !fixed; ++i)
            for (std::size_t j = t + 1; j < m && !fixed; ++j) {
                if (s.at(i, j) % s.at(t, t) != 0) {
                    for (std::size_t k = 0; k < m; ++k) s.at(t, k) += s.at(i, k);
                    for (std::size_t k = 0; k < n; ++k) u.at(t, k) += u.at(i, k);
                    fixed = true;
                }
            }
        if (fixed) continue;
        if (s.at(t, t) < 0) {
            for (std::size_t k = 0; k < m; ++k) s.at(t, k) = -s.at(t, k);
            for (std::size_t k = 0; k < n; ++k) u.at(t, k) = -u.at(t, k);
        }
        ++t;
    }
    return f;
}

std::vector<mpz_class> SmithForm::invariant_factors() const {
    std::vector<mpz_class> d;
    std::size_t n = std::min(s.rows(), s.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (s.at(i, i) != 0) d.push_back(s.at(i, i));
    return d;
}

}  // namespace hessk3
