#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "hessk3/rational.hpp"

namespace hessk3 {

// Dense integer matrix with exact linear algebra.
class ZMatrix {
public:
    ZMatrix() : rows_(0), cols_(0) {}
    ZMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    static ZMatrix identity(std::size_t n);
    static ZMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpz_class& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    ZMatrix transpose() const;
    ZMatrix operator*(const ZMatrix& o) const;
    ZMatrix operator+(const ZMatrix& o) const;
    ZMatrix operator-() const;
    std::vector<mpz_class> apply(const std::vector<mpz_class>& v) const;
    friend bool operator==(const ZMatrix& a, const ZMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    bool is_symmetric() const;
    ZMatrix submatrix(const std::vector<std::size_t>& keep_rows,
                      const std::vector<std::size_t>& keep_cols) const;

    // Exact determinant (Bareiss). Square matrices only.
    mpz_class det() const;
    std::size_t rank() const;
    // Signature (n_plus, n_minus) of a symmetric matrix over Q.
    std::pair<std::size_t, std::size_t> signature() const;

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<mpz_class> a_;
};

// Smith normal form decomposition U * M * V = S with U, V unimodular and
// S diagonal, nonnegative, with each diagonal entry dividing the next.
struct SmithForm {
    ZMatrix u, s, v;
    std::vector<mpz_class> invariant_factors() const;  // nonzero diagonal entries
};

SmithForm smith_normal_form(const ZMatrix& m);

}  // namespace hessk3
