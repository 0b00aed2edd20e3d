#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace talex {

// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, mpz_class(0)) {}
    static IntMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    const mpz_class& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }
    mpz_class& at(size_t i, size_t j) { return entries_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

private:
    size_t rows_, cols_;
    std::vector<mpz_class> entries_;
};

// U * M * V = D with U, V unimodular and D diagonal, nonnegative, satisfying
// the divisibility chain d1 | d2 | ...
struct SmithForm {
    IntMatrix U, D, V;
};

SmithForm smith_normal_form(const IntMatrix& M);

}  // namespace talex
