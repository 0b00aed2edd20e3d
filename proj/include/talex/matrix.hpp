#pragma once

#include <cstddef>
#include <vector>

#include "talex/laurent.hpp"

namespace talex {

// Dense matrix over Q(zeta_m).
class CycloMatrix {
public:
    CycloMatrix(size_t rows, size_t cols, long modulus);
    static CycloMatrix identity(size_t n, long modulus);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    long modulus() const { return modulus_; }

    const Cyclo& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }
    void set(size_t i, size_t j, const Cyclo& v);

    CycloMatrix operator+(const CycloMatrix& rhs) const;
    CycloMatrix operator-(const CycloMatrix& rhs) const;
    CycloMatrix operator*(const CycloMatrix& rhs) const;
    CycloMatrix scaled(const Cyclo& c) const;

    bool operator==(const CycloMatrix& rhs) const = default;
    bool is_identity() const;

    Cyclo trace() const;
    Cyclo determinant() const;   // Gaussian elimination over the field
    CycloMatrix inverse() const; // throws SingularMatrix

    CycloMatrix embedded(long m2) const;

private:
    size_t rows_, cols_;
    long modulus_;
    std::vector<Cyclo> entries_;  // row-major
};

// Dense matrix over the Laurent polynomial ring Q(zeta_m)[t^(+-1)].
class PolyMatrix {
public:
    PolyMatrix(size_t rows, size_t cols, long modulus);
    static PolyMatrix identity(size_t n, long modulus);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    long modulus() const { return modulus_; }

    const Laurent& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }
    void set(size_t i, size_t j, const Laurent& v);
    void add_to(size_t i, size_t j, const Laurent& v);

    PolyMatrix operator+(const PolyMatrix& rhs) const;
    PolyMatrix operator-(const PolyMatrix& rhs) const;
    PolyMatrix operator*(const PolyMatrix& rhs) const;

    bool operator==(const PolyMatrix& rhs) const = default;

    // Exact determinant.  Laurent denominators are cleared row by row
    // (tracking the t-power unit), then fraction-free Bareiss elimination
    // runs over Q(zeta_m)[t] and the unit is restored at the end.
    Laurent determinant() const;

private:
    size_t rows_, cols_;
    long modulus_;
    std::vector<Laurent> entries_;  // row-major
};

}  // namespace talex
