#include "talex/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace talex {

CycloMatrix::CycloMatrix(size_t rows, size_t cols, long modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), entries_(rows * cols, Cyclo::zero(modulus)) {}

CycloMatrix CycloMatrix::identity(size_t n, long modulus) {
    CycloMatrix m(n, n, modulus);
    for (size_t i = 0; i < n; ++i) m.set(i, i, Cyclo::one(modulus));
    return m;
}

void CycloMatrix::set(size_t i, size_t j, const Cyclo& v) {
    if (v.modulus() != modulus_) throw ModulusMismatch("matrix entry modulus mismatch");
    entries_[i * cols_ + j] = v;
}

CycloMatrix CycloMatrix::operator+(const CycloMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
    CycloMatrix r = *this;
    for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] + rhs.entries_[k];
    return r;
}

CycloMatrix CycloMatrix::operator-(const CycloMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
    CycloMatrix r = *this;
    for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] - rhs.entries_[k];
    return r;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch in *");
    if (modulus_ != rhs.modulus_) throw ModulusMismatch("matrix modulus mismatch in *");
    CycloMatrix r(rows_, rhs.cols_, modulus_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Cyclo& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < rhs.cols_; ++j)
                r.entries_[i * rhs.cols_ + j] = r.entries_[i * rhs.cols_ + j] + a * rhs.at(k, j);
        }
    return r;
}

CycloMatrix CycloMatrix::scaled(const Cyclo& c) const {
    CycloMatrix r = *this;
    for (auto& e : r.entries_) e = e * c;
    return r;
}

bool CycloMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

Cyclo CycloMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    Cyclo t = Cyclo::zero(modulus_);
    for (size_t i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
}

Cyclo CycloMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    std::vector<Cyclo> a = entries_;
    const size_t n = rows_;
    Cyclo det = Cyclo::one(modulus_);
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && a[pivot * n + k].is_zero()) ++pivot;
        if (pivot == n) return Cyclo::zero(modulus_);
        if (pivot != k) {
            for (size_t j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[k * n + j]);
            det = -det;
        }
        det = det * a[k * n + k];
        Cyclo inv = a[k * n + k].inverse();
        for (size_t i = k + 1; i < n; ++i) {
            if (a[i * n + k].is_zero()) continue;
            Cyclo f = a[i * n + k] * inv;
            for (size_t j = k; j < n; ++j) a[i * n + j] = a[i * n + j] - f * a[k * n + j];
        }
    }
    return det;
}

CycloMatrix CycloMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    const size_t n = rows_;
    std::vector<Cyclo> a = entries_;
    CycloMatrix inv = identity(n, modulus_);
    std::vector<Cyclo>& b = inv.entries_;
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && a[pivot * n + k].is_zero()) ++pivot;
        if (pivot == n) throw SingularMatrix("matrix is singular");
        if (pivot != k)
            for (size_t j = 0; j < n; ++j) {
                std::swap(a[pivot * n + j], a[k * n + j]);
                std::swap(b[pivot * n + j], b[k * n + j]);
            }
        Cyclo f = a[k * n + k].inverse();
        for (size_t j = 0; j < n; ++j) {
            a[k * n + j] = a[k * n + j] * f;
            b[k * n + j] = b[k * n + j] * f;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k || a[i * n + k].is_zero()) continue;
            Cyclo g = a[i * n + k];
            for (size_t j = 0; j < n; ++j) {
                a[i * n + j] = a[i * n + j] - g * a[k * n + j];
                b[i * n + j] = b[i * n + j] - g * b[k * n + j];
            }
        }
    }
    return inv;
}

CycloMatrix CycloMatrix::embedded(long m2) const {
    CycloMatrix r(rows_, cols_, m2);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j).embedded(m2));
    return r;
}

PolyMatrix::PolyMatrix(size_t rows, size_t cols, long modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), entries_(rows * cols, Laurent::zero(modulus)) {}

PolyMatrix PolyMatrix::identity(size_t n, long modulus) {
    PolyMatrix m(n, n, modulus);
    for (size_t i = 0; i < n; ++i) m.set(i, i, Laurent::one(modulus));
    return m;
}

void PolyMatrix::set(size_t i, size_t j, const Laurent& v) {
    if (v.modulus() != modulus_) throw ModulusMismatch("matrix entry modulus mismatch");
    entries_[i * cols_ + j] = v;
}

void PolyMatrix::add_to(size_t i, size_t j, const Laurent& v) {
    entries_[i * cols_ + j] = entries_[i * cols_ + j] + v;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix r = *this;
    for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] + rhs.entries_[k];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix r = *this;
    for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] - rhs.entries_[k];
    return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch in *");
    if (modulus_ != rhs.modulus_) throw ModulusMismatch("matrix modulus mismatch in *");
    PolyMatrix r(rows_, rhs.cols_, modulus_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Laurent& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) r.add_to(i, j, a * rhs.at(k, j));
        }
    return r;
}

Laurent PolyMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    const size_t n = rows_;
    if (n == 0) return Laurent::one(modulus_);

    std::vector<Laurent> a = entries_;
    long unit_shift = 0;
    for (size_t i = 0; i < n; ++i) {
        bool all_zero = true;
        long mu = 0;
        for (size_t j = 0; j < n; ++j) {
            const Laurent& e = a[i * n + j];
            if (e.is_zero()) continue;
            long d = e.min_degree();
            mu = all_zero ? d : std::min(mu, d);
            all_zero = false;
        }
        if (all_zero) return Laurent::zero(modulus_);
        if (mu != 0) {
            for (size_t j = 0; j < n; ++j) a[i * n + j] = a[i * n + j].shifted(-mu);
            unit_shift += mu;
        }
    }

    // Fraction-free Bareiss with row pivoting; every division is exact.
    bool negate = false;
    Laurent prev = Laurent::one(modulus_);
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pivot = k;
        while (pivot < n && a[pivot * n + k].is_zero()) ++pivot;
        if (pivot == n) return Laurent::zero(modulus_);
        if (pivot != k) {
            for (size_t j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[k * n + j]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Laurent num = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                a[i * n + j] = num.is_zero() ? num : num.divide_exact(prev);
            }
            a[i * n + k] = Laurent::zero(modulus_);
        }
        prev = a[k * n + k];
    }
    Laurent det = a[(n - 1) * n + (n - 1)].shifted(unit_shift);
    return negate ? -det : det;
}

}  // namespace talex
