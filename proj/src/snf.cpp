#include "talex/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace talex {

namespace {

void swap_rows(IntMatrix& m, size_t a, size_t b) {
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, size_t a, size_t b) {
    for (size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row_a -= q * row_b
void row_axpy(IntMatrix& m, size_t a, size_t b, const mpz_class& q) {
    for (size_t j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

void col_axpy(IntMatrix& m, size_t a, size_t b, const mpz_class& q) {
    for (size_t i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}

void negate_row(IntMatrix& m, size_t a) {
    for (size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

mpz_class tdiv(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch in *");
    IntMatrix r(rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) r.at(i, j) += at(i, k) * rhs.at(k, j);
        }
    return r;
}

SmithForm smith_normal_form(const IntMatrix& M) {
    const size_t r = M.rows(), c = M.cols();
    SmithForm f{IntMatrix::identity(r), M, IntMatrix::identity(c)};
    IntMatrix& D = f.D;
    IntMatrix& U = f.U;
    IntMatrix& V = f.V;

    const size_t rank_bound = std::min(r, c);
    for (size_t t = 0; t < rank_bound; ++t) {
        // Select the nonzero entry of smallest magnitude as pivot.
        bool found = false;
        size_t pi = t, pj = t;
        mpz_class best;
        for (size_t i = t; i < r; ++i)
            for (size_t j = t; j < c; ++j) {
                if (D.at(i, j) == 0) continue;
                mpz_class a = abs(D.at(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;

        if (pi != t) {
            swap_rows(D, pi, t);
            swap_rows(U, pi, t);
        }
        if (pj != t) {
            swap_cols(D, pj, t);
            swap_cols(V, pj, t);
        }

        // Reduce until the pivot divides (and clears) its row and column and
        // every entry of the remaining submatrix.  The pivot magnitude
        // strictly decreases on each retry, so this terminates.
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < r && clean; ++i) {
                if (D.at(i, t) == 0) continue;
                mpz_class q = tdiv(D.at(i, t), D.at(t, t));
                row_axpy(D, i, t, q);
                row_axpy(U, i, t, q);
                if (D.at(i, t) != 0) {
                    swap_rows(D, i, t);
                    swap_rows(U, i, t);
                    clean = false;
                }
            }
            if (!clean) continue;
            for (size_t j = t + 1; j < c && clean; ++j) {
                if (D.at(t, j) == 0) continue;
                mpz_class q = tdiv(D.at(t, j), D.at(t, t));
                col_axpy(D, j, t, q);
                col_axpy(V, j, t, q);
                if (D.at(t, j) != 0) {
                    swap_cols(D, j, t);
                    swap_cols(V, j, t);
                    clean = false;
                }
            }
            if (!clean) continue;
            for (size_t i = t + 1; i < r && clean; ++i)
                for (size_t j = t + 1; j < c && clean; ++j) {
                    if (D.at(i, j) % D.at(t, t) == 0) continue;
                    // Fold the offending row into the pivot row and retry.
                    row_axpy(D, t, i, mpz_class(-1));
                    row_axpy(U, t, i, mpz_class(-1));
                    clean = false;
                }
        }
    }

    for (size_t t = 0; t < rank_bound; ++t) {
        if (D.at(t, t) < 0) {
            negate_row(D, t);
            negate_row(U, t);
        }
    }
    return f;
}

}  // namespace talex
