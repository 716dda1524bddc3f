#pragma once

#include <cstddef>
#include <vector>

#include "qperm/matrix.hpp"

namespace qperm {

struct RatLinearSystem {
    RatMatrix a;             // m x k coefficients
    std::vector<Rat> rhs;    // length m
};

/*
 * Result of exact Gaussian elimination. `kernel` is a basis of the
 * homogeneous solution space and is valid whether or not the system is
 * consistent; `particular` is filled only when it is. rank + kernel.size()
 * always equals the number of unknowns.
 */
struct LinearSolve {
    bool consistent = false;
    std::size_t rank = 0;
    std::vector<Rat> particular;
    std::vector<std::vector<Rat>> kernel;
};

LinearSolve solve_linear(const RatLinearSystem& sys);
LinearSolve solve_linear(const RatMatrix& a, const std::vector<Rat>& rhs);

std::size_t rank_of(const RatMatrix& a);

// Basis of {y : y^T M = 0}, cleared to integer vectors with content 1 and a
// positive leading entry.
std::vector<std::vector<mpz_class>> left_nullspace(const RatMatrix& m);

namespace detail {

// Fraction-free (Bareiss) elimination; all divisions are exact in the
// underlying integral domain. Works on a row-major buffer of a square
// matrix and returns the determinant.
template <class T>
T det_bareiss_buffer(std::vector<T>& a, std::size_t n) {
    if (n == 0) return T(1);
    bool negate = false;
    T prev_pivot(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row * n + k].is_zero()) ++swap_row;
            if (swap_row == n) return T(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[swap_row * n + j]);
            negate = !negate;
        }
        const T pivot = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = a[i * n + j] * pivot - a[i * n + k] * a[k * n + j];
                a[i * n + j] = exact_div(num, prev_pivot);
            }
            a[i * n + k] = T(0);
        }
        prev_pivot = pivot;
    }
    T det = a[(n - 1) * n + (n - 1)];
    return negate ? -det : det;
}

} // namespace detail

Laurent det_bareiss(const RingMatrix& m);
Rat det_bareiss(const ExponentMatrix& m);

// Integer determinant via Bareiss on mpz entries.
mpz_class det_integer(const std::vector<mpz_class>& entries, std::size_t n);

// Determinant of a rational matrix through integer row scaling; faster than
// running Bareiss on mpq entries directly.
Rat det_rational_scaled(const ExponentMatrix& m);

namespace detail {

/*
 * Leading-minor recurrence for lower Hessenberg matrices (zero above the
 * superdiagonal):
 *   d_k = a_{k,k} d_{k-1} + sum_{i<k} (-1)^{k-i} (prod_{j=i..k-1} a_{j,j+1}) a_{k,i} d_{i-1}.
 * Quadratic number of ring operations; used as an independent cross-check of
 * the elimination path.
 */
template <class MatT, class T = typename MatT::value_type>
T det_hessenberg_recurrence_impl(const MatT& m) {
    const std::size_t n = m.n();
    std::vector<T> d(n + 1);
    d[0] = T(1);
    for (std::size_t k = 1; k <= n; ++k) {
        T acc = m.at(k - 1, k - 1) * d[k - 1];
        T super_prod(1);
        for (std::size_t i = k - 1; i >= 1; --i) {
            super_prod = super_prod * m.at(i - 1, i);
            T piece = super_prod * m.at(k - 1, i - 1) * d[i - 1];
            if ((k - i) % 2 == 1) acc = acc - piece;
            else acc = acc + piece;
        }
        d[k] = acc;
    }
    return d[n];
}

} // namespace detail

Laurent det_hessenberg_recurrence(const RingMatrix& m);
Rat det_hessenberg_recurrence(const ExponentMatrix& m);

} // namespace qperm
