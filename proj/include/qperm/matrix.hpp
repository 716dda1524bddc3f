#pragma once

#include <cstddef>
#include <vector>

#include "qperm/laurent.hpp"
#include "qperm/perm.hpp"
#include "qperm/rat.hpp"

namespace qperm {

// General m x k matrix over Q, used by the linear-system machinery.
class RatMatrix {
public:
    using value_type = Rat;

    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RatMatrix transpose() const;

    friend bool operator==(const RatMatrix& x, const RatMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

/*
 * Square matrix of exact rationals holding exponent data. Entries are
 * accessed 0-based; vec() stacks rows (row-major), matching the column
 * order of the permutation-entry incidence matrix.
 */
class ExponentMatrix {
public:
    using value_type = Rat;

    ExponentMatrix() : n_(0) {}
    explicit ExponentMatrix(std::size_t n) : n_(n), a_(n * n) {}
    ExponentMatrix(std::size_t n, std::vector<Rat> entries);

    static ExponentMatrix zero(std::size_t n) { return ExponentMatrix(n); }
    static ExponentMatrix identity(std::size_t n);
    static ExponentMatrix ones(std::size_t n);  // J_n
    static ExponentMatrix unit(std::size_t n, std::size_t i, std::size_t j);  // E_{ij}
    static ExponentMatrix permutation(const Perm& p);  // 1 at (i, p(i))
    static ExponentMatrix from_vec(std::size_t n, const std::vector<Rat>& v);

    std::size_t n() const { return n_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    std::vector<Rat> vec() const { return a_; }

    ExponentMatrix operator-() const;
    ExponentMatrix& operator+=(const ExponentMatrix& o);
    ExponentMatrix& operator-=(const ExponentMatrix& o);
    ExponentMatrix& operator*=(const Rat& c);
    friend ExponentMatrix operator+(ExponentMatrix a, const ExponentMatrix& b) { a += b; return a; }
    friend ExponentMatrix operator-(ExponentMatrix a, const ExponentMatrix& b) { a -= b; return a; }
    friend ExponentMatrix operator*(ExponentMatrix a, const Rat& c) { a *= c; return a; }
    friend ExponentMatrix operator*(const Rat& c, ExponentMatrix a) { a *= c; return a; }

    // Matrix product.
    ExponentMatrix mul(const ExponentMatrix& o) const;
    ExponentMatrix transpose() const;
    // (this * P_tau^T), i.e. entry (i,j) becomes at(i, tau(j)).
    ExponentMatrix times_perm_transpose(const Perm& tau) const;

    // Sum of entries (i, s(i)).
    Rat sigma_trace(const Perm& s) const;

    bool is_integer() const;
    bool is_zero() const;

    friend bool operator==(const ExponentMatrix& x, const ExponentMatrix& y) {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }
    friend bool operator!=(const ExponentMatrix& x, const ExponentMatrix& y) { return !(x == y); }

private:
    std::size_t n_;
    std::vector<Rat> a_;
};

// Square matrix over the exact Laurent ring; carries the matrices whose
// q-permanent or determinant is evaluated.
class RingMatrix {
public:
    using value_type = Laurent;

    RingMatrix() : n_(0) {}
    explicit RingMatrix(std::size_t n) : n_(n), a_(n * n) {}

    static RingMatrix identity(std::size_t n);
    static RingMatrix ones(std::size_t n);
    static RingMatrix from_rational(const ExponentMatrix& m);

    std::size_t n() const { return n_; }
    Laurent& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Laurent& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    RingMatrix transpose() const;
    RingMatrix mul(const RingMatrix& o) const;
    RingMatrix scaled(const Laurent& c) const;
    // Column permutation A * P_tau with (P_tau) having ones at (i, tau(i)).
    RingMatrix times_perm(const Perm& tau) const;
    // Scales one row in place.
    void scale_row(std::size_t i, const Laurent& c);

    bool all_entries_constant() const;
    // Entry-wise substitution of a concrete rational q0.
    ExponentMatrix substitute(const Rat& q0) const;

    friend bool operator==(const RingMatrix& x, const RingMatrix& y) {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }
    friend bool operator!=(const RingMatrix& x, const RingMatrix& y) { return !(x == y); }

private:
    std::size_t n_;
    std::vector<Laurent> a_;
};

// Permutation-entry incidence matrix: n! x n^2 with row s having ones at the
// vec positions of (i, s(i)); rows follow lexicographic one-line order.
struct IncidenceMatrix {
    int n = 0;
    std::vector<Perm> order;
    RatMatrix mat;
};

IncidenceMatrix incidence_matrix(int n);  // n <= 6

} // namespace qperm
