#include "qperm/matrix.hpp"

#include "qperm/errors.hpp"

namespace qperm {

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExponentMatrix::ExponentMatrix(std::size_t n, std::vector<Rat> entries)
    : n_(n), a_(std::move(entries)) {
    if (a_.size() != n * n) throw DimensionMismatch("ExponentMatrix: wrong entry count");
}

ExponentMatrix ExponentMatrix::identity(std::size_t n) {
    ExponentMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

ExponentMatrix ExponentMatrix::ones(std::size_t n) {
    ExponentMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rat(1);
    return m;
}

ExponentMatrix ExponentMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    ExponentMatrix m(n);
    m.at(i, j) = Rat(1);
    return m;
}

ExponentMatrix ExponentMatrix::permutation(const Perm& p) {
    const std::size_t n = static_cast<std::size_t>(p.size());
    ExponentMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, static_cast<std::size_t>(p(static_cast<int>(i) + 1) - 1)) = Rat(1);
    return m;
}

ExponentMatrix ExponentMatrix::from_vec(std::size_t n, const std::vector<Rat>& v) {
    if (v.size() != n * n) throw DimensionMismatch("from_vec: wrong length");
    return ExponentMatrix(n, v);
}

ExponentMatrix ExponentMatrix::operator-() const {
    ExponentMatrix m(*this);
    for (auto& x : m.a_) x = -x;
    return m;
}

ExponentMatrix& ExponentMatrix::operator+=(const ExponentMatrix& o) {
    if (n_ != o.n_) throw DimensionMismatch("ExponentMatrix: size mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

ExponentMatrix& ExponentMatrix::operator-=(const ExponentMatrix& o) {
    if (n_ != o.n_) throw DimensionMismatch("ExponentMatrix: size mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

ExponentMatrix& ExponentMatrix::operator*=(const Rat& c) {
    for (auto& x : a_) x *= c;
    return *this;
}

ExponentMatrix ExponentMatrix::mul(const ExponentMatrix& o) const {
    if (n_ != o.n_) throw DimensionMismatch("ExponentMatrix: size mismatch in product");
    ExponentMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

ExponentMatrix ExponentMatrix::transpose() const {
    ExponentMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExponentMatrix ExponentMatrix::times_perm_transpose(const Perm& tau) const {
    if (static_cast<std::size_t>(tau.size()) != n_)
        throw DimensionMismatch("times_perm_transpose: size mismatch");
    ExponentMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            r.at(i, j) = at(i, static_cast<std::size_t>(tau(static_cast<int>(j) + 1) - 1));
    return r;
}

Rat ExponentMatrix::sigma_trace(const Perm& s) const {
    if (static_cast<std::size_t>(s.size()) != n_)
        throw DimensionMismatch("sigma_trace: size mismatch");
    Rat acc(0);
    for (std::size_t i = 0; i < n_; ++i)
        acc += at(i, static_cast<std::size_t>(s(static_cast<int>(i) + 1) - 1));
    return acc;
}

bool ExponentMatrix::is_integer() const {
    for (const auto& x : a_)
        if (!x.is_integer()) return false;
    return true;
}

bool ExponentMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

RingMatrix RingMatrix::identity(std::size_t n) {
    RingMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Laurent(Rat(1));
    return m;
}

RingMatrix RingMatrix::ones(std::size_t n) {
    RingMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Laurent(Rat(1));
    return m;
}

RingMatrix RingMatrix::from_rational(const ExponentMatrix& m) {
    RingMatrix r(m.n());
    for (std::size_t i = 0; i < m.n(); ++i)
        for (std::size_t j = 0; j < m.n(); ++j) r.at(i, j) = Laurent(m.at(i, j));
    return r;
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RingMatrix RingMatrix::mul(const RingMatrix& o) const {
    if (n_ != o.n_) throw DimensionMismatch("RingMatrix: size mismatch in product");
    RingMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

RingMatrix RingMatrix::scaled(const Laurent& c) const {
    RingMatrix r(*this);
    for (auto& x : r.a_) x *= c;
    return r;
}

RingMatrix RingMatrix::times_perm(const Perm& tau) const {
    if (static_cast<std::size_t>(tau.size()) != n_)
        throw DimensionMismatch("times_perm: size mismatch");
    const Perm inv = tau.inverse();
    RingMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            r.at(i, j) = at(i, static_cast<std::size_t>(inv(static_cast<int>(j) + 1) - 1));
    return r;
}

void RingMatrix::scale_row(std::size_t i, const Laurent& c) {
    for (std::size_t j = 0; j < n_; ++j) at(i, j) *= c;
}

bool RingMatrix::all_entries_constant() const {
    for (const auto& x : a_)
        if (!x.is_constant()) return false;
    return true;
}

ExponentMatrix RingMatrix::substitute(const Rat& q0) const {
    ExponentMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r.at(i, j) = at(i, j).substitute(q0);
    return r;
}

IncidenceMatrix incidence_matrix(int n) {
    if (n < 1) throw Error("incidence_matrix: n must be positive");
    if (n > 6) throw SizeTooLarge("incidence_matrix: n = " + std::to_string(n) + " > 6");
    IncidenceMatrix im;
    im.n = n;
    im.order = symmetric_group(n);
    const std::size_t un = static_cast<std::size_t>(n);
    im.mat = RatMatrix(im.order.size(), un * un);
    for (std::size_t r = 0; r < im.order.size(); ++r)
        for (std::size_t i = 0; i < un; ++i) {
            const std::size_t j = static_cast<std::size_t>(im.order[r](static_cast<int>(i) + 1) - 1);
            im.mat.at(r, i * un + j) = Rat(1);
        }
    return im;
}

} // namespace qperm
