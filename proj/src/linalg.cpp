#include "qperm/linalg.hpp"

#include <algorithm>

#include "qperm/errors.hpp"

namespace qperm {

namespace {

struct Echelon {
    RatMatrix a;                   // reduced augmented matrix (rhs in last col if present)
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
};

// Gauss-Jordan over Q on [A | rhs?]; deterministic pivoting (first nonzero).
Echelon reduce(const RatMatrix& a0, const std::vector<Rat>* rhs) {
    const std::size_t m = a0.rows();
    const std::size_t k = a0.cols();
    const std::size_t cols = k + (rhs ? 1 : 0);
    Echelon e;
    e.a = RatMatrix(m, cols);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) e.a.at(i, j) = a0.at(i, j);
        if (rhs) e.a.at(i, k) = (*rhs)[i];
    }
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < m; ++col) {
        std::size_t p = row;
        while (p < m && e.a.at(p, col).is_zero()) ++p;
        if (p == m) continue;
        if (p != row)
            for (std::size_t j = 0; j < cols; ++j) std::swap(e.a.at(row, j), e.a.at(p, j));
        const Rat inv = Rat(1) / e.a.at(row, col);
        for (std::size_t j = col; j < cols; ++j) e.a.at(row, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || e.a.at(i, col).is_zero()) continue;
            const Rat f = e.a.at(i, col);
            for (std::size_t j = col; j < cols; ++j) e.a.at(i, j) -= f * e.a.at(row, j);
        }
        e.pivot_col.push_back(col);
        ++row;
    }
    e.rank = row;
    return e;
}

} // namespace

LinearSolve solve_linear(const RatMatrix& a, const std::vector<Rat>& rhs) {
    if (rhs.size() != a.rows()) throw DimensionMismatch("solve_linear: rhs length mismatch");
    const std::size_t k = a.cols();
    Echelon e = reduce(a, &rhs);

    LinearSolve out;
    out.rank = e.rank;
    out.consistent = true;
    for (std::size_t i = e.rank; i < a.rows(); ++i)
        if (!e.a.at(i, k).is_zero()) {
            out.consistent = false;
            break;
        }

    std::vector<char> is_pivot(k, 0);
    for (std::size_t c : e.pivot_col) is_pivot[c] = 1;

    if (out.consistent) {
        out.particular.assign(k, Rat(0));
        for (std::size_t r = 0; r < e.rank; ++r)
            out.particular[e.pivot_col[r]] = e.a.at(r, k);
    }
    for (std::size_t free_col = 0; free_col < k; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(k, Rat(0));
        v[free_col] = Rat(1);
        for (std::size_t r = 0; r < e.rank; ++r)
            v[e.pivot_col[r]] = -e.a.at(r, free_col);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

LinearSolve solve_linear(const RatLinearSystem& sys) { return solve_linear(sys.a, sys.rhs); }

std::size_t rank_of(const RatMatrix& a) { return reduce(a, nullptr).rank; }

std::vector<std::vector<mpz_class>> left_nullspace(const RatMatrix& m) {
    const RatMatrix t = m.transpose();
    const std::vector<Rat> zero(t.rows(), Rat(0));
    LinearSolve s = solve_linear(t, zero);
    std::vector<std::vector<mpz_class>> out;
    out.reserve(s.kernel.size());
    for (const auto& v : s.kernel) {
        mpz_class l = denominator_lcm(v.begin(), v.end());
        std::vector<mpz_class> w(v.size());
        mpz_class content = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            w[i] = v[i].num() * (l / v[i].den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), w[i].get_mpz_t());
        }
        if (content > 1)
            for (auto& x : w) x /= content;
        for (const auto& x : w) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : w) y = -y;
            break;
        }
        out.push_back(std::move(w));
    }
    return out;
}

Laurent det_bareiss(const RingMatrix& m) {
    const std::size_t n = m.n();
    std::vector<Laurent> buf;
    buf.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) buf.push_back(m.at(i, j));
    return detail::det_bareiss_buffer(buf, n);
}

Rat det_bareiss(const ExponentMatrix& m) {
    const std::size_t n = m.n();
    std::vector<Rat> buf;
    buf.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) buf.push_back(m.at(i, j));
    return detail::det_bareiss_buffer(buf, n);
}

namespace {

struct Z {
    mpz_class v;
    Z() : v(0) {}
    Z(int x) : v(x) {}
    explicit Z(mpz_class x) : v(std::move(x)) {}
    bool is_zero() const { return v == 0; }
    Z operator-() const { return Z(mpz_class(-v)); }
    friend Z operator*(const Z& a, const Z& b) { return Z(mpz_class(a.v * b.v)); }
    friend Z operator-(const Z& a, const Z& b) { return Z(mpz_class(a.v - b.v)); }
};

Z exact_div(const Z& a, const Z& b) {
    Z q;
    mpz_divexact(q.v.get_mpz_t(), a.v.get_mpz_t(), b.v.get_mpz_t());
    return q;
}

} // namespace

mpz_class det_integer(const std::vector<mpz_class>& entries, std::size_t n) {
    if (entries.size() != n * n) throw DimensionMismatch("det_integer: wrong entry count");
    std::vector<Z> buf(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) buf[i].v = entries[i];
    return detail::det_bareiss_buffer(buf, n).v;
}

Rat det_rational_scaled(const ExponentMatrix& m) {
    const std::size_t n = m.n();
    std::vector<mpz_class> buf(n * n);
    mpz_class denom = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class row_lcm = 1;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_class d = m.at(i, j).den();
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j)
            buf[i * n + j] = m.at(i, j).num() * (row_lcm / m.at(i, j).den());
        denom *= row_lcm;
    }
    return Rat(det_integer(buf, n), denom);
}

Laurent det_hessenberg_recurrence(const RingMatrix& m) {
    return detail::det_hessenberg_recurrence_impl(m);
}

Rat det_hessenberg_recurrence(const ExponentMatrix& m) {
    return detail::det_hessenberg_recurrence_impl(m);
}

} // namespace qperm
