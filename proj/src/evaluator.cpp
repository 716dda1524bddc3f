#include "qperm/evaluator.hpp"

#include <algorithm>

#include "qperm/errors.hpp"

namespace qperm {

namespace {

void check_size(std::size_t n, std::size_t cap, const char* who) {
    if (n > cap)
        throw SizeTooLarge(std::string(who) + ": n = " + std::to_string(n) + " exceeds " +
                           std::to_string(cap));
}

/*
 * Row-by-row expansion with early exit on zero factors. `use_q` selects
 * whether terms are weighted by q^inversions. When every entry is a rational
 * constant the inner arithmetic stays in Q and coefficients are binned by
 * inversion count, which is dramatically faster for the dense symbolic case.
 */
struct NaiveSum {
    const RingMatrix& a;
    std::size_t n;
    bool use_q;
    std::size_t terms = 0;

    // symbolic accumulation
    Laurent acc;
    // rational fast path: coefficient per inversion count
    bool rational_path;
    std::vector<Rat> coeff_by_inv;
    ExponentMatrix ra;

    std::vector<char> used;
    std::vector<std::size_t> choice;

    explicit NaiveSum(const RingMatrix& m, bool weight_by_q)
        : a(m), n(m.n()), use_q(weight_by_q), rational_path(m.all_entries_constant()), ra(0),
          used(m.n(), 0) {
        if (rational_path) {
            ra = ExponentMatrix(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) ra.at(i, j) = a.at(i, j).constant_value();
            coeff_by_inv.assign(n * (n - 1) / 2 + 1, Rat(0));
        }
    }

    void run_rational(std::size_t row, const Rat& partial, int inv) {
        if (row == n) {
            coeff_by_inv[static_cast<std::size_t>(inv)] += partial;
            ++terms;
            return;
        }
        for (std::size_t col = 0; col < n; ++col) {
            if (used[col] || ra.at(row, col).is_zero()) continue;
            int add = 0;
            for (std::size_t c = col + 1; c < n; ++c)
                if (used[c]) ++add;  // earlier rows holding larger columns
            used[col] = 1;
            run_rational(row + 1, partial * ra.at(row, col), inv + add);
            used[col] = 0;
        }
    }

    void run_symbolic(std::size_t row, const Laurent& partial, int inv) {
        if (row == n) {
            Laurent term = partial;
            if (use_q && inv != 0) term *= Laurent::q_power(Rat(inv));
            acc += term;
            ++terms;
            return;
        }
        for (std::size_t col = 0; col < n; ++col) {
            if (used[col] || a.at(row, col).is_zero()) continue;
            int add = 0;
            for (std::size_t c = col + 1; c < n; ++c)
                if (used[c]) ++add;
            used[col] = 1;
            run_symbolic(row + 1, partial * a.at(row, col), inv + add);
            used[col] = 0;
        }
    }

    Laurent evaluate() {
        if (n == 0) return Laurent(Rat(1));
        if (rational_path) {
            run_rational(0, Rat(1), 0);
            Laurent out;
            for (std::size_t k = 0; k < coeff_by_inv.size(); ++k) {
                if (coeff_by_inv[k].is_zero()) continue;
                if (use_q)
                    out += Laurent::term(coeff_by_inv[k], Rat(static_cast<long>(k)));
                else
                    out += Laurent(coeff_by_inv[k]);
            }
            return out;
        }
        run_symbolic(0, Laurent(Rat(1)), 0);
        return acc;
    }
};

} // namespace

Laurent qperm_naive(const RingMatrix& a) { return qperm_naive_result(a).value; }

QPermResult qperm_naive_result(const RingMatrix& a) {
    check_size(a.n(), 10, "qperm_naive");
    NaiveSum s(a, true);
    QPermResult r;
    r.value = s.evaluate();
    r.method = EvalMethod::Naive;
    r.term_count = 1;
    for (std::size_t k = 2; k <= a.n(); ++k) r.term_count *= k;  // n! terms in the defining sum
    return r;
}

Laurent permanent(const RingMatrix& a) {
    check_size(a.n(), 10, "permanent");
    NaiveSum s(a, false);
    return s.evaluate();
}

Laurent det_expansion(const RingMatrix& a) {
    check_size(a.n(), 8, "det_expansion");
    // Reuse the weighted walk at q = -1 by substituting exponent parity.
    const std::vector<Perm> group = symmetric_group(static_cast<int>(a.n()));
    Laurent acc;
    for (const Perm& s : group) {
        Laurent wt(Rat(s.sign()));
        for (std::size_t i = 0; i < a.n(); ++i) {
            const Laurent& e = a.at(i, static_cast<std::size_t>(s(static_cast<int>(i) + 1) - 1));
            if (e.is_zero()) {
                wt = Laurent();
                break;
            }
            wt *= e;
        }
        acc += wt;
    }
    return acc;
}

Rat qperm_substituted(const RingMatrix& a, const Rat& q0) {
    if (q0.is_zero()) throw ZeroQ("qperm_substituted: q0 must be nonzero");
    check_size(a.n(), 10, "qperm_substituted");
    return qperm_substituted(a.substitute(q0), q0);
}

Rat qperm_substituted(const ExponentMatrix& a, const Rat& q0) {
    if (q0.is_zero()) throw ZeroQ("qperm_substituted: q0 must be nonzero");
    check_size(a.n(), 10, "qperm_substituted");
    RingMatrix m = RingMatrix::from_rational(a);
    NaiveSum s(m, true);
    return s.evaluate().substitute(q0);
}

Rat permanent_substituted(const ExponentMatrix& a) {
    check_size(a.n(), 10, "permanent");
    RingMatrix m = RingMatrix::from_rational(a);
    NaiveSum s(m, false);
    Laurent v = s.evaluate();
    return v.constant_value();
}

RingMatrix schur_apply(const ExponentMatrix& l, const RingMatrix& a, int base_sign) {
    if (l.n() != a.n()) throw DimensionMismatch("schur_apply: size mismatch");
    RingMatrix out(a.n());
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) {
            if (a.at(i, j).is_zero()) continue;  // weight is irrelevant on zeros
            out.at(i, j) = Laurent::q_power(l.at(i, j), base_sign) * a.at(i, j);
        }
    return out;
}

Laurent qperm_with_exponents(const RingMatrix& a, const ExponentMatrix& l, long x) {
    check_size(a.n(), 8, "qperm_with_exponents");
    if (l.n() != a.n()) throw DimensionMismatch("qperm_with_exponents: size mismatch");
    Laurent acc;
    for (const Perm& nu : symmetric_group(static_cast<int>(a.n()))) {
        Laurent wt(Rat(1));
        bool zero = false;
        for (std::size_t i = 0; i < a.n(); ++i) {
            const Laurent& e = a.at(i, static_cast<std::size_t>(nu(static_cast<int>(i) + 1) - 1));
            if (e.is_zero()) {
                zero = true;
                break;
            }
            wt *= e;
        }
        if (zero) continue;
        const Rat expo = Rat(x * nu.ell()) + l.sigma_trace(nu);
        acc += Laurent::q_power(expo) * wt;
    }
    return acc;
}

Laurent qperm_term_scaled(const RingMatrix& a, const std::function<Rat(const Perm&)>& scale) {
    check_size(a.n(), 8, "qperm_term_scaled");
    Laurent acc;
    for (const Perm& nu : symmetric_group(static_cast<int>(a.n()))) {
        const Rat c = scale(nu);
        if (c.is_zero()) continue;
        Laurent wt(c);
        bool zero = false;
        for (std::size_t i = 0; i < a.n(); ++i) {
            const Laurent& e = a.at(i, static_cast<std::size_t>(nu(static_cast<int>(i) + 1) - 1));
            if (e.is_zero()) {
                zero = true;
                break;
            }
            wt *= e;
        }
        if (zero) continue;
        acc += Laurent::q_power(Rat(nu.ell())) * wt;
    }
    return acc;
}

bool duality_check(const RingMatrix& a) {
    check_size(a.n(), 8, "duality_check");
    const std::size_t n = a.n();
    const Perm rev = Perm::reversal(static_cast<int>(n));
    const Laurent lhs = qperm_naive(a.times_perm(rev));
    const ExponentMatrix zero(n);

    const Laurent rhs1 =
        Laurent::q_power(Rat(static_cast<long>(n * (n - 1) / 2))) * qperm_with_exponents(a, zero, -1);
    if (lhs != rhs1) return false;

    const RingMatrix scaled = a.scaled(Laurent::q_power(Rat(static_cast<long>(n) - 1, 2)));
    const Laurent rhs2 = qperm_with_exponents(scaled, zero, -1);
    return lhs == rhs2;
}

} // namespace qperm
