#pragma once

#include <functional>

#include "qperm/matrix.hpp"

namespace qperm {

enum class EvalMethod { Naive, HessenbergDet };

struct QPermResult {
    Laurent value;
    EvalMethod method = EvalMethod::Naive;
    std::size_t term_count = 0;  // permutations actually contributing
};

/*
 * Reference evaluator: sum over all permutations of q^inversions times the
 * diagonal product, computed by a depth-first walk over rows with early exit
 * on zero partial products. This is the oracle every other evaluator is
 * checked against. n <= 10.
 */
Laurent qperm_naive(const RingMatrix& a);
QPermResult qperm_naive_result(const RingMatrix& a);

// Plain permanent (all weights 1); n <= 10.
Laurent permanent(const RingMatrix& a);

// Signed sum, equal to the determinant; exercised against elimination.
Laurent det_expansion(const RingMatrix& a);

// Exact value of the q-permanent at a concrete rational q0 != 0.
Rat qperm_substituted(const RingMatrix& a, const Rat& q0);
Rat qperm_substituted(const ExponentMatrix& a, const Rat& q0);
Rat permanent_substituted(const ExponentMatrix& a);

// Entry-wise (base_sign * q)^(L_ij) * a_ij. Zero entries stay zero without
// exponent validation (their weights never contribute); elsewhere
// base_sign = -1 requires an integer exponent.
RingMatrix schur_apply(const ExponentMatrix& l, const RingMatrix& a, int base_sign);

// Generalized weighted sum: sum_nu q^(x*ell(nu) + Tr_nu(L)) wt_nu(A); pass
// L = 0 and x = -1 to evaluate at q^-1. n <= 8.
Laurent qperm_with_exponents(const RingMatrix& a, const ExponentMatrix& l, long x);

// Sum_nu q^(ell(nu)) * scale(nu) * wt_nu(A) for a caller-supplied exact
// per-permutation factor. n <= 8.
Laurent qperm_term_scaled(const RingMatrix& a, const std::function<Rat(const Perm&)>& scale);

// Checks both halves of the reversal identity
//   P_q(A P_rev) = q^(n(n-1)/2) P_{q^-1}(A) = P_{q^-1}(q^((n-1)/2) A)
// symbolically; n <= 8.
bool duality_check(const RingMatrix& a);

} // namespace qperm
