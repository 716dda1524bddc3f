#pragma once

#include <vector>

#include "qperm/converters.hpp"
#include "qperm/matrix.hpp"
#include "qperm/sampling.hpp"

namespace qperm {

/*
 * Integer target vector b indexed by the lexicographic order of S_n, with
 * b_sigma = ell(sigma) - delta_sigma and delta_sigma in {0, 1}. These are
 * the right-hand sides of the incidence system A_n vec(M) = b defining the
 * mixed determinant-permanent conversion components.
 */
struct TargetVector {
    int n = 0;
    std::vector<long> b;
    std::vector<int> delta;

    static TargetVector from_b(int n, std::vector<long> b);
};

struct MixedComponent {
    TargetVector target;
    ExponentMatrix m0;                   // integer base matrix (when integral)
    std::vector<ExponentMatrix> kernel;  // preserver basis
    bool integral = true;                // false only if no integer representative exists
};

/*
 * Enumerates every consistent target vector by walking delta-space in Gray
 * code order, keeping the residual against the integer left-nullspace basis
 * of A_n incrementally updated (one basis column per flip). Results are
 * returned sorted lexicographically; counts are 4, 15, 8 for n = 2, 3, 4.
 * n >= 5 is rejected (see obstruction_n5). `jobs` splits the Gray sequence
 * into contiguous ranges; the output is identical for any job count.
 */
std::vector<TargetVector> search_consistent_targets(int n, int jobs = 1);

// Slow consistency oracle for one candidate (rank test via exact solve).
bool target_consistent_oracle(int n, const std::vector<long>& b);

MixedComponent recover_base_matrix(const TargetVector& target);

// Checks P_q(A) = (1+q)/2 per(A+) + (1-q)/2 det(A-), A+- = (+-q)^M o A,
// symbolically on random rational matrices. M must have integer entries.
bool verify_mixed_identity(const ExponentMatrix& m, int trials, Sampler& sampler);

struct ObstructionN5 {
    long rotation_ell_sum = 0;    // 20
    long reflection_ell_sum = 0;  // 30
    bool matrix_sums_equal = false;
    long required_alternating_sum = 0;  // -10
    long min_feasible = 0;              // -5 with delta in {0,1}
    long max_feasible = 0;              // +5
    bool impossible = false;
};

// The dimension-five counting obstruction that rules out any component for
// n >= 5.
ObstructionN5 obstruction_n5();

struct SignMatrixReport {
    long det = 0;
    long per = 0;
    long trace = 0;
    bool det_formula_holds = false;  // det = n! - 2 sum(delta)
    bool per_formula_holds = false;  // per = -2 sum((-1)^ell delta)
};

SignMatrixReport sign_matrix_invariants(const MixedComponent& comp);

// sum_sigma eps^ell(sigma) delta_sigma wt_sigma(A)
//   = (P_eps(A) - P_{-eps}((-1)^M o A)) / 2 on random rational A.
bool derivative_identity_check(const MixedComponent& comp, int eps, int trials, Sampler& sampler);

struct ZeroLocusReport {
    bool p_is_zero = false;
    bool biconditional_holds = false;   // p_is_zero  <=>  per(A+) = det(W o A+)
    bool row_choice_invariant = false;  // scaling row 1 or row n gives equal dets
};

// W scales one row of (-1)^M by (q0-1)/(q0+1); q0 must avoid {-1, 0, 1}.
ZeroLocusReport zero_locus_check(const RingMatrix& a, const Rat& q0, const MixedComponent& comp);

} // namespace qperm
