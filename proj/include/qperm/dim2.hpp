#pragma once

#include <variant>

#include "qperm/matrix.hpp"
#include "qperm/sampling.hpp"

namespace qperm {

/*
 * Classification of the 4x4 matrices M (acting on vec [x, y, z, t] of a 2x2
 * input) that convert the n = 2 q-permanent into the determinant. The
 * conversion is equivalent to the congruence M^T J(-1) M = J(q) between the
 * quadratic forms of 2 det and 2 P_q; its solutions split into two families
 * distinguished by the leading 2x2 block.
 */

struct FamilyIParams {
    ExponentMatrix g;  // invertible 2x2 rational block
    Rat alpha, beta;   // gamma is forced: alpha*beta + gamma = -q / det(g)
};

struct FamilyIIParams {
    ExponentMatrix g;  // invertible 2x2 rational block
    Rat mu;
};

RingMatrix build_family_one(const FamilyIParams& p);
RingMatrix build_family_two(const FamilyIIParams& p);

RingMatrix form_matrix_det();  // J(-1)
RingMatrix form_matrix_q();    // J(q) = anti-diag(1, q, q, 1)

// Symbolic congruence check M^T J(-1) M = J(q).
bool verify_congruence(const RingMatrix& m);

// Spot check of P_q(X) = det(reshape(M vec X)) on random rational X.
bool verify_conversion_identity(const RingMatrix& m, int trials, Sampler& sampler);

// The image of X under the linear map represented by M.
RingMatrix apply_converter(const RingMatrix& m, const ExponentMatrix& x);

struct ClassifiedFamilyI {
    ExponentMatrix g;
    Rat alpha, beta;
    Laurent gamma;
};

struct ClassifiedFamilyII {
    ExponentMatrix g;
    Rat mu;
};

struct NotAConverter {};

using Classification = std::variant<ClassifiedFamilyI, ClassifiedFamilyII, NotAConverter>;

// Throws RankOneParadox if a congruence-satisfying matrix has a singular
// nonzero leading block (impossible by the classification).
Classification classify(const RingMatrix& m);

} // namespace qperm
