#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "qperm/linalg.hpp"
#include "qperm/matrix.hpp"
#include "qperm/sampling.hpp"

namespace qperm {

// Particular solution plus a kernel basis; the return shape of all
// converter/preserver solvers.
struct AffineSolutionSpace {
    ExponentMatrix particular;
    std::vector<ExponentMatrix> kernel;
};

struct PreserverBasis {
    int n = 0;
    std::vector<ExponentMatrix> matrices;  // R_1..R_n, S_2..S_{n-1}
};

// The 2n-2 basis matrices of the space of Schur-multiplier preserver
// exponents; n >= 2.
PreserverBasis preserver_basis(int n);

// True iff every sigma-trace of R vanishes (exhaustive over S_n); n <= 6.
bool is_preserver(const ExponentMatrix& r);

struct UVDecomposition {
    std::vector<Rat> u, v;  // r_{ij} = u_i + v_j, gauge-fixed so sum(u) = sum(v)
};

struct MongeViolation {
    int i1, i2, a, b;  // 1-based witness: r(i1,a)+r(i2,b) != r(i1,b)+r(i2,a)
};

std::variant<UVDecomposition, MongeViolation> uv_decompose(const ExponentMatrix& r);

/*
 * Verifies P_q(z^R o A) = P_q(A) on random rational matrices through exact
 * per-term weights: with d the lcm of the exponent denominators, z is drawn
 * as w^d so every weight w^(d * Tr_sigma(R)) has an integer exponent and the
 * whole computation stays in Q[q, q^-1]. n <= 6.
 */
bool verify_preserver_action(const ExponentMatrix& r, int trials, Sampler& sampler);

// Symmetric ternary product ABC + CBA; inputs must be preservers, and the
// result is checked to be one.
ExponentMatrix ternary_product(const ExponentMatrix& a, const ExponentMatrix& b,
                               const ExponentMatrix& c);

// Unit-circle sheet data: z = exp(2*pi*i*theta) with rational theta in (0,1),
// theta != 1/2, and one integer k per permutation in lexicographic order.
struct SheetSpec {
    int n = 0;
    Rat theta;
    std::vector<long> k;
};

struct SheetInconsistent {};

// Solves Tr_sigma(R) = k_sigma / theta over Q; n <= 5.
std::variant<SheetInconsistent, AffineSolutionSpace> sheet_solve(const SheetSpec& spec);

} // namespace qperm
