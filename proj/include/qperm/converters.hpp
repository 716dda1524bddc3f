#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "qperm/preservers.hpp"
#include "qperm/sampling.hpp"

namespace qperm {

/*
 * Converter data for a column permutation tau: exponent matrices L and a
 * target exponent x such that P_q(A P_tau) = P_{q^x}(q^L o A) for all A.
 * Coefficient matching makes this the linear system
 *     Tr_nu(L) + x * ell(nu) = ell(tau o nu)   for every nu,
 * with (tau o nu)(i) = tau(nu(i)).
 */
struct TauConverter {
    int n = 0;
    Perm tau = Perm::identity(1);
    Rat x;
    AffineSolutionSpace space;
};

// Witness that the trace system is unsolvable: a positionwise-balanced
// quadruple whose alternating inversion lengths cancel while the alternating
// lengths after tau do not, making the alternating combination of the trace
// equations the nonzero constant `gap` independently of x.
struct ObstructionCertificate {
    std::array<Perm, 4> quadruple{Perm::identity(1), Perm::identity(1), Perm::identity(1),
                                  Perm::identity(1)};
    long gap = 0;
};

using TauSolveResult = std::variant<ObstructionCertificate, TauConverter>;

// Exact solve over Q in the unknowns (vec L, x); n <= 6. When the system
// leaves x free (only n = 2) it is pinned to sgn(tau) and the matrix part is
// re-solved. Unsolvable cases come back with a certificate.
TauSolveResult solve_tau(int n, const Perm& tau);

bool certificate_valid(const Perm& tau, const ObstructionCertificate& cert);

// Fixed obstruction quadruple for a non-dihedral pattern p in S_4: balanced,
// alternating ell sum zero, alternating ell-after-p sum equal to 2.
const ObstructionCertificate& obstruction_pattern(const Perm& p);

// Randomized symbolic verification of the conversion identity; x must be an
// integer (the solver only ever produces +-1).
bool verify_converter(const Perm& tau, const ExponentMatrix& l, const Rat& x, int trials,
                      Sampler& sampler);

// Converter for tau1 o tau2 out of converters for the factors, with
// representative x1 * L2 + L1 * P_tau2^T and target exponent x1 * x2.
TauConverter compose(const TauConverter& t1, const TauConverter& t2);

struct CocyclePair {
    Perm alpha = Perm::identity(3), beta = Perm::identity(3);
    bool exact = false;       // tabulated identity holds entry-wise
    bool mod_kernel = false;  // holds after quotienting by the preserver space
};

struct CocycleReport {
    std::vector<CocyclePair> pairs;
    int exact_count = 0;
    int mod_kernel_count = 0;
    int fail_count = 0;
};

// Evaluates base(alpha*beta) ?= base(beta) + sgn(beta) * base(alpha) over
// all 36 pairs of the tabulated n = 3 base matrices and reports the status
// of each pair; no blanket claim is asserted.
CocycleReport cocycle_check();

// Solutions of the trace congruences modulo m (q a primitive m-th root of
// unity): an integer representative reduced mod m plus the integer kernel
// basis; all-of-Z^{n x n} multiples of m are implicitly homogeneous too.
struct ModularLattice {
    long modulus = 0;
    Rat x;
    ExponentMatrix particular;
    std::vector<ExponentMatrix> kernel;
};

using ModularSolveResult = std::variant<ObstructionCertificate, ModularLattice>;

// n <= 5, m >= 3.
ModularSolveResult root_of_unity_mode(int n, const Perm& tau, long m);

// Shifts a rational matrix by a kernel element (trace-zero Monge matrix) to
// an integer representative of the same coset, when one exists.
std::optional<ExponentMatrix> integerize_in_coset(const ExponentMatrix& m);

} // namespace qperm
