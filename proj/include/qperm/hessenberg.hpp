#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "qperm/evaluator.hpp"
#include "qperm/matrix.hpp"

namespace qperm {

// Superdiagonal-ones exponent matrix; its sigma-trace equals the inversion
// length on every Hessenberg-compatible permutation.
ExponentMatrix h0(std::size_t n);

// First (i, j) with j > i+1 and a nonzero entry, if any (1-based).
std::optional<std::pair<int, int>> hessenberg_violation(const RingMatrix& a);

// O(n^3) evaluation of the q-permanent of a lower Hessenberg matrix as
// det((-q)^{H0} o A) by fraction-free elimination. Throws NotHessenberg.
QPermResult qperm_hessenberg_fast(const RingMatrix& a);

// Same conversion evaluated at a concrete rational q0 (integer-scaled
// elimination); this is the path that scales to large n.
Rat qperm_hessenberg_at(const RingMatrix& a, const Rat& q0);
Rat qperm_hessenberg_at(const ExponentMatrix& a, const Rat& q0);

// Independent quadratic-time cross-check via the leading-minor recurrence.
Rat qperm_hessenberg_recurrence_at(const ExponentMatrix& a, const Rat& q0);

enum class HessClass { PlusOnly, PlusAndMinus, Neither };

struct HessenbergExponent {
    ExponentMatrix h;
    HessClass classification = HessClass::Neither;
};

// Modulus regime for membership: a generic q (|q| != 1), or q on the unit
// circle with rational angle theta.
struct GenericModulus {};
struct RootOfUnityTheta {
    Rat theta;  // in (0,1), != 1/2
};
using QSpec = std::variant<GenericModulus, RootOfUnityTheta>;

/*
 * Classifies H against the permanent/determinant converter identities on
 * lower Hessenberg matrices. Generic regime: both hold iff the sigma-trace
 * equals the inversion length on every compatible permutation. Root-of-unity
 * regime: the permanent identity needs theta * (trace - length) integral,
 * the determinant identity additionally needs trace = length mod 2. n <= 6.
 */
HessenbergExponent hessenberg_membership(const ExponentMatrix& h, const QSpec& q_spec);

/*
 * The five-parameter affine family of 3x3 Hessenberg converter exponents on
 * the unit circle. k holds one integer per Hessenberg-compatible permutation
 * of S_3 in lexicographic order (id, (23), (12), (123)); the sigma-traces of
 * the result equal ell(sigma) + k_sigma / theta.
 */
ExponentMatrix hessenberg_family3(const Rat& a, const Rat& b, const Rat& c, const Rat& d,
                                  const Rat& h13, const std::array<long, 4>& k, const Rat& theta);

struct LatticeConstraints {
    int n = 0;
    std::vector<Perm> order;                       // Hessenberg-compatible, lex order
    std::vector<std::vector<mpz_class>> relations; // integer left-nullspace basis
    bool surjective = false;                       // no relations
};

// Integer linear relations that the sheet indices (k_sigma) must satisfy:
// the left null space of the trace map restricted to the Hessenberg support.
// n <= 7.
LatticeConstraints lattice_constraints(int n);

} // namespace qperm
