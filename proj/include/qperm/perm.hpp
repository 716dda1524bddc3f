#pragma once

#include <array>
#include <string>
#include <vector>

#include "qperm/errors.hpp"

namespace qperm {

/*
 * Permutation of {1..n} stored in one-line notation with a cached inversion
 * length. Composition follows the usual convention (s * t)(i) = s(t(i)).
 */
class Perm {
public:
    explicit Perm(std::vector<int> one_line);

    static Perm identity(int n);
    // The cyclic shift c = (1 2 ... n), i.e. i -> i+1 (mod n).
    static Perm shift(int n);
    // The reversal i -> n+1-i.
    static Perm reversal(int n);

    int size() const { return static_cast<int>(img_.size()); }
    // 1-based image.
    int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
    int ell() const { return ell_; }
    int sign() const { return ell_ % 2 == 0 ? 1 : -1; }

    Perm operator*(const Perm& rhs) const;  // apply rhs first
    Perm inverse() const;

    const std::vector<int>& one_line() const { return img_; }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

    // Cycle notation with fixed points omitted, "id" for the identity;
    // (123) maps 1 -> 2 -> 3 -> 1. Only for n <= 9 (single digit labels).
    std::string cycles() const;
    static Perm from_cycles(const std::string& text, int n);

private:
    std::vector<int> img_;
    int ell_;
};

int inversion_count(const std::vector<int>& values);

// All n! permutations in lexicographic one-line order; n <= 10.
std::vector<Perm> symmetric_group(int n);

// Permutations with s(i) <= i+1 (exactly 2^(n-1) of them); n <= 20.
std::vector<Perm> hessenberg_compatible(int n);

struct DihedralGroup {
    std::vector<Perm> rotations;    // c^k, k = 0..n-1
    std::vector<Perm> reflections;  // c^k * reversal
    std::vector<Perm> all() const;
};

// Requires n >= 3 (the group degenerates below that).
DihedralGroup dihedral_group(int n);

bool in_dihedral(const Perm& t);

// Relative-order pattern of (t(i1),...,t(i4)) as an element of S_4; the
// indices must be strictly increasing and within range.
Perm standardize(const Perm& t, const std::array<int, 4>& idx);

// Pattern of an arbitrary list of distinct values.
Perm pattern_of(const std::vector<int>& values);

// Positionwise multiset condition {p1(i), p4(i)} = {p2(i), p3(i)}.
bool is_balanced(const std::array<Perm, 4>& quad);

// The permutation acting as `rho` on the sorted positions `pos` (a 4-subset
// of {1..n}) and as the identity elsewhere.
Perm embed_pattern(const Perm& rho, const std::array<int, 4>& pos, int n);

} // namespace qperm
