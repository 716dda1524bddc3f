#pragma once

#include <array>
#include <string>
#include <vector>

#include "qperm/matrix.hpp"
#include "qperm/perm.hpp"

namespace qperm {
namespace refdata {

/*
 * Golden reference tables shipped with the project. The same data lives in
 * JSON form under data/ for external diffing; a unit test keeps the two in
 * sync. Nothing here is ever regenerated silently.
 */

struct ConverterBase {
    std::string label;      // cycle notation as tabulated
    int x;                  // target exponent accompanying the tabulated matrix
    ExponentMatrix matrix;  // 3x3 integer base matrix
};

// The six tabulated base matrices for the n = 3 permutational conversion
// spaces. The tabulated labels follow the inverse-composition convention:
// the matrix listed under `label` solves the trace system for the inverse
// permutation (only the two 3-cycles are affected; the rest are involutions).
const std::vector<ConverterBase>& converter_bases_n3();

// Base matrix tabulated under `label`, by exact label string.
const ExponentMatrix& converter_base_matrix(const std::string& label);

// The permutation whose converter space (in the convention used throughout
// this library) contains the matrix tabulated under `label`.
Perm converter_base_acting_perm(const std::string& label);

// Consistent mixed-conversion target vectors, in the printed order.
const std::vector<std::vector<long>>& mixed_targets_n3();  // 15 vectors of length 6
const std::vector<std::vector<long>>& mixed_targets_n4();  // 8 vectors of length 24

// Reference value sets for det / per / trace of the sign matrices attached
// to the mixed components, per dimension n = 2, 3, 4.
struct SignSpectra {
    std::vector<long> det, per, trace;
};
const SignSpectra& sign_spectra(int n);

// The two showcase integer exponent matrices satisfying the mixed identity.
const ExponentMatrix& mixed_example_n3();
const ExponentMatrix& mixed_example_n4();

} // namespace refdata
} // namespace qperm
