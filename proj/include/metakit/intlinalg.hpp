#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "metakit/rational.hpp"

namespace metakit {

using IntMat = std::vector<std::vector<std::int64_t>>;  // row-major
using IntVec = std::vector<std::int64_t>;

IntMat identity_matrix(int n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_vec(const IntMat& a, const IntVec& x);
std::int64_t mat_det(IntMat a);  // exact, by fraction-free elimination
// Inverse of a unimodular integer matrix (det = +-1).
IntMat unimodular_inverse(const IntMat& a);

// Smith normal form: returns (U, S, V) with U*A*V = S, U and V unimodular,
// S diagonal with s_1 | s_2 | ... (nonnegative).
struct SmithResult {
    IntMat u;
    IntMat s;
    IntMat v;
};
SmithResult smith_normal_form(const IntMat& a);

// Canonical column Hermite normal form of the lattice spanned by the given
// generator columns (each of dimension dim).  Result columns form a basis:
// upper triangular shape with positive pivots and entries right of a pivot
// reduced mod the pivot.  Zero columns are dropped.
std::vector<IntVec> hnf_column_basis(int dim, std::vector<IntVec> generators);

// Does v lie in the lattice spanned by the HNF basis columns?
bool in_lattice(const std::vector<IntVec>& hnf_basis, const IntVec& v);

// Solve sum_i x_i * cols[i] = target over Q; empty optional when the system
// is inconsistent.  Columns must be linearly independent.
std::optional<std::vector<Rational>> solve_rational(const std::vector<IntVec>& cols,
                                                    const IntVec& target);

}  // namespace metakit
