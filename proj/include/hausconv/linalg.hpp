#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hausconv/rational.hpp"

namespace hausconv {

// Exact rank over the rationals. Rows are cleared of denominators and the
// elimination runs fraction-free (Bareiss) on big integers, which keeps
// intermediate entries at determinant scale instead of letting numerators
// and denominators compound.
std::size_t rank(const RatMat& M);

// Basis of the null space {x : Mx = 0}. One vector per free column, with
// that free coordinate set to 1 and the remaining free coordinates 0; this
// makes the basis canonical for a fixed column order.
std::vector<RatVec> kernel_basis(const RatMat& M);

// A particular solution of Mx = b, or nullopt when the system is
// inconsistent. Free coordinates are set to 0.
std::optional<RatVec> solve_linear(const RatMat& M, const RatVec& b);

// Reduced row echelon form over the rationals, in place companion results:
// the canonical basis of the row space and its pivot columns. Used to give
// every subspace in the library one deterministic basis.
struct RowBasis {
    std::vector<RatVec> basis;       // RREF rows, zero rows dropped
    std::vector<std::size_t> pivots; // pivot column of each basis row
};
RowBasis row_space_basis(const std::vector<RatVec>& rows, std::size_t ncols);

// Indices J such that span{e_j : j in J} is a complement of span(rows):
// the non-pivot columns of the RREF. |J| = ncols - rank.
std::vector<std::size_t> complement_coordinates(const RowBasis& rb, std::size_t ncols);

// The unique representative of x modulo span(rb.basis) whose coordinates at
// the pivot columns are all zero. Requires rb to be in RREF form.
RatVec project_along(const RowBasis& rb, const RatVec& x);

}  // namespace hausconv
