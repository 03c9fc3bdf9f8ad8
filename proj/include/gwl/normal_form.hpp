#pragma once

#include "gwl/integer.hpp"

#include <cstddef>

namespace gwl {

// Integer matrices are stored row-major as IntMatrix; every routine here
// treats rows as lattice generators.

/// Row Hermite normal form of the lattice spanned by `rows` in Z^ncols.
/// Zero rows are dropped; pivots are positive and strictly increase in column
/// index; entries above a pivot lie in [0, pivot).  The result depends only on
/// the lattice, so two generating sets of the same lattice give identical
/// matrices.
IntMatrix hermite_normal_form(IntMatrix rows, std::size_t ncols);

/// Column index of the first non-zero entry of an HNF row.
std::size_t pivot_column(const IntVector& row);

/// Smith normal form U * A * V = D with U, V unimodular.  `diagonal` holds the
/// min(m, n) diagonal entries of D, non-negative, each dividing the next among
/// the non-zero ones (zeros come last).
struct SmithForm {
  IntVector diagonal;
  IntMatrix left;   // U, m x m
  IntMatrix right;  // V, n x n
};

SmithForm smith_normal_form(const IntMatrix& a, std::size_t ncols);

/// Invariant factors of Z^ncols / rowspan(a): non-trivial torsion factors in
/// divisibility order followed by one 0 per free summand.
IntVector cokernel_invariants(const IntMatrix& a, std::size_t ncols);

/// Basis (HNF) of {x in Z^n : sum_i x_i * images[i] = 0}, where `images` has n
/// rows of length image_cols.
IntMatrix integer_kernel(const IntMatrix& images, std::size_t image_cols);

/// Coordinates of `v` with respect to the rows of an HNF basis, or false if
/// `v` is not in the lattice.
bool solve_in_hnf(const IntMatrix& hnf, IntVector v, IntVector& coords);

}  // namespace gwl
