#ifndef GRASSTENSOR_EXACT_LINALG_HPP
#define GRASSTENSOR_EXACT_LINALG_HPP

#include "grasstensor/matrix.hpp"

namespace grasstensor {

// Exact rational dense linear algebra.  No floating point anywhere in this
// module: tensor entries are minors of exact inputs and the rank oracle must
// be ground truth for the closed formulas.

/// Exact determinant.  Cofactor expansion for n <= 3, fraction-free Bareiss
/// elimination above; matrices whose columns all have at most one nonzero
/// entry take a permutation-parity shortcut.
Rational det(const RationalMatrix& m);

/// Exact rank over the rationals.
int rank(const RationalMatrix& m);
int rank(RationalMatrix&& m);  // in-place, avoids one copy on large inputs

/// Columns form a basis of the right kernel; count = cols - rank.
RationalMatrix nullspace(const RationalMatrix& m);

/// Exact inverse; throws DimensionError when singular or non-square.
RationalMatrix inverse(const RationalMatrix& m);

/// Columns of m at pivot positions of its RREF: a basis for col(m).
RationalMatrix column_space_basis(const RationalMatrix& m);

/// Basis of col(a) ∩ col(b); requires equal row counts.
RationalMatrix intersect_column_spaces(const RationalMatrix& a, const RationalMatrix& b);

/// p-th compound: C(n,p) x C(n,p) matrix of all p x p minors, rows and
/// columns in rank_lex order.
RationalMatrix compound(const RationalMatrix& m, int p);

}  // namespace grasstensor

#endif
