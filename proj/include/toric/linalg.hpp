#pragma once

#include "toric/numbers.hpp"

namespace toric {

/// The nondegenerate pairing between M and N: sum of coordinatewise products.
Int pairing(const Vec& m, const Vec& u);
Rat pairing(const QVec& m, const Vec& u);

/// v divided by the gcd of its entries; direction preserved. v must be nonzero.
Vec primitive(const Vec& v);

Mat identity_matrix(int n);
Mat transpose(const Mat& a);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& a, const Vec& x);

/// Exact determinant of a square integer matrix (fraction-free Bareiss).
Int det(const Mat& a);

/// Rank over Q, computed by fraction-free elimination on integer rows.
int rank(const Mat& a);

struct HnfResult {
  Mat h;  // row Hermite normal form
  Mat u;  // unimodular, u * a == h
};

/// Row-style HNF: row echelon, positive pivots, entries above each pivot
/// reduced into [0, pivot), zero rows last. This convention is canonical:
/// two matrices have equal HNF iff they differ by a left unimodular factor.
HnfResult hermite_normal_form(const Mat& a);

enum class SolveStatus { ok, inconsistent, underdetermined };

struct SolveResult {
  SolveStatus status = SolveStatus::inconsistent;
  QVec solution;  // populated iff status == ok
};

/// Exact solution of a x = b over Q.
SolveResult solve_exact(const Mat& a, const QVec& b);
SolveResult solve_exact(const Mat& a, const Vec& b);

/// Basis of the rational kernel of a (rows of the result, primitive integer
/// vectors). `cols` is required so that 0-row matrices are meaningful.
Mat kernel_basis(const Mat& a, int cols);

}  // namespace toric
