#pragma once

#include <vector>

#include "sphereq/common.hpp"

namespace sphereq {

/// Numerical rank with a relative cutoff: a singular value counts as nonzero
/// iff it exceeds tol_rel * sigma_max.
int numerical_rank(const Mat& m, double tol_rel);

/// Orthonormal basis (columns) of the column space of m.
Mat column_space(const Mat& m, double tol_rel);

/// Orthonormal basis (columns) of the kernel of m (right null space).
Mat kernel(const Mat& m, double tol_rel);

/// Kernel with an absolute singular-value floor in addition to the relative
/// cutoff. Needed when m itself may be numerical noise around zero, where a
/// purely relative tolerance fabricates full rank.
Mat kernel_abs(const Mat& m, double tol_rel, double tol_abs);

/// Orthonormal basis (columns) of the orthogonal complement of the column
/// space of m inside R^rows.
Mat orthogonal_complement(const Mat& m, double tol_rel);

/// Frobenius (trace) inner product <a, b> = tr(a^T b).
double trace_dot(const Mat& a, const Mat& b);

/// Stacks each matrix into a row, orthonormalizes the span via SVD, and
/// returns an orthonormal basis of the span as matrices. The sign of each
/// basis element is fixed so its first entry of largest magnitude is positive,
/// which makes the output independent of the input ordering up to roundoff.
std::vector<Mat> orthonormalize_span(const std::vector<Mat>& mats, int rows,
                                     int cols, double tol_rel);

/// Component of m orthogonal to the span of an orthonormal family.
Mat outside_span(const Mat& m, const std::vector<Mat>& orthonormal_basis);

/// Matrix exponential (Pade scaling-and-squaring via Eigen).
Mat expm(const Mat& skew);

/// Gram-Schmidt column basis of the range of a projector applied to the
/// standard basis; deterministic replacement for an eigendecomposition.
Mat projector_range_basis(const Mat& projector, double tol);

}  // namespace sphereq
