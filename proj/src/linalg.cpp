#include "sphereq/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace sphereq {

namespace {

Eigen::JacobiSVD<Mat> full_svd(const Mat& m) {
  return Eigen::JacobiSVD<Mat>(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

int rank_from_svd(const Eigen::JacobiSVD<Mat>& svd, double tol_rel) {
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 0;
  double cut = tol_rel * s[0];
  int r = 0;
  while (r < s.size() && s[r] > cut) ++r;
  return r;
}

}  // namespace

int numerical_rank(const Mat& m, double tol_rel) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  return rank_from_svd(svd, tol_rel);
}

Mat column_space(const Mat& m, double tol_rel) {
  if (m.rows() == 0 || m.cols() == 0) return Mat(m.rows(), 0);
  auto svd = full_svd(m);
  int r = rank_from_svd(svd, tol_rel);
  return svd.matrixU().leftCols(r);
}

Mat kernel(const Mat& m, double tol_rel) {
  if (m.cols() == 0) return Mat(0, 0);
  if (m.rows() == 0) return Mat::Identity(m.cols(), m.cols());
  auto svd = full_svd(m);
  int r = rank_from_svd(svd, tol_rel);
  return svd.matrixV().rightCols(m.cols() - r);
}

Mat kernel_abs(const Mat& m, double tol_rel, double tol_abs) {
  if (m.cols() == 0) return Mat(0, 0);
  if (m.rows() == 0) return Mat::Identity(m.cols(), m.cols());
  auto svd = full_svd(m);
  const auto& s = svd.singularValues();
  double cut = std::max(s.size() ? tol_rel * s[0] : 0.0, tol_abs);
  int r = 0;
  while (r < s.size() && s[r] > cut) ++r;
  return svd.matrixV().rightCols(m.cols() - r);
}

Mat orthogonal_complement(const Mat& m, double tol_rel) {
  if (m.cols() == 0) return Mat::Identity(m.rows(), m.rows());
  auto svd = full_svd(m);
  int r = rank_from_svd(svd, tol_rel);
  return svd.matrixU().rightCols(m.rows() - r);
}

double trace_dot(const Mat& a, const Mat& b) {
  return (a.array() * b.array()).sum();
}

std::vector<Mat> orthonormalize_span(const std::vector<Mat>& mats, int rows,
                                     int cols, double tol_rel) {
  if (mats.empty()) return {};
  Mat stacked(static_cast<int>(mats.size()), rows * cols);
  for (int i = 0; i < static_cast<int>(mats.size()); ++i) {
    stacked.row(i) = Eigen::Map<const Vec>(mats[i].data(), rows * cols);
  }
  Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeThinV);
  int r = rank_from_svd(svd, tol_rel);
  std::vector<Mat> basis;
  basis.reserve(r);
  for (int i = 0; i < r; ++i) {
    Vec v = svd.matrixV().col(i);
    int imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    if (v[imax] < 0) v = -v;
    basis.push_back(Eigen::Map<const Mat>(v.data(), rows, cols));
  }
  return basis;
}

Mat outside_span(const Mat& m, const std::vector<Mat>& orthonormal_basis) {
  Mat rest = m;
  for (const Mat& b : orthonormal_basis) rest -= trace_dot(rest, b) * b;
  return rest;
}

Mat expm(const Mat& skew) { return skew.exp(); }

Mat projector_range_basis(const Mat& projector, double tol) {
  const int n = static_cast<int>(projector.rows());
  Mat basis(n, n);
  int count = 0;
  for (int i = 0; i < n; ++i) {
    Vec v = projector.col(i);
    for (int j = 0; j < count; ++j) v -= basis.col(j).dot(v) * basis.col(j);
    double s = v.norm();
    if (s > tol) basis.col(count++) = v / s;
  }
  return basis.leftCols(count);
}

}  // namespace sphereq
