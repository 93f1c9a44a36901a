// Copyright 2026 The mgsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mgsim/linalg.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <unsupported/Eigen/MatrixFunctions>

#include "mgsim/error.hpp"

namespace mgsim::linalg {
namespace {

using Mat = Eigen::MatrixXcd;

constexpr std::array<double, 4> kPade3 = {120., 60., 12., 1.};
constexpr std::array<double, 6> kPade5 = {30240., 15120., 3360., 420., 30., 1.};
constexpr std::array<double, 8> kPade7 = {17297280., 8648640., 1995840., 277200.,
                                          25200.,    1512.,    56.,      1.};
constexpr std::array<double, 10> kPade9 = {
    17643225600., 8821612800., 2075673600., 302702400., 30270240.,
    2162160.,     110880.,     3960.,       90.,        1.};
constexpr std::array<double, 14> kPade13 = {
    64764752532480000., 32382376266240000., 7771770303897600.,
    1187353796428800.,  129060195264000.,   10559470521600.,
    670442572800.,      33522128640.,       1323241920.,
    40840800.,          960960.,            16380.,
    182.,               1.};

// Largest 1-norms for which each approximant reaches unit roundoff.
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

double norm1(const Mat& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); }

template <std::size_t N>
Mat pade_low(const Mat& a, const std::array<double, N>& b) {
  const Eigen::Index dim = a.rows();
  const Mat id = Mat::Identity(dim, dim);
  const Mat a2 = a * a;
  Mat even = b[0] * id;
  Mat odd = b[1] * id;
  Mat power = id;
  for (std::size_t k = 2; k < N; k += 2) {
    power = power * a2;
    even += b[k] * power;
    if (k + 1 < N) odd += b[k + 1] * power;
  }
  const Mat u = a * odd;
  return (even - u).partialPivLu().solve(even + u);
}

Mat pade13(const Mat& a) {
  const auto& b = kPade13;
  const Eigen::Index dim = a.rows();
  const Mat id = Mat::Identity(dim, dim);
  const Mat a2 = a * a;
  const Mat a4 = a2 * a2;
  const Mat a6 = a4 * a2;
  const Mat u =
      a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
           b[3] * a2 + b[1] * id);
  const Mat v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 +
                b[4] * a4 + b[2] * a2 + b[0] * id;
  return (v - u).partialPivLu().solve(v + u);
}

}  // namespace

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw DimensionError("expm: matrix not square");
  if (a.rows() == 0) return a;
  const double norm = norm1(a);
  if (!std::isfinite(norm)) throw PreconditionError("expm: non-finite entries");
  if (norm <= kTheta3) return pade_low(a, kPade3);
  if (norm <= kTheta5) return pade_low(a, kPade5);
  if (norm <= kTheta7) return pade_low(a, kPade7);
  if (norm <= kTheta9) return pade_low(a, kPade9);
  const int squarings =
      std::max(0, static_cast<int>(std::ceil(std::log2(norm / kTheta13))));
  Mat r = pade13(a / std::ldexp(1.0, squarings));
  for (int i = 0; i < squarings; ++i) r = r * r;
  return r;
}

EigenSplit eigen_split(const Eigen::MatrixXcd& a) {
  Eigen::ComplexEigenSolver<Mat> solver(a);
  if (solver.info() != Eigen::Success) {
    throw PreconditionError("eigendecomposition failed");
  }
  EigenSplit split;
  split.vectors = solver.eigenvectors();
  split.values = solver.eigenvalues();
  Eigen::JacobiSVD<Mat> svd(split.vectors);
  const auto& sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  split.condition = smallest > 0 ? sv(0) / smallest
                                 : std::numeric_limits<double>::infinity();
  if (std::isfinite(split.condition)) {
    split.inverse = split.vectors.partialPivLu().inverse();
  }
  return split;
}

std::complex<double> principal_log(std::complex<double> z) {
  if (z.real() < 0 && std::abs(z.imag()) <= 1e-14 * std::abs(z)) {
    return {std::log(std::abs(z)), std::numbers::pi};
  }
  return std::log(z);
}

Eigen::MatrixXcd eigen_log(const EigenSplit& split, std::span<const int> shifts) {
  const Eigen::Index dim = split.values.size();
  if (!shifts.empty() && static_cast<Eigen::Index>(shifts.size()) != dim) {
    throw DimensionError("eigen_log: one branch shift per eigenvalue required");
  }
  Eigen::VectorXcd logs(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (split.values(i) == 0.0) throw PreconditionError("log of a singular matrix");
    logs(i) = principal_log(split.values(i));
    if (!shifts.empty()) {
      logs(i) += std::complex<double>(0, 2 * std::numbers::pi * shifts[i]);
    }
  }
  return split.vectors * logs.asDiagonal() * split.inverse;
}

Eigen::MatrixXcd logm(const Eigen::MatrixXcd& a) {
  const EigenSplit split = eigen_split(a);
  if (split.condition < kLogConditionLimit) return eigen_log(split);
  return a.log();
}

int rank(const Eigen::MatrixXcd& a, double rel_tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > rel_tol * sv(0)) ++r;
  }
  return r;
}

}  // namespace mgsim::linalg
