#pragma once

#include <limits>

#include <Eigen/Dense>

namespace igc {

// Ratio of largest to smallest singular value; +inf for a singular matrix.
template <typename Derived>
double condition_number(const Eigen::MatrixBase<Derived>& m) {
  Eigen::JacobiSVD<typename Derived::PlainObject> svd(m);
  const auto& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  if (!(smin > 0.0)) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

// Default gate above which a matrix is treated as singular.
inline constexpr double kConditionGate = 1e6;

}  // namespace igc
