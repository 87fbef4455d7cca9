#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace igc {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A state left the flight domain the model is valid on (range, angle bands).
class GuardError : public Error {
 public:
  using Error::Error;
};

// A matrix that must be inverted is singular or too badly conditioned.
class SingularityError : public Error {
 public:
  SingularityError(std::string stage, double condition)
      : Error(stage + ": matrix is singular or ill-conditioned (cond = " +
              std::to_string(condition) + ")"),
        stage_(std::move(stage)),
        condition_(condition) {}

  const std::string& stage() const { return stage_; }
  double condition() const { return condition_; }

 private:
  std::string stage_;
  double condition_;
};

// Invalid configuration value; `field` is the dotted path, e.g. "gains.k0".
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace igc
