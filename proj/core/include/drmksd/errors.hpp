#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Core>

namespace drmksd {

/// Bad dimensions, out-of-range parameters, malformed input.
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// All pairwise distances vanish; no usable bandwidth exists.
struct DegenerateBandwidth : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An iterative fit failed to reach its optimum (e.g. unpenalized
/// logistic likelihood with a single label class).
struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operation requires state that is absent (e.g. an unfitted model).
struct StateError : std::logic_error {
  using std::logic_error::logic_error;
};

/// The estimand cannot be formed from this data split, e.g. a training
/// fold without a single treated observation.
struct EstimationImpossible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Internal numerical failure: non-finite objective, negative curvature
/// where a PSD form is guaranteed, failed factorization of a fixed matrix.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sandwich covariance is unavailable because Gamma_n is numerically
/// singular. Carries Gamma_n for diagnostics.
class InferenceUnavailable : public std::runtime_error {
 public:
  InferenceUnavailable(const std::string& msg, Eigen::MatrixXd gamma)
      : std::runtime_error(msg), gamma_(std::move(gamma)) {}

  const Eigen::MatrixXd& gamma() const { return gamma_; }

 private:
  Eigen::MatrixXd gamma_;
};

}  // namespace drmksd
