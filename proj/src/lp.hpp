#ifndef ABRADE_LP_HPP
#define ABRADE_LP_HPP

#include <Eigen/Core>

namespace abrade::lp {

enum class Status { Optimal, Unbounded };

struct Result {
  Status status = Status::Optimal;
  double value = 0.0;
  Eigen::VectorXd x;
};

/// maximize c'x subject to A x <= b with x free, starting from a feasible
/// point x0 (violations of order roundoff are clamped). Dense dictionary
/// simplex with Bland's rule; intended for the small programs that arise
/// from facet lists.
Result maximize(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                const Eigen::VectorXd& c, const Eigen::VectorXd& x0);

}  // namespace abrade::lp

#endif  // ABRADE_LP_HPP
