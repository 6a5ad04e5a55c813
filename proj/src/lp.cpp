#include "lp.hpp"

#include "types.hpp"

#include <Eigen/Dense>

#include <limits>
#include <vector>

namespace abrade::lp {

Result maximize(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                const Eigen::VectorXd& c, const Eigen::VectorXd& x0) {
  const long m = a.rows();
  const long n = a.cols();
  const long nn = 2 * n;  // y = y+ - y-

  // Dictionary: x_B = beta - T x_N ; z = z0 + obj' x_N.
  Eigen::MatrixXd t(m, nn);
  t.leftCols(n) = a;
  t.rightCols(n) = -a;
  Eigen::VectorXd beta = (b - a * x0).cwiseMax(0.0);
  Eigen::VectorXd obj(nn);
  obj.head(n) = c;
  obj.tail(n) = -c;
  std::vector<long> nonbasic(nn), basic(m);
  for (long j = 0; j < nn; ++j) nonbasic[j] = j;
  for (long i = 0; i < m; ++i) basic[i] = nn + i;

  const double obj_eps = 1e-12 * std::max(1.0, c.cwiseAbs().maxCoeff());
  constexpr double kPivotEps = 1e-12;
  const long max_iter = 100 * (m + nn) + 1000;

  Result res;
  for (long iter = 0;; ++iter) {
    if (iter > max_iter) throw GeometryError(ErrorCode::Numerical, "simplex iteration limit");
    long enter = -1;
    for (long j = 0; j < nn; ++j) {
      if (obj(j) > obj_eps && (enter < 0 || nonbasic[j] < nonbasic[enter])) enter = j;
    }
    if (enter < 0) break;
    long leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (long i = 0; i < m; ++i) {
      if (t(i, enter) <= kPivotEps) continue;
      const double ratio = beta(i) / t(i, enter);
      if (ratio < best || (leave >= 0 && ratio == best && basic[i] < basic[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) {
      res.status = Status::Unbounded;
      res.value = std::numeric_limits<double>::infinity();
      return res;
    }

    const double piv = t(leave, enter);
    t.row(leave) /= piv;
    t(leave, enter) = 1.0 / piv;
    beta(leave) /= piv;
    for (long i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double coef = t(i, enter);
      if (coef == 0.0) continue;
      beta(i) -= coef * beta(leave);
      t.row(i) -= coef * t.row(leave);
      t(i, enter) = -coef * t(leave, enter);
    }
    const double coef = obj(enter);
    obj -= coef * t.row(leave).transpose();
    obj(enter) = -coef * t(leave, enter);
    std::swap(basic[leave], nonbasic[enter]);
  }

  Eigen::VectorXd y = Eigen::VectorXd::Zero(nn);
  for (long i = 0; i < m; ++i)
    if (basic[i] < nn) y(basic[i]) = beta(i);
  res.status = Status::Optimal;
  res.x = x0 + y.head(n) - y.tail(n);
  res.value = c.dot(res.x);
  return res;
}

}  // namespace abrade::lp
