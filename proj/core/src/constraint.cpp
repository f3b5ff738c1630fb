#include "dream/constraint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace dream {

Constraint Constraint::box(double half_width) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw Error(ErrorCode::invalid_parameter, "box half-width must be positive and finite");
  }
  return Constraint(ConstraintKind::box, half_width);
}

namespace {

// Exact-arithmetic feasibility would never trigger on projected outputs, so
// the fast path accepts sums within a few ulps of 1.  This is what makes
// project(project(y)) bitwise idempotent.
bool simplex_feasible(const Eigen::VectorXd& y) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (!(y(i) >= 0.0)) return false;
    sum += y(i);
  }
  const double tol = 64.0 * static_cast<double>(y.size()) *
                     std::numeric_limits<double>::epsilon();
  return std::abs(sum - 1.0) <= tol;
}

Eigen::VectorXd project_simplex(const Eigen::VectorXd& y) {
  if (simplex_feasible(y)) return y;

  const Eigen::Index d = y.size();
  std::vector<Eigen::Index> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (y(a) != y(b)) return y(a) > y(b);
    return a < b;
  });

  double running = 0.0;
  double threshold = 0.0;
  for (Eigen::Index j = 0; j < d; ++j) {
    running += y(order[j]);
    const double candidate = (running - 1.0) / static_cast<double>(j + 1);
    if (y(order[j]) - candidate > 0.0) threshold = candidate;
  }
  Eigen::VectorXd out(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    out(i) = std::max(y(i) - threshold, 0.0);
  }
  return out;
}

}  // namespace

Eigen::VectorXd Constraint::project(const Eigen::VectorXd& y) const {
  switch (kind_) {
    case ConstraintKind::all_space:
      return y;
    case ConstraintKind::box:
      return y.cwiseMax(-half_width_).cwiseMin(half_width_);
    case ConstraintKind::simplex:
      return project_simplex(y);
  }
  throw Error(ErrorCode::invalid_parameter, "unknown constraint kind");
}

bool Constraint::contains(const Eigen::VectorXd& y, double tol) const {
  switch (kind_) {
    case ConstraintKind::all_space:
      return true;
    case ConstraintKind::box:
      return (y.array().abs() <= half_width_ + tol).all();
    case ConstraintKind::simplex:
      return (y.array() >= -tol).all() && std::abs(y.sum() - 1.0) <= tol + 64.0 * static_cast<double>(y.size()) * std::numeric_limits<double>::epsilon();
  }
  return false;
}

}  // namespace dream
