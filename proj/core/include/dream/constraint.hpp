#pragma once

#include <Eigen/Dense>

#include "dream/errors.hpp"

namespace dream {

enum class ConstraintKind { all_space, box, simplex };

// Feasible set for the dual variable y: all of R^d, the sup-norm box
// {|y_k| <= c}, or the probability simplex {y >= 0, sum y = 1}.
class Constraint {
 public:
  static Constraint all_space() { return Constraint(ConstraintKind::all_space, 0.0); }
  static Constraint box(double half_width);
  static Constraint simplex() { return Constraint(ConstraintKind::simplex, 0.0); }

  ConstraintKind kind() const { return kind_; }
  double half_width() const { return half_width_; }

  /// Euclidean projection.  Identity for all_space, coordinate clamp for the
  /// box, and the sort-based O(d log d) algorithm for the simplex with ties
  /// broken by index order.  Idempotent: feasible points come back unchanged.
  Eigen::VectorXd project(const Eigen::VectorXd& y) const;

  /// Feasibility up to `tol` in each defining inequality/equality.
  bool contains(const Eigen::VectorXd& y, double tol = 0.0) const;

 private:
  Constraint(ConstraintKind kind, double half_width)
      : kind_(kind), half_width_(half_width) {}

  ConstraintKind kind_;
  double half_width_;
};

}  // namespace dream
