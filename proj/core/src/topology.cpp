#include "dream/topology.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>
#include <vector>

namespace dream {

namespace {

constexpr double kStochasticTol = 1e-12;
constexpr double kPsdTol = 1e-12;
constexpr double kDegenerateTol = 1e-12;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

bool rows_all_equal(const StateMatrix& a) {
  const Eigen::Index m = a.rows();
  for (Eigen::Index i = 1; i < m; ++i) {
    if (!(a.row(i).array() == a.row(0).array()).all()) return false;
  }
  return true;
}

// Connectivity of the graph induced by off-diagonal entries above tolerance.
bool is_connected(const Eigen::MatrixXd& w) {
  const int m = static_cast<int>(w.rows());
  if (m <= 1) return true;
  std::vector<char> seen(m, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < m; ++j) {
      if (!seen[j] && i != j && std::abs(w(i, j)) > kStochasticTol) {
        seen[j] = 1;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == m;
}

}  // namespace

MixingMatrix::MixingMatrix(Eigen::MatrixXd w, bool validate) : w_(std::move(w)) {
  if (w_.rows() != w_.cols() || w_.rows() < 1) {
    throw Error(ErrorCode::invalid_parameter, "mixing matrix must be square and nonempty");
  }
  const int m = static_cast<int>(w_.rows());

  if (validate) {
    // Normalize rows, then verify the result instead of trusting the formula
    // that produced it.
    for (int i = 0; i < m; ++i) {
      const double sum = w_.row(i).sum();
      if (sum <= 0.0) {
        throw Error(ErrorCode::construction_failure,
                    "row " + std::to_string(i) + " has nonpositive sum " + fmt(sum));
      }
      w_.row(i) /= sum;
    }
    if (w_.minCoeff() < -kStochasticTol) {
      throw Error(ErrorCode::construction_failure,
                  "negative entry " + fmt(w_.minCoeff()));
    }
    const double asym = (w_ - w_.transpose()).cwiseAbs().maxCoeff();
    if (asym > kStochasticTol) {
      throw Error(ErrorCode::construction_failure,
                  "matrix not symmetric, max deviation " + fmt(asym));
    }
    for (int i = 0; i < m; ++i) {
      if (std::abs(w_.row(i).sum() - 1.0) > kStochasticTol ||
          std::abs(w_.col(i).sum() - 1.0) > kStochasticTol) {
        throw Error(ErrorCode::construction_failure,
                    "row/column " + std::to_string(i) + " does not sum to 1");
      }
    }
    if (!is_connected(w_)) {
      throw Error(ErrorCode::construction_failure,
                  "support graph is disconnected (matrix not irreducible)");
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(w_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::construction_failure, "eigendecomposition failed");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();  // ascending

  if (validate) {
    if (ev(0) < -kPsdTol) {
      throw Error(ErrorCode::construction_failure,
                  "matrix not positive semidefinite, smallest eigenvalue " + fmt(ev(0)));
    }
  }

  // A single agent has no second eigenvalue; treat it as instantly mixed.
  lambda2_ = m >= 2 ? std::max(ev(m - 2), 0.0) : 0.0;
  if (validate && lambda2_ >= 1.0 - kDegenerateTol) {
    throw Error(ErrorCode::degenerate_topology,
                "lambda2 = " + fmt(lambda2_) + " leaves no spectral gap");
  }
  delta_ = 1.0 - lambda2_;
}

MixingMatrix MixingMatrix::lazy_ring(int m, double tau) {
  if (m < 2) {
    throw Error(ErrorCode::invalid_parameter,
                "lazy ring needs m >= 2, got " + std::to_string(m));
  }
  if (!(tau > 0.0 && tau < 1.0)) {
    throw Error(ErrorCode::invalid_parameter, "tau must lie in (0,1), got " + fmt(tau));
  }
  Eigen::MatrixXd ring = Eigen::MatrixXd::Zero(m, m);
  if (m == 2) {
    ring(0, 1) = ring(1, 0) = 1.0;
  } else {
    for (int i = 0; i < m; ++i) {
      ring(i, (i + 1) % m) += 0.5;
      ring(i, (i + m - 1) % m) += 0.5;
    }
  }
  Eigen::MatrixXd w =
      tau * Eigen::MatrixXd::Identity(m, m) + (1.0 - tau) * ring;
  return MixingMatrix(std::move(w), /*validate=*/true);
}

MixingMatrix MixingMatrix::complete_averaging(int m) {
  if (m < 1) {
    throw Error(ErrorCode::invalid_parameter,
                "complete averaging needs m >= 1, got " + std::to_string(m));
  }
  Eigen::MatrixXd w = Eigen::MatrixXd::Constant(m, m, 1.0 / m);
  return MixingMatrix(std::move(w), /*validate=*/true);
}

MixingMatrix MixingMatrix::from_matrix(Eigen::MatrixXd w) {
  return MixingMatrix(std::move(w), /*validate=*/true);
}

MixingMatrix MixingMatrix::unchecked(Eigen::MatrixXd w) {
  return MixingMatrix(std::move(w), /*validate=*/false);
}

MixingMatrix lazify(const Eigen::MatrixXd& w) {
  Eigen::MatrixXd half =
      0.5 * (w + Eigen::MatrixXd::Identity(w.rows(), w.cols()));
  return MixingMatrix::from_matrix(std::move(half));
}

double spectral_gap(const MixingMatrix& w) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(w.w(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::solver_failure, "eigendecomposition failed");
  }
  const int m = static_cast<int>(w.w().rows());
  const double lambda2 = m >= 2 ? solver.eigenvalues()(m - 2) : 0.0;
  if (lambda2 >= 1.0 - kDegenerateTol) {
    throw Error(ErrorCode::degenerate_topology,
                "lambda2 = " + fmt(lambda2) + "; topology does not mix");
  }
  return 1.0 - std::max(lambda2, 0.0);
}

namespace {

void check_mix_args(const StateMatrix& a, int k, const MixingMatrix& w) {
  if (a.rows() != w.size()) {
    throw Error(ErrorCode::dimension_mismatch,
                "state has " + std::to_string(a.rows()) + " rows but mixing matrix is " +
                    std::to_string(w.size()) + "x" + std::to_string(w.size()));
  }
  if (k < 0) {
    throw Error(ErrorCode::invalid_parameter, "round count must be >= 0");
  }
}

}  // namespace

void fast_mix_in_place(StateMatrix& a, int k, const MixingMatrix& w,
                       CommLedger& ledger, MixWorkspace& ws) {
  check_mix_args(a, k, w);
  ledger.charge(k, a.cols());
  if (k == 0 || rows_all_equal(a)) return;

  const double lambda2 = w.lambda2();
  const double eta = 1.0 / (1.0 + std::sqrt(1.0 - lambda2 * lambda2));
  ws.prev = a;
  ws.next.resize(a.rows(), a.cols());
  for (int i = 0; i < k; ++i) {
    ws.next.noalias() = w.w() * a;
    ws.next = (1.0 + eta) * ws.next - eta * ws.prev;
    ws.prev.swap(a);  // prev <- a(k)
    a.swap(ws.next);  // a    <- a(k+1)
  }
}

void plain_mix_in_place(StateMatrix& a, int k, const MixingMatrix& w,
                        CommLedger& ledger, MixWorkspace& ws) {
  check_mix_args(a, k, w);
  ledger.charge(k, a.cols());
  if (k == 0 || rows_all_equal(a)) return;
  ws.next.resize(a.rows(), a.cols());
  for (int i = 0; i < k; ++i) {
    ws.next.noalias() = w.w() * a;
    a.swap(ws.next);
  }
}

StateMatrix fast_mix(const StateMatrix& a0, int k, const MixingMatrix& w,
                     CommLedger& ledger) {
  StateMatrix a = a0;
  MixWorkspace ws;
  fast_mix_in_place(a, k, w, ledger, ws);
  return a;
}

StateMatrix plain_mix(const StateMatrix& a0, int k, const MixingMatrix& w,
                      CommLedger& ledger) {
  StateMatrix a = a0;
  MixWorkspace ws;
  plain_mix_in_place(a, k, w, ledger, ws);
  return a;
}

}  // namespace dream
