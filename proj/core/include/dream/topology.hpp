#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "dream/errors.hpp"

namespace dream {

// Agent states are stacked row-wise (row i = agent i), so gradient kernels
// see contiguous per-agent vectors.
using StateMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Counts synchronous consensus exchanges.  One round moves one message of
// `width` scalars per agent; scalars_moved tracks rounds * width for
// reporting.
struct CommLedger {
  std::int64_t rounds = 0;
  std::int64_t scalars_moved = 0;

  void charge(std::int64_t k, std::int64_t width) {
    rounds += k;
    scalars_moved += k * width;
  }
};

/// A validated gossip matrix: symmetric, doubly stochastic, positive
/// semidefinite, and irreducible, with the second-largest eigenvalue and the
/// spectral gap delta = 1 - lambda2 cached at construction.
class MixingMatrix {
 public:
  /// W = tau*I + (1-tau)*C for the random-walk matrix C of a ring (each node
  /// splits its weight between its two neighbors; for m = 2 the single
  /// neighbor gets everything).  Eigenvalues are tau + (1-tau)*cos(2*pi*k/m).
  static MixingMatrix lazy_ring(int m, double tau);

  /// Rank-one averaging matrix with every entry 1/m; lambda2 = 0.
  static MixingMatrix complete_averaging(int m);

  /// Validates an arbitrary candidate matrix (rows are normalized first).
  static MixingMatrix from_matrix(Eigen::MatrixXd w);

  /// Skips validation; lambda2 still computed.  For tests and fixtures that
  /// deliberately construct degenerate matrices.
  static MixingMatrix unchecked(Eigen::MatrixXd w);

  int size() const { return static_cast<int>(w_.rows()); }
  const Eigen::MatrixXd& w() const { return w_; }
  double lambda2() const { return lambda2_; }
  double delta() const { return delta_; }

 private:
  MixingMatrix(Eigen::MatrixXd w, bool validate);

  Eigen::MatrixXd w_;
  double lambda2_ = 0.0;
  double delta_ = 1.0;
};

/// Repairs a PSD violation by the half-lazy transform (W + I)/2, then
/// validates.  Construction never applies this silently.
MixingMatrix lazify(const Eigen::MatrixXd& w);

/// 1 - lambda2, recomputed from the stored matrix by a symmetric
/// eigensolver.  Throws degenerate_topology when lambda2 >= 1 - 1e-12.
double spectral_gap(const MixingMatrix& w);

/// Chebyshev-accelerated consensus: a(k+1) = (1+eta)*W*a(k) - eta*a(k-1) with
/// a(-1) = a(0) and eta = 1/(1 + sqrt(1 - lambda2^2)), applied k times.
/// Column means are preserved; a consensual input is a fixed point and is
/// returned unchanged.  Charges k rounds of width a0.cols().
StateMatrix fast_mix(const StateMatrix& a0, int k, const MixingMatrix& w,
                     CommLedger& ledger);

/// Standard gossip a(k+1) = W*a(k), applied k times.  Contracts the consensus
/// residual by (1 - delta) per round.
StateMatrix plain_mix(const StateMatrix& a0, int k, const MixingMatrix& w,
                      CommLedger& ledger);

// Reusable buffers for the in-place variants below.
struct MixWorkspace {
  StateMatrix prev, next;
};

void fast_mix_in_place(StateMatrix& a, int k, const MixingMatrix& w,
                       CommLedger& ledger, MixWorkspace& ws);
void plain_mix_in_place(StateMatrix& a, int k, const MixingMatrix& w,
                        CommLedger& ledger, MixWorkspace& ws);

}  // namespace dream
