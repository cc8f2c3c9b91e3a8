#pragma once

#include <random>

#include "switchcert/operator.hpp"

namespace switchcert {

using Rng = std::mt19937_64;

/// Quantum channel as a list of Kraus matrices with declared input/output
/// layouts. All Kraus matrices share shape (dim out x dim in).
struct KrausChannel {
  std::vector<Matrix> kraus;
  SpaceLayout in_layout;
  SpaceLayout out_layout;

  KrausChannel() = default;
  KrausChannel(std::vector<Matrix> k, SpaceLayout in, SpaceLayout out);

  long dim_in() const { return in_layout.total_dim(); }
  long dim_out() const { return out_layout.total_dim(); }

  /// Max-norm violation of sum_i K_i^dag K_i = 1.
  double tp_defect() const;
  bool is_tp(double tol = kPsdTol) const { return tp_defect() <= tol; }

  Matrix apply(const Matrix& rho) const;
};

/// Choi operator M = sum_ij |i><j| ox Map(|i><j|), layout = in ++ out.
Operator kraus_to_choi(const KrausChannel& ch);

/// Eigendecomposition-based Kraus extraction; requires CP and TP within tol.
KrausChannel choi_to_kraus(const Operator& m, const SpaceLayout& in_layout,
                           const SpaceLayout& out_layout, double tol = kPsdTol);

/// min eigenvalue >= -tol, with the in/out split given by the choi layout.
bool is_cp(const Operator& m, double tol = kPsdTol);
/// ||Tr_out(m) - 1|| <= tol for the given output labels.
bool is_tp(const Operator& m, const std::vector<std::string>& out_labels, double tol = kPsdTol);

/// Haar-distributed unitary via QR of a Ginibre matrix with phase fix.
Matrix haar_unitary(int dim, Rng& rng);

KrausChannel random_unitary_channel(int dim, Rng& rng);
/// General channel from a Haar isometry truncation with the given Kraus rank.
KrausChannel random_channel(int dim_in, int dim_out, int kraus_rank, Rng& rng);

KrausChannel identity_channel(int dim);
/// Single-Kraus channel U rho U^dag for a given unitary (or any matrix).
KrausChannel unitary_channel(const Matrix& u);
KrausChannel depolarizing_channel(int dim);

/// Default in/out layouts ("in"/"out") used when only dimensions matter.
SpaceLayout default_in_layout(int dim);
SpaceLayout default_out_layout(int dim);

}  // namespace switchcert
