#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "switchcert/layout.hpp"

namespace switchcert {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Default absolute tolerance on eigenvalues for hermiticity/PSD queries.
inline constexpr double kPsdTol = 1e-9;

/// Dense complex square matrix over a tensor product of labeled subsystems.
/// Hermiticity, positivity and trace are queryable, never assumed.
struct Operator {
  SpaceLayout layout;
  Matrix mat;

  Operator() = default;
  Operator(SpaceLayout l, Matrix m);

  static Operator zero(SpaceLayout l);
  static Operator identity(SpaceLayout l);

  long dim() const { return layout.total_dim(); }
  Complex trace() const { return mat.trace(); }

  bool is_hermitian(double tol = kPsdTol) const;
  /// Smallest eigenvalue of the Hermitian part.
  double min_eigenvalue() const;
  bool is_psd(double tol = kPsdTol) const;
};

Operator kron(const Operator& a, const Operator& b);
Operator partial_trace(const Operator& m, const std::vector<std::string>& labels);
Operator partial_transpose(const Operator& m, const std::vector<std::string>& labels);
Operator trace_and_replace(const Operator& m, const std::vector<std::string>& labels);
Operator permute_systems(const Operator& m, const std::vector<std::string>& new_order);

/// Link product F*G = Tr_ov[(F ox 1)(1 ox G^{T_ov})] over the shared labels.
/// Result layout: F's remaining systems followed by G's remaining systems.
Operator link(const Operator& f, const Operator& g);

double frobenius_distance(const Operator& a, const Operator& b);

/// Same entries, systems renamed in place (dims unchanged).
Operator relabeled(const Operator& m, const std::vector<std::string>& new_labels);

}  // namespace switchcert
