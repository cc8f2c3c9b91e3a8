#include "switchcert/channels.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace switchcert {

KrausChannel::KrausChannel(std::vector<Matrix> k, SpaceLayout in, SpaceLayout out)
    : kraus(std::move(k)), in_layout(std::move(in)), out_layout(std::move(out)) {
  if (kraus.empty()) throw std::invalid_argument("KrausChannel: empty Kraus list");
  for (const auto& m : kraus)
    if (m.rows() != out_layout.total_dim() || m.cols() != in_layout.total_dim())
      throw std::invalid_argument("KrausChannel: Kraus shape mismatch");
}

double KrausChannel::tp_defect() const {
  Matrix acc = Matrix::Zero(dim_in(), dim_in());
  for (const auto& k : kraus) acc += k.adjoint() * k;
  return (acc - Matrix::Identity(dim_in(), dim_in())).cwiseAbs().maxCoeff();
}

Matrix KrausChannel::apply(const Matrix& rho) const {
  Matrix out = Matrix::Zero(dim_out(), dim_out());
  for (const auto& k : kraus) out += k * rho * k.adjoint();
  return out;
}

Operator kraus_to_choi(const KrausChannel& ch) {
  const long di = ch.dim_in(), dout = ch.dim_out();
  SpaceLayout layout = SpaceLayout::concat(ch.in_layout, ch.out_layout);
  Matrix choi = Matrix::Zero(di * dout, di * dout);
  Vector v(di * dout);
  for (const auto& k : ch.kraus) {
    // |K>> with basis index (i_in * d_out + i_out)
    for (long i = 0; i < di; ++i)
      for (long o = 0; o < dout; ++o) v(i * dout + o) = k(o, i);
    choi += v * v.adjoint();
  }
  return Operator(std::move(layout), std::move(choi));
}

KrausChannel choi_to_kraus(const Operator& m, const SpaceLayout& in_layout,
                           const SpaceLayout& out_layout, double tol) {
  const long di = in_layout.total_dim(), dout = out_layout.total_dim();
  if (di * dout != m.dim()) throw std::invalid_argument("choi_to_kraus: layout/operator mismatch");
  Eigen::SelfAdjointEigenSolver<Matrix> es((m.mat + m.mat.adjoint()) / 2.0);
  if (es.eigenvalues().minCoeff() < -tol)
    throw std::invalid_argument("choi_to_kraus: operator is not CP (negative eigenvalue)");

  std::vector<Matrix> kraus;
  for (long e = 0; e < es.eigenvalues().size(); ++e) {
    double lam = es.eigenvalues()(e);
    if (lam <= tol) continue;
    Matrix k(dout, di);
    for (long i = 0; i < di; ++i)
      for (long o = 0; o < dout; ++o) k(o, i) = std::sqrt(lam) * es.eigenvectors()(i * dout + o, e);
    kraus.push_back(std::move(k));
  }
  if (kraus.empty()) kraus.push_back(Matrix::Zero(dout, di));
  KrausChannel ch(std::move(kraus), in_layout, out_layout);
  if (!ch.is_tp(std::max(tol, 1e-7)))
    throw std::invalid_argument("choi_to_kraus: operator is not TP");
  return ch;
}

bool is_cp(const Operator& m, double tol) { return m.min_eigenvalue() >= -tol; }

bool is_tp(const Operator& m, const std::vector<std::string>& out_labels, double tol) {
  Operator marg = partial_trace(m, out_labels);
  return (marg.mat - Matrix::Identity(marg.dim(), marg.dim())).cwiseAbs().maxCoeff() <= tol;
}

Matrix haar_unitary(int dim, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix z(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) z(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the phase of each column so the distribution is Haar
  for (int j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

KrausChannel random_unitary_channel(int dim, Rng& rng) {
  return KrausChannel({haar_unitary(dim, rng)}, default_in_layout(dim), default_out_layout(dim));
}

KrausChannel random_channel(int dim_in, int dim_out, int kraus_rank, Rng& rng) {
  if (dim_in < 1 || dim_out < 1 || kraus_rank < 1)
    throw std::invalid_argument("random_channel: bad arguments");
  // Haar isometry V: H_in -> H_out ox H_env, env dimension = kraus_rank
  const int big = dim_out * kraus_rank;
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix z(big, dim_in);
  for (int i = 0; i < big; ++i)
    for (int j = 0; j < dim_in; ++j) z(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = Matrix(qr.householderQ()).leftCols(dim_in);
  std::vector<Matrix> kraus;
  for (int e = 0; e < kraus_rank; ++e) {
    Matrix k(dim_out, dim_in);
    for (int o = 0; o < dim_out; ++o) k.row(o) = q.row(o * kraus_rank + e);
    kraus.push_back(std::move(k));
  }
  return KrausChannel(std::move(kraus), default_in_layout(dim_in), default_out_layout(dim_out));
}

KrausChannel identity_channel(int dim) {
  return KrausChannel({Matrix::Identity(dim, dim)}, default_in_layout(dim), default_out_layout(dim));
}

KrausChannel unitary_channel(const Matrix& u) {
  return KrausChannel({u}, default_in_layout(static_cast<int>(u.cols())),
                      default_out_layout(static_cast<int>(u.rows())));
}

KrausChannel depolarizing_channel(int dim) {
  // Tr(rho) 1/d via the d^2 generalized Pauli (shift/clock) Kraus set
  std::vector<Matrix> kraus;
  Matrix shift = Matrix::Zero(dim, dim), clock = Matrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    shift((i + 1) % dim, i) = 1.0;
    clock(i, i) = std::exp(Complex(0, 2.0 * M_PI * i / dim));
  }
  for (int a = 0; a < dim; ++a) {
    Matrix sa = Matrix::Identity(dim, dim);
    for (int t = 0; t < a; ++t) sa = shift * sa;
    for (int b = 0; b < dim; ++b) {
      Matrix cb = Matrix::Identity(dim, dim);
      for (int t = 0; t < b; ++t) cb = clock * cb;
      kraus.push_back((sa * cb) / static_cast<double>(dim));
    }
  }
  return KrausChannel(std::move(kraus), default_in_layout(dim), default_out_layout(dim));
}

SpaceLayout default_in_layout(int dim) { return SpaceLayout::single("in", dim); }
SpaceLayout default_out_layout(int dim) { return SpaceLayout::single("out", dim); }

}  // namespace switchcert
