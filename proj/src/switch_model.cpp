#include "switchcert/switch_model.hpp"

#include <Eigen/SVD>

namespace switchcert {

using namespace labels;

namespace {

Matrix kron_m(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

SwitchChoi switch_choi(int d) {
  if (d < 2) throw std::invalid_argument("switch_choi: d >= 2 required");
  SpaceLayout layout({{cI, 2}, {tI, d}, {AI, d}, {AO, d}, {BI, d}, {BO, d}, {tO, d}, {cO, 2}});
  auto strides = layout.strides();
  Vector s = Vector::Zero(layout.total_dim());
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        // |0> |1>^{tI AI} |1>^{AO BI} |1>^{BO tO} |0>
        s(0 * strides[0] + a * strides[1] + a * strides[2] + b * strides[3] + b * strides[4] +
          c * strides[5] + c * strides[6] + 0 * strides[7]) += 1.0;
        // |1> |1>^{tI BI} |1>^{BO AI} |1>^{AO tO} |1>
        s(1 * strides[0] + a * strides[1] + b * strides[2] + c * strides[3] + a * strides[4] +
          b * strides[5] + c * strides[6] + 1 * strides[7]) += 1.0;
      }
  Operator op(layout, s * s.adjoint());
  return SwitchChoi{std::move(s), std::move(op), d};
}

Operator switch_fixed_inputs(int d) {
  SwitchChoi sc = switch_choi(d);
  Matrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  Matrix zero = Matrix::Zero(d, d);
  zero(0, 0) = 1.0;
  Operator fixed =
      kron(Operator(SpaceLayout::single(cI, 2), plus), Operator(SpaceLayout::single(tI, d), zero));
  return link(fixed, sc.op);
}

namespace {

KrausChannel apply_switch_single(const KrausChannel& a, const KrausChannel& b) {
  const long d = a.dim_in();
  Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  std::vector<Matrix> kraus;
  for (const auto& ai : a.kraus)
    for (const auto& bj : b.kraus)
      kraus.push_back(kron_m(p0, bj * ai) + kron_m(p1, ai * bj));
  SpaceLayout in({{cI, 2}, {tI, static_cast<int>(d)}});
  SpaceLayout out({{cO, 2}, {tO, static_cast<int>(d)}});
  return KrausChannel(std::move(kraus), std::move(in), std::move(out));
}

KrausChannel apply_switch_bipartite(const KrausChannel& a, const KrausChannel& b) {
  const int d = a.in_layout.at(0).dim;
  const int dap_in = a.in_layout.at(1).dim, dap_out = a.out_layout.at(1).dim;
  const int dbp_in = b.in_layout.at(1).dim, dbp_out = b.out_layout.at(1).dim;
  if (b.in_layout.at(0).dim != d || a.out_layout.at(0).dim != d || b.out_layout.at(0).dim != d)
    throw std::invalid_argument("apply_switch: target-space dimension mismatch");

  Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  std::vector<Matrix> kraus;
  for (const auto& ai : a.kraus) {
    SchmidtTerms sa = operator_schmidt(ai, d, dap_in, d, dap_out);
    for (const auto& bj : b.kraus) {
      SchmidtTerms sb = operator_schmidt(bj, d, dbp_in, d, dbp_out);
      const long din = 2L * d * dap_in * dbp_in, dout = 2L * d * dap_out * dbp_out;
      Matrix sij = Matrix::Zero(dout, din);
      for (std::size_t va = 0; va < sa.coeff.size(); ++va)
        for (std::size_t vb = 0; vb < sb.coeff.size(); ++vb) {
          double w = sa.coeff[va] * sb.coeff[vb];
          // spaces: control, target, A', B'
          sij += w * (kron_m(p0, kron_m(kron_m(sb.left[vb] * sa.left[va], sa.right[va]), sb.right[vb])) +
                      kron_m(p1, kron_m(kron_m(sa.left[va] * sb.left[vb], sa.right[va]), sb.right[vb])));
        }
      kraus.push_back(std::move(sij));
    }
  }
  SpaceLayout in({{cI, 2}, {tI, d}, {"ApI", dap_in}, {"BpI", dbp_in}});
  SpaceLayout out({{cO, 2}, {tO, d}, {"ApO", dap_out}, {"BpO", dbp_out}});
  return KrausChannel(std::move(kraus), std::move(in), std::move(out));
}

}  // namespace

KrausChannel apply_switch(const KrausChannel& a, const KrausChannel& b) {
  if (a.in_layout.size() == 1 && b.in_layout.size() == 1) {
    if (a.dim_in() != a.dim_out() || b.dim_in() != b.dim_out() || a.dim_in() != b.dim_in())
      throw std::invalid_argument("apply_switch: channels must share the target dimension");
    return apply_switch_single(a, b);
  }
  if (a.in_layout.size() == 2 && b.in_layout.size() == 2) return apply_switch_bipartite(a, b);
  throw std::invalid_argument("apply_switch: expected two single-party or two bipartite channels");
}

double choi_fidelity(const Operator& m, const Operator& n) {
  if (!m.layout.same_systems(n.layout)) throw std::invalid_argument("choi_fidelity: layout mismatch");
  double tm = m.trace().real(), tn = n.trace().real();
  if (std::abs(tm - tn) > 1e-6 * (1.0 + std::abs(tm)))
    throw std::invalid_argument("choi_fidelity: traces differ");
  return (m.mat * n.mat).trace().real() / (tm * tn);
}

SchmidtTerms operator_schmidt(const Matrix& m, long in1, long in2, long out1, long out2,
                              double tol) {
  if (m.rows() != out1 * out2 || m.cols() != in1 * in2)
    throw std::invalid_argument("operator_schmidt: shape mismatch");
  // reshuffle M[(o,o'),(i,i')] -> R[(o,i),(o',i')]
  Matrix r(out1 * in1, out2 * in2);
  for (long o = 0; o < out1; ++o)
    for (long op = 0; op < out2; ++op)
      for (long i = 0; i < in1; ++i)
        for (long ip = 0; ip < in2; ++ip)
          r(o * in1 + i, op * in2 + ip) = m(o * out2 + op, i * in2 + ip);
  Eigen::JacobiSVD<Matrix> svd(r, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SchmidtTerms terms;
  for (long k = 0; k < svd.singularValues().size(); ++k) {
    double s = svd.singularValues()(k);
    if (s <= tol) continue;
    Matrix left(out1, in1), right(out2, in2);
    for (long o = 0; o < out1; ++o)
      for (long i = 0; i < in1; ++i) left(o, i) = svd.matrixU()(o * in1 + i, k);
    for (long op = 0; op < out2; ++op)
      for (long ip = 0; ip < in2; ++ip) right(op, ip) = std::conj(svd.matrixV()(op * in2 + ip, k));
    terms.coeff.push_back(s);
    terms.left.push_back(std::move(left));
    terms.right.push_back(std::move(right));
  }
  return terms;
}

}  // namespace switchcert
