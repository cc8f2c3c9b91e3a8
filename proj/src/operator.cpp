#include "switchcert/operator.hpp"

#include <Eigen/Eigenvalues>

#include "switchcert/tensor_detail.hpp"

namespace switchcert {

namespace detail {

std::vector<long> sub_index_remap(const std::vector<int>& a_dims, const std::vector<int>& b_dims,
                                  const std::vector<int>& b_axis_of_a_axis) {
  const std::size_t n = a_dims.size();
  long total = 1;
  for (int d : a_dims) total *= d;
  // strides of b's enumeration
  std::vector<long> b_strides(b_dims.size(), 1);
  for (int i = static_cast<int>(b_dims.size()) - 2; i >= 0; --i)
    b_strides[i] = b_strides[i + 1] * b_dims[i + 1];
  std::vector<long> a_strides(n, 1);
  for (int i = static_cast<int>(n) - 2; i >= 0; --i) a_strides[i] = a_strides[i + 1] * a_dims[i + 1];

  std::vector<long> map(total);
  for (long idx = 0; idx < total; ++idx) {
    long rem = idx, out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      long digit = rem / a_strides[i];
      rem %= a_strides[i];
      out += digit * b_strides[b_axis_of_a_axis[i]];
    }
    map[idx] = out;
  }
  return map;
}

}  // namespace detail

Operator::Operator(SpaceLayout l, Matrix m) : layout(std::move(l)), mat(std::move(m)) {
  if (mat.rows() != mat.cols() || mat.rows() != layout.total_dim())
    throw std::invalid_argument("Operator: matrix shape does not match layout dimension");
}

Operator Operator::zero(SpaceLayout l) {
  long d = l.total_dim();
  return Operator(std::move(l), Matrix::Zero(d, d));
}

Operator Operator::identity(SpaceLayout l) {
  long d = l.total_dim();
  return Operator(std::move(l), Matrix::Identity(d, d));
}

bool Operator::is_hermitian(double tol) const {
  return (mat - mat.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double Operator::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es((mat + mat.adjoint()) / 2.0);
  return es.eigenvalues().minCoeff();
}

bool Operator::is_psd(double tol) const { return is_hermitian(tol) && min_eigenvalue() >= -tol; }

Operator kron(const Operator& a, const Operator& b) {
  SpaceLayout layout = SpaceLayout::concat(a.layout, b.layout);
  Matrix out(layout.total_dim(), layout.total_dim());
  detail::kron_into(a.mat, b.mat, out);
  return Operator(std::move(layout), std::move(out));
}

Operator partial_trace(const Operator& m, const std::vector<std::string>& labels) {
  IndexSplit split(m.layout, m.layout.positions_of(labels));
  SpaceLayout out_layout = m.layout.dropped(labels);
  Matrix out(split.rest_total, split.rest_total);
  detail::partial_trace_into<Complex>(m.mat, split, out);
  return Operator(std::move(out_layout), std::move(out));
}

Operator partial_transpose(const Operator& m, const std::vector<std::string>& labels) {
  IndexSplit split(m.layout, m.layout.positions_of(labels));
  Matrix out(m.dim(), m.dim());
  detail::partial_transpose_into(m.mat, split, out);
  return Operator(m.layout, std::move(out));
}

Operator trace_and_replace(const Operator& m, const std::vector<std::string>& labels) {
  IndexSplit split(m.layout, m.layout.positions_of(labels));
  Matrix out(m.dim(), m.dim());
  detail::trace_and_replace_into<Complex>(m.mat, split, Complex(1.0 / split.sub_total), out);
  return Operator(m.layout, std::move(out));
}

Operator permute_systems(const Operator& m, const std::vector<std::string>& new_order) {
  SpaceLayout out_layout = m.layout.permuted(new_order);
  auto map = permutation_index_map(m.layout, out_layout);
  Matrix out(m.dim(), m.dim());
  detail::permute_into(m.mat, map, out);
  return Operator(std::move(out_layout), std::move(out));
}

Operator link(const Operator& f, const Operator& g) {
  // overlap labels, in f's order
  std::vector<std::string> overlap;
  for (const auto& s : f.layout.systems())
    if (g.layout.has(s.label)) {
      if (g.layout.dim_of(s.label) != s.dim)
        throw std::invalid_argument("link: dimension mismatch on shared label '" + s.label + "'");
      overlap.push_back(s.label);
    }
  IndexSplit sf(f.layout, f.layout.positions_of(overlap));
  IndexSplit sg(g.layout, g.layout.positions_of(overlap));

  // match overlap axes by label
  std::vector<std::string> f_sub_labels, g_sub_labels;
  for (const auto& s : f.layout.systems())
    if (g.layout.has(s.label)) f_sub_labels.push_back(s.label);
  for (const auto& s : g.layout.systems())
    if (f.layout.has(s.label)) g_sub_labels.push_back(s.label);
  std::vector<int> b_axis(f_sub_labels.size());
  for (std::size_t i = 0; i < f_sub_labels.size(); ++i) {
    auto it = std::find(g_sub_labels.begin(), g_sub_labels.end(), f_sub_labels[i]);
    b_axis[i] = static_cast<int>(it - g_sub_labels.begin());
  }
  auto remap = detail::sub_index_remap(sf.sub_dims, sg.sub_dims, b_axis);

  SpaceLayout out_layout = SpaceLayout::concat(f.layout.dropped(overlap), g.layout.dropped(overlap));
  Matrix out(out_layout.total_dim(), out_layout.total_dim());
  detail::link_into<Complex>(f.mat, sf, g.mat, sg, remap, out);
  return Operator(std::move(out_layout), std::move(out));
}

double frobenius_distance(const Operator& a, const Operator& b) {
  if (!a.layout.same_systems(b.layout))
    throw std::invalid_argument("frobenius_distance: layout mismatch");
  return (a.mat - b.mat).norm();
}

Operator relabeled(const Operator& m, const std::vector<std::string>& new_labels) {
  if (new_labels.size() != m.layout.size())
    throw std::invalid_argument("relabeled: wrong number of labels");
  std::vector<SpaceLayout::System> sys;
  for (std::size_t i = 0; i < new_labels.size(); ++i)
    sys.push_back({new_labels[i], m.layout.at(i).dim});
  return Operator(SpaceLayout(std::move(sys)), m.mat);
}

}  // namespace switchcert
