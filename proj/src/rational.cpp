#include "switchcert/rational.hpp"

#include "switchcert/tensor_detail.hpp"

namespace switchcert {

RationalMatrix RationalMatrix::identity(long n) {
  RationalMatrix m(n, n);
  for (long i = 0; i < n; ++i) m(i, i) = GQ(1);
  return m;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RationalMatrix: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RationalMatrix: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("RationalMatrix: product shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long k = 0; k < a.cols(); ++k) {
      const GQ& av = a(i, k);
      if (av.is_zero()) continue;
      for (long j = 0; j < b.cols(); ++j) {
        const GQ& bv = b(k, j);
        if (!bv.is_zero()) out(i, j) += av * bv;
      }
    }
  return out;
}

RationalMatrix RationalMatrix::scaled(const GQ& s) const {
  RationalMatrix out(rows_, cols_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j) * s;
  return out;
}

RationalMatrix RationalMatrix::adjoint() const {
  RationalMatrix out(cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conj();
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

GQ RationalMatrix::trace() const {
  GQ t;
  for (long i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

bool RationalMatrix::is_hermitian() const {
  if (rows_ != cols_) return false;
  for (long i = 0; i < rows_; ++i)
    for (long j = i; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i).conj()) return false;
  return true;
}

Matrix RationalMatrix::to_complex() const {
  Matrix m(rows_, cols_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).to_complex();
  return m;
}

RationalOperator::RationalOperator(SpaceLayout l, RationalMatrix m)
    : layout(std::move(l)), mat(std::move(m)) {
  if (mat.rows() != mat.cols() || mat.rows() != layout.total_dim())
    throw std::invalid_argument("RationalOperator: matrix shape does not match layout");
}

RationalOperator RationalOperator::zero(SpaceLayout l) {
  long d = l.total_dim();
  return RationalOperator(std::move(l), RationalMatrix(d, d));
}

RationalOperator RationalOperator::identity(SpaceLayout l) {
  long d = l.total_dim();
  return RationalOperator(std::move(l), RationalMatrix::identity(d));
}

RationalOperator kron(const RationalOperator& a, const RationalOperator& b) {
  SpaceLayout layout = SpaceLayout::concat(a.layout, b.layout);
  RationalMatrix out(layout.total_dim(), layout.total_dim());
  detail::kron_into(a.mat, b.mat, out);
  return RationalOperator(std::move(layout), std::move(out));
}

RationalOperator partial_trace(const RationalOperator& m, const std::vector<std::string>& labels) {
  IndexSplit split(m.layout, m.layout.positions_of(labels));
  SpaceLayout out_layout = m.layout.dropped(labels);
  RationalMatrix out(split.rest_total, split.rest_total);
  detail::partial_trace_into<GQ>(m.mat, split, out);
  return RationalOperator(std::move(out_layout), std::move(out));
}

RationalOperator partial_transpose(const RationalOperator& m, const std::vector<std::string>& labels) {
  IndexSplit split(m.layout, m.layout.positions_of(labels));
  RationalMatrix out(m.dim(), m.dim());
  detail::partial_transpose_into(m.mat, split, out);
  return RationalOperator(m.layout, std::move(out));
}

RationalOperator trace_and_replace(const RationalOperator& m, const std::vector<std::string>& labels) {
  IndexSplit split(m.layout, m.layout.positions_of(labels));
  RationalMatrix out(m.dim(), m.dim());
  detail::trace_and_replace_into<GQ>(m.mat, split, GQ(mpq_class(1, split.sub_total)), out);
  return RationalOperator(m.layout, std::move(out));
}

RationalOperator permute_systems(const RationalOperator& m, const std::vector<std::string>& order) {
  SpaceLayout out_layout = m.layout.permuted(order);
  auto map = permutation_index_map(m.layout, out_layout);
  RationalMatrix out(m.dim(), m.dim());
  detail::permute_into(m.mat, map, out);
  return RationalOperator(std::move(out_layout), std::move(out));
}

RationalOperator link(const RationalOperator& f, const RationalOperator& g) {
  std::vector<std::string> overlap;
  for (const auto& s : f.layout.systems())
    if (g.layout.has(s.label)) {
      if (g.layout.dim_of(s.label) != s.dim)
        throw std::invalid_argument("link: dimension mismatch on shared label '" + s.label + "'");
      overlap.push_back(s.label);
    }
  IndexSplit sf(f.layout, f.layout.positions_of(overlap));
  IndexSplit sg(g.layout, g.layout.positions_of(overlap));
  std::vector<std::string> f_sub, g_sub;
  for (const auto& s : f.layout.systems())
    if (g.layout.has(s.label)) f_sub.push_back(s.label);
  for (const auto& s : g.layout.systems())
    if (f.layout.has(s.label)) g_sub.push_back(s.label);
  std::vector<int> b_axis(f_sub.size());
  for (std::size_t i = 0; i < f_sub.size(); ++i) {
    auto it = std::find(g_sub.begin(), g_sub.end(), f_sub[i]);
    b_axis[i] = static_cast<int>(it - g_sub.begin());
  }
  auto remap = detail::sub_index_remap(sf.sub_dims, sg.sub_dims, b_axis);
  SpaceLayout out_layout = SpaceLayout::concat(f.layout.dropped(overlap), g.layout.dropped(overlap));
  RationalMatrix out(out_layout.total_dim(), out_layout.total_dim());
  detail::link_into<GQ>(f.mat, sf, g.mat, sg, remap, out);
  return RationalOperator(std::move(out_layout), std::move(out));
}

RationalOperator relabeled(const RationalOperator& m, const std::vector<std::string>& new_labels) {
  if (new_labels.size() != m.layout.size())
    throw std::invalid_argument("relabeled: wrong number of labels");
  std::vector<SpaceLayout::System> sys;
  for (std::size_t i = 0; i < new_labels.size(); ++i)
    sys.push_back({new_labels[i], m.layout.at(i).dim});
  return RationalOperator(SpaceLayout(std::move(sys)), m.mat);
}

mpq_class truncate_decimal(double x, int digits) {
  if (digits < 0) throw std::invalid_argument("truncate_decimal: negative digit count");
  mpq_class exact(x);  // exact binary-to-rational conversion
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpq_class scaled = exact * mpq_class(scale);
  mpz_class trunc = scaled.get_num() / scaled.get_den();  // integer division truncates toward zero
  return mpq_class(trunc, scale);
}

mpq_class rational_from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("rational_from_string: bad literal '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace switchcert
