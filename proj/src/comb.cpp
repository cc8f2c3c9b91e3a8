#include "switchcert/comb.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace switchcert {

long CombSpec::past_dim() const {
  long d = 1;
  for (const auto& l : past) d *= layout.dim_of(l);
  return d;
}

long CombSpec::future_dim() const {
  long d = 1;
  for (const auto& l : future) d *= layout.dim_of(l);
  return d;
}

long CombSpec::output_dim() const {
  long d = 1;
  for (const auto& s : slots)
    for (const auto& l : s.second) d *= layout.dim_of(l);
  return d;
}

std::vector<std::vector<std::string>> CombSpec::nested_sets() const {
  std::vector<std::vector<std::string>> sets;
  std::vector<std::string> acc = future;
  sets.push_back(acc);
  for (int i = k() - 1; i >= 0; --i) {
    acc.insert(acc.end(), slots[i].second.begin(), slots[i].second.end());
    sets.push_back(acc);
    acc.insert(acc.end(), slots[i].first.begin(), slots[i].first.end());
    sets.push_back(acc);
  }
  acc.insert(acc.end(), past.begin(), past.end());
  sets.push_back(acc);
  return sets;
}

void CombSpec::validate() const {
  std::set<std::string> seen;
  auto take = [&](const std::vector<std::string>& group) {
    for (const auto& l : group) {
      layout.position(l);  // throws on unknown
      if (!seen.insert(l).second)
        throw std::invalid_argument("CombSpec: label '" + l + "' appears in two groups");
    }
  };
  take(past);
  for (const auto& s : slots) {
    take(s.first);
    take(s.second);
  }
  take(future);
  if (seen.size() != layout.size())
    throw std::invalid_argument("CombSpec: groups do not cover the layout");
}

namespace {

void check_supported_k(int k) {
  if (k < 2 || k > 4) throw std::invalid_argument("comb projector: unsupported slot count");
}

}  // namespace

Operator comb_projector(const CombSpec& spec, const Operator& m) {
  check_supported_k(spec.k());
  if (!m.layout.same_systems(spec.layout))
    throw std::invalid_argument("comb_projector: operator layout does not match spec");
  Operator acc = m;
  double sign = -1.0;
  for (const auto& set : spec.nested_sets()) {
    Operator term = trace_and_replace(m, set);
    acc.mat += sign * term.mat;
    sign = -sign;
  }
  return acc;
}

Operator dual_affine_projector(const CombSpec& spec, const Operator& m) {
  Operator p = comb_projector(spec, m);
  Operator all = trace_and_replace(m, spec.layout.labels());
  Operator out = m;
  out.mat += -p.mat + all.mat;
  return out;
}

bool is_comb(const CombSpec& spec, const Operator& m, double tol) {
  if (!m.is_hermitian(std::max(tol, 1e-12))) return false;
  if (m.min_eigenvalue() < -tol) return false;
  Operator proj = comb_projector(spec, m);
  double scale = std::max(1.0, m.mat.norm());
  if ((proj.mat - m.mat).norm() > tol * scale) return false;
  return std::abs(m.trace().real() - spec.trace_normalization()) <= tol * scale &&
         std::abs(m.trace().imag()) <= tol * scale;
}

// ---------------------------------------------------------------------------

namespace {

// Orthonormal Hermitian basis of L(C^d) with element 0 = 1/sqrt(d):
// qubits get Pauli/sqrt(2); general d gets normalized Gell-Mann operators.
std::vector<std::vector<SparseEntry>> site_basis(int d) {
  std::vector<std::vector<SparseEntry>> elems;
  const double invsd = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<SparseEntry> id;
  for (int i = 0; i < d; ++i) id.push_back({i, i, Complex(invsd, 0)});
  elems.push_back(std::move(id));
  const double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      elems.push_back({{i, j, Complex(s, 0)}, {j, i, Complex(s, 0)}});
      elems.push_back({{i, j, Complex(0, -s)}, {j, i, Complex(0, s)}});
    }
  for (int l = 1; l < d; ++l) {
    double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    std::vector<SparseEntry> e;
    for (int i = 0; i < l; ++i) e.push_back({i, i, Complex(norm, 0)});
    e.push_back({l, l, Complex(-norm * l, 0)});
    elems.push_back(std::move(e));
  }
  return elems;
}

}  // namespace

ProductBasis::ProductBasis(SpaceLayout layout) : layout_(std::move(layout)) {
  for (const auto& s : layout_.systems()) site_elements_.push_back(site_basis(s.dim));
}

long ProductBasis::pattern_count() const {
  long n = 1;
  for (const auto& e : site_elements_) n *= static_cast<long>(e.size());
  return n;
}

Pattern ProductBasis::pattern_at(long index) const {
  Pattern p(site_elements_.size());
  for (int i = static_cast<int>(site_elements_.size()) - 1; i >= 0; --i) {
    long n = static_cast<long>(site_elements_[i].size());
    p[i] = static_cast<int>(index % n);
    index /= n;
  }
  return p;
}

long ProductBasis::index_of(const Pattern& p) const {
  long idx = 0;
  for (std::size_t i = 0; i < site_elements_.size(); ++i)
    idx = idx * static_cast<long>(site_elements_[i].size()) + p[i];
  return idx;
}

std::vector<SparseEntry> ProductBasis::element(const Pattern& p) const {
  if (p.size() != site_elements_.size()) throw std::invalid_argument("ProductBasis: bad pattern");
  std::vector<SparseEntry> acc = {{0, 0, Complex(1, 0)}};
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& site = site_elements_[i].at(p[i]);
    const long d = layout_.at(i).dim;
    std::vector<SparseEntry> next;
    next.reserve(acc.size() * site.size());
    for (const auto& a : acc)
      for (const auto& b : site) next.push_back({a.r * d + b.r, a.c * d + b.c, a.v * b.v});
    acc = std::move(next);
  }
  return acc;
}

bool ProductBasis::identity_on(const Pattern& p, const std::vector<std::size_t>& positions) const {
  for (auto pos : positions)
    if (p[pos] != 0) return false;
  return true;
}

int comb_pattern_eigenvalue(const CombSpec& spec, const ProductBasis& basis, const Pattern& p) {
  // alternating sum 1 - [X1] + [X2] - ...; the nesting makes the indicators
  // monotone, so the result is 0 or 1
  int eig = 1;
  int sign = -1;
  for (const auto& set : spec.nested_sets()) {
    auto positions = spec.layout.positions_of(set);
    eig += sign * (basis.identity_on(p, positions) ? 1 : 0);
    sign = -sign;
  }
  if (eig != 0 && eig != 1)
    throw std::logic_error("comb_pattern_eigenvalue: non-projector eigenvalue");
  return eig;
}

std::vector<Pattern> comb_complement_patterns(const CombSpec& spec, const ProductBasis& basis) {
  check_supported_k(spec.k());
  std::vector<Pattern> out;
  const long n = basis.pattern_count();
  for (long i = 0; i < n; ++i) {
    Pattern p = basis.pattern_at(i);
    if (comb_pattern_eigenvalue(spec, basis, p) == 0) out.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------

long QcccSpec::output_dim() const {
  long d = 1;
  for (const auto& s : slots)
    for (const auto& l : s.second) d *= layout.dim_of(l);
  return d;
}

std::vector<std::vector<int>> QcccSpec::orders() const {
  std::vector<int> perm(slots.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return all;
}

std::vector<std::string> QcccSpec::order_names() const {
  std::vector<std::string> names;
  for (const auto& ord : orders()) {
    std::string n;
    for (int s : ord) n += std::to_string(s + 1);
    names.push_back(n + "F");
  }
  return names;
}

void QcccSpec::validate() const {
  std::set<std::string> seen;
  auto take = [&](const std::vector<std::string>& group) {
    for (const auto& l : group) {
      layout.position(l);
      if (!seen.insert(l).second)
        throw std::invalid_argument("QcccSpec: label '" + l + "' appears in two groups");
    }
  };
  for (const auto& s : slots) {
    take(s.first);
    take(s.second);
  }
  take(future);
  if (seen.size() != layout.size())
    throw std::invalid_argument("QcccSpec: groups do not cover the layout");
}

namespace {

std::vector<std::string> concat_sets(std::initializer_list<std::vector<std::string>> groups) {
  std::vector<std::string> out;
  for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
  return out;
}

// W = P_order(W) for d_P = 1 reduces to sum_{j=1}^{2k} (-1)^{j+1} _{X_j} W = 0
// with X_1 = F, X_2 = O_last F, ..., nesting backwards through the order.
void append_comb_membership(std::vector<OperatorEquality>& eqs, const QcccSpec& spec,
                            int component, const std::vector<int>& order, const std::string& name) {
  OperatorEquality eq;
  eq.name = name;
  std::vector<std::string> acc = spec.future;
  double sign = 1.0;
  for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
    const auto& slot = spec.slots[order[i]];
    eq.terms.push_back({component, sign, acc});
    sign = -sign;
    acc = concat_sets({acc, slot.second});
    eq.terms.push_back({component, sign, acc});
    sign = -sign;
    acc = concat_sets({acc, slot.first});
  }
  eqs.push_back(std::move(eq));
}

}  // namespace

QcccConstraints qccc_constraints(const QcccSpec& spec) {
  spec.validate();
  const int k = spec.k();
  if (k != 2 && k != 3) throw std::invalid_argument("qccc_constraints: only k in {2,3} supported");

  QcccConstraints out;
  out.order_names = spec.order_names();
  out.trace_normalization = spec.trace_normalization();
  auto all_orders = spec.orders();

  if (k == 2) {
    // each W^{xyF} is a comb in its own order
    for (std::size_t c = 0; c < all_orders.size(); ++c)
      append_comb_membership(out.equalities, spec, static_cast<int>(c), all_orders[c],
                             "comb membership W^" + out.order_names[c]);
    return out;
  }

  // k = 3: the printed coupled families. Orders enumerate lexicographically:
  // 123, 132, 213, 231, 312, 321.
  auto index_of_order = [&](const std::string& name) {
    for (std::size_t i = 0; i < out.order_names.size(); ++i)
      if (out.order_names[i] == name) return static_cast<int>(i);
    throw std::logic_error("qccc_constraints: missing order");
  };
  const auto& F = spec.future;
  auto I = [&](int s) { return spec.slots[s - 1].first; };
  auto O = [&](int s) { return spec.slots[s - 1].second; };

  struct Family {
    std::string first, second;  // orders x y z and x z y
    int x, y, z;
  };
  std::vector<Family> families = {{"123F", "132F", 1, 2, 3},
                                  {"213F", "231F", 2, 1, 3},
                                  {"312F", "321F", 3, 1, 2}};
  for (const auto& fam : families) {
    int c1 = index_of_order(fam.first), c2 = index_of_order(fam.second);
    int x = fam.x, y = fam.y, z = fam.z;
    out.equalities.push_back({{{c1, 1.0, F}, {c1, -1.0, concat_sets({O(z), F})}},
                              "_F = _{O" + std::to_string(z) + "F} W^" + fam.first});
    out.equalities.push_back({{{c2, 1.0, F}, {c2, -1.0, concat_sets({O(y), F})}},
                              "_F = _{O" + std::to_string(y) + "F} W^" + fam.second});
    out.equalities.push_back({{{c1, 1.0, concat_sets({I(z), O(z), F})},
                               {c1, -1.0, concat_sets({O(y), I(z), O(z), F})}},
                              "slot-2 condition W^" + fam.first});
    out.equalities.push_back({{{c2, 1.0, concat_sets({I(y), O(y), F})},
                               {c2, -1.0, concat_sets({O(z), I(y), O(y), F})}},
                              "slot-2 condition W^" + fam.second});
    auto big = concat_sets({I(y), O(y), I(z), O(z), F});
    out.equalities.push_back({{{c1, 1.0, big},
                               {c2, 1.0, big},
                               {c1, -1.0, concat_sets({O(x), big})},
                               {c2, -1.0, concat_sets({O(x), big})}},
                              "coupled O" + std::to_string(x) + " condition " + fam.first + "+" + fam.second});
  }
  return out;
}

Operator evaluate_equality(const OperatorEquality& eq, const std::vector<Operator>& components) {
  if (components.empty()) throw std::invalid_argument("evaluate_equality: no components");
  Operator acc = Operator::zero(components[0].layout);
  for (const auto& t : eq.terms) {
    const Operator& w = components.at(t.component);
    Operator term = t.set.empty() ? w : trace_and_replace(w, t.set);
    acc.mat += t.coeff * term.mat;
  }
  return acc;
}

}  // namespace switchcert
