#pragma once

#include "switchcert/operator.hpp"

namespace switchcert {

/// Slot structure (P, I_1, O_1, ..., I_k, O_k, F) over groups of layout
/// labels. Dim-1 past/future groups are represented explicitly.
struct CombSpec {
  SpaceLayout layout;
  std::vector<std::string> past;  // P labels (group may have total dim 1)
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> slots;  // (I_i, O_i)
  std::vector<std::string> future;  // F labels

  int k() const { return static_cast<int>(slots.size()); }
  long past_dim() const;
  long future_dim() const;
  long output_dim() const;  // prod_i d_{O_i}
  /// Tr(C) for a deterministic comb: d_P * prod_i d_{O_i}.
  double trace_normalization() const { return static_cast<double>(past_dim() * output_dim()); }

  /// Nested label sets X_1 = F, X_2 = O_k F, ..., X_{2k+2} = P I_1 ... F in
  /// the order they appear in the printed projector.
  std::vector<std::vector<std::string>> nested_sets() const;

  void validate() const;  // groups partition the layout
};

/// Projector onto the span of k-slot combs, as the printed alternating
/// trace-and-replace sum; k in {2,3,4}.
Operator comb_projector(const CombSpec& spec, const Operator& m);

/// Projector onto the span of the dual affine set of combs:
/// Gamma - P_k(Gamma) + Tr(Gamma) 1/D. (The trailing term is the
/// trace-and-replace over all systems, which makes the map idempotent and
/// unital.)
Operator dual_affine_projector(const CombSpec& spec, const Operator& m);

bool is_comb(const CombSpec& spec, const Operator& m, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Product-operator patterns. Every trace-and-replace map is diagonal in the
// basis of tensor products of per-system orthonormal Hermitian operators
// whose 0th element is 1/sqrt(d); projector membership reduces to a 0/1
// eigenvalue per pattern.

using Pattern = std::vector<int>;  // one basis index per layout system

struct SparseEntry {
  long r, c;
  Complex v;
};

class ProductBasis {
 public:
  explicit ProductBasis(SpaceLayout layout);

  const SpaceLayout& layout() const { return layout_; }
  long pattern_count() const;
  Pattern pattern_at(long index) const;
  long index_of(const Pattern& p) const;

  /// Sparse matrix of the normalized Hermitian basis element for a pattern.
  std::vector<SparseEntry> element(const Pattern& p) const;

  /// True iff the pattern is the identity element on every system in `set`.
  bool identity_on(const Pattern& p, const std::vector<std::size_t>& positions) const;

 private:
  SpaceLayout layout_;
  // per system: list of (dim x dim) sparse Hermitian elements, orthonormal,
  // element 0 = 1/sqrt(d)
  std::vector<std::vector<std::vector<SparseEntry>>> site_elements_;
};

/// Eigenvalue (0 or 1) of the comb projector on a given pattern.
int comb_pattern_eigenvalue(const CombSpec& spec, const ProductBasis& basis, const Pattern& p);

/// Patterns spanning the orthogonal complement of the comb subspace
/// (eigenvalue 0); imposing <G_q, C> = 0 for these is equivalent to P(C)=C.
std::vector<Pattern> comb_complement_patterns(const CombSpec& spec, const ProductBasis& basis);

// ---------------------------------------------------------------------------
// QC-CC constraint generation (restricted scenario, d_P = 1).

/// Per-order components W^{sigma F} on a common layout without P.
struct QcccSpec {
  SpaceLayout layout;
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> slots;
  std::vector<std::string> future;

  int k() const { return static_cast<int>(slots.size()); }
  long output_dim() const;
  double trace_normalization() const { return static_cast<double>(output_dim()); }
  /// Order names, one per permutation of slots (e.g. "12F", "21F").
  std::vector<std::string> order_names() const;
  std::vector<std::vector<int>> orders() const;  // slot permutations
  void validate() const;
};

/// One trace-and-replace word applied to a component: coeff * _set(W_comp).
/// An empty set means the identity map.
struct TrTerm {
  int component;
  double coeff;
  std::vector<std::string> set;
};

/// Operator equality sum_terms == 0 on the common layout.
struct OperatorEquality {
  std::vector<TrTerm> terms;
  std::string name;
};

struct QcccConstraints {
  std::vector<std::string> order_names;
  std::vector<OperatorEquality> equalities;  // on W^{sigma} := W_s^s + W_f^s
  double trace_normalization;                // Tr(sum_s W^s) = prod d_O
};

/// Printed constraint set for k in {2,3}: per-order comb membership for k=2,
/// the coupled trace-and-replace families for k=3, plus positivity of every
/// component (left to the SDP layer) and the global trace normalization.
QcccConstraints qccc_constraints(const QcccSpec& spec);

/// Evaluates an OperatorEquality on explicit component operators (test aid).
Operator evaluate_equality(const OperatorEquality& eq, const std::vector<Operator>& components);

}  // namespace switchcert
