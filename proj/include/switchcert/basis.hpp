#pragma once

#include "switchcert/channels.hpp"
#include "switchcert/rational.hpp"

namespace switchcert {

/// Basis for the span of k identical copies of qubit channels (or unitary
/// channels): single-copy operators J_i, all exactly TP, such that the
/// k-fold tensor powers {J_i^{ox k}} are linearly independent.
struct ChannelBasis {
  std::string kind;  // "pauli" | "random" | "unitary"
  int copies = 1;
  long span_dim = 0;
  std::uint64_t seed = 0;                // 0 for the deterministic families
  std::vector<Operator> elements;        // on layout ("in","out"), floating
  std::vector<RationalOperator> exact;   // same elements, exact; empty for unitary bases

  bool has_exact() const { return !exact.empty(); }
};

/// binom(d_V - 1 + k, k): dimension of span{J^{ox k} : J in V}, dim V = d_V.
long span_dimension(long d_v, int k);

/// The 13 two-qubit operators {1 ox 1/2, 1 ox 1/2 + 1 ox s_i,
/// 1 ox 1/2 + s_j ox s_k}; exact entries with denominators in {1,2}.
ChannelBasis single_copy_basis();

/// 91 / 455 element bases selected greedily (in the printed enumeration
/// order) from the overcomplete two- and three-copy families.
ChannelBasis two_copy_basis();
ChannelBasis three_copy_basis();

/// Random small-fraction coefficient family, selected until
/// span_dimension(13,k) independent k-fold powers are found.
ChannelBasis random_k_copy_basis(int k, std::uint64_t seed);

/// Haar-sampled unitary Chois {|U_i>><<U_i|^{ox k}}; binom(2k+3,3) elements.
ChannelBasis unitary_k_copy_basis(int k, std::uint64_t seed);

/// Least-squares residual of vec(target) against span{vec(powers of basis)}:
/// the universality witness used by tests and the CLI.
double span_residual(const ChannelBasis& basis, const Operator& target_single_copy);

}  // namespace switchcert
