#pragma once

#include "switchcert/channels.hpp"
#include "switchcert/operator.hpp"

namespace switchcert {

// Space labels used throughout for the switch and its simulators.
namespace labels {
inline const std::string cI = "cI", tI = "tI", AI = "AI", AO = "AO", BI = "BI", BO = "BO",
                         tO = "tO", cO = "cO";
}

/// Rank-1 Choi operator of the quantum switch on layout
/// (cI, tI, AI, AO, BI, BO, tO, cO); trace 2d^3.
struct SwitchChoi {
  Vector s_vector;
  Operator op;
  int target_dim = 2;
};

SwitchChoi switch_choi(int d);

/// Choi of the switch with inputs fixed to |+><+| ox |0><0|, i.e.
/// (|+><+| ox |0><0|) * S, on layout (AI, AO, BI, BO, tO, cO); trace d^2.
Operator switch_fixed_inputs(int d);

/// Kraus-level action of the switch on two channels. Single-party channels
/// yield a channel on (control, target); bipartite channels (two systems in
/// each layout, switch acting on the first) yield (control, target, A', B').
KrausChannel apply_switch(const KrausChannel& a, const KrausChannel& b);

/// Choi operator fidelity Tr(m n)/(Tr m Tr n); intended for the rank-1
/// reference case where both traces equal d_AO*d_BO.
double choi_fidelity(const Operator& m, const Operator& n);

/// Operator-Schmidt decomposition M = sum_a coeff[a] * left[a] ox right[a]
/// of a matrix on a bipartite in/out split. Zero singular values below tol
/// are dropped.
struct SchmidtTerms {
  std::vector<double> coeff;
  std::vector<Matrix> left;   // (out1 x in1)
  std::vector<Matrix> right;  // (out2 x in2)
};
SchmidtTerms operator_schmidt(const Matrix& m, long in1, long in2, long out1, long out2,
                              double tol = 1e-12);

}  // namespace switchcert
