#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "switchcert/switch_model.hpp"
#include "test_helpers.hpp"

using namespace switchcert;
using namespace switchcert::labels;
using switchcert::testing::pauli;
using switchcert::testing::qubits;

namespace {

Operator choi_on(const KrausChannel& ch, const std::string& in_label, const std::string& out_label) {
  return relabeled(kraus_to_choi(ch), {in_label, out_label});
}

// Choi of the channel on (cI,tI)->(cO,tO), layouts aligned to the link result order
Operator switch_output_choi(const KrausChannel& a, const KrausChannel& b) {
  Operator c = kraus_to_choi(apply_switch(a, b));  // (cI,tI,cO,tO)
  return permute_systems(c, {cI, tI, tO, cO});
}

}  // namespace

TEST_CASE("switch Choi trace and rank") {
  SwitchChoi s = switch_choi(2);
  CHECK(s.op.trace().real() == doctest::Approx(16.0));
  CHECK(s.s_vector.squaredNorm() == doctest::Approx(16.0));
  // rank 1
  Eigen::JacobiSVD<Matrix> svd(s.op.mat);
  CHECK(svd.singularValues()(0) > 1.0);
  CHECK(svd.singularValues()(1) < 1e-12);
}

TEST_CASE("switch Choi has coherence between the two orders") {
  SwitchChoi s = switch_choi(2);
  // block <cI=0| S |cI=1> is nonzero
  IndexSplit split(s.op.layout, {0});
  double block_norm = 0;
  for (long r = 0; r < split.rest_total; ++r)
    for (long c = 0; c < split.rest_total; ++c)
      block_norm += std::abs(s.op.mat(split.sub_offset[0] + split.rest_offset[r],
                                      split.sub_offset[1] + split.rest_offset[c]));
  CHECK(block_norm > 1.0);
}

TEST_CASE("control fixed to |0> gives the ordered comb of identity wires") {
  SwitchChoi s = switch_choi(2);
  Matrix p0 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  Operator proj_in(SpaceLayout::single(cI, 2), p0);
  Operator proj_out(SpaceLayout::single(cO, 2), p0);
  Operator fixed = link(link(proj_in, s.op), proj_out);  // on (tI,AI,AO,BI,BO,tO)

  // chain of identity-wire Chois tI->AI, AO->BI, BO->tO
  Operator w1 = relabeled(kraus_to_choi(identity_channel(2)), {tI, AI});
  Operator w2 = relabeled(kraus_to_choi(identity_channel(2)), {AO, BI});
  Operator w3 = relabeled(kraus_to_choi(identity_channel(2)), {BO, tO});
  Operator expect = kron(kron(w1, w2), w3);
  CHECK(frobenius_distance(permute_systems(fixed, expect.layout.labels()), expect) < 1e-12);
}

TEST_CASE("switch_fixed_inputs trace and consistency with the generic link") {
  Operator s0 = switch_fixed_inputs(2);
  CHECK(s0.trace().real() == doctest::Approx(4.0));
  CHECK(s0.layout.labels() == std::vector<std::string>{AI, AO, BI, BO, tO, cO});
  Eigen::JacobiSVD<Matrix> svd(s0.mat);
  CHECK(svd.singularValues()(1) < 1e-12);  // rank 1
}

TEST_CASE("S_+0 linked with identity channels gives |+>-controlled pure output") {
  Operator s0 = switch_fixed_inputs(2);
  Operator ja = relabeled(kraus_to_choi(identity_channel(2)), {AI, AO});
  Operator jb = relabeled(kraus_to_choi(identity_channel(2)), {BI, BO});
  Operator out = link(s0, kron(ja, jb));  // state on (tO,cO)
  CHECK(out.trace().real() == doctest::Approx(1.0));
  // expected |0>_t ox |+>_c
  Matrix expect = Matrix::Zero(4, 4);
  expect(0, 0) = expect(0, 1) = expect(1, 0) = expect(1, 1) = 0.5;
  CHECK((out.mat - expect).norm() < 1e-12);
}

TEST_CASE("apply_switch on X and Z collapses control to |->") {
  KrausChannel out = apply_switch(unitary_channel(pauli('X')), unitary_channel(pauli('Z')));
  CHECK(out.kraus.size() == 1);
  // input |+> ox |0>
  Vector in(4);
  in << 1, 0, 1, 0;
  in /= std::sqrt(2.0);
  Vector res = out.kraus[0] * in;
  // expected -|-> ox |1> (global phase irrelevant): components (c,t)
  Vector expect(4);
  expect << 0, -1 / std::sqrt(2.0), 0, 1 / std::sqrt(2.0);
  Complex overlap = expect.adjoint() * res;
  CHECK(std::abs(overlap) == doctest::Approx(1.0));
  CHECK(res.squaredNorm() == doctest::Approx(1.0));
}

TEST_CASE("apply_switch with identity channels is the identity on control ox target") {
  KrausChannel out = apply_switch(identity_channel(2), identity_channel(2));
  std::mt19937_64 rng(1);
  Operator rho = testing::random_hermitian(qubits({"c", "t"}), rng);
  Matrix applied = out.apply(rho.mat);
  CHECK((applied - rho.mat).norm() < 1e-12);
}

TEST_CASE("depolarizing pair keeps control coherence (Ebler et al. effect)") {
  KrausChannel dep = depolarizing_channel(2);
  KrausChannel out = apply_switch(dep, dep);
  CHECK(out.tp_defect() < 1e-10);
  Matrix in = Matrix::Zero(4, 4);
  // |+><+| ox |0><0|
  in(0, 0) = in(0, 2) = in(2, 0) = in(2, 2) = 0.5;
  Matrix res = out.apply(in);
  // partial trace over target: coherence <0|Tr_t(res)|1>
  Complex coh = res(0, 2) + res(1, 3);
  CHECK(std::abs(coh) > 0.1);
}

TEST_CASE("master identity: Kraus-level switch equals S * (J_A ox J_B)") {
  std::mt19937_64 rng(99);
  SwitchChoi s = switch_choi(2);
  for (int t = 0; t < 20; ++t) {
    KrausChannel a = random_channel(2, 2, (t % 4) + 1, rng);
    KrausChannel b = random_channel(2, 2, ((t + 2) % 4) + 1, rng);
    Operator ja = relabeled(kraus_to_choi(a), {AI, AO});
    Operator jb = relabeled(kraus_to_choi(b), {BI, BO});
    Operator via_link = link(s.op, kron(ja, jb));  // (cI,tI,tO,cO)
    Operator via_kraus = switch_output_choi(a, b);
    CHECK(frobenius_distance(via_kraus, via_link) < 1e-10);
  }
}

TEST_CASE("apply_switch output is TP and Kraus-remix invariant") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    KrausChannel a = random_channel(2, 2, 3, rng);
    KrausChannel b = random_channel(2, 2, 2, rng);
    KrausChannel out = apply_switch(a, b);
    CHECK(out.tp_defect() < 1e-10);

    Matrix v = haar_unitary(3, rng);
    std::vector<Matrix> remixed(3, Matrix::Zero(2, 2));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) remixed[i] += v(i, j) * a.kraus[j];
    KrausChannel out2 = apply_switch(KrausChannel(remixed, a.in_layout, a.out_layout), b);
    CHECK((kraus_to_choi(out).mat - kraus_to_choi(out2).mat).norm() < 1e-10);
  }
}

TEST_CASE("choi_fidelity basics") {
  Operator s0 = switch_fixed_inputs(2);
  CHECK(choi_fidelity(s0, s0) == doctest::Approx(1.0));

  // order-fixed comb A-then-B with the same fixed inputs: the |0>-branch of s_+0
  auto layout = s0.layout;
  auto strides = layout.strides();
  Vector u0 = Vector::Zero(layout.total_dim());
  for (int b = 0; b < 2; ++b)
    for (int c = 0; c < 2; ++c)
      u0(0 * strides[0] + b * strides[1] + b * strides[2] + c * strides[3] + c * strides[4] +
         0 * strides[5]) += 1.0;
  Operator comb(layout, u0 * u0.adjoint());
  CHECK(comb.trace().real() == doctest::Approx(4.0));
  CHECK(choi_fidelity(s0, comb) == doctest::Approx(0.5));

  // fidelity stays in [0,1] for random valid pairs built from channels
  std::mt19937_64 rng(13);
  SwitchChoi s = switch_choi(2);
  for (int t = 0; t < 5; ++t) {
    KrausChannel a = random_channel(2, 2, 2, rng);
    KrausChannel b = random_channel(2, 2, 2, rng);
    // per-pair fixed-input switch outputs have equal trace by construction
    Operator ja = relabeled(kraus_to_choi(a), {AI, AO});
    Operator jb = relabeled(kraus_to_choi(b), {BI, BO});
    Operator m = link(s.op, kron(ja, jb));
    double f = choi_fidelity(m, m);
    CHECK(f >= 0.0);
    CHECK(f <= 1.0 + 1e-12);
  }
}

TEST_CASE("operator_schmidt reassembles the input") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> g(0, 1);
  Matrix m(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m(i, j) = Complex(g(rng), g(rng));
  SchmidtTerms st = operator_schmidt(m, 2, 3, 2, 3);
  Matrix back = Matrix::Zero(6, 6);
  for (std::size_t k = 0; k < st.coeff.size(); ++k) {
    for (long o = 0; o < 2; ++o)
      for (long op = 0; op < 3; ++op)
        for (long i = 0; i < 2; ++i)
          for (long ip = 0; ip < 3; ++ip)
            back(o * 3 + op, i * 3 + ip) += st.coeff[k] * st.left[k](o, i) * st.right[k](op, ip);
  }
  CHECK((back - m).norm() < 1e-10);
}

TEST_CASE("bipartite apply_switch matches the extended link identity") {
  std::mt19937_64 rng(55);
  SwitchChoi s = switch_choi(2);
  for (int t = 0; t < 3; ++t) {
    // bipartite channels on 2x2 qubits
    KrausChannel a(random_channel(4, 4, 2, rng).kraus, qubits({"m", "mp"}), qubits({"mo", "mpo"}));
    KrausChannel b(random_channel(4, 4, 2, rng).kraus, qubits({"n", "np"}), qubits({"no", "npo"}));
    KrausChannel out = apply_switch(a, b);
    CHECK(out.tp_defect() < 1e-9);

    // reference: S ox I acting on the joint Chois, via link over switch spaces
    Operator ja = relabeled(kraus_to_choi(a), {AI, "ApI", AO, "ApO"});
    Operator jb = relabeled(kraus_to_choi(b), {BI, "BpI", BO, "BpO"});
    Operator lhs = link(s.op, kron(ja, jb));  // (cI,tI,tO,cO,ApI,ApO,BpI,BpO)
    Operator rhs = kraus_to_choi(out);        // (cI,tI,ApI,BpI,cO,tO,ApO,BpO)
    Operator rhs_aligned = permute_systems(rhs, lhs.layout.labels());
    CHECK(frobenius_distance(lhs, rhs_aligned) < 1e-9);
  }
}
