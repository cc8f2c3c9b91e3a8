#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "switchcert/operator.hpp"
#include "test_helpers.hpp"

using namespace switchcert;
using switchcert::testing::pauli;
using switchcert::testing::qubits;
using switchcert::testing::random_hermitian;

namespace {

Operator op1(const std::string& label, int dim, const Matrix& m) {
  return Operator(SpaceLayout::single(label, dim), m);
}

Operator bell_choi(const std::string& a, const std::string& b) {
  // 2|phi+><phi+| = |1>><<1| on two qubits
  Vector v(4);
  v << 1, 0, 0, 1;
  return Operator(qubits({a, b}), v * v.adjoint());
}

}  // namespace

TEST_CASE("kron identities and basis projectors") {
  Operator i2a = Operator::identity(SpaceLayout::single("a", 2));
  Operator i2b = Operator::identity(SpaceLayout::single("b", 2));
  Operator k = kron(i2a, i2b);
  CHECK(k.dim() == 4);
  CHECK((k.mat - Matrix::Identity(4, 4)).norm() == doctest::Approx(0.0));

  Matrix p0(2, 2), p1(2, 2);
  p0 << 1, 0, 0, 0;
  p1 << 0, 0, 0, 1;
  Operator d = kron(op1("a", 2, p0), op1("b", 2, p1));
  Matrix expect = Matrix::Zero(4, 4);
  expect(1, 1) = 1.0;
  CHECK((d.mat - expect).norm() == doctest::Approx(0.0));

  CHECK_THROWS(kron(i2a, Operator::identity(SpaceLayout::single("a", 3))));
}

TEST_CASE("kron(X,Z) expands to the hand computation") {
  Operator k = kron(op1("a", 2, pauli('X')), op1("b", 2, pauli('Z')));
  Matrix expect(4, 4);
  expect << 0, 0, 1, 0,  //
      0, 0, 0, -1,       //
      1, 0, 0, 0,        //
      0, -1, 0, 0;
  CHECK((k.mat - expect).norm() == doctest::Approx(0.0));
}

TEST_CASE("partial_trace of product state and entangled marginal") {
  std::mt19937_64 rng(7);
  Operator rho = random_hermitian(SpaceLayout::single("a", 2), rng);
  Operator sigma = random_hermitian(SpaceLayout::single("b", 3), rng);
  Operator prod = kron(rho, sigma);
  Operator red = partial_trace(prod, {"b"});
  CHECK((red.mat - sigma.trace() * rho.mat).norm() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::abs(red.trace() - prod.trace()) < 1e-12);

  Operator bell = bell_choi("a", "b");
  Operator marg = partial_trace(bell, {"b"});
  CHECK((marg.mat - Matrix::Identity(2, 2)).norm() == doctest::Approx(0.0));

  CHECK_THROWS(partial_trace(bell, {"nope"}));
}

TEST_CASE("full trace of the switch vector squared is 2d^3") {
  // |s> built inline from its two orthogonal branches (d = 2)
  auto layout = qubits({"cI", "tI", "AI", "AO", "BI", "BO", "tO", "cO"});
  auto strides = layout.strides();
  auto at = [&](int cI, int tI, int AI, int AO, int BI, int BO, int tO, int cO) {
    long idx = cI * strides[0] + tI * strides[1] + AI * strides[2] + AO * strides[3] +
               BI * strides[4] + BO * strides[5] + tO * strides[6] + cO * strides[7];
    return idx;
  };
  Vector s = Vector::Zero(256);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        s(at(0, a, a, b, b, c, c, 0)) += 1.0;  // order A then B
        s(at(1, a, b, c, a, b, c, 1)) += 1.0;  // order B then A
      }
  Operator S(layout, s * s.adjoint());
  Operator full = partial_trace(S, layout.labels());
  CHECK(full.dim() == 1);
  CHECK(full.mat(0, 0).real() == doctest::Approx(16.0));
}

TEST_CASE("partial_transpose basics") {
  std::mt19937_64 rng(11);
  Operator rho = random_hermitian(SpaceLayout::single("a", 2), rng);
  Operator sigma = random_hermitian(SpaceLayout::single("b", 2), rng);
  Operator prod = kron(rho, sigma);
  Operator pt = partial_transpose(prod, {"b"});
  Operator expect = kron(rho, Operator(SpaceLayout::single("b", 2), sigma.mat.transpose()));
  CHECK(frobenius_distance(pt, expect) == doctest::Approx(0.0));

  Operator twice = partial_transpose(pt, {"b"});
  CHECK(frobenius_distance(twice, prod) == doctest::Approx(0.0));

  // 2|phi+><phi+|^Tb = SWAP
  Operator bell = bell_choi("a", "b");
  Operator sw = partial_transpose(bell, {"b"});
  Matrix swap(4, 4);
  swap << 1, 0, 0, 0,  //
      0, 0, 1, 0,      //
      0, 1, 0, 0,      //
      0, 0, 0, 1;
  CHECK((sw.mat - swap).norm() == doctest::Approx(0.0));
}

TEST_CASE("trace_and_replace fixed point, example, idempotence") {
  auto layout = qubits({"a", "b"});
  Operator max_mixed(layout, Matrix::Identity(4, 4) / 4.0);
  Operator tr = trace_and_replace(max_mixed, {"a"});
  CHECK(frobenius_distance(tr, max_mixed) == doctest::Approx(0.0));

  Operator bell = bell_choi("a", "b");
  Operator r = trace_and_replace(bell, {"b"});
  CHECK((r.mat - Matrix::Identity(4, 4) / 2.0).norm() == doctest::Approx(0.0));
  CHECK(std::abs(r.trace() - bell.trace()) < 1e-12);

  std::mt19937_64 rng(3);
  Operator h = random_hermitian(qubits({"a", "b", "c"}), rng);
  Operator once = trace_and_replace(h, {"a", "c"});
  Operator twice = trace_and_replace(once, {"a", "c"});
  CHECK(frobenius_distance(once, twice) < 1e-13);
}

TEST_CASE("permute_systems") {
  std::mt19937_64 rng(5);
  Operator rho = random_hermitian(SpaceLayout::single("a", 2), rng);
  Operator sigma = random_hermitian(SpaceLayout::single("b", 3), rng);
  Operator prod = kron(rho, sigma);

  Operator same = permute_systems(prod, {"a", "b"});
  CHECK(frobenius_distance(same, prod) == doctest::Approx(0.0));

  Operator swapped = permute_systems(prod, {"b", "a"});
  Operator expect = kron(sigma, rho);
  CHECK(frobenius_distance(swapped, expect) == doctest::Approx(0.0));

  Operator back = permute_systems(swapped, {"a", "b"});
  CHECK(frobenius_distance(back, prod) == doctest::Approx(0.0));

  CHECK_THROWS(permute_systems(prod, {"a", "a"}));
}

TEST_CASE("permute_systems preserves the spectrum (power traces)") {
  std::mt19937_64 rng(17);
  Operator h = random_hermitian(qubits({"a", "b", "c"}), rng);
  Operator p = permute_systems(h, {"c", "a", "b"});
  Matrix hp = Matrix::Identity(8, 8), pp = Matrix::Identity(8, 8);
  for (int k = 1; k <= 8; ++k) {
    hp *= h.mat;
    pp *= p.mat;
    CHECK(std::abs(hp.trace() - pp.trace()) < 1e-9 * (1.0 + std::abs(hp.trace())));
  }
}

TEST_CASE("kron then partial_trace recovers the factor") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 5; ++t) {
    Operator a = random_hermitian(SpaceLayout::single("a", 3), rng);
    Operator b = random_hermitian(SpaceLayout::single("b", 2), rng);
    Operator red = partial_trace(kron(a, b), {"a"});
    CHECK((red.mat - a.trace() * b.mat).norm() < 1e-12);
  }
}

TEST_CASE("trace preservation under partial_trace (property)") {
  std::mt19937_64 rng(29);
  auto layout = qubits({"x", "y", "z"});
  for (int t = 0; t < 20; ++t) {
    Operator h = random_hermitian(layout, rng);
    for (auto& labels : std::vector<std::vector<std::string>>{{"x"}, {"y", "z"}, {"x", "z"}}) {
      Operator red = partial_trace(h, labels);
      CHECK(std::abs(red.trace() - h.trace()) <= 1e-12 * (1.0 + std::abs(h.trace())));
    }
  }
}
