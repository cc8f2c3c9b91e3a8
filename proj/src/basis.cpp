#include "switchcert/basis.hpp"

#include <Eigen/QR>
#include <array>

namespace switchcert {

namespace {

// ---------------------------------------------------------------------------
// exact qubit operators

RationalMatrix pauli_q(int which) {
  RationalMatrix m(2, 2);
  switch (which) {
    case 0: m(0, 0) = GQ(1); m(1, 1) = GQ(1); break;                            // 1
    case 1: m(0, 1) = GQ(1); m(1, 0) = GQ(1); break;                            // X
    case 2: m(0, 1) = GQ(mpq_class(0), mpq_class(-1)); m(1, 0) = GQ(mpq_class(0), mpq_class(1)); break;  // Y
    case 3: m(0, 0) = GQ(1); m(1, 1) = GQ(-1); break;                           // Z
    default: throw std::invalid_argument("pauli_q");
  }
  return m;
}

RationalMatrix kron_q(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (long k = 0; k < b.rows(); ++k)
        for (long l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

RationalMatrix scaled_identity4(const mpq_class& s) {
  RationalMatrix m(4, 4);
  for (int i = 0; i < 4; ++i) m(i, i) = GQ(s);
  return m;
}

// |v><v| for integer amplitude vectors, scaled by `s`
RationalMatrix ketbra4(const std::array<GQ, 4>& v, const mpq_class& s) {
  RationalMatrix m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = v[i] * v[j].conj() * GQ(s);
  return m;
}

// the rho lists of the printed two- and three-copy families
std::vector<RationalMatrix> rho_list_b2() {
  GQ i1(mpq_class(0), mpq_class(1));
  std::vector<RationalMatrix> rhos;
  rhos.push_back(scaled_identity4(mpq_class(1, 2)));                      // 1 ox 1/2
  rhos.push_back(ketbra4({GQ(1), GQ(0), GQ(0), GQ(1)}, mpq_class(1)));    // 2 phi+
  {
    RationalMatrix m(4, 4);  // 1 ox |0><0|
    m(0, 0) = GQ(1);
    m(2, 2) = GQ(1);
    rhos.push_back(m);
  }
  {
    RationalMatrix m(4, 4);  // 1 ox |+><+|
    for (int blk = 0; blk < 2; ++blk)
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m(2 * blk + r, 2 * blk + c) = GQ(mpq_class(1, 2));
    rhos.push_back(m);
  }
  {
    RationalMatrix m(4, 4);  // 1 ox |+_Y><+_Y|
    for (int blk = 0; blk < 2; ++blk) {
      m(2 * blk, 2 * blk) = GQ(mpq_class(1, 2));
      m(2 * blk + 1, 2 * blk + 1) = GQ(mpq_class(1, 2));
      m(2 * blk, 2 * blk + 1) = GQ(mpq_class(0), mpq_class(-1, 2));
      m(2 * blk + 1, 2 * blk) = GQ(mpq_class(0), mpq_class(1, 2));
    }
    rhos.push_back(m);
  }
  return rhos;
}

std::vector<RationalMatrix> rho_list_b3() {
  GQ i1(mpq_class(0), mpq_class(1));
  std::vector<RationalMatrix> rhos;
  rhos.push_back(scaled_identity4(mpq_class(1, 2)));
  rhos.push_back(ketbra4({GQ(1), GQ(0), GQ(0), GQ(1)}, mpq_class(1)));   // 2 phi+
  rhos.push_back(ketbra4({GQ(1), GQ(0), GQ(0), GQ(-1)}, mpq_class(1)));  // 2 phi-
  rhos.push_back(ketbra4({GQ(0), GQ(1), GQ(1), GQ(0)}, mpq_class(1)));   // 2 psi+
  rhos.push_back(ketbra4({GQ(0), GQ(1), GQ(-1), GQ(0)}, mpq_class(1)));  // 2 psi-
  // 1 ox |v><v| for |0>,|1>,|+>,|->,|+_Y>,|-_Y>
  auto one_ox = [&](GQ a0, GQ a1, mpq_class s) {
    RationalMatrix m(4, 4);
    std::array<GQ, 2> v = {a0, a1};
    for (int blk = 0; blk < 2; ++blk)
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m(2 * blk + r, 2 * blk + c) = v[r] * v[c].conj() * GQ(s);
    return m;
  };
  rhos.push_back(one_ox(GQ(1), GQ(0), mpq_class(1)));
  rhos.push_back(one_ox(GQ(0), GQ(1), mpq_class(1)));
  rhos.push_back(one_ox(GQ(1), GQ(1), mpq_class(1, 2)));
  rhos.push_back(one_ox(GQ(1), GQ(-1), mpq_class(1, 2)));
  rhos.push_back(one_ox(GQ(1), i1, mpq_class(1, 2)));
  rhos.push_back(one_ox(GQ(1), -i1, mpq_class(1, 2)));
  return rhos;
}

std::vector<RationalMatrix> sigma_set(const std::vector<int>& singles, bool with_xz_xy) {
  std::vector<RationalMatrix> out;
  for (int s : singles) out.push_back(pauli_q(s));
  if (with_xz_xy) {
    out.push_back(pauli_q(1) + pauli_q(3));  // X+Z
    out.push_back(pauli_q(1) + pauli_q(2));  // X+Y
  }
  return out;
}

// ---------------------------------------------------------------------------
// exact independence of k-fold tensor powers, tested on symmetric monomial
// vectors of the (real, rational) Pauli coordinates; arithmetic over the
// prime field F_p so that an accepted candidate is certainly independent
// over Q

constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mod_mul(r, base);
    base = mod_mul(base, base);
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a) { return mod_pow(a, kPrime - 2); }

std::uint64_t mod_of(const mpq_class& q) {
  std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), kPrime);
  std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), kPrime);
  if (den == 0) throw std::logic_error("mod_of: denominator divisible by the modulus");
  return mod_mul(num, mod_inv(den));
}

// real Pauli coordinates of a Hermitian 4x4 exact operator: c_ab = Tr((s_a ox s_b) J)/4
std::vector<mpq_class> pauli_coords(const RationalMatrix& j) {
  std::vector<mpq_class> c;
  c.reserve(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      RationalMatrix pab = kron_q(pauli_q(a), pauli_q(b));
      GQ t = (pab * j).trace();
      if (t.im != 0) throw std::logic_error("pauli_coords: non-Hermitian element");
      c.push_back(t.re / 4);
    }
  return c;
}

// multisets of size k over 16 indices, enumerated in nondecreasing order
void enumerate_monomials(int k, int first, std::vector<int>& stack,
                         std::vector<std::vector<int>>& out) {
  if (static_cast<int>(stack.size()) == k) {
    out.push_back(stack);
    return;
  }
  for (int i = first; i < 16; ++i) {
    stack.push_back(i);
    enumerate_monomials(k, i, stack, out);
    stack.pop_back();
  }
}

std::vector<std::uint64_t> monomial_vector_mod(const std::vector<mpq_class>& coords,
                                               const std::vector<std::vector<int>>& monomials) {
  std::vector<std::uint64_t> cm(16);
  for (int i = 0; i < 16; ++i) {
    mpq_class v = coords[i];
    bool neg = v < 0;
    std::uint64_t m = mod_of(neg ? mpq_class(-v) : v);
    cm[i] = neg ? (m == 0 ? 0 : kPrime - m) : m;
  }
  std::vector<std::uint64_t> vec;
  vec.reserve(monomials.size());
  for (const auto& mono : monomials) {
    std::uint64_t prod = 1;
    for (int idx : mono) prod = mod_mul(prod, cm[idx]);
    vec.push_back(prod);
  }
  return vec;
}

// incremental row-echelon rank growth over F_p
class ModularEchelon {
 public:
  explicit ModularEchelon(std::size_t width) : width_(width) {}

  // returns true (and absorbs the row) iff it increases the rank
  bool try_insert(std::vector<std::uint64_t> row) {
    for (const auto& [pivot_col, pivot_row] : rows_) {
      std::uint64_t f = row[pivot_col];
      if (f == 0) continue;
      for (std::size_t c = 0; c < width_; ++c) {
        std::uint64_t sub = mod_mul(f, pivot_row[c]);
        row[c] = (row[c] >= sub) ? row[c] - sub : row[c] + kPrime - sub;
      }
    }
    std::size_t lead = width_;
    for (std::size_t c = 0; c < width_; ++c)
      if (row[c] != 0) {
        lead = c;
        break;
      }
    if (lead == width_) return false;
    std::uint64_t inv = mod_inv(row[lead]);
    for (std::size_t c = 0; c < width_; ++c) row[c] = mod_mul(row[c], inv);
    rows_.emplace_back(lead, std::move(row));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t width_;
  std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> rows_;
};

bool exactly_tp(const RationalMatrix& j) {
  // Tr_out over the (in, out) row-major split of a 4x4
  for (int i = 0; i < 2; ++i)
    for (int ip = 0; ip < 2; ++ip) {
      GQ acc;
      for (int o = 0; o < 2; ++o) acc += j(2 * i + o, 2 * ip + o);
      if (acc != GQ(i == ip ? 1 : 0)) return false;
    }
  return true;
}

ChannelBasis select_exact_basis(const std::vector<RationalMatrix>& candidates, int k, long target,
                                const std::string& kind, std::uint64_t seed) {
  std::vector<std::vector<int>> monomials;
  std::vector<int> stack;
  enumerate_monomials(k, 0, stack, monomials);
  ModularEchelon ech(monomials.size());

  ChannelBasis basis;
  basis.kind = kind;
  basis.copies = k;
  basis.seed = seed;
  SpaceLayout io = SpaceLayout::concat(default_in_layout(2), default_out_layout(2));
  for (const auto& j : candidates) {
    if (!exactly_tp(j)) throw std::logic_error("basis candidate is not exactly TP");
    if (ech.try_insert(monomial_vector_mod(pauli_coords(j), monomials))) {
      basis.exact.push_back(RationalOperator(io, j));
      basis.elements.push_back(Operator(io, j.to_complex()));
      if (static_cast<long>(basis.exact.size()) == target) break;
    }
  }
  basis.span_dim = static_cast<long>(basis.exact.size());
  if (basis.span_dim != target)
    throw std::runtime_error(kind + " basis: achieved rank " + std::to_string(basis.span_dim) +
                             " != expected span dimension " + std::to_string(target));
  return basis;
}

}  // namespace

long span_dimension(long d_v, int k) {
  if (d_v < 1 || k < 1) throw std::invalid_argument("span_dimension: bad arguments");
  // binom(d_v - 1 + k, k) with 64-bit intermediate
  long n = d_v - 1 + k;
  long r = std::min<long>(k, n - k);
  unsigned long long acc = 1;
  for (long i = 1; i <= r; ++i) acc = acc * static_cast<unsigned long long>(n - r + i) / i;
  return static_cast<long>(acc);
}

ChannelBasis single_copy_basis() {
  std::vector<RationalMatrix> cands;
  cands.push_back(scaled_identity4(mpq_class(1, 2)));
  for (int i = 1; i <= 3; ++i)
    cands.push_back(scaled_identity4(mpq_class(1, 2)) + kron_q(pauli_q(0), pauli_q(i)));
  for (int j = 1; j <= 3; ++j)
    for (int kk = 1; kk <= 3; ++kk)
      cands.push_back(scaled_identity4(mpq_class(1, 2)) + kron_q(pauli_q(j), pauli_q(kk)));
  return select_exact_basis(cands, 1, 13, "pauli", 0);
}

ChannelBasis two_copy_basis() {
  auto rhos = rho_list_b2();
  auto sig_in = sigma_set({0, 1, 2, 3}, false);
  auto sig_out = sigma_set({1, 2, 3}, false);
  std::vector<RationalMatrix> cands;
  cands.push_back(scaled_identity4(mpq_class(1, 2)));
  // rho index outermost, then sign, then sigma indices
  for (const auto& rho : rhos)
    for (int sign : {+1, -1})
      for (const auto& si : sig_in)
        for (const auto& so : sig_out) {
          RationalMatrix term = kron_q(si, so);
          cands.push_back(sign > 0 ? rho + term : rho - term);
        }
  for (const auto& rho : rhos)
    for (const auto& sm : sig_in)
      for (const auto& sn : sig_out)
        for (const auto& sp : sig_in)
          for (const auto& sq : sig_out) cands.push_back(rho + kron_q(sm, sn) + kron_q(sp, sq));
  return select_exact_basis(cands, 2, span_dimension(13, 2), "pauli", 0);
}

ChannelBasis three_copy_basis() {
  auto rhos = rho_list_b3();
  auto sig_in = sigma_set({0, 1, 2, 3}, true);
  auto sig_out = sigma_set({1, 2, 3}, true);
  std::vector<RationalMatrix> cands;
  for (const auto& rho : rhos)
    for (int sign : {+1, -1})
      for (const auto& sj : sig_in)
        for (const auto& sk : sig_out)
          for (const auto& sl : sig_in)
            for (const auto& sm : sig_out) {
              RationalMatrix first = kron_q(sj, sk), second = kron_q(sl, sm);
              cands.push_back(sign > 0 ? rho + first + second : rho - first + second);
            }
  return select_exact_basis(cands, 3, span_dimension(13, 3), "pauli", 0);
}

ChannelBasis random_k_copy_basis(int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("random_k_copy_basis: k >= 1");
  const long target = span_dimension(13, k);
  Rng rng(seed);
  std::uniform_int_distribution<int> num(-2, 2);
  std::uniform_int_distribution<int> den_pick(0, 3);
  const std::array<int, 4> dens = {3, 4, 5, 7};
  std::vector<RationalMatrix> cands;
  const long cap = 20 * target + 200;
  for (long t = 0; t < cap; ++t) {
    RationalMatrix j = scaled_identity4(mpq_class(1, 2));
    for (int i = 1; i <= 3; ++i) {
      mpq_class alpha(num(rng), dens[den_pick(rng)]);
      alpha.canonicalize();
      if (alpha != 0) j += kron_q(pauli_q(0), pauli_q(i)).scaled(GQ(alpha));
    }
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        mpq_class gamma(num(rng), dens[den_pick(rng)]);
        gamma.canonicalize();
        if (gamma != 0) j += kron_q(pauli_q(a), pauli_q(b)).scaled(GQ(gamma));
      }
    cands.push_back(std::move(j));
  }
  return select_exact_basis(cands, k, target, "random", seed);
}

ChannelBasis unitary_k_copy_basis(int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("unitary_k_copy_basis: k >= 1");
  // dim span{|U><U|^{ox k}} for qubit unitaries: binom(2k+3, 3)
  long target = (2L * k + 3) * (2L * k + 2) * (2L * k + 1) / 6;
  std::vector<std::vector<int>> monomials;
  std::vector<int> stack;
  enumerate_monomials(k, 0, stack, monomials);

  ChannelBasis basis;
  basis.kind = "unitary";
  basis.copies = k;
  basis.seed = seed;
  Rng rng(seed);
  SpaceLayout io = SpaceLayout::concat(default_in_layout(2), default_out_layout(2));

  // incremental Gram-Schmidt on the monomial vectors, threshold 1e-8
  std::vector<Eigen::VectorXd> ortho;
  const long cap = 50 * target + 100;
  for (long t = 0; t < cap && basis.span_dim < target; ++t) {
    Matrix u = haar_unitary(2, rng);
    Operator choi = kraus_to_choi(unitary_channel(u));
    // real Pauli coordinates
    Eigen::VectorXd c(16);
    int idx = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        Matrix pab = pauli_q(a).to_complex();
        Matrix pb = pauli_q(b).to_complex();
        Matrix p(4, 4);
        for (int r = 0; r < 2; ++r)
          for (int cc = 0; cc < 2; ++cc) p.block(2 * r, 2 * cc, 2, 2) = pab(r, cc) * pb;
        c(idx++) = ((p * choi.mat).trace() / 4.0).real();
      }
    Eigen::VectorXd v(monomials.size());
    for (std::size_t m = 0; m < monomials.size(); ++m) {
      double prod = 1;
      for (int i : monomials[m]) prod *= c(i);
      v(static_cast<long>(m)) = prod;
    }
    double orig = v.norm();
    for (const auto& q : ortho) v -= q.dot(v) * q;
    if (v.norm() > 1e-8 * std::max(1.0, orig)) {
      ortho.push_back(v / v.norm());
      basis.elements.push_back(choi);
      ++basis.span_dim;
    }
  }
  if (basis.span_dim != target)
    throw std::runtime_error("unitary basis: resample bound exceeded before reaching rank " +
                             std::to_string(target));
  return basis;
}

double span_residual(const ChannelBasis& basis, const Operator& target_single_copy) {
  const int k = basis.copies;
  auto power_vec = [&](const Operator& j) {
    Operator acc = j;
    for (int i = 1; i < k; ++i) {
      Operator next = kron(relabeled(acc, [&] {
                             std::vector<std::string> l;
                             for (std::size_t s = 0; s < acc.layout.size(); ++s)
                               l.push_back("t" + std::to_string(s));
                             return l;
                           }()),
                           relabeled(j, {"u0", "u1"}));
      acc = next;
    }
    return Eigen::Map<const Vector>(acc.mat.data(), acc.mat.size()).eval();
  };
  Vector t = power_vec(target_single_copy);
  Matrix a(t.size(), basis.elements.size());
  for (std::size_t i = 0; i < basis.elements.size(); ++i) a.col(i) = power_vec(basis.elements[i]);
  Vector coeff = a.colPivHouseholderQr().solve(t);
  return (a * coeff - t).norm() / std::max(1.0, t.norm());
}

}  // namespace switchcert
