#pragma once

// Index-level kernels shared by the floating Operator and the exact rational
// matrices. A matrix type only needs rows()/cols() and operator()(i,j).

#include "switchcert/layout.hpp"

namespace switchcert::detail {

template <class MatOut, class MatA, class MatB>
void kron_into(const MatA& a, const MatB& b, MatOut& out) {
  const long ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  for (long i = 0; i < ra; ++i)
    for (long j = 0; j < ca; ++j)
      for (long k = 0; k < rb; ++k)
        for (long l = 0; l < cb; ++l) out(i * rb + k, j * cb + l) = a(i, j) * b(k, l);
}

template <class Scalar, class Mat>
void partial_trace_into(const Mat& in, const IndexSplit& split, Mat& out) {
  for (long r1 = 0; r1 < split.rest_total; ++r1)
    for (long r2 = 0; r2 < split.rest_total; ++r2) {
      Scalar acc(0);
      for (long s = 0; s < split.sub_total; ++s)
        acc += in(split.sub_offset[s] + split.rest_offset[r1],
                  split.sub_offset[s] + split.rest_offset[r2]);
      out(r1, r2) = acc;
    }
}

template <class Mat>
void partial_transpose_into(const Mat& in, const IndexSplit& split, Mat& out) {
  for (long s1 = 0; s1 < split.sub_total; ++s1)
    for (long s2 = 0; s2 < split.sub_total; ++s2)
      for (long r1 = 0; r1 < split.rest_total; ++r1)
        for (long r2 = 0; r2 < split.rest_total; ++r2)
          out(split.sub_offset[s1] + split.rest_offset[r1],
              split.sub_offset[s2] + split.rest_offset[r2]) =
              in(split.sub_offset[s2] + split.rest_offset[r1],
                 split.sub_offset[s1] + split.rest_offset[r2]);
}

// _X C = Tr_X(C) otimes 1/d_X, re-embedded at the original positions.
// `inv_dim` must equal 1/sub_total in the matrix scalar type.
template <class Scalar, class Mat>
void trace_and_replace_into(const Mat& in, const IndexSplit& split, const Scalar& inv_dim, Mat& out) {
  for (long r1 = 0; r1 < split.rest_total; ++r1)
    for (long r2 = 0; r2 < split.rest_total; ++r2) {
      Scalar acc(0);
      for (long s = 0; s < split.sub_total; ++s)
        acc += in(split.sub_offset[s] + split.rest_offset[r1],
                  split.sub_offset[s] + split.rest_offset[r2]);
      acc = acc * inv_dim;
      for (long s1 = 0; s1 < split.sub_total; ++s1)
        for (long s2 = 0; s2 < split.sub_total; ++s2)
          out(split.sub_offset[s1] + split.rest_offset[r1],
              split.sub_offset[s2] + split.rest_offset[r2]) = (s1 == s2) ? acc : Scalar(0);
    }
}

template <class Mat>
void permute_into(const Mat& in, const std::vector<long>& index_map, Mat& out) {
  const long n = in.rows();
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) out(index_map[i], index_map[j]) = in(i, j);
}

// Link product over the shared systems: F*G = Tr_ov[(F ox 1)(1 ox G^{T_ov})].
// `g_sub_of_f_sub` matches the overlap multi-index enumerations of the two
// operands by label (their relative orders within the layouts may differ).
// Result indices are (f_rest, g_rest), row-major.
template <class Scalar, class Mat>
void link_into(const Mat& f, const IndexSplit& sf, const Mat& g, const IndexSplit& sg,
               const std::vector<long>& g_sub_of_f_sub, Mat& out) {
  for (long a1 = 0; a1 < sf.rest_total; ++a1)
    for (long b1 = 0; b1 < sf.rest_total; ++b1)
      for (long a3 = 0; a3 < sg.rest_total; ++a3)
        for (long b3 = 0; b3 < sg.rest_total; ++b3) {
          Scalar acc(0);
          for (long x = 0; x < sf.sub_total; ++x) {
            const long gx = sg.sub_offset[g_sub_of_f_sub[x]];
            for (long y = 0; y < sf.sub_total; ++y) {
              const long gy = sg.sub_offset[g_sub_of_f_sub[y]];
              acc += f(sf.rest_offset[a1] + sf.sub_offset[x],
                       sf.rest_offset[b1] + sf.sub_offset[y]) *
                     g(gx + sg.rest_offset[a3], gy + sg.rest_offset[b3]);
            }
          }
          out(a1 * sg.rest_total + a3, b1 * sg.rest_total + b3) = acc;
        }
}

// Maps each overlap multi-index enumerated in `a` digit order to the same
// multi-index enumerated in `b` digit order. `b_axis_of_a_axis[i]` gives, for
// the i-th overlap system of a, its axis among b's overlap systems.
std::vector<long> sub_index_remap(const std::vector<int>& a_dims,
                                  const std::vector<int>& b_dims,
                                  const std::vector<int>& b_axis_of_a_axis);

}  // namespace switchcert::detail
