// Compiled with -mavx2. Only reached after a runtime CPU check.
#include "jjalg/gl_scan.hpp"

#include <immintrin.h>

namespace jjalg::gl {

namespace {

// Exact products stay below 2^22 in magnitude, so x * (1/p) in single
// precision rounds to the true quotient whenever p divides x, and the
// residue x - p * round(x / p) is zero exactly in that case.
inline __m256i divisible(__m256i x, __m256 invp, __m256i pv) {
  __m256 q = _mm256_round_ps(_mm256_mul_ps(_mm256_cvtepi32_ps(x), invp),
                             _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(_mm256_cvtps_epi32(q), pv));
  return _mm256_cmpeq_epi32(r, _mm256_setzero_si256());
}

inline __m256i mul(__m256i a, __m256i b) { return _mm256_mullo_epi32(a, b); }

} // namespace

std::uint32_t batch_avx2(const Problem &prob, const Batch &entries) {
  const int n = prob.n;
  __m256i F[kMaxDim][kMaxDim] = {};
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      F[r][c] = _mm256_loadu_si256(
          reinterpret_cast<const __m256i *>(entries[static_cast<std::size_t>(r * n + c)].data()));

  const __m256 invp = _mm256_set1_ps(1.0f / static_cast<float>(prob.p));
  const __m256i pv = _mm256_set1_epi32(prob.p);

  __m256i det;
  if (n == 1) {
    det = F[0][0];
  } else if (n == 2) {
    det = _mm256_sub_epi32(mul(F[0][0], F[1][1]), mul(F[0][1], F[1][0]));
  } else {
    __m256i m0 = _mm256_sub_epi32(mul(F[1][1], F[2][2]), mul(F[1][2], F[2][1]));
    __m256i m1 = _mm256_sub_epi32(mul(F[1][0], F[2][2]), mul(F[1][2], F[2][0]));
    __m256i m2 = _mm256_sub_epi32(mul(F[1][0], F[2][1]), mul(F[1][1], F[2][0]));
    det = _mm256_add_epi32(_mm256_sub_epi32(mul(F[0][0], m0), mul(F[0][1], m1)),
                           mul(F[0][2], m2));
  }
  // ok = lanes where det is NOT divisible by p
  __m256i ok = _mm256_andnot_si256(divisible(det, invp, pv), _mm256_set1_epi32(-1));
  if (_mm256_testz_si256(ok, ok))
    return 0;

  auto A = [&](int i, int j, int k) { return prob.a[static_cast<std::size_t>((i * n + j) * n + k)]; };
  auto B = [&](int i, int j, int k) { return prob.b[static_cast<std::size_t>((i * n + j) * n + k)]; };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // pair[s][t] = F[s][i] * F[t][j]
      __m256i pair[kMaxDim][kMaxDim];
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
          pair[s][t] = mul(F[s][i], F[t][j]);
      for (int r = 0; r < n; ++r) {
        __m256i diff = _mm256_setzero_si256();
        for (int k = 0; k < n; ++k)
          if (A(i, j, k))
            diff = _mm256_add_epi32(diff, mul(_mm256_set1_epi32(A(i, j, k)), F[r][k]));
        for (int s = 0; s < n; ++s)
          for (int t = 0; t < n; ++t)
            if (B(s, t, r))
              diff = _mm256_sub_epi32(diff, mul(_mm256_set1_epi32(B(s, t, r)), pair[s][t]));
        ok = _mm256_and_si256(ok, divisible(diff, invp, pv));
      }
      if (_mm256_testz_si256(ok, ok))
        return 0;
    }
  return static_cast<std::uint32_t>(_mm256_movemask_ps(_mm256_castsi256_ps(ok)));
}

} // namespace jjalg::gl
