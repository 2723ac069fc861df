// AVX2 + FMA variant of the theta-grid objective. Compiled with -mavx2 -mfma
// and only called after a runtime CPU check.

#include <immintrin.h>

#include <cfloat>

#include "xdiscord/kernels.hpp"

namespace xdiscord::kernels {
namespace {

// Natural log for positive normal doubles, four lanes at a time. Range
// reduction to m in [sqrt(1/2), sqrt(2)) followed by the Cephes rational
// approximation of log(1 + x); about 1 ulp against std::log.
inline __m256d log_pd(__m256d x) noexcept {
  const __m256i bits = _mm256_castpd_si256(x);

  const __m256d two52 = _mm256_set1_pd(0x1p52);
  const __m256i exp_bits = _mm256_srli_epi64(bits, 52);
  __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(exp_bits, _mm256_castpd_si256(two52))), two52);
  e = _mm256_sub_pd(e, _mm256_set1_pd(1022.0));

  const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
  const __m256i half_exp = _mm256_set1_epi64x(0x3FE0000000000000LL);
  const __m256d m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mant_mask), half_exp));

  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d below = _mm256_cmp_pd(m, _mm256_set1_pd(0.70710678118654752440), _CMP_LT_OQ);
  e = _mm256_sub_pd(e, _mm256_and_pd(below, one));
  const __m256d t = _mm256_add_pd(_mm256_sub_pd(m, one), _mm256_and_pd(below, m));

  __m256d p = _mm256_set1_pd(1.01875663804580931796E-4);
  p = _mm256_fmadd_pd(p, t, _mm256_set1_pd(4.97494994976747001425E-1));
  p = _mm256_fmadd_pd(p, t, _mm256_set1_pd(4.70579119878881725854E0));
  p = _mm256_fmadd_pd(p, t, _mm256_set1_pd(1.44989225341610930846E1));
  p = _mm256_fmadd_pd(p, t, _mm256_set1_pd(1.79368678507819816313E1));
  p = _mm256_fmadd_pd(p, t, _mm256_set1_pd(7.70838733755885391666E0));

  __m256d q = _mm256_add_pd(t, _mm256_set1_pd(1.12873587189167450590E1));
  q = _mm256_fmadd_pd(q, t, _mm256_set1_pd(4.52279145837532221105E1));
  q = _mm256_fmadd_pd(q, t, _mm256_set1_pd(8.29875266912776603211E1));
  q = _mm256_fmadd_pd(q, t, _mm256_set1_pd(7.11544750618563894466E1));
  q = _mm256_fmadd_pd(q, t, _mm256_set1_pd(2.31251620126765340583E1));

  const __m256d z = _mm256_mul_pd(t, t);
  __m256d y = _mm256_mul_pd(t, _mm256_div_pd(_mm256_mul_pd(z, p), q));
  y = _mm256_fnmadd_pd(e, _mm256_set1_pd(2.121944400546905827679e-4), y);
  y = _mm256_fnmadd_pd(_mm256_set1_pd(0.5), z, y);
  __m256d r = _mm256_add_pd(t, y);
  r = _mm256_fmadd_pd(e, _mm256_set1_pd(0.693359375), r);
  return r;
}

inline __m256d xlogx_pd(__m256d x) noexcept {
  const __m256d positive = _mm256_cmp_pd(x, _mm256_set1_pd(DBL_MIN), _CMP_GE_OQ);
  const __m256d safe = _mm256_blendv_pd(_mm256_set1_pd(1.0), x, positive);
  return _mm256_and_pd(positive, _mm256_mul_pd(safe, log_pd(safe)));
}

}  // namespace

void conditional_entropy_grid_avx2(const ThetaObjective& objective, const double* cos_theta,
                                   const double* sin2_theta, std::size_t n, double* out) noexcept {
  const __m256d zc = _mm256_set1_pd(objective.z);
  const __m256d uc = _mm256_set1_pd(objective.u);
  const __m256d vc = _mm256_set1_pd(objective.v);
  const __m256d cc = _mm256_set1_pd(objective.coherence);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d quarter = _mm256_set1_pd(0.25);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d zero = _mm256_setzero_pd();

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d ct = _mm256_loadu_pd(cos_theta + i);
    const __m256d s2 = _mm256_loadu_pd(sin2_theta + i);

    const __m256d z = _mm256_mul_pd(zc, ct);
    const __m256d v = _mm256_mul_pd(vc, ct);
    const __m256d coh = _mm256_mul_pd(cc, s2);
    const __m256d p = _mm256_add_pd(uc, v);
    const __m256d m = _mm256_sub_pd(uc, v);
    const __m256d r12 = _mm256_sqrt_pd(_mm256_max_pd(zero, _mm256_fmadd_pd(p, p, coh)));
    const __m256d r34 = _mm256_sqrt_pd(_mm256_max_pd(zero, _mm256_fmadd_pd(m, m, coh)));

    const __m256d plus = _mm256_add_pd(one, z);
    const __m256d minus = _mm256_sub_pd(one, z);

    __m256d joint = xlogx_pd(_mm256_mul_pd(_mm256_add_pd(plus, r12), quarter));
    joint = _mm256_add_pd(joint, xlogx_pd(_mm256_mul_pd(_mm256_sub_pd(plus, r12), quarter)));
    joint = _mm256_add_pd(joint, xlogx_pd(_mm256_mul_pd(_mm256_add_pd(minus, r34), quarter)));
    joint = _mm256_add_pd(joint, xlogx_pd(_mm256_mul_pd(_mm256_sub_pd(minus, r34), quarter)));
    const __m256d measured =
        _mm256_add_pd(xlogx_pd(_mm256_mul_pd(plus, half)), xlogx_pd(_mm256_mul_pd(minus, half)));

    _mm256_storeu_pd(out + i, _mm256_sub_pd(measured, joint));
  }
  if (i < n) conditional_entropy_grid_scalar(objective, cos_theta + i, sin2_theta + i, n - i, out + i);
}

}  // namespace xdiscord::kernels
