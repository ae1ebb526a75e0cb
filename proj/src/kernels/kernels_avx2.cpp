// Copyright 2026 The partvar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// AVX2+FMA lane: 4-wide doubles, vectorized TwoSum compensation, scalar
// tail. Per-element arithmetic matches the scalar lane operation for
// operation (IEEE), only the accumulation order differs; compensation keeps
// both lanes within ~1 ulp of the exact reduction.
//
// This translation unit is compiled with -mavx2 -mfma; the dispatcher only
// calls into it after a runtime CPU check.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "partvar/kernels.hpp"

#include "compensated.hpp"

namespace partvar::kernels::avx2 {
namespace {

using detail::Accumulator;
using detail::two_prod_err;

// 4 independent compensated accumulators.
struct VecAccumulator {
  __m256d sum = _mm256_setzero_pd();
  __m256d comp = _mm256_setzero_pd();

  // TwoSum(sum, v), vectorized.
  inline void add(__m256d v) {
    const __m256d s = _mm256_add_pd(sum, v);
    const __m256d bb = _mm256_sub_pd(s, sum);
    const __m256d err = _mm256_add_pd(
        _mm256_sub_pd(sum, _mm256_sub_pd(s, bb)), _mm256_sub_pd(v, bb));
    sum = s;
    comp = _mm256_add_pd(comp, err);
  }
  inline void add(__m256d v, __m256d v_err) {
    const __m256d s = _mm256_add_pd(sum, v);
    const __m256d bb = _mm256_sub_pd(s, sum);
    const __m256d err = _mm256_add_pd(
        _mm256_sub_pd(sum, _mm256_sub_pd(s, bb)), _mm256_sub_pd(v, bb));
    sum = s;
    comp = _mm256_add_pd(_mm256_add_pd(comp, err), v_err);
  }
  // Fold the 4 lanes (and their compensations) into a scalar accumulator.
  void fold_into(Accumulator& acc) const {
    alignas(32) double s[4], c[4];
    _mm256_store_pd(s, sum);
    _mm256_store_pd(c, comp);
    for (int k = 0; k < 4; ++k) acc.add(s[k]);
    for (int k = 0; k < 4; ++k) acc.add(c[k]);
  }
};

}  // namespace

double sum(std::span<const double> x) {
  const std::size_t n = x.size();
  const double* p = x.data();
  VecAccumulator vacc;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) vacc.add(_mm256_loadu_pd(p + i));
  Accumulator acc;
  vacc.fold_into(acc);
  for (; i < n; ++i) acc.add(p[i]);
  return acc.result();
}

double dot(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  const double* pa = a.data();
  const double* pb = b.data();
  VecAccumulator vacc;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va = _mm256_loadu_pd(pa + i);
    const __m256d vb = _mm256_loadu_pd(pb + i);
    const __m256d prod = _mm256_mul_pd(va, vb);
    const __m256d perr = _mm256_fmsub_pd(va, vb, prod);  // a*b - fl(a*b)
    vacc.add(prod, perr);
  }
  Accumulator acc;
  vacc.fold_into(acc);
  for (; i < n; ++i) {
    const double prod = pa[i] * pb[i];
    acc.add(prod, two_prod_err(pa[i], pb[i], prod));
  }
  return acc.result();
}

double ratio_dot(std::span<const double> c, std::span<const double> b) {
  const std::size_t n = c.size();
  const double* pc = c.data();
  const double* pb = b.data();
  const __m256d one = _mm256_set1_pd(1.0);
  VecAccumulator vacc;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vc = _mm256_loadu_pd(pc + i);
    const __m256d vb = _mm256_loadu_pd(pb + i);
    const __m256d w = _mm256_div_pd(vc, _mm256_sub_pd(one, vc));
    const __m256d prod = _mm256_mul_pd(vb, w);
    const __m256d perr = _mm256_fmsub_pd(vb, w, prod);
    vacc.add(prod, perr);
  }
  Accumulator acc;
  vacc.fold_into(acc);
  for (; i < n; ++i) {
    const double w = pc[i] / (1.0 - pc[i]);
    const double prod = pb[i] * w;
    acc.add(prod, two_prod_err(pb[i], w, prod));
  }
  return acc.result();
}

double pair_diff_row(double y_ref, std::span<const double> c,
                     std::span<const double> n, std::span<const double> y) {
  const std::size_t len = c.size();
  const double* pc = c.data();
  const double* pn = n.data();
  const double* py = y.data();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d ref = _mm256_set1_pd(y_ref);
  VecAccumulator vacc;
  std::size_t j = 0;
  for (; j + 4 <= len; j += 4) {
    const __m256d d = _mm256_sub_pd(ref, _mm256_loadu_pd(py + j));
    const __m256d vc = _mm256_loadu_pd(pc + j);
    const __m256d w = _mm256_div_pd(vc, _mm256_sub_pd(one, vc));
    const __m256d term = _mm256_mul_pd(
        _mm256_mul_pd(_mm256_loadu_pd(pn + j), _mm256_mul_pd(d, d)), w);
    vacc.add(term);
  }
  Accumulator acc;
  vacc.fold_into(acc);
  for (; j < len; ++j) {
    const double d = y_ref - py[j];
    const double w = pc[j] / (1.0 - pc[j]);
    acc.add((pn[j] * (d * d)) * w);
  }
  return acc.result();
}

MomentSums moment_sums(std::span<const double> x, double center) {
  const std::size_t n = x.size();
  const double* p = x.data();
  const __m256d mu = _mm256_set1_pd(center);
  VecAccumulator v1, v2, v3, v4;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(p + i), mu);
    const __m256d d2 = _mm256_mul_pd(d, d);
    v1.add(d);
    v2.add(d2);
    v3.add(_mm256_mul_pd(d2, d));
    v4.add(_mm256_mul_pd(d2, d2));
  }
  Accumulator a1, a2, a3, a4;
  v1.fold_into(a1);
  v2.fold_into(a2);
  v3.fold_into(a3);
  v4.fold_into(a4);
  for (; i < n; ++i) {
    const double d = p[i] - center;
    const double d2 = d * d;
    a1.add(d);
    a2.add(d2);
    a3.add(d2 * d);
    a4.add(d2 * d2);
  }
  return {a1.result(), a2.result(), a3.result(), a4.result()};
}

}  // namespace partvar::kernels::avx2

#endif  // x86_64
