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

// NEON lane (AArch64): 2-wide doubles, same compensation scheme as the
// AVX2 lane.

#if defined(__aarch64__) || defined(_M_ARM64)

#include <arm_neon.h>

#include "partvar/kernels.hpp"

#include "compensated.hpp"

namespace partvar::kernels::neon {
namespace {

using detail::Accumulator;
using detail::two_prod_err;

struct VecAccumulator {
  float64x2_t sum = vdupq_n_f64(0.0);
  float64x2_t comp = vdupq_n_f64(0.0);

  inline void add(float64x2_t v) {
    const float64x2_t s = vaddq_f64(sum, v);
    const float64x2_t bb = vsubq_f64(s, sum);
    const float64x2_t err =
        vaddq_f64(vsubq_f64(sum, vsubq_f64(s, bb)), vsubq_f64(v, bb));
    sum = s;
    comp = vaddq_f64(comp, err);
  }
  inline void add(float64x2_t v, float64x2_t v_err) {
    const float64x2_t s = vaddq_f64(sum, v);
    const float64x2_t bb = vsubq_f64(s, sum);
    const float64x2_t err =
        vaddq_f64(vsubq_f64(sum, vsubq_f64(s, bb)), vsubq_f64(v, bb));
    sum = s;
    comp = vaddq_f64(vaddq_f64(comp, err), v_err);
  }
  void fold_into(Accumulator& acc) const {
    acc.add(vgetq_lane_f64(sum, 0));
    acc.add(vgetq_lane_f64(sum, 1));
    acc.add(vgetq_lane_f64(comp, 0));
    acc.add(vgetq_lane_f64(comp, 1));
  }
};

// fl(a*b) and its exact error, vectorized via FMA.
inline float64x2_t prod_err(float64x2_t a, float64x2_t b, float64x2_t p) {
  return vfmaq_f64(vnegq_f64(p), a, b);  // a*b - p
}

}  // namespace

double sum(std::span<const double> x) {
  const std::size_t n = x.size();
  const double* p = x.data();
  VecAccumulator vacc;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vacc.add(vld1q_f64(p + i));
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
  for (; i + 2 <= n; i += 2) {
    const float64x2_t va = vld1q_f64(pa + i);
    const float64x2_t vb = vld1q_f64(pb + i);
    const float64x2_t prod = vmulq_f64(va, vb);
    vacc.add(prod, prod_err(va, vb, prod));
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
  const float64x2_t one = vdupq_n_f64(1.0);
  VecAccumulator vacc;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t vc = vld1q_f64(pc + i);
    const float64x2_t vb = vld1q_f64(pb + i);
    const float64x2_t w = vdivq_f64(vc, vsubq_f64(one, vc));
    const float64x2_t prod = vmulq_f64(vb, w);
    vacc.add(prod, prod_err(vb, w, prod));
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
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t ref = vdupq_n_f64(y_ref);
  VecAccumulator vacc;
  std::size_t j = 0;
  for (; j + 2 <= len; j += 2) {
    const float64x2_t d = vsubq_f64(ref, vld1q_f64(py + j));
    const float64x2_t vc = vld1q_f64(pc + j);
    const float64x2_t w = vdivq_f64(vc, vsubq_f64(one, vc));
    const float64x2_t term =
        vmulq_f64(vmulq_f64(vld1q_f64(pn + j), vmulq_f64(d, d)), w);
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
  const float64x2_t mu = vdupq_n_f64(center);
  VecAccumulator v1, v2, v3, v4;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t d = vsubq_f64(vld1q_f64(p + i), mu);
    const float64x2_t d2 = vmulq_f64(d, d);
    v1.add(d);
    v2.add(d2);
    v3.add(vmulq_f64(d2, d));
    v4.add(vmulq_f64(d2, d2));
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

}  // namespace partvar::kernels::neon

#endif  // aarch64
