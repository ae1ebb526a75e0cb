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

// Scalar reference lane. Plain loops, compensated accumulation. The SIMD
// lanes are equivalence-tested against these implementations.

#include "partvar/kernels.hpp"

#include "compensated.hpp"

namespace partvar::kernels::scalar {

using detail::Accumulator;
using detail::two_prod_err;

double sum(std::span<const double> x) {
  Accumulator acc;
  for (double v : x) acc.add(v);
  return acc.result();
}

double dot(std::span<const double> a, std::span<const double> b) {
  Accumulator acc;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double p = a[i] * b[i];
    acc.add(p, two_prod_err(a[i], b[i], p));
  }
  return acc.result();
}

double ratio_dot(std::span<const double> c, std::span<const double> b) {
  Accumulator acc;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double w = c[i] / (1.0 - c[i]);
    const double p = b[i] * w;
    acc.add(p, two_prod_err(b[i], w, p));
  }
  return acc.result();
}

double pair_diff_row(double y_ref, std::span<const double> c,
                     std::span<const double> n, std::span<const double> y) {
  Accumulator acc;
  const std::size_t len = c.size();
  for (std::size_t j = 0; j < len; ++j) {
    const double d = y_ref - y[j];
    const double w = c[j] / (1.0 - c[j]);
    // d == 0 must yield exactly 0 even when w is huge.
    acc.add((n[j] * (d * d)) * w);
  }
  return acc.result();
}

MomentSums moment_sums(std::span<const double> x, double center) {
  Accumulator a1, a2, a3, a4;
  for (double v : x) {
    const double d = v - center;
    const double d2 = d * d;
    a1.add(d);
    a2.add(d2);
    a3.add(d2 * d);
    a4.add(d2 * d2);
  }
  return {a1.result(), a2.result(), a3.result(), a4.result()};
}

}  // namespace partvar::kernels::scalar
