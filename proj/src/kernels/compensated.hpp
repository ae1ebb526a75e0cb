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

#ifndef PARTVAR_SRC_KERNELS_COMPENSATED_HPP_
#define PARTVAR_SRC_KERNELS_COMPENSATED_HPP_

#include <cmath>

namespace partvar::kernels::detail {

// Branch-free TwoSum (Knuth). s + e == a + b exactly, s == fl(a + b).
struct TwoSum {
  double s, e;
};
inline TwoSum two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

// Running compensated sum: the returned value is accurate to ~1 ulp of the
// exact sum as long as the compensation term itself does not overflow.
struct Accumulator {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const TwoSum t = two_sum(sum, v);
    sum = t.s;
    comp += t.e;
  }
  // Add a value together with a known rounding error of that value
  // (e.g. the FMA-recovered low part of a product).
  void add(double v, double v_err) {
    const TwoSum t = two_sum(sum, v);
    sum = t.s;
    comp += t.e + v_err;
  }
  void merge(const Accumulator& other) {
    const TwoSum t = two_sum(sum, other.sum);
    sum = t.s;
    comp += t.e + other.comp;
  }
  double result() const { return sum + comp; }
};

// Exact product split: p + e == a * b with p == fl(a * b).
inline double two_prod_err(double a, double b, double p) {
  return std::fma(a, b, -p);
}

}  // namespace partvar::kernels::detail

#endif  // PARTVAR_SRC_KERNELS_COMPENSATED_HPP_
