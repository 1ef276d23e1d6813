// Copyright 2026 The stylenlg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Compiled with -mavx2 -mfma. Nothing in this file may run before the
// dispatcher has confirmed CPU support.

#include "stylenlg/kernels.h"

#if defined(STYLENLG_HAVE_AVX2)
#include <immintrin.h>

namespace stylenlg::kernels {
namespace {

inline double HorizontalSum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

double DotAvx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4),
                           _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double sum = HorizontalSum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

void AxpyAvx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void GemvAvx2(const double* a, std::size_t rows, std::size_t cols,
              const double* x, const double* bias, double* y) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double base = bias != nullptr ? bias[r] : 0.0;
    y[r] = base + DotAvx2(a + r * cols, x, cols);
  }
}

void GemvTAccAvx2(const double* a, std::size_t rows, std::size_t cols,
                  const double* x, double* y) {
  for (std::size_t r = 0; r < rows; ++r) {
    if (x[r] == 0.0) continue;
    AxpyAvx2(x[r], a + r * cols, y, cols);
  }
}

void GerAvx2(double alpha, const double* x, std::size_t rows, const double* y,
             std::size_t cols, double* a) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double s = alpha * x[r];
    if (s == 0.0) continue;
    AxpyAvx2(s, y, a + r * cols, cols);
  }
}

}  // namespace

const KernelTable* Avx2TableUnchecked() {
  static const KernelTable table{Backend::kAvx2, DotAvx2,      AxpyAvx2,
                                 GemvAvx2,       GemvTAccAvx2, GerAvx2};
  return &table;
}

}  // namespace stylenlg::kernels

#else

namespace stylenlg::kernels {
const KernelTable* Avx2TableUnchecked() { return nullptr; }
}  // namespace stylenlg::kernels

#endif
