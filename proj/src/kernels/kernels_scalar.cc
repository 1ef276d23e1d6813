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

#include "stylenlg/kernels.h"

namespace stylenlg::kernels {
namespace {

double DotScalar(const double* a, const double* b, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

void AxpyScalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void GemvScalar(const double* a, std::size_t rows, std::size_t cols,
                const double* x, const double* bias, double* y) {
  for (std::size_t r = 0; r < rows; ++r) {
    double sum = bias != nullptr ? bias[r] : 0.0;
    const double* row = a + r * cols;
    for (std::size_t c = 0; c < cols; ++c) sum += row[c] * x[c];
    y[r] = sum;
  }
}

void GemvTAccScalar(const double* a, std::size_t rows, std::size_t cols,
                    const double* x, double* y) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double xr = x[r];
    if (xr == 0.0) continue;
    const double* row = a + r * cols;
    for (std::size_t c = 0; c < cols; ++c) y[c] += xr * row[c];
  }
}

void GerScalar(double alpha, const double* x, std::size_t rows,
               const double* y, std::size_t cols, double* a) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double s = alpha * x[r];
    if (s == 0.0) continue;
    double* row = a + r * cols;
    for (std::size_t c = 0; c < cols; ++c) row[c] += s * y[c];
  }
}

}  // namespace

const KernelTable& ScalarKernels() {
  static const KernelTable table{Backend::kScalar, DotScalar,    AxpyScalar,
                                 GemvScalar,       GemvTAccScalar, GerScalar};
  return table;
}

}  // namespace stylenlg::kernels
