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

#ifndef STYLENLG_KERNELS_H_
#define STYLENLG_KERNELS_H_

// Dense double-precision kernels used by the neural LM, the classifiers and
// PPLM. A scalar reference implementation is always available; an AVX2+FMA
// variant is selected at runtime when the CPU supports it. The environment
// variable STYLENLG_SIMD=scalar forces the reference path.

#include <cstddef>
#include <span>
#include <string_view>

namespace stylenlg::kernels {

enum class Backend { kScalar, kAvx2 };

// Function table for one backend. All matrices are row-major and densely
// packed (leading dimension == cols).
struct KernelTable {
  Backend backend;
  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // y = A x + bias (bias may be null)
  void (*gemv)(const double* a, std::size_t rows, std::size_t cols,
               const double* x, const double* bias, double* y);
  // y += A^T x
  void (*gemv_t_acc)(const double* a, std::size_t rows, std::size_t cols,
                     const double* x, double* y);
  // A += alpha * x y^T
  void (*ger)(double alpha, const double* x, std::size_t rows,
              const double* y, std::size_t cols, double* a);
};

const KernelTable& ScalarKernels();
// Null when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* Avx2Kernels();

// The table picked for this process. Resolved once, on first use.
const KernelTable& Active();

// Overrides the active backend (tests and benchmarks). Returns false if the
// requested backend is unavailable on this machine.
bool SetBackend(Backend backend);

std::string_view BackendName(Backend backend);

// Span conveniences over the active table.
inline double Dot(std::span<const double> a, std::span<const double> b) {
  return Active().dot(a.data(), b.data(), a.size());
}
inline void Axpy(double alpha, std::span<const double> x,
                 std::span<double> y) {
  Active().axpy(alpha, x.data(), y.data(), x.size());
}

}  // namespace stylenlg::kernels

#endif  // STYLENLG_KERNELS_H_
