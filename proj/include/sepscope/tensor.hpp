// Copyright 2026 The sepscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEPSCOPE_TENSOR_HPP
#define SEPSCOPE_TENSOR_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace sepscope::detail {

inline std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

/// Applies a linear map along one axis of a row-major tensor.
///
/// The tensor is viewed as [outer][In][inner]; `kernel(in, out)` maps each
/// length-In fiber to a length-Out fiber, giving a tensor of shape
/// [outer][Out][inner]. Fibers are visited in index order so reductions are
/// reproducible.
template <std::size_t In, std::size_t Out, typename T, typename Kernel>
std::vector<T> transform_axis(std::span<const T> src, std::size_t outer, std::size_t inner,
                              Kernel&& kernel) {
  std::vector<T> dst(outer * Out * inner);
  std::array<T, In> fiber_in;
  std::array<T, Out> fiber_out;
  for (std::size_t o = 0; o < outer; ++o) {
    const T* s = src.data() + o * In * inner;
    T* d = dst.data() + o * Out * inner;
    for (std::size_t r = 0; r < inner; ++r) {
      for (std::size_t a = 0; a < In; ++a) fiber_in[a] = s[a * inner + r];
      kernel(fiber_in, fiber_out);
      for (std::size_t b = 0; b < Out; ++b) d[b * inner + r] = fiber_out[b];
    }
  }
  return dst;
}

/// Applies a per-qubit kernel to every axis of an N-axis tensor with radix In,
/// producing radix Out. Axis 0 (qubit 1) is the slowest-varying. The kernel is
/// called as kernel(axis, in, out).
template <std::size_t In, std::size_t Out, typename T, typename Kernel>
std::vector<T> transform_all_axes(std::vector<T> data, int num_axes, Kernel&& kernel) {
  for (int axis = num_axes - 1; axis >= 0; --axis) {
    // Axes > axis already carry radix Out.
    const std::size_t outer = ipow(In, axis);
    const std::size_t inner = ipow(Out, num_axes - 1 - axis);
    data = transform_axis<In, Out, T>(std::span<const T>(data), outer, inner,
                                      [&](const auto& in, auto& out) { kernel(axis, in, out); });
  }
  return data;
}

}  // namespace sepscope::detail

#endif  // SEPSCOPE_TENSOR_HPP
