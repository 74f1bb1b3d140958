#include "morava/kernels/modarith.hpp"

#include <algorithm>

namespace morava::kernels {
namespace {

void scalar_add(std::span<const u64> a, std::span<const u64> b, std::span<u64> out, u64 m) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = add_mod(a[i], b[i], m);
}

void scalar_sub(std::span<const u64> a, std::span<const u64> b, std::span<u64> out, u64 m) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = sub_mod(a[i], b[i], m);
}

void scalar_scale(std::span<const u64> a, u64 s, std::span<u64> out, u64 m) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mul_mod(a[i], s, m);
}

void scalar_convolve(std::span<const u64> a, std::span<const u64> b, std::span<u64> out, u64 m) {
  for (std::size_t k = 0; k < out.size(); ++k) {
    // Each product is < 2^124; reducing per term keeps the sum in range.
    unsigned __int128 acc = 0;
    const std::size_t lo = k + 1 > b.size() ? k + 1 - b.size() : 0;
    const std::size_t hi = std::min(k + 1, a.size());
    for (std::size_t i = lo; i < hi; ++i) {
      acc += static_cast<unsigned __int128>(a[i]) * b[k - i] % m;
    }
    out[k] = static_cast<u64>(acc % m);
  }
}

}  // namespace

const KernelTable& scalar_kernels() noexcept {
  static const KernelTable table{Isa::scalar, scalar_add, scalar_sub, scalar_scale, scalar_convolve};
  return table;
}

}  // namespace morava::kernels
