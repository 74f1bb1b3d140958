#pragma once

// Residue-vector kernels over Z/m used by the truncated power-series layer.
//
// Every kernel has a portable scalar reference implementation. On x86-64 an
// AVX2 variant is compiled into the same binary and selected at runtime when
// the CPU supports it. Setting MORAVA_SIMD=scalar in the environment pins the
// scalar path (used by the equivalence tests and for debugging).
//
// Contract shared by all variants: inputs are residues in [0, m), m >= 2 and
// m < 2^62. Outputs are fully reduced. Variants must agree bit-for-bit.

#include <cstdint>
#include <span>
#include <string_view>

namespace morava::kernels {

using u64 = std::uint64_t;

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

struct KernelTable {
  Isa isa;
  // out[i] = (a[i] + b[i]) mod m
  void (*add_mod)(std::span<const u64> a, std::span<const u64> b, std::span<u64> out, u64 m);
  // out[i] = (a[i] - b[i]) mod m
  void (*sub_mod)(std::span<const u64> a, std::span<const u64> b, std::span<u64> out, u64 m);
  // out[i] = (s * a[i]) mod m
  void (*scale_mod)(std::span<const u64> a, u64 s, std::span<u64> out, u64 m);
  // Truncated product: out[k] = sum_{i+j=k} a[i] * b[j] mod m for k < out.size().
  void (*convolve_mod)(std::span<const u64> a, std::span<const u64> b, std::span<u64> out, u64 m);
};

const KernelTable& scalar_kernels() noexcept;

// nullptr when the variant was not compiled in or the CPU lacks the ISA.
const KernelTable* avx2_kernels() noexcept;

// The table chosen at first use: AVX2 when available, unless overridden
// through MORAVA_SIMD=scalar.
const KernelTable& active_kernels() noexcept;

// Modular helpers shared with the scalar code elsewhere in the library.
inline u64 mul_mod(u64 a, u64 b, u64 m) noexcept {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}
inline u64 add_mod(u64 a, u64 b, u64 m) noexcept {
  const u64 s = a + b;
  return s >= m ? s - m : s;
}
inline u64 sub_mod(u64 a, u64 b, u64 m) noexcept { return a >= b ? a - b : a + m - b; }

}  // namespace morava::kernels
