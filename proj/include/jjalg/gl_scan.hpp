#pragma once

// Batched homomorphism test for candidate matrices over F_p, used by the
// brute-force isomorphism oracle. A batch holds 8 candidate n x n matrices in
// structure-of-arrays layout: entries[r * n + c][lane] is F[r][c] of that lane,
// with column c the image of e_c. Kernels return a bitmask of the lanes that
// are invertible homomorphisms a -> b.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>

namespace jjalg::gl {

inline constexpr std::size_t kLanes = 8;
inline constexpr std::size_t kMaxDim = 3;

struct Problem {
  int n = 0;
  int p = 0;
  // Structure constants reduced into [0, p), indexed (i * n + j) * n + k.
  std::array<std::int32_t, kMaxDim * kMaxDim * kMaxDim> a{};
  std::array<std::int32_t, kMaxDim * kMaxDim * kMaxDim> b{};
};

using Batch = std::array<std::array<std::int32_t, kLanes>, kMaxDim * kMaxDim>;

enum class Kernel { Auto, Scalar, Avx2 };

std::uint32_t batch_scalar(const Problem &prob, const Batch &entries);

/// True when the AVX2 kernel was compiled in, the CPU supports it, and the
/// problem's exact intermediate values fit the kernel's float-based residue test.
bool avx2_usable(const Problem &prob);
std::uint32_t batch_avx2(const Problem &prob, const Batch &entries);

Kernel resolve(Kernel requested, const Problem &prob);
const char *kernel_name(Kernel k);

/// Scans all p^(n*n) matrices in index order (entry 0 is the least significant
/// base-p digit) and returns the index of the first invertible homomorphism.
std::optional<std::uint64_t> scan_first(const Problem &prob, Kernel kernel);
/// Number of invertible homomorphisms (the size of the iso set).
std::uint64_t scan_count(const Problem &prob, Kernel kernel);

/// Entries of the matrix with the given scan index.
std::array<std::int32_t, kMaxDim * kMaxDim> decode(const Problem &prob, std::uint64_t index);

} // namespace jjalg::gl
