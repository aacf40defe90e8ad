#include "jjalg/gl_scan.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace jjalg::gl {

namespace {

bool lane_ok(const Problem &prob, const Batch &e, std::size_t lane) {
  const int n = prob.n, p = prob.p;
  auto F = [&](int r, int c) {
    return static_cast<std::int64_t>(e[static_cast<std::size_t>(r * n + c)][lane]);
  };

  std::int64_t det = 0;
  if (n == 1)
    det = F(0, 0);
  else if (n == 2)
    det = F(0, 0) * F(1, 1) - F(0, 1) * F(1, 0);
  else if (n == 3)
    det = F(0, 0) * (F(1, 1) * F(2, 2) - F(1, 2) * F(2, 1)) -
          F(0, 1) * (F(1, 0) * F(2, 2) - F(1, 2) * F(2, 0)) +
          F(0, 2) * (F(1, 0) * F(2, 1) - F(1, 1) * F(2, 0));
  if (det % p == 0)
    return false;

  auto A = [&](int i, int j, int k) { return prob.a[static_cast<std::size_t>((i * n + j) * n + k)]; };
  auto B = [&](int i, int j, int k) { return prob.b[static_cast<std::size_t>((i * n + j) * n + k)]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < n; ++r) {
        std::int64_t lhs = 0, rhs = 0;
        for (int k = 0; k < n; ++k)
          lhs += A(i, j, k) * F(r, k);
        for (int s = 0; s < n; ++s)
          for (int t = 0; t < n; ++t)
            rhs += F(s, i) * F(t, j) * B(s, t, r);
        if ((lhs - rhs) % p != 0)
          return false;
      }
  return true;
}

} // namespace

std::uint32_t batch_scalar(const Problem &prob, const Batch &entries) {
  std::uint32_t mask = 0;
  for (std::size_t lane = 0; lane < kLanes; ++lane)
    if (lane_ok(prob, entries, lane))
      mask |= 1u << lane;
  return mask;
}

#ifdef JJALG_HAVE_AVX2_KERNEL
bool avx2_usable(const Problem &prob) {
  if (!__builtin_cpu_supports("avx2"))
    return false;
  // Largest exact intermediate: the homomorphism residual or the 3x3 determinant.
  const long long pm = prob.p - 1;
  const long long n = prob.n;
  const long long bound = std::max(n * n * pm * pm * pm + n * pm * pm, 6 * pm * pm * pm);
  return bound < (1LL << 22);
}
#else
bool avx2_usable(const Problem &) { return false; }
std::uint32_t batch_avx2(const Problem &, const Batch &) {
  throw std::logic_error("AVX2 kernel not compiled in");
}
#endif

Kernel resolve(Kernel requested, const Problem &prob) {
  switch (requested) {
  case Kernel::Scalar:
    return Kernel::Scalar;
  case Kernel::Avx2:
    if (!avx2_usable(prob))
      throw std::runtime_error("AVX2 kernel requested but not usable here");
    return Kernel::Avx2;
  case Kernel::Auto:
    break;
  }
  return avx2_usable(prob) ? Kernel::Avx2 : Kernel::Scalar;
}

const char *kernel_name(Kernel k) {
  switch (k) {
  case Kernel::Auto:
    return "auto";
  case Kernel::Scalar:
    return "scalar";
  case Kernel::Avx2:
    return "avx2";
  }
  return "?";
}

std::array<std::int32_t, kMaxDim * kMaxDim> decode(const Problem &prob, std::uint64_t index) {
  std::array<std::int32_t, kMaxDim * kMaxDim> out{};
  const auto cells = static_cast<std::size_t>(prob.n * prob.n);
  for (std::size_t e = 0; e < cells; ++e) {
    out[e] = static_cast<std::int32_t>(index % static_cast<std::uint64_t>(prob.p));
    index /= static_cast<std::uint64_t>(prob.p);
  }
  return out;
}

namespace {

template <typename Visit>
void scan(const Problem &prob, Kernel kernel, Visit &&visit) {
  if (prob.n < 1 || prob.n > static_cast<int>(kMaxDim))
    throw std::invalid_argument("gl scan supports dimensions 1.." + std::to_string(kMaxDim));
  const Kernel k = resolve(kernel, prob);
  const auto cells = static_cast<std::size_t>(prob.n * prob.n);
  std::uint64_t total = 1;
  for (std::size_t e = 0; e < cells; ++e)
    total *= static_cast<std::uint64_t>(prob.p);

  std::array<std::int32_t, kMaxDim * kMaxDim> digits{};
  Batch batch{};
  std::uint64_t base = 0;
  while (base < total) {
    const std::size_t lanes =
        static_cast<std::size_t>(std::min<std::uint64_t>(kLanes, total - base));
    for (std::size_t lane = 0; lane < kLanes; ++lane) {
      if (lane >= lanes) {
        for (std::size_t e = 0; e < cells; ++e)
          batch[e][lane] = 0;
        continue;
      }
      for (std::size_t e = 0; e < cells; ++e)
        batch[e][lane] = digits[e];
      for (std::size_t e = 0; e < cells; ++e) {
        if (++digits[e] < prob.p)
          break;
        digits[e] = 0;
      }
    }
    std::uint32_t mask = k == Kernel::Avx2 ? batch_avx2(prob, batch) : batch_scalar(prob, batch);
    mask &= (1u << lanes) - 1u;
    if (mask && !visit(base, mask))
      return;
    base += lanes;
  }
}

} // namespace

std::optional<std::uint64_t> scan_first(const Problem &prob, Kernel kernel) {
  std::optional<std::uint64_t> found;
  scan(prob, kernel, [&](std::uint64_t base, std::uint32_t mask) {
    found = base + static_cast<std::uint64_t>(__builtin_ctz(mask));
    return false;
  });
  return found;
}

std::uint64_t scan_count(const Problem &prob, Kernel kernel) {
  std::uint64_t count = 0;
  scan(prob, kernel, [&](std::uint64_t, std::uint32_t mask) {
    count += static_cast<std::uint64_t>(__builtin_popcount(mask));
    return true;
  });
  return count;
}

} // namespace jjalg::gl
