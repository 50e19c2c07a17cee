#include "ntt.hpp"

#include <bit>
#include <stdexcept>

namespace reprfn::detail {

namespace {

// Montgomery arithmetic with R = 2^32.
constexpr std::uint32_t kP = kNttPrime;

constexpr std::uint32_t neg_inverse(std::uint32_t p) noexcept {
  std::uint32_t inv = p;  // Newton: correct to 3 bits, doubling each step
  for (int i = 0; i < 4; ++i) inv *= 2 - p * inv;
  return 0u - inv;
}

constexpr std::uint32_t kPNegInv = neg_inverse(kP);
constexpr std::uint32_t kR2 =
    static_cast<std::uint32_t>((static_cast<unsigned __int128>(1) << 64) % kP);

constexpr std::uint32_t reduce(std::uint64_t t) noexcept {
  const std::uint32_t m = static_cast<std::uint32_t>(t) * kPNegInv;
  const auto u = static_cast<std::uint32_t>((t + static_cast<std::uint64_t>(m) * kP) >> 32);
  return u >= kP ? u - kP : u;
}

constexpr std::uint32_t mont_mul(std::uint32_t a, std::uint32_t b) noexcept {
  return reduce(static_cast<std::uint64_t>(a) * b);
}

constexpr std::uint32_t to_mont(std::uint32_t a) noexcept { return mont_mul(a, kR2); }
constexpr std::uint32_t from_mont(std::uint32_t a) noexcept { return reduce(a); }

constexpr std::uint32_t mont_pow(std::uint32_t base, std::uint64_t e) noexcept {
  std::uint32_t result = to_mont(1);
  while (e > 0) {
    if (e & 1) result = mont_mul(result, base);
    base = mont_mul(base, base);
    e >>= 1;
  }
  return result;
}

static_assert(from_mont(mont_mul(to_mont(123456789u), to_mont(987654321u))) ==
              static_cast<std::uint32_t>(123456789ull * 987654321ull % kP));

// Forward transform, decimation in frequency: natural order in, bit-reversed
// order out. Values are in Montgomery form.
void forward_dif(std::span<std::uint32_t> a) {
  const std::size_t n = a.size();
  std::vector<std::uint32_t> twiddle(n / 2 > 0 ? n / 2 : 1);
  const std::uint32_t root = to_mont(kNttRoot);
  for (std::size_t len = n; len >= 2; len >>= 1) {
    const std::size_t half = len / 2;
    const std::uint32_t w = mont_pow(root, (kP - 1) / len);
    twiddle[0] = to_mont(1);
    for (std::size_t t = 1; t < half; ++t) twiddle[t] = mont_mul(twiddle[t - 1], w);
    for (std::size_t start = 0; start < n; start += len) {
      std::uint32_t* lo = a.data() + start;
      std::uint32_t* hi = lo + half;
      for (std::size_t t = 0; t < half; ++t) {
        const std::uint32_t x = lo[t];
        const std::uint32_t y = hi[t];
        const std::uint32_t sum = x + y;  // < 2p < 2^32
        lo[t] = sum >= kP ? sum - kP : sum;
        hi[t] = mont_mul(x >= y ? x - y : x + kP - y, twiddle[t]);
      }
    }
  }
}

// Inverse transform, decimation in time: bit-reversed order in, natural
// order out, scaled by 1/n.
void inverse_dit(std::span<std::uint32_t> a) {
  const std::size_t n = a.size();
  std::vector<std::uint32_t> twiddle(n / 2 > 0 ? n / 2 : 1);
  const std::uint32_t root_inv = mont_pow(to_mont(kNttRoot), kP - 2);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::uint32_t w = mont_pow(root_inv, (kP - 1) / len);
    twiddle[0] = to_mont(1);
    for (std::size_t t = 1; t < half; ++t) twiddle[t] = mont_mul(twiddle[t - 1], w);
    for (std::size_t start = 0; start < n; start += len) {
      std::uint32_t* lo = a.data() + start;
      std::uint32_t* hi = lo + half;
      for (std::size_t t = 0; t < half; ++t) {
        const std::uint32_t x = lo[t];
        const std::uint32_t y = mont_mul(hi[t], twiddle[t]);
        const std::uint32_t sum = x + y;
        lo[t] = sum >= kP ? sum - kP : sum;
        hi[t] = x >= y ? x - y : x + kP - y;
      }
    }
  }
  const std::uint32_t n_inv = mont_pow(to_mont(static_cast<std::uint32_t>(n % kP)), kP - 2);
  for (auto& x : a) x = mont_mul(x, n_inv);
}

void check_length(std::size_t n) {
  if (!std::has_single_bit(n) || n > kNttMaxLength) {
    throw std::invalid_argument("ntt length must be a power of two <= 2^27");
  }
}

}  // namespace

std::vector<std::uint32_t> square_indicator(std::span<const std::uint64_t> positions,
                                            std::size_t length) {
  check_length(length);
  std::vector<std::uint32_t> a(length, 0);
  const std::uint32_t one = to_mont(1);
  for (auto p : positions) a.at(p) = one;
  // The pointwise square is order-agnostic, so no bit reversal is needed.
  forward_dif(a);
  for (auto& x : a) x = mont_mul(x, x);
  inverse_dit(a);
  for (auto& x : a) x = from_mont(x);
  return a;
}

}  // namespace reprfn::detail
