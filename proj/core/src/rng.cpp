#include "vecsim/rng.hpp"

#include <array>

namespace vecsim {

Rng make_stream(std::uint64_t seed, StreamKind kind, std::uint64_t index) {
  const std::array<std::uint32_t, 6> words = {
      static_cast<std::uint32_t>(seed),
      static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(kind),
      static_cast<std::uint32_t>(index),
      static_cast<std::uint32_t>(index >> 32),
      0x7ec51u,
  };
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

// Lemire's multiply-shift with rejection: exact uniformity, and the division
// only runs on the rare draws that land in the biased zone.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  __extension__ typedef unsigned __int128 u128;
  u128 m = static_cast<u128>(rng()) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      m = static_cast<u128>(rng()) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace vecsim
