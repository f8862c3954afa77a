#pragma once

#include <cstdint>
#include <random>

namespace vecsim {

/// Every random draw in the library comes from this engine. Its output
/// sequence is fixed by the C++ standard, and seeding goes through
/// std::seed_seq (also fully specified), so streams are portable.
using Rng = std::mt19937_64;

/// Recorded in provenance manifests and printed by `vecsim --version`.
inline constexpr const char* kGeneratorName = "mt19937_64+seed_seq(v1)";

/// Stream tags keep the TVF builder and the simulator from sharing streams
/// even when they are given the same user seed.
enum class StreamKind : std::uint32_t { tvf_cell = 1, realization = 2 };

/// Independent stream for (seed, kind, index). Distinct tuples give
/// statistically independent sequences.
Rng make_stream(std::uint64_t seed, StreamKind kind, std::uint64_t index);

/// Uniform integer in [0, n). Works on raw engine output rather than
/// std::uniform_int_distribution, whose algorithm is implementation-defined.
/// Requires n > 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform_unit(Rng& rng);

}  // namespace vecsim
