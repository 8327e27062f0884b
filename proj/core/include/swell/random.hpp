#pragma once

#include <array>
#include <cstdint>

namespace swell::numerics {

// xoshiro256** seeded through SplitMix64. Stream k is the base stream
// advanced by k calls to jump() (2^128 steps each), so streams never
// overlap in practice.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_index = 0);

  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53 random bits.
  double next_uniform();

  // Advance by 2^128 steps.
  void jump();
  RandomStream next_stream() const;

  bool operator==(const RandomStream&) const = default;

private:
  std::array<std::uint64_t, 4> state_;
};

inline RandomStream seeded_rng(std::uint64_t seed, std::uint64_t stream_index = 0) {
  return RandomStream(seed, stream_index);
}

}  // namespace swell::numerics
