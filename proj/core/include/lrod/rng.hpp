#pragma once

#include <cstdint>

namespace lrod {

/// SplitMix64 finalizer; a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Derives an independent child seed, e.g. per sweep cell.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) noexcept {
  return mix64(mix64(parent + 0x9E3779B97F4A7C15ULL) ^ (index * 0xD1B54A32D192ED03ULL + 1));
}

/// Counter-based uniform stream for one account. Draw (period, lane) is a pure
/// function of (master_seed, account_id, period, lane), so an account's draws
/// never depend on how many accounts precede it or on thread scheduling.
class AccountStream {
 public:
  constexpr AccountStream(std::uint64_t master_seed, std::uint64_t account_id) noexcept
      : key_(derive_seed(master_seed, account_id)) {}

  constexpr std::uint64_t bits(std::uint64_t period, std::uint64_t lane = 0) const noexcept {
    return mix64(mix64(key_ ^ (period * 0x9E3779B97F4A7C15ULL)) + lane * 0xC2B2AE3D27D4EB4FULL);
  }

  /// Uniform on [0, 1) with 53 random bits.
  constexpr double uniform(std::uint64_t period, std::uint64_t lane = 0) const noexcept {
    return static_cast<double>(bits(period, lane) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t key_;
};

}  // namespace lrod
