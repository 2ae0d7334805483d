#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace gridfleet {

/// Deterministic random source. All draws are implemented on top of raw
/// 64-bit output so that results are identical across standard libraries
/// (std::* distributions make no such guarantee).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [lo, hi], inclusive.
  long long uniform_int(long long lo, long long hi);

  /// Exact Poisson draw; product method, adequate for the small intensities
  /// used per grid-cell per time step.
  int poisson(double lambda);

  /// Index in [0, weights.size()) drawn proportionally to weights (>= 0).
  std::size_t weighted_index(const std::vector<double>& weights);

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(0, static_cast<long long>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t hash_name(std::string_view name);

/// Named, episode-indexed substream seed derived from one master seed.
/// Components (demand, policy, acceptance, ...) draw from independent
/// streams so any one can be varied without disturbing the others.
std::uint64_t substream_seed(std::uint64_t master, std::string_view name,
                             std::uint64_t index = 0);

inline Rng substream(std::uint64_t master, std::string_view name,
                     std::uint64_t index = 0) {
  return Rng(substream_seed(master, name, index));
}

}  // namespace gridfleet
