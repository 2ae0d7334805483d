#include "core/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace gridfleet {

long long Rng::uniform_int(long long lo, long long hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: hi < lo");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long long>(next_u64());  // full 64-bit range
  // Rejection sampling to avoid modulo bias.
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return lo + static_cast<long long>(x % span);
}

int Rng::poisson(double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("poisson: negative intensity");
  if (lambda == 0.0) return 0;
  // Split large intensities so exp(-lambda) stays representable.
  int total = 0;
  while (lambda > 500.0) {
    total += poisson(500.0);
    lambda -= 500.0;
  }
  double threshold = std::exp(-lambda);
  double product = 1.0;
  int count = -1;
  do {
    ++count;
    product *= uniform01();
  } while (product > threshold);
  return total + count;
}

std::size_t Rng::weighted_index(const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("weighted_index: negative weight");
    total += w;
  }
  if (total <= 0.0) throw std::invalid_argument("weighted_index: zero total weight");
  double u = uniform01() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return i;
  }
  return weights.size() - 1;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_name(std::string_view name) {
  // FNV-1a.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t substream_seed(std::uint64_t master, std::string_view name,
                             std::uint64_t index) {
  std::uint64_t s = splitmix64(master ^ hash_name(name));
  return splitmix64(s ^ splitmix64(index));
}

}  // namespace gridfleet
