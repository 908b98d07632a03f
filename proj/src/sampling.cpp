#include "polyangle/sampling.hpp"

#include <cmath>

namespace polyangle {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rng make_worker_rng(std::uint64_t seed, unsigned worker) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(worker)};
  return Rng(seq);
}

void fill_unit_sphere(Rng& rng, std::span<double> out) {
  std::normal_distribution<double> gauss;
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (double& x : out) {
      x = gauss(rng);
      norm2 += x * x;
    }
  } while (norm2 < 1e-300);
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& x : out) x *= inv;
}

Vector sample_unit_sphere(Rng& rng, int n) {
  if (n < 2) throw InvalidArgumentError("sample_unit_sphere: dimension must be at least 2");
  Vector u(n);
  fill_unit_sphere(rng, std::span<double>(u.data(), static_cast<std::size_t>(n)));
  return u;
}

}  // namespace polyangle
