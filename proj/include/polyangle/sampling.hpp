#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <thread>
#include <vector>

#include "polyangle/geometry.hpp"

namespace polyangle {

using Rng = std::mt19937_64;

/// Monte Carlo run parameters. Results are deterministic for a fixed
/// (samples, seed, workers) triple.
struct McOptions {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

/// Mixes a root seed with a stream label (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Generator for worker `worker` of a run rooted at `seed`.
Rng make_worker_rng(std::uint64_t seed, unsigned worker);

/// Writes a uniformly distributed unit vector into `out` (normalized Gaussian deviates).
void fill_unit_sphere(Rng& rng, std::span<double> out);

/// Uniform random direction on S^{n-1}; n >= 2.
Vector sample_unit_sphere(Rng& rng, int n);

/// Splits `options.samples` across `options.workers` threads. Each worker gets its
/// own generator and a default-constructed accumulator; `body(rng, count, acc)` fills
/// it and the results are merged with `operator+=` in worker order.
template <class Accumulator, class Body>
Accumulator run_sharded(const McOptions& options, Body&& body) {
  const unsigned workers = options.workers == 0 ? 1u : options.workers;
  const std::uint64_t base = options.samples / workers;
  const std::uint64_t extra = options.samples % workers;
  auto share = [&](unsigned w) { return base + (w < extra ? 1u : 0u); };

  std::vector<Accumulator> partial(workers);
  if (workers == 1) {
    Rng rng = make_worker_rng(options.seed, 0);
    body(rng, share(0), partial[0]);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        Rng rng = make_worker_rng(options.seed, w);
        body(rng, share(w), partial[w]);
      });
    }
  }
  Accumulator total{};
  for (auto& p : partial) total += p;
  return total;
}

}  // namespace polyangle
