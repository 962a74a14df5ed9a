#pragma once

#include <cstdint>
#include <random>

namespace sketchkit {

/// Seeded stream of standard-normal draws. The same seed replays the
/// same sequence across runs of one build; callers pass the stream by
/// reference so consecutive draws continue where the previous left off.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed = 0) : seed_(seed), engine_(seed) {}

  double normal() { return normal_(engine_); }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace sketchkit
