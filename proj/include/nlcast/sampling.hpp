// Seeded random state generation. Normals come from a hand-rolled
// Box-Muller on top of mt19937_64 so sequences do not depend on the
// standard library's distribution implementations.
#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include <Eigen/Dense>

#include "nlcast/bloch.hpp"

namespace nlcast {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }
  double uniform();  // [0, 1)
  double normal();   // standard normal

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Stream-splitting: mixes (master, stream) into an independent seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

// Purification sampler: random pure state on 4*k dims (standard-normal
// real and imaginary parts, normalized), ancilla of dimension k traced out.
Density4 sample_density(Rng& rng, int ancilla_dim = 4);
Bloch2Q sample_bloch(Rng& rng, int ancilla_dim = 4);

// Rejection sampler cycling ancilla dims {1,2,2,3} so that hypothesis-
// conditioned draws mix ranks while terminating quickly.
Bloch2Q sample_bloch_where(Rng& rng, const std::function<bool(const Bloch2Q&)>& accept,
                           int max_attempts = 100000);

Eigen::Vector2cd sample_pure_qubit(Rng& rng);
Eigen::Vector3d sample_unit_vector(Rng& rng);
Eigen::Matrix3d sample_rotation(Rng& rng);  // Haar on SO(3) via quaternion

}  // namespace nlcast
