// Nonlocality, steering and entanglement criteria on two-qubit states.
//
// All criteria reduce to spectral data of U = T^t T: the Horodecki quantity
// M is the sum of its two largest eigenvalues (CHSH violation iff M > 1,
// S = 2 sqrt(M)), the n-setting steering functional maxes out at
// sqrt(sum of n largest eigenvalues), and the local-hidden-state check is
// |x|^2 + 2 sqrt(eta_max) <= 1.
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "nlcast/bloch.hpp"

namespace nlcast {

inline constexpr double kEntanglementTol = 1e-12;

struct NonlocalityReport {
  double m_value = 0.0;
  double chsh_s = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;
  bool bell_nonlocal = false;   // m_value > 1
  bool steerable3 = false;      // f3 > 1
  bool lhs_unsteerable = false; // sufficient condition only
  double negativity = 0.0;
  bool entangled = false;       // negativity > tol
};

// Measurement directions for the n-setting steering functional:
// u_hats are unit vectors, v_hats an orthonormal set.
struct MeasSettings {
  int n = 2;
  std::vector<Eigen::Vector3d> u_hats;
  std::vector<Eigen::Vector3d> v_hats;

  void check(double tol = 1e-10) const;  // throws std::invalid_argument
};

double m_value(const Bloch2Q& s);
double chsh_value(const Bloch2Q& s);

// sqrt(sum of the n largest eigenvalues of T^t T); n in {2,3}.
double f_n_closed(const Bloch2Q& s, int n);

// (1/sqrt(n)) |sum_i u_i^t T v_i|
double f_n_direct(const Bloch2Q& s, const MeasSettings& m);

struct SteeringOptimum {
  double value = 0.0;
  MeasSettings settings;
  bool degenerate = false;  // rank(T) < n
};

// Deterministic coordinate ascent over rotations of the right-singular
// basis of T, with u_i = T v_i / |T v_i|.
SteeringOptimum optimize_f_n(const Bloch2Q& s, int n);

bool lhs_unsteerable(const Bloch2Q& s);

// Sum of |negative eigenvalues| of the partial transpose on the second
// qubit; zero iff separable for two qubits.
double negativity(const Density4& rho);

NonlocalityReport report(const Bloch2Q& s, double neg_tol = kEntanglementTol);

}  // namespace nlcast
