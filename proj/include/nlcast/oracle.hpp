// Independent ground truth: explicit cloning isometries with machine
// vectors realized from their Gram matrix, full broadcast simulation on a
// labeled register, and cross-checks of every reduced output pair against
// the closed-form Bloch maps.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nlcast/bloch.hpp"
#include "nlcast/cloning.hpp"
#include "nlcast/multiq.hpp"

namespace nlcast {

enum class GramConvention { paper_literal, bh_standard };

std::string to_string(GramConvention c);
GramConvention gram_convention_from_string(const std::string& name);

// V maps the input space (dim M) into copy1 (x) copy2 (x) machine; the blank
// and initial machine states are absorbed into the column definitions.
struct Isometry {
  Eigen::MatrixXcd V;  // (M * M * machine_dim) x M
  int M = 2;
  int machine_dim = 0;

  double isometry_residual() const;  // max |V^dag V - I|
};

// Machine-vector inner products for the state-dependent machine. The list
// order is X_11..X_MM followed by Y_ij over ordered pairs i != j.
struct GramSpec {
  int M = 2;
  double lambda = 0.0;
  GramConvention convention = GramConvention::bh_standard;
  Eigen::MatrixXd gram;

  double mu() const { return M == 2 ? 1.0 - 2.0 * lambda : 1.0 - 4.0 * lambda; }
  int n_vectors() const { return M * M; }  // M diagonal + M(M-1) pairs

  static GramSpec make(int M, double lambda, GramConvention convention);
};

class UnrealizableGram : public std::runtime_error {
 public:
  UnrealizableGram(double min_eig, const std::string& what)
      : std::runtime_error(what), min_eigenvalue(min_eig) {}
  double min_eigenvalue;
};

Isometry build_si_isometry(int M);  // M in {2,4}
// Realizes machine vectors by spectral factorization of the Gram matrix
// (embedding dimension = numerical rank). Throws UnrealizableGram when the
// Gram matrix has an eigenvalue below -1e-12; throws std::runtime_error when
// the realized V fails the isometry check (inconsistent constraint set).
Isometry build_sd_isometry(const GramSpec& g);

// Two-sided local cloning: V on (1 -> 1,a,mA) and (2 -> 2,b,mB).
// Output labels, in order: 1, a, mA, 2, b, mB.
MultiQState run_local_broadcast(const Density4& rho, const Isometry& V);

// Joint cloning of the pair: V on ((1,2) -> (1,2),(3,4),m).
// Output labels, in order: 1, 2, 3, 4, m.
MultiQState run_nonlocal_broadcast(const Density4& rho, const Isometry& V);

struct PairDeviation {
  std::string name;      // e.g. "rho_14"
  double max_dev = 0.0;  // max-norm deviation from the closed-form map
  Bloch2Q reduced;
};

struct CrosscheckReport {
  bool realizable = true;
  double gram_min_eigenvalue = 0.0;
  double isometry_residual = 0.0;
  GramConvention convention = GramConvention::bh_standard;
  std::vector<PairDeviation> pairs;
  std::vector<std::string> matching_pairs;  // within 1e-8 of the closed form
  double fitted_shrink_xy = 0.0;  // least-squares scalar on (x, y); 0 if undefined
  double fitted_shrink_T = 0.0;   // least-squares scalar on T
  double pair_symmetry_residual = 0.0;  // rho~14 vs rho~23 (local), copies (nonlocal)
};

CrosscheckReport crosscheck_reduced_maps(
    const Bloch2Q& s, const ClonerSpec& spec,
    GramConvention convention = GramConvention::bh_standard);

}  // namespace nlcast
