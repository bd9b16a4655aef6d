// Canonical two-qubit state representation: local Bloch vectors plus the
// 3x3 correlation matrix, with conversions to and from the 4x4 density
// operator and physicality validation.
#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace nlcast {

using Density4 = Eigen::Matrix4cd;

// Two-qubit state in canonical form {x, y, T}:
//   rho = (1/4)[I4 + sum_i x_i s_i(x)I + sum_i y_i I(x)s_i + sum_ij T_ij s_i(x)s_j]
struct Bloch2Q {
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  Eigen::Vector3d y = Eigen::Vector3d::Zero();
  Eigen::Matrix3d T = Eigen::Matrix3d::Zero();
};

// Pauli matrix sigma_i, i in {1,2,3}. Throws std::out_of_range otherwise.
const Eigen::Matrix2cd& pauli(int i);

Density4 to_density(const Bloch2Q& s);
Bloch2Q from_density(const Density4& rho);

struct DensityTol {
  double herm = 1e-12;
  double trace = 1e-12;
  double psd = 1e-10;
};

struct ValidationReport {
  double herm_residual = 0.0;   // max |rho - rho^dag|
  double trace_residual = 0.0;  // |tr(rho) - 1|
  double min_eigenvalue = 0.0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

ValidationReport validate(const Density4& rho, const DensityTol& tol = {});
// Bloch form: additionally checks |x| <= 1 + tol and |y| <= 1 + tol.
ValidationReport validate(const Bloch2Q& s, const DensityTol& tol = {});

// Eigenvalues sorted descending (deterministic; ties keep solver order).
Eigen::Vector3d eigvals_desc(const Eigen::Matrix3d& sym);
Eigen::Vector4d eigvals_desc(const Density4& herm);

}  // namespace nlcast
