// Dense density operator on a small labeled register (qubits plus machine
// spaces) with partial trace over named subsystems.
#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nlcast/bloch.hpp"

namespace nlcast {

struct Subsystem {
  std::string label;
  int dim = 2;
};

class MultiQState {
 public:
  MultiQState(std::vector<Subsystem> subsystems, Eigen::MatrixXcd rho,
              bool from_pure = false);
  static MultiQState from_pure(std::vector<Subsystem> subsystems,
                               const Eigen::VectorXcd& psi);

  const std::vector<Subsystem>& subsystems() const { return subs_; }
  const Eigen::MatrixXcd& op() const { return rho_; }
  bool pure_origin() const { return pure_; }
  int dim() const { return static_cast<int>(rho_.rows()); }
  int index_of(const std::string& label) const;  // throws on unknown label

  ValidationReport validate(double psd_tol = 1e-9) const;

 private:
  std::vector<Subsystem> subs_;
  Eigen::MatrixXcd rho_;
  bool pure_ = false;
};

// Reduced state on `keep`, in the original subsystem order. Throws on an
// unknown label or an empty keep set.
MultiQState partial_trace(const MultiQState& s,
                          const std::vector<std::string>& keep);

}  // namespace nlcast
