// Buzek-Hillery cloner parameter model, the closed-form Bloch-parameter
// channel maps, named state families, and theorem-style bound checks.
#pragma once

#include <optional>
#include <string>
#include <utility>

#include "nlcast/bloch.hpp"
#include "nlcast/criteria.hpp"

namespace nlcast {

enum class ClonerFamily {
  local_state_dependent,
  nonlocal_state_dependent,
  local_state_independent,
  nonlocal_state_independent,
};

std::string to_string(ClonerFamily f);
ClonerFamily cloner_family_from_string(const std::string& name);

inline constexpr double kMuCapLocal = 0.7071067811865475244;     // 1/sqrt(2)
inline constexpr double kMuCapNonlocal = 0.4082482904638630164;  // 1/sqrt(6)
inline constexpr double kLambdaExcludedLocal = 1.0 / 6.0;
inline constexpr double kLambdaExcludedNonlocal = 0.1;
inline constexpr double kLambdaExclusionEps = 1e-12;

// Universal-cloner shrink factors, fixed by the state-independent machine
// coefficients and validated against the isometry simulation.
inline constexpr double kShrinkLocalSi = 2.0 / 3.0;
inline constexpr double kShrinkNonlocalSi = 3.0 / 5.0;

struct ClonerSpec {
  ClonerFamily family = ClonerFamily::local_state_independent;
  double lambda = 0.0;  // machine parameter; meaningful for SD families
  double mu_cap = kMuCapLocal;

  // mu = 1 - 2*lambda (local SD), 1 - 4*lambda (nonlocal SD); for the
  // state-independent machines this is the fixed shrink factor.
  double mu() const;

  // Throws std::invalid_argument on any violated invariant (lambda range,
  // excluded lambda values, mu above the cap).
  void check() const;

  static ClonerSpec local_sd(double lambda,
                             std::optional<double> mu_cap = std::nullopt);
  static ClonerSpec nonlocal_sd(double lambda,
                                std::optional<double> mu_cap = std::nullopt);
  static ClonerSpec local_si();
  static ClonerSpec nonlocal_si();
  // From a requested mu value (lambda derived per family relation).
  static ClonerSpec sd_with_mu(ClonerFamily family, double mu,
                               std::optional<double> mu_cap = std::nullopt);
};

// Closed-form channel maps on Bloch data.
Bloch2Q local_sd_map(const Bloch2Q& s, const ClonerSpec& spec);     // {mu x, mu y, mu^2 T}
Bloch2Q nonlocal_sd_map(const Bloch2Q& s, const ClonerSpec& spec);  // {mu x, mu y, mu T}
Bloch2Q local_si_map(const Bloch2Q& s);                             // eta = 2/3 per side
Bloch2Q nonlocal_si_map(const Bloch2Q& s);                          // eta = 3/5 on the pair
Bloch2Q apply_cloner(const Bloch2Q& s, const ClonerSpec& spec);

// Named families.
Bloch2Q werner(double p);  // {0, 0, diag(p, -p, p)}, p in [0,1]
// {0, 0, diag(c1,c2,c3)}; throws std::domain_error outside the physical
// tetrahedron (message carries the violated eigenvalue).
Bloch2Q bell_diagonal(double c1, double c2, double c3);

enum class Criterion { chsh, f3 };

struct BoundReport {
  double pre_sum = 0.0;   // sum of the relevant eigenvalues of T^t T
  double post_sum = 0.0;
  double lo = 0.0;        // theorem interval on post_sum
  double hi = 0.0;
  double scaling_residual = 0.0;  // |post_sum - mu^k * pre_sum|
  bool inside = false;
  bool no_broadcast = false;      // post m <= 1 resp. post f3 <= 1
};

// Applies the family map and checks the eigenvalue-sum interval plus the
// no-broadcast conclusion. Throws std::invalid_argument when the input
// does not satisfy the hypothesis (m > 1 resp. f3 > 1, strictly).
BoundReport theorem_bound_check(const Bloch2Q& s, const ClonerSpec& spec,
                                Criterion criterion);

struct BroadcastOutcome {
  NonlocalityReport input_report;
  Bloch2Q nonlocal_pair_state;  // rho~14 == rho~23 for symmetric cloners
  NonlocalityReport nonlocal_pair_report;
  std::optional<std::pair<Bloch2Q, Bloch2Q>> local_pair_states;  // rho~13, rho~24
  bool broadcast_achieved = false;
  std::optional<bool> optimal_broadcast_achieved;  // needs the local pairs
  double oracle_max_deviation = 0.0;  // closed form vs simulation, when used
};

// Full pipeline: closed-form nonlocal-pair state, optionally cross-checked
// against the isometry simulation (which also yields the local pairs).
BroadcastOutcome broadcast_pipeline(const Bloch2Q& s, const ClonerSpec& spec,
                                    Criterion criterion, bool use_oracle);

}  // namespace nlcast
