#pragma once

#include <cstdint>

#include "ls/channel.hpp"

namespace ls {

struct OptimizerConfig {
  int restarts = 64;
  int max_iters = 500;
  double step = 0.5;
  double grad_tol = 1e-9;
  std::uint64_t seed = 0;
};

struct ExtremeResult {
  double value = 0.0;        // nu_p at the best state found
  Vec argmax_state;          // unit norm
  int converged_restarts = 0;
  double best_gradient_norm = 0.0;
};

/// Closed form nu_p = (j^p + 1)^{1/p} / (j + 1); for p = inf, max(j,1)/(j+1).
double max_p_norm_closed(TwoJ j, double p);
/// Closed form S_min = log2(j+1) - (j/(j+1)) log2 j, in bits.
double min_output_entropy_closed(TwoJ j);

/// tr(Phi[psi psi^dag]^p) for unnormalized psi psi^dag.
double output_p_power(const KrausChannel& ch, double p, const Vec& psi);

/// Euclidean gradient of tr(Phi[psi psi^dag]^p) with respect to the real
/// parametrization of psi: the complex vector a with df = Re(dpsi^dag a),
/// a = 2p Phi^dag[Phi[psi psi^dag]^{p-1}] psi. For p = 2 this is
/// 4 Phi^dag[Phi[psi psi^dag]] psi.
Vec output_p_power_gradient(const KrausChannel& ch, double p, const Vec& psi);

/// Riemannian gradient ascent on the unit sphere with restarts.
/// p = inf is handled by a p = 2 pass polished with p = 40; the reported
/// value is then the exact operator norm at the best state.
ExtremeResult optimize_output_norm(const KrausChannel& ch, double p,
                                   const OptimizerConfig& cfg);

struct Lemma3Result {
  double lhs;  // <J_z>^2
  double rhs;  // 9 j^2 (j^2 - <J_x^2>) / (2j - 1)
  bool ok;
};

/// Requires j >= 1 and a unit vector psi.
Lemma3Result lemma3_check(TwoJ j, const Vec& psi);

/// ||sum_alpha (k_alpha + i l_alpha) J_alpha psi||^2 under |k|^2 + |l|^2 = 1.
/// The returned value never exceeds max(j, j^2) + tolerance.
double lemma4_value(TwoJ j, const Eigen::Vector3d& k, const Eigen::Vector3d& l,
                    const Vec& psi);

struct MultiplicativityResult {
  double nu2_single;
  double nu2_double;
  double gap;  // nu2_double - nu2_single^2
  bool converged;
};

/// Optimizes nu_2 for Phi and for Phi (x) Phi over pure bipartite states.
MultiplicativityResult multiplicativity_experiment(TwoJ j,
                                                   const OptimizerConfig& cfg);

}  // namespace ls
