#include "ls/extremes.hpp"

#include <cmath>
#include <stdexcept>

#include "ls/random.hpp"

namespace ls {

double max_p_norm_closed(TwoJ j, double p) {
  if (p < 1.0) throw std::invalid_argument("max_p_norm_closed: p < 1");
  const double jd = j.j();
  if (std::isinf(p)) return std::max(jd, 1.0) / (jd + 1.0);
  return std::pow(std::pow(jd, p) + 1.0, 1.0 / p) / (jd + 1.0);
}

double min_output_entropy_closed(TwoJ j) {
  const double jd = j.j();
  return std::log2(jd + 1.0) - jd / (jd + 1.0) * std::log2(jd);
}

double output_p_power(const KrausChannel& ch, double p, const Vec& psi) {
  Mat rho = apply_channel(ch, psi * psi.adjoint());
  auto eig = eig_hermitian(0.5 * (rho + rho.adjoint().eval()));
  double acc = 0.0;
  for (double x : eig.spectrum.values) {
    if (x > 0.0) acc += std::pow(x, p);
  }
  return acc;
}

Vec output_p_power_gradient(const KrausChannel& ch, double p, const Vec& psi) {
  Mat rho = apply_channel(ch, psi * psi.adjoint());
  Mat rho_pm1 = hermitian_power(0.5 * (rho + rho.adjoint().eval()), p - 1.0);
  Mat back = apply_channel(dual(ch), rho_pm1);
  return 2.0 * p * back * psi;
}

namespace {

struct AscentOutcome {
  Vec state;
  double value;
  double grad_norm;
  bool converged;
};

AscentOutcome ascend(const KrausChannel& ch, double p, Vec psi,
                     const OptimizerConfig& cfg) {
  double f = output_p_power(ch, p, psi);
  double grad_norm = 0.0;
  bool converged = false;
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    Vec g = output_p_power_gradient(ch, p, psi);
    Vec tangent = g - (psi.dot(g)) * psi;  // project to the sphere tangent
    grad_norm = tangent.norm();
    if (grad_norm <= cfg.grad_tol) {
      converged = true;
      break;
    }
    double eta = cfg.step;
    bool improved = false;
    while (eta > 1e-14) {
      Vec trial = psi + eta * tangent;
      trial /= trial.norm();
      const double ft = output_p_power(ch, p, trial);
      if (ft > f) {
        psi = trial;
        f = ft;
        improved = true;
        break;
      }
      eta *= 0.5;
    }
    if (!improved) {
      converged = grad_norm <= 1e2 * cfg.grad_tol;
      break;
    }
  }
  return {psi, f, grad_norm, converged};
}

}  // namespace

ExtremeResult optimize_output_norm(const KrausChannel& ch, double p,
                                   const OptimizerConfig& cfg) {
  if (cfg.restarts < 1 || cfg.grad_tol <= 0.0) {
    throw std::invalid_argument("optimize_output_norm: bad config");
  }
  const bool infinite = std::isinf(p);
  const double p_coarse = infinite ? 2.0 : p;
  const double p_polish = 40.0;  // smooth stand-in for the sup norm

  ExtremeResult best;
  best.value = -1.0;
  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng(cfg.seed * 1000003ULL + static_cast<std::uint64_t>(r));
    Vec psi0 = rng.random_state(ch.d_in);
    AscentOutcome out = ascend(ch, p_coarse, psi0, cfg);
    if (infinite) {
      out = ascend(ch, p_polish, out.state, cfg);
    }
    double value;
    if (infinite) {
      value = schatten_norm(apply_channel(ch, out.state * out.state.adjoint()),
                            kInfiniteP);
    } else {
      value = std::pow(out.value, 1.0 / p);
    }
    if (out.converged) best.converged_restarts++;
    if (value > best.value) {
      best.value = value;
      best.argmax_state = out.state;
      best.best_gradient_norm = out.grad_norm;
    }
  }
  return best;
}

Lemma3Result lemma3_check(TwoJ j, const Vec& psi) {
  if (j.two_j < 2) throw std::invalid_argument("lemma3_check: need j >= 1");
  if (std::abs(psi.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("lemma3_check: psi must be a unit vector");
  }
  SpinTriple s = spin_operators(j);
  const double jd = j.j();
  const double jz_mean = (psi.adjoint() * s.jz * psi)(0, 0).real();
  const double jx2_mean = (psi.adjoint() * s.jx * s.jx * psi)(0, 0).real();
  Lemma3Result out;
  out.lhs = jz_mean * jz_mean;
  out.rhs = 9.0 * jd * jd * (jd * jd - jx2_mean) / (2.0 * jd - 1.0);
  out.ok = out.lhs <= out.rhs + 1e-10;
  return out;
}

double lemma4_value(TwoJ j, const Eigen::Vector3d& k, const Eigen::Vector3d& l,
                    const Vec& psi) {
  if (std::abs(k.squaredNorm() + l.squaredNorm() - 1.0) > 1e-10) {
    throw std::invalid_argument("lemma4_value: need |k|^2 + |l|^2 = 1");
  }
  if (std::abs(psi.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("lemma4_value: psi must be a unit vector");
  }
  SpinTriple s = spin_operators(j);
  Mat op = cplx(k(0), l(0)) * s.jx + cplx(k(1), l(1)) * s.jy +
           cplx(k(2), l(2)) * s.jz;
  return (op * psi).squaredNorm();
}

MultiplicativityResult multiplicativity_experiment(TwoJ j,
                                                   const OptimizerConfig& cfg) {
  KrausChannel phi = landau_streater(j);
  KrausChannel phi2 = tensor(phi, phi);
  ExtremeResult single = optimize_output_norm(phi, 2.0, cfg);
  ExtremeResult twofold = optimize_output_norm(phi2, 2.0, cfg);
  MultiplicativityResult out;
  out.nu2_single = single.value;
  out.nu2_double = twofold.value;
  out.gap = twofold.value - single.value * single.value;
  out.converged =
      single.converged_restarts > 0 && twofold.converged_restarts > 0;
  return out;
}

}  // namespace ls
