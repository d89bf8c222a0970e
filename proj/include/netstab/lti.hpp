#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "netstab/errors.hpp"
#include "netstab/signal.hpp"

namespace netstab {

/// Continuous-time LTI system dx = Ax + Bu, y = Cx + Du.
/// n may be zero (pure static gain D).
struct StateSpaceModel {
  Eigen::MatrixXd A;  // n x n
  Eigen::MatrixXd B;  // n x m
  Eigen::MatrixXd C;  // p x n
  Eigen::MatrixXd D;  // p x m

  StateSpaceModel() = default;
  StateSpaceModel(Eigen::MatrixXd A_, Eigen::MatrixXd B_, Eigen::MatrixXd C_,
                  Eigen::MatrixXd D_);

  /// Static gain (n = 0).
  static StateSpaceModel static_gain(const Eigen::MatrixXd& D);
  static StateSpaceModel zero(Eigen::Index p, Eigen::Index m);

  Eigen::Index order() const { return A.rows(); }
  Eigen::Index inputs() const { return D.cols(); }
  Eigen::Index outputs() const { return D.rows(); }

  void validate() const;
};

/// Log-spaced scan grid; refinement passes append the extra points they
/// evaluated so reports can show where the sup was localized.
struct FrequencyGrid {
  std::vector<double> omegas;   // strictly increasing, positive
  std::vector<double> refined;  // points appended by adaptive refinement

  static FrequencyGrid log_spaced(double wmin, double wmax, int count);
};

/// Window for H-infinity scans; the CLI can override it.
struct FrequencyWindow {
  double wmin = 1e-4;
  double wmax = 1e4;
  int points = 400;
};

/// All eigenvalues of A strictly left of -1e-9 (marginal poles count as
/// unstable). Order-zero systems are Hurwitz.
bool is_hurwitz(const StateSpaceModel& sys);

constexpr double kStabilityEps = 1e-9;

/// C (jw I - A)^{-1} B + D. Throws SingularAtFrequency when jw lies within
/// 1e-9 of an eigenvalue of A.
Eigen::MatrixXcd freq_response(const StateSpaceModel& sys, double omega);

/// Largest singular value of the frequency response at omega.
double sigma_max(const StateSpaceModel& sys, double omega);

struct HinfResult {
  double norm = 0.0;
  double omega_peak = 0.0;  // 0 encodes the DC candidate, inf the D candidate
};

/// Supremum of sigma_max over the window by log-grid scan plus golden-section
/// refinement around the maximizer (relative stopping 1e-6); DC and omega=inf
/// candidates included. Returns +inf for non-Hurwitz systems.
double hinf_norm(const StateSpaceModel& sys, const FrequencyWindow& win = {});
HinfResult hinf_norm_detail(const StateSpaceModel& sys, const FrequencyWindow& win = {});

/// Discrete recurrence x+ = Ad x + Bd u, y = Cd x + Dd u.
struct DiscreteModel {
  Eigen::MatrixXd Ad, Bd, Cd, Dd;
  double dt = 0.0;
};

/// Bilinear (Tustin) discretization; preserves the stability classification.
/// Throws DegenerateStep when I - (dt/2) A is singular.
DiscreteModel discretize(const StateSpaceModel& sys, double dt);

/// Discrete frequency response Cd (zI - Ad)^{-1} Bd + Dd at z = exp(jw dt).
Eigen::MatrixXcd freq_response(const DiscreteModel& sys, double omega);

/// Zero-initial-state response to u, same dt and horizon.
SignalTrace simulate_lti(const StateSpaceModel& sys, const SignalTrace& u);

/// [G1; G2] sharing the input (outputs stacked).
StateSpaceModel stack_outputs(const StateSpaceModel& top, const StateSpaceModel& bottom);
/// Reorders output channels: row i of the result is row perm[i] of sys.
StateSpaceModel permute_outputs(const StateSpaceModel& sys, const std::vector<Eigen::Index>& perm);

/// Result of splitting a system into a stable part and the (decoupled)
/// antistable remainder via ordered Schur + Sylvester decoupling.
struct StableSplit {
  StateSpaceModel stable;      // Hurwitz part, carries the full D
  StateSpaceModel antistable;  // eigenvalues with Re >= -1e-9, D = 0
  /// Hankel norm of the mirrored antistable part; ~0 means the unstable
  /// modes are non-minimal (pole-zero cancellation artifacts).
  double antistable_hankel = 0.0;
};

StableSplit stable_antistable_split(const StateSpaceModel& sys);

/// Controllability Gramian of a Hurwitz system: A P + P A' + B B' = 0.
Eigen::MatrixXd controllability_gramian(const StateSpaceModel& sys);
/// Observability Gramian: A' Q + Q A + C' C = 0.
Eigen::MatrixXd observability_gramian(const StateSpaceModel& sys);
/// sqrt(lambda_max(P Q)); zero for static systems.
double hankel_norm(const StateSpaceModel& sys);

}  // namespace netstab
