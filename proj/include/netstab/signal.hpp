#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>

#include "netstab/errors.hpp"

namespace netstab {

/// Finite-horizon sampled multichannel signal. Column t of `samples` holds the
/// channel vector at time t*dt. The computational stand-in for an L2 element
/// on [0, horizon*dt).
struct SignalTrace {
  double dt = 1.0;
  Eigen::MatrixXd samples;  // channels x steps

  SignalTrace() = default;
  SignalTrace(double dt_, Eigen::MatrixXd samples_);

  Eigen::Index channels() const { return samples.rows(); }
  Eigen::Index steps() const { return samples.cols(); }
  double duration() const { return dt * static_cast<double>(steps()); }

  static SignalTrace zero(double dt, Eigen::Index channels, Eigen::Index steps);

  /// Norm threshold below which a trace counts as the zero signal.
  double zero_tolerance() const;

  bool conformable(const SignalTrace& other) const;
};

/// sqrt(dt * sum_t |x(t)|^2), the rectangle-rule energy norm.
double l2_norm(const SignalTrace& x);

/// dt * sum_t x(t)' y(t). Throws ShapeError unless dt/channels/steps match.
double inner_product(const SignalTrace& x, const SignalTrace& y);

/// Zeroes all samples at times >= tau, keeping the horizon.
SignalTrace truncate(const SignalTrace& x, double tau);

/// Acute angle in [0, pi/2]: arccos(|<x,y>| / (|x| |y|)).
/// Throws ZeroSignalError if either trace is below the zero tolerance
/// (the "angle to the zero signal" case is an explicit error here).
double angle(const SignalTrace& x, const SignalTrace& y);

SignalTrace operator+(const SignalTrace& a, const SignalTrace& b);
SignalTrace operator-(const SignalTrace& a, const SignalTrace& b);
SignalTrace operator*(double scale, const SignalTrace& a);

/// Vertical channel stack of two traces sharing dt and horizon.
SignalTrace vstack(const SignalTrace& top, const SignalTrace& bottom);

/// CSV trace format: header "t,ch1,ch2,...", one row per sample instant.
/// dt is inferred from the t column and must be uniform to 1e-9 relative.
SignalTrace read_csv_trace(const std::string& path);
void write_csv_trace(const SignalTrace& x, const std::string& path);

/// Deterministic normal variates (Box-Muller over splitmix64); keeps traces
/// reproducible independent of the standard library's distribution choices.
class TraceRng {
public:
  explicit TraceRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64();
  double uniform01();          // in (0,1)
  double normal();             // standard normal
  /// Derives an independent stream, for per-trial seeding.
  TraceRng derive(std::uint64_t salt) const;

private:
  std::uint64_t state_;
};

/// Filtered white noise, unit-norm, cutoff 1/(4 dt) rad/s; all channels
/// independent. Used wherever graph excitations or probes are drawn.
SignalTrace band_limited_noise(TraceRng& rng, Eigen::Index channels,
                               Eigen::Index steps, double dt);

}  // namespace netstab
