#include "netstab/signal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace netstab {

SignalTrace::SignalTrace(double dt_, Eigen::MatrixXd samples_)
    : dt(dt_), samples(std::move(samples_)) {
  if (!(dt > 0.0)) throw ShapeError("SignalTrace: dt must be positive");
  if (!samples.allFinite()) throw ShapeError("SignalTrace: samples must be finite");
}

SignalTrace SignalTrace::zero(double dt, Eigen::Index channels, Eigen::Index steps) {
  return SignalTrace(dt, Eigen::MatrixXd::Zero(channels, steps));
}

double SignalTrace::zero_tolerance() const {
  return 1e-12 * std::sqrt(static_cast<double>(steps()) * dt);
}

bool SignalTrace::conformable(const SignalTrace& other) const {
  return std::abs(dt - other.dt) <= 1e-12 * std::max(dt, other.dt) &&
         channels() == other.channels() && steps() == other.steps();
}

double l2_norm(const SignalTrace& x) {
  return std::sqrt(x.dt) * x.samples.norm();
}

double inner_product(const SignalTrace& x, const SignalTrace& y) {
  if (!x.conformable(y))
    throw ShapeError("inner_product: traces must share dt, channels and horizon");
  return x.dt * x.samples.cwiseProduct(y.samples).sum();
}

SignalTrace truncate(const SignalTrace& x, double tau) {
  if (tau < 0.0) throw OutOfRange("truncate: tau must be nonnegative");
  SignalTrace out = x;
  for (Eigen::Index t = 0; t < out.steps(); ++t) {
    if (static_cast<double>(t) * out.dt >= tau) out.samples.col(t).setZero();
  }
  return out;
}

double angle(const SignalTrace& x, const SignalTrace& y) {
  const double nx = l2_norm(x);
  const double ny = l2_norm(y);
  if (nx <= x.zero_tolerance() || ny <= y.zero_tolerance())
    throw ZeroSignalError("angle: zero signal has no direction");
  double c = std::abs(inner_product(x, y)) / (nx * ny);
  c = std::clamp(c, 0.0, 1.0);
  return std::acos(c);
}

SignalTrace operator+(const SignalTrace& a, const SignalTrace& b) {
  if (!a.conformable(b)) throw ShapeError("trace sum: shape mismatch");
  return SignalTrace(a.dt, a.samples + b.samples);
}

SignalTrace operator-(const SignalTrace& a, const SignalTrace& b) {
  if (!a.conformable(b)) throw ShapeError("trace difference: shape mismatch");
  return SignalTrace(a.dt, a.samples - b.samples);
}

SignalTrace operator*(double scale, const SignalTrace& a) {
  return SignalTrace(a.dt, scale * a.samples);
}

SignalTrace vstack(const SignalTrace& top, const SignalTrace& bottom) {
  if (std::abs(top.dt - bottom.dt) > 1e-12 * top.dt || top.steps() != bottom.steps())
    throw ShapeError("vstack: traces must share dt and horizon");
  Eigen::MatrixXd s(top.channels() + bottom.channels(), top.steps());
  s.topRows(top.channels()) = top.samples;
  s.bottomRows(bottom.channels()) = bottom.samples;
  return SignalTrace(top.dt, std::move(s));
}

SignalTrace read_csv_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open trace file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty trace file: " + path);
  // Header "t,ch1,..." fixes the channel count.
  Eigen::Index channels = static_cast<Eigen::Index>(std::count(line.begin(), line.end(), ','));
  if (channels < 1) throw ParseError("trace header needs at least one channel: " + path);

  std::vector<double> times;
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    Eigen::Index col = 0;
    while (std::getline(ss, cell, ',')) {
      double v = 0.0;
      try {
        v = std::stod(cell);
      } catch (const std::exception&) {
        throw ParseError("bad number '" + cell + "' in " + path);
      }
      if (col == 0)
        times.push_back(v);
      else
        values.push_back(v);
      ++col;
    }
    if (col != channels + 1)
      throw ParseError("row width mismatch in " + path);
  }
  if (times.size() < 2) throw ParseError("trace needs at least two samples: " + path);

  const double dt = times[1] - times[0];
  if (!(dt > 0.0)) throw ParseError("non-increasing time column in " + path);
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double step = times[i] - times[i - 1];
    if (std::abs(step - dt) > 1e-9 * dt)
      throw ParseError("non-uniform sample period in " + path);
  }

  Eigen::MatrixXd s(channels, static_cast<Eigen::Index>(times.size()));
  for (std::size_t t = 0; t < times.size(); ++t)
    for (Eigen::Index c = 0; c < channels; ++c)
      s(c, static_cast<Eigen::Index>(t)) = values[t * static_cast<std::size_t>(channels) + static_cast<std::size_t>(c)];
  return SignalTrace(dt, std::move(s));
}

void write_csv_trace(const SignalTrace& x, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write trace file: " + path);
  out << "t";
  for (Eigen::Index c = 0; c < x.channels(); ++c) out << ",ch" << (c + 1);
  out << "\n";
  char buf[32];
  for (Eigen::Index t = 0; t < x.steps(); ++t) {
    std::snprintf(buf, sizeof(buf), "%.17g", static_cast<double>(t) * x.dt);
    out << buf;
    for (Eigen::Index c = 0; c < x.channels(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g", x.samples(c, t));
      out << "," << buf;
    }
    out << "\n";
  }
}

std::uint64_t TraceRng::next_u64() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double TraceRng::uniform01() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double TraceRng::normal() {
  const double u1 = uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

TraceRng TraceRng::derive(std::uint64_t salt) const {
  TraceRng child(state_ ^ (0xa5a5a5a5a5a5a5a5ULL + salt * 0x9e3779b97f4a7c15ULL));
  child.next_u64();
  return child;
}

SignalTrace band_limited_noise(TraceRng& rng, Eigen::Index channels,
                               Eigen::Index steps, double dt) {
  Eigen::MatrixXd s(channels, steps);
  for (Eigen::Index c = 0; c < channels; ++c)
    for (Eigen::Index t = 0; t < steps; ++t) s(c, t) = rng.normal();

  // Two cascaded one-pole low-passes at omega_c = 1/(4 dt).
  const double a = std::exp(-0.25);
  for (int pass = 0; pass < 2; ++pass) {
    for (Eigen::Index c = 0; c < channels; ++c) {
      double st = 0.0;
      for (Eigen::Index t = 0; t < steps; ++t) {
        st = a * st + (1.0 - a) * s(c, t);
        s(c, t) = st;
      }
    }
  }
  SignalTrace out(dt, std::move(s));
  const double n = l2_norm(out);
  if (n > out.zero_tolerance()) out.samples /= n;
  return out;
}

}  // namespace netstab
