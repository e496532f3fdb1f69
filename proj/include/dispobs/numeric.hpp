#pragma once

// Finite Fourier states, their solutions along observation segments and
// composite Gauss-Legendre quadrature of segment L^2 integrals.
//
// Along a segment (t_i + t, x_i - v t) the solution is the nonharmonic sum
//   u = sum_k c_k e^{i (p(k) t_i + k x_i)} e^{i lambda_k(v) t}.
// Modes with equal lambda are merged before evaluation, so exact
// cancellations (resonant pairs) vanish up to rounding of the amplitudes.

#include "dispobs/symbol.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace dispobs {

using Complex = std::complex<double>;

/// u_0(x) = sum_k c_k e^{ikx} with finitely many nonzero c_k.
struct FourierState {
  std::map<Mode, Complex> coefficients;

  bool empty() const { return coefficients.empty(); }
  std::size_t support() const { return coefficients.size(); }
  Mode max_abs_mode() const {
    Mode out = 0;
    for (const auto& [k, c] : coefficients) out = std::max<Mode>(out, std::llabs(k));
    return out;
  }
};

/// Observation line (t0 + t, x0 - v t), t in [0, T].
struct SegmentSpec {
  PiLinear t0;
  PiLinear x0;
  Slope v;
  double T = 1.0;

  void validate() const {
    if (!(T > 0.0) || !std::isfinite(T)) throw InvalidArgument("segment length T must be positive");
  }
};

struct QuadratureSpec {
  std::optional<int> panels;  // unset: chosen from the frequency spread
  int nodes_per_panel = 8;
  double tolerance = 1e-10;

  void validate() const {
    if (panels && *panels < 1) throw InvalidArgument("panels must be >= 1");
    if (nodes_per_panel < 2) throw InvalidArgument("nodes per panel must be >= 2");
    if (!(tolerance > 0.0)) throw InvalidArgument("tolerance must be positive");
  }
};

/// e^{i theta} with theta = a + b pi reduced exactly before conversion.
inline Complex unit_phase(const PiLinear& theta) { return std::polar(1.0, reduce_angle(theta)); }

inline double l2_norm_sq(const FourierState& s) {
  double acc = 0.0;
  for (const auto& [k, c] : s.coefficients) acc += std::norm(c);
  return 2.0 * std::numbers::pi * acc;
}

/// The restriction of a state to one segment as sum_g A_g e^{i lambda_g t}.
class SegmentSeries {
 public:
  SegmentSeries(const FourierState& state, const PolynomialSymbol& sym, const SegmentSpec& seg) {
    seg.validate();
    std::map<Rational, Complex> groups;
    for (const auto& [k, c] : state.coefficients) {
      const Rational pk = sym(k);
      const PiLinear theta = pk * seg.t0 + make_rational(k) * seg.x0;
      groups[pk - make_rational(k) * seg.v.value()] += c * unit_phase(theta);
    }
    for (const auto& [lam, a] : groups) {
      lambda_.push_back(lam.get_d());
      amp_.push_back(a);
    }
  }

  Complex operator()(double t) const {
    Complex acc(0.0, 0.0);
    for (std::size_t g = 0; g < lambda_.size(); ++g) acc += amp_[g] * std::polar(1.0, lambda_[g] * t);
    return acc;
  }

  /// |u(t)|^2 with frequencies shifted by the mean, which leaves it unchanged.
  double abs2(double t) const {
    Complex acc(0.0, 0.0);
    for (std::size_t g = 0; g < lambda_.size(); ++g) acc += amp_[g] * std::polar(1.0, (lambda_[g] - center_()) * t);
    return std::norm(acc);
  }

  double spread() const { return lambda_.empty() ? 0.0 : lambda_.back() - lambda_.front(); }
  std::size_t groups() const { return lambda_.size(); }
  const std::vector<double>& frequencies() const { return lambda_; }
  const std::vector<Complex>& amplitudes() const { return amp_; }

 private:
  double center_() const { return lambda_.empty() ? 0.0 : 0.5 * (lambda_.front() + lambda_.back()); }

  std::vector<double> lambda_;  // ascending
  std::vector<Complex> amp_;
};

inline Complex evaluate_on_segment(const FourierState& state, const PolynomialSymbol& sym, const SegmentSpec& seg,
                                   double t) {
  return SegmentSeries(state, sym, seg)(t);
}

/// Largest |u| over `samples` equally spaced points of [0, T].
inline double max_abs_on_segment(const FourierState& state, const PolynomialSymbol& sym, const SegmentSpec& seg,
                                 int samples = 1000) {
  if (samples < 2) throw InvalidArgument("need at least 2 samples");
  SegmentSeries series(state, sym, seg);
  double out = 0.0;
  for (int i = 0; i < samples; ++i) out = std::max(out, std::abs(series(seg.T * i / (samples - 1))));
  return out;
}

inline int default_panels(const SegmentSeries& series, double T) {
  double periods = std::ceil(T * series.spread() / (2.0 * std::numbers::pi));
  return static_cast<int>(std::max(1.0, periods)) * 4;
}

namespace detail {

template <unsigned N, class F>
double composite_gauss(F&& f, double T, int panels) {
  const double h = T / panels;
  double acc = 0.0;
  for (int j = 0; j < panels; ++j)
    acc += boost::math::quadrature::gauss<double, N>::integrate(f, j * h, (j + 1) * h);
  return acc;
}

template <class F>
double composite_gauss(F&& f, double T, int panels, int nodes) {
  switch (nodes) {
    case 2: return composite_gauss<2>(f, T, panels);
    case 4: return composite_gauss<4>(f, T, panels);
    case 8: return composite_gauss<8>(f, T, panels);
    case 16: return composite_gauss<16>(f, T, panels);
    case 20: return composite_gauss<20>(f, T, panels);
    case 30: return composite_gauss<30>(f, T, panels);
    default: break;
  }
  throw InvalidArgument("supported nodes per panel: 2, 4, 8, 16, 20, 30");
}

}  // namespace detail

/// int_0^T |u(t_0 + t, x_0 - v t)|^2 dt.
inline double segment_l2(const FourierState& state, const PolynomialSymbol& sym, const SegmentSpec& seg,
                         const QuadratureSpec& quad = {}) {
  quad.validate();
  SegmentSeries series(state, sym, seg);
  if (series.groups() == 0) return 0.0;
  const int panels = quad.panels.value_or(default_panels(series, seg.T));
  return detail::composite_gauss([&](double t) { return series.abs2(t); }, seg.T, panels, quad.nodes_per_panel);
}

/// Observation energy over all segments divided by ||u_0||^2.
inline double frame_ratio(const FourierState& state, const PolynomialSymbol& sym, const std::vector<SegmentSpec>& segs,
                          const QuadratureSpec& quad = {}) {
  const double norm = l2_norm_sq(state);
  if (norm == 0.0) throw InvalidArgument("frame ratio of the zero state");
  double acc = 0.0;
  for (const auto& seg : segs) acc += segment_l2(state, sym, seg, quad);
  return acc / norm;
}

/// |trapezoid_x |u(t, x)|^2 - 2 pi sum |c_k|^2| with x_samples points.
inline double unitarity_residual(const FourierState& state, const PolynomialSymbol& sym, const PiLinear& t,
                                 int x_samples) {
  if (x_samples < 2 * state.max_abs_mode() + 1)
    throw InvalidArgument("x_samples must be at least 2 max|k| + 1");
  std::vector<std::pair<Mode, Complex>> modes;
  for (const auto& [k, c] : state.coefficients) modes.push_back({k, c * unit_phase(sym(k) * t)});
  double acc = 0.0;
  for (int j = 0; j < x_samples; ++j) {
    Complex u(0.0, 0.0);
    for (const auto& [k, a] : modes) {
      // k j mod N keeps the angle small.
      const long long r = ((static_cast<long long>(k) * j) % x_samples + x_samples) % x_samples;
      u += a * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / x_samples);
    }
    acc += std::norm(u);
  }
  return std::fabs(2.0 * std::numbers::pi * acc / x_samples - l2_norm_sq(state));
}

/// CSV trace "t,re,im,abs2" with `samples` equally spaced points of [0, T].
inline std::string trace_csv(const FourierState& state, const PolynomialSymbol& sym, const SegmentSpec& seg,
                             int samples) {
  if (samples < 2) throw InvalidArgument("need at least 2 samples");
  SegmentSeries series(state, sym, seg);
  std::ostringstream os;
  os.precision(17);
  os << "t,re,im,abs2\n";
  for (int i = 0; i < samples; ++i) {
    double t = seg.T * i / (samples - 1);
    Complex u = series(t);
    os << t << ',' << u.real() << ',' << u.imag() << ',' << std::norm(u) << '\n';
  }
  return os.str();
}

}  // namespace dispobs
