#include "oamsim/spectral.hpp"

#include "oamsim/constants.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace oamsim {

namespace {

class WindowedTransform {
 public:
  WindowedTransform(const std::vector<double>& times, const std::vector<double>& values)
      : t0_(times.front()), dt_((times.back() - times.front()) / (times.size() - 1)) {
    const std::size_t n = values.size();
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(n);
    samples_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double w = 0.5 * (1.0 - std::cos(2.0 * constants::kPi * k / (n - 1)));
      samples_[k] = (values[k] - mean) * w;
    }
  }

  double magnitude(double omega) const {
    const std::complex<double> step = std::polar(1.0, -omega * dt_);
    std::complex<double> phasor = 1.0;
    std::complex<double> sum = 0.0;
    for (double x : samples_) {
      sum += x * phasor;
      phasor *= step;
    }
    return std::abs(sum);
  }

  double dt() const { return dt_; }
  double span() const { return dt_ * (samples_.size() - 1); }

 private:
  double t0_;
  double dt_;
  std::vector<double> samples_;
};

}  // namespace

SpectralPeak dominant_frequency(const std::vector<double>& times, const std::vector<double>& values) {
  if (times.size() != values.size() || times.size() < 8) {
    throw std::invalid_argument("dominant_frequency needs at least 8 matching samples");
  }
  const double dt = (times.back() - times.front()) / (times.size() - 1);
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (std::abs(times[k] - times[k - 1] - dt) > 1e-6 * dt) {
      throw std::invalid_argument("dominant_frequency needs a uniform time grid");
    }
  }
  const WindowedTransform transform(times, values);

  constexpr int kPad = 8;
  const double bin = 2.0 * constants::kPi / (kPad * transform.span());
  const double nyquist = constants::kPi / dt;
  const int bins = static_cast<int>(nyquist / bin);

  std::vector<double> spectrum(static_cast<std::size_t>(bins) + 1, 0.0);
  int best = 1;
  for (int j = 1; j <= bins; ++j) {
    spectrum[j] = transform.magnitude(j * bin);
    if (spectrum[j] > spectrum[best]) best = j;
  }

  double estimate = best * bin;
  if (best > 1 && best < bins) {
    const double a = spectrum[best - 1];
    const double b = spectrum[best];
    const double c = spectrum[best + 1];
    const double denom = a - 2.0 * b + c;
    if (denom != 0.0) estimate += 0.5 * (a - c) / denom * bin;
  }

  // Golden-section refinement around the interpolated estimate.
  double lo = std::max(estimate - bin, 0.5 * bin);
  double hi = estimate + bin;
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = transform.magnitude(x1);
  double f2 = transform.magnitude(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-12 * hi; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = transform.magnitude(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = transform.magnitude(x1);
    }
  }
  const double omega = 0.5 * (lo + hi);
  return {omega, transform.magnitude(omega)};
}

}  // namespace oamsim
