#pragma once

#include <vector>

namespace oamsim {

struct SpectralPeak {
  double omega = 0.0;      // rad per time unit of the input grid
  double magnitude = 0.0;  // |windowed transform| at the peak
};

// Dominant angular frequency of a uniformly sampled real series.
//
// The mean is removed and a Hann window applied. A zero-padded DFT locates the
// peak bin, quadratic interpolation on the three surrounding bins gives a
// first estimate, and a golden-section search on the windowed transform
// refines it. Resolution before refinement is 2 pi / (pad * T).
SpectralPeak dominant_frequency(const std::vector<double>& times, const std::vector<double>& values);

}  // namespace oamsim
