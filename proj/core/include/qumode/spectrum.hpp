#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qumode {

struct SpectralLine {
  double energy = 0.0;
  double weight = 0.0;
};

/// Stick spectrum or histogram: (energy, weight) pairs, weights >= 0.
struct Spectrum {
  std::vector<SpectralLine> lines;

  double total_weight() const;
};

/// "%.12g" formatting used by every CSV writer.
std::string format_real(double value);

/// CSV with header `energy,<weight_column>`, LF line endings.
void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum,
                        std::string_view weight_column = "weight");

}  // namespace qumode
