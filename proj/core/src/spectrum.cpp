#include "qumode/spectrum.hpp"

#include <cstdio>
#include <ostream>

namespace qumode {

double Spectrum::total_weight() const {
  double total = 0.0;
  for (const SpectralLine& line : lines) total += line.weight;
  return total;
}

std::string format_real(double value) {
  // Avoid "-0" in output files.
  if (value == 0.0) value = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum,
                        std::string_view weight_column) {
  out << "energy," << weight_column << '\n';
  for (const SpectralLine& line : spectrum.lines) {
    out << format_real(line.energy) << ',' << format_real(line.weight) << '\n';
  }
}

}  // namespace qumode
