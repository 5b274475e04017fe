#include "sr/rates.hpp"

#include <cmath>
#include <string>

#include "sr/errors.hpp"

namespace sr {

void RateSet::validate() const {
  if (!std::isfinite(radiative) || radiative <= 0.0)
    throw ValidationError("radiative rate must be finite and > 0, got " +
                          std::to_string(radiative));
  if (!std::isfinite(nonradiative) || nonradiative < 0.0)
    throw ValidationError("non-radiative rate must be finite and >= 0, got " +
                          std::to_string(nonradiative));
  if (!std::isfinite(pump) || pump < 0.0)
    throw ValidationError("pump rate must be finite and >= 0, got " + std::to_string(pump));
}

RateSet RateSet::from_ratio(double ratio, double pump_ratio) {
  RateSet r{1.0, ratio, pump_ratio};
  r.validate();
  return r;
}

}  // namespace sr
