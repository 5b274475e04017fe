#pragma once

namespace sr {

// Physical rate constants, all in the same 1/time unit. Results depend on
// gamma and gamma_p only through the dimensionless ratios gamma/gamma_r and
// gamma_p/gamma_r; rescaling all three by c > 0 rescales time by 1/c and
// leaves yields and efficiencies unchanged.
struct RateSet {
  double radiative = 1.0;     // single-emitter spontaneous emission rate (gamma_r), > 0
  double nonradiative = 0.0;  // single-emitter non-radiative decay rate (gamma), >= 0
  double pump = 0.0;          // incoherent pump rate per emitter (gamma_p), >= 0

  double ratio() const { return nonradiative / radiative; }
  double pump_ratio() const { return pump / radiative; }

  void validate() const;  // throws ValidationError

  // radiative = 1, so times are in units of 1/gamma_r.
  static RateSet from_ratio(double ratio, double pump_ratio = 0.0);
};

}  // namespace sr
