#include "dsmfuse/analysis.hpp"

#include <cmath>

#include "dsmfuse/error.hpp"

namespace dsmfuse {

namespace {

void require_unit(double x, const char* name) {
  if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
    throw InputError(std::string(name) + " = " + std::to_string(x) + " is outside [0, 1]");
  }
}

void flag_if_outside(std::vector<std::string>& flags, double value, const char* what) {
  if (value < 0.0 || value > 1.0) {
    flags.push_back(std::string(what) + " = " + std::to_string(value) + " is not a probability");
  }
}

}  // namespace

double pearl_flying_bound(double eps1, double eps3) {
  require_unit(eps1, "eps1");
  require_unit(eps3, "eps3");
  if (eps3 == 1.0) throw InputError("eps3 = 1 leaves the bound undefined");
  return eps1 / (1.0 - eps3);
}

BayesEstimates indifference_estimates(double eps1, double eps2, double eps3) {
  require_unit(eps1, "eps1");
  require_unit(eps2, "eps2");
  require_unit(eps3, "eps3");
  if (eps3 == 1.0) throw InputError("eps3 = 1 makes P(b|p) vanish");

  BayesEstimates out;
  out.p_fly = eps1 * (1.0 - eps2) / (1.0 - eps3);
  out.p_not_fly = (1.0 - eps1) * eps2 / (1.0 - eps3);
  out.additivity_deficit = 1.0 - (out.p_fly + out.p_not_fly);
  out.bound = pearl_flying_bound(eps1, eps3);
  flag_if_outside(out.validity_flags, out.p_fly, "P(f|p&b)");
  flag_if_outside(out.validity_flags, out.p_not_fly, "P(~f|p&b)");
  return out;
}

ModusTollensPosteriors modus_tollens_posteriors(double w, double pa, double pb) {
  require_unit(w, "w");
  require_unit(pa, "P(a)");
  require_unit(pb, "P(b)");
  if (pb == 0.0 || pb == 1.0) throw InputError("P(b) must lie strictly between 0 and 1");

  ModusTollensPosteriors out;
  out.not_a_given_not_b = 1.0 - (1.0 - w) * pa / (1.0 - pb);
  out.not_a_given_b = 1.0 - w * pa / pb;
  flag_if_outside(out.flags, out.not_a_given_not_b, "P(~a|~b)");
  flag_if_outside(out.flags, out.not_a_given_b, "P(~a|b)");
  return out;
}

}  // namespace dsmfuse
