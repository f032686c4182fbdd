// Library usage: certify the classical polynomial, then watch the two
// inverse-zeta bounds separate as t grows with sigma = 1 + 1/log t.

#include <cmath>
#include <cstdio>

#include "trigbound.hpp"

int main() {
  using namespace trigbound;
  const TrigPoly<Rational> poly{Rational(3), Rational(4), Rational(1)};

  const auto report = check_conditions(poly);
  std::printf("conditions I/II/III: %d %d %d, certificate: %s, a0/a1 = %s\n", report.condI, report.condII,
              report.condIII, to_string(report.nonneg.verdict).c_str(), format_rational(*report.ratio).c_str());

  std::printf("%12s %10s %14s %14s %s\n", "t", "sigma", "trivial", "trig", "superior");
  for (double t : log_spaced(1e2, 1e6, 5)) {
    const double sigma = 1 + 1 / std::log(t);
    const auto r = compare(poly, SigmaT(sigma, t));
    std::printf("%12.0f %10.6f %14.6f %14.6f %s\n", t, sigma, r.trivial_upper_inv, r.trig_upper_inv,
                to_string(r.superior).c_str());
  }
}
