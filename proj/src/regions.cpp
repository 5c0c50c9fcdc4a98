#include "peakon/regions.hpp"

#include <cmath>
#include <stdexcept>

namespace peakon {

namespace {

double default_eps0(double s) {
  if (s > 3.0) return 0.0;  // A3/A4 unreachable, parameter unused
  return std::min(0.1, 0.5 * (2.0 * s - 5.0));
}

double default_eps1(double s) {
  if (s > 3.0) return 0.0;
  if (s <= 2.75) return std::min(0.1, 0.5 * (2.0 * s - 5.0));
  return std::min(0.1, 0.5 * (2.0 * s - 5.5));
}

bool on_a34_band(double s, double r) { return s <= 3.0 && r >= s - 1.5 && r <= 1.5; }

}  // namespace

RegionResult classify_gamma(double s, double r, double eps0) {
  if (!(s > 2.5)) {
    throw std::invalid_argument("classify_gamma: requires s > 5/2, got s = " + std::to_string(s));
  }
  if (!(r < s)) {
    throw std::invalid_argument("classify_gamma: requires r < s, got r = " + std::to_string(r));
  }
  if (eps0 < 0.0) {
    eps0 = default_eps0(s);
  } else if (s <= 3.0 && !(eps0 > 0.0 && eps0 < 2.0 * s - 5.0)) {
    throw std::invalid_argument("classify_gamma: requires eps0 in (0, 2s-5) for s in (5/2, 3]");
  }
  const double parabola = 4.0 * (s - r) * (s - r) - 3.0 * (2.0 * s - 3.0);

  // first-match in index order at shared boundaries
  if ((r > 1.5 && r <= s - 1.0) || (r >= 0.0 && r <= 1.5 && r >= 3.0 - s && r < s - 1.5)) {
    return {"A1", 1.0, 0.0};
  }
  if (s < 3.0 && r < 3.0 - s) {
    return {"A2", (2.0 * s - 3.0) / (s - r), 0.0};
  }
  if (on_a34_band(s, r) && parabola > 0.0) {
    return {"A3", 2.0 * (s - r) / (3.0 + eps0), eps0};
  }
  if (on_a34_band(s, r) && parabola <= 0.0) {
    return {"A4", (2.0 * s - 3.0 - eps0) / (2.0 * (s - r)), eps0};
  }
  if (r > s - 1.0) {
    return {"A5", s - r, 0.0};
  }
  if (s >= 3.0 && r < 0.0) {
    return {"A6", s / (s - r), 0.0};
  }
  throw std::logic_error("classify_gamma: no region predicate fired (s=" + std::to_string(s) +
                         ", r=" + std::to_string(r) + ")");
}

RegionResult classify_mu(double s, double p, double eps1) {
  if (!(s > 2.5)) {
    throw std::invalid_argument("classify_mu: requires s > 5/2, got s = " + std::to_string(s));
  }
  if (!(p < s - 1.0)) {
    throw std::invalid_argument("classify_mu: requires p < s - 1, got p = " + std::to_string(p));
  }
  if (eps1 < 0.0) {
    eps1 = default_eps1(s);
  } else if (s <= 2.75 && !(eps1 > 0.0 && eps1 < 2.0 * s - 5.0)) {
    throw std::invalid_argument("classify_mu: requires eps1 in (0, 2s-5) for s in (5/2, 11/4]");
  } else if (s > 2.75 && s <= 3.0 && !(eps1 > 0.0 && eps1 < 2.0 * s - 5.5)) {
    throw std::invalid_argument("classify_mu: requires eps1 in (0, 2s-11/2) for s in (11/4, 3]");
  }
  const double q = s - p - 1.0;
  const double parabola = 4.0 * q * q - 3.0 * (2.0 * s - 3.0);

  if ((p > 0.5 && p <= s - 2.0) ||
      (s > 2.75 && p >= 0.0 && p <= 0.5 && p >= 3.0 - s && p < s - 2.5)) {
    return {"B1", 1.0, 0.0};
  }
  if (s > 2.75 && s < 3.0 && p >= s - 2.5 && p <= 0.5 && parabola > 0.0) {
    return {"B2", 2.0 * q / (3.0 + eps1), eps1};
  }
  if ((s <= 2.75 && p <= 0.5) ||
      (s > 2.75 && s <= 3.0 && p >= s - 2.5 && p <= 0.5 && parabola <= 0.0)) {
    return {"B3", (2.0 * s - 3.0 - eps1) / (2.0 * q), eps1};
  }
  if (s > 2.75 && s < 3.0 && p < 3.0 - s) {
    return {"B4", (2.0 * s - 4.0) / q, 0.0};
  }
  if (p > s - 2.0) {
    return {"B5", q, 0.0};
  }
  if (s >= 3.0 && p < 0.0) {
    return {"B6", (s - 1.0) / q, 0.0};
  }
  throw std::logic_error("classify_mu: no region predicate fired (s=" + std::to_string(s) +
                         ", p=" + std::to_string(p) + ")");
}

std::vector<BoundaryGap> exponent_continuity_audit(double eps) {
  if (!(eps > 0.0 && eps <= 0.05)) {
    throw std::invalid_argument("exponent_continuity_audit: requires eps in (0, 0.05]");
  }
  std::vector<BoundaryGap> gaps;
  const auto push = [&gaps](const std::string& name, double s, double x, double a, double b) {
    gaps.push_back({name, s, x, std::abs(a - b)});
  };

  // boundaries along which gamma extends continuously
  for (double r : {-0.5, -1.0}) {
    push("gamma:s=3,r<0", 3.0, r, classify_gamma(3.0 - eps, r).exponent,
         classify_gamma(3.0 + eps, r).exponent);
  }
  for (double s : {3.0, 3.5}) {
    push("gamma:s>=3,r=0", s, 0.0, classify_gamma(s, -eps).exponent,
         classify_gamma(s, eps).exponent);
  }
  for (double s : {2.7, 2.9}) {
    const double r = 3.0 - s;
    push("gamma:r=3-s", s, r, classify_gamma(s, r - eps).exponent,
         classify_gamma(s, r + eps).exponent);
  }
  for (double s : {2.8, 3.5}) {
    const double r = s - 1.0;
    push("gamma:r=s-1", s, r, classify_gamma(s, r - eps).exponent,
         classify_gamma(s, r + eps).exponent);
  }
  // eps0->0 boundaries, audited with eps0 = eps
  for (double s : {2.7, 2.9}) {
    const double r = s - 1.5;
    push("gamma:r=s-3/2", s, r, classify_gamma(s, r - eps, eps).exponent,
         classify_gamma(s, r + eps, eps).exponent);
  }
  for (double s : {2.7, 2.9}) {
    push("gamma:r=3/2", s, 1.5, classify_gamma(s, 1.5 - eps, eps).exponent,
         classify_gamma(s, 1.5 + eps, eps).exponent);
  }
  for (double s : {2.8, 2.85}) {
    const double r = s - 0.5 * std::sqrt(3.0 * (2.0 * s - 3.0));
    push("gamma:parabola", s, r, classify_gamma(s, r - eps, eps).exponent,
         classify_gamma(s, r + eps, eps).exponent);
  }

  // boundaries along which mu extends continuously
  for (double p : {-0.5, -1.0}) {
    push("mu:s=3,p<0", 3.0, p, classify_mu(3.0 - eps, p).exponent,
         classify_mu(3.0 + eps, p).exponent);
  }
  for (double s : {3.0, 3.5}) {
    push("mu:s>=3,p=0", s, 0.0, classify_mu(s, -eps).exponent, classify_mu(s, eps).exponent);
  }
  for (double s : {2.8, 2.9}) {
    const double p = 3.0 - s;
    push("mu:p=3-s", s, p, classify_mu(s, p - eps).exponent, classify_mu(s, p + eps).exponent);
  }
  for (double s : {2.8, 3.5}) {
    const double p = s - 2.0;
    push("mu:p=s-2", s, p, classify_mu(s, p - eps).exponent, classify_mu(s, p + eps).exponent);
  }
  // eps1->0 boundaries, audited with eps1 = eps
  for (double s : {2.85, 2.9}) {
    const double p = s - 2.5;
    push("mu:p=s-5/2", s, p, classify_mu(s, p - eps, eps).exponent,
         classify_mu(s, p + eps, eps).exponent);
  }
  for (double s : {2.6, 2.9}) {
    push("mu:p=1/2", s, 0.5, classify_mu(s, 0.5 - eps, eps).exponent,
         classify_mu(s, 0.5 + eps, eps).exponent);
  }
  for (double s : {2.8, 2.85}) {
    const double p = s - 1.0 - 0.5 * std::sqrt(3.0 * (2.0 * s - 3.0));
    push("mu:parabola", s, p, classify_mu(s, p - eps, eps).exponent,
         classify_mu(s, p + eps, eps).exponent);
  }
  return gaps;
}

}  // namespace peakon
