#pragma once

#include <string>
#include <vector>

namespace peakon {

// Classification of (s,r) / (s,p) into the Hölder-exponent regions A1..A6 /
// B1..B6 together with the exponent gamma(s,r) or mu(s,p).
struct RegionResult {
  std::string region_id;  // "A1".."A6" or "B1".."B6"
  double exponent = 0.0;  // in (0,1]
  double eps_used = 0.0;  // eps0 or eps1 actually applied (0 when unused)
};

// Solution-map exponent gamma(s,r). Requires s > 5/2 and r < s; eps0 must lie
// in (0, 2s-5) when s <= 3 (pass a negative value for the default
// min(0.1, half the admissible interval)). Ties on shared boundaries resolve
// in index order A1..A6.
RegionResult classify_gamma(double s, double r, double eps0 = -1.0);

// Time-derivative exponent mu(s,p). Requires s > 5/2 and p < s - 1; eps1
// follows the printed admissible intervals for s <= 3.
RegionResult classify_mu(double s, double p, double eps1 = -1.0);

struct BoundaryGap {
  std::string boundary;     // which continuity line/parabola
  double s = 0.0;           // sample location along the boundary
  double coordinate = 0.0;  // the r or p value on the boundary
  double gap = 0.0;         // |exponent(left) - exponent(right)| at distance eps
};

// Samples points straddling every boundary where the exponent maps are
// claimed continuous (the eps0/eps1-limit boundaries are audited with the
// parameter set to eps). Gaps shrink linearly in eps. Requires eps in (0, 0.05].
std::vector<BoundaryGap> exponent_continuity_audit(double eps);

}  // namespace peakon
