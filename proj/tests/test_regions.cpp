#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <functional>
#include <string>

#include "peakon/regions.hpp"

using namespace peakon;

namespace {

// independent transcription of the region memberships, used as the partition
// oracle (no tie-break: the printed sets are already disjoint)
int gamma_predicate_count(double s, double r) {
  const double par = 4.0 * (s - r) * (s - r) - 3.0 * (2.0 * s - 3.0);
  int count = 0;
  if ((s > 2.5 && r > 1.5 && r <= s - 1.0) ||
      (s > 2.5 && r >= 0.0 && r <= 1.5 && r >= 3.0 - s && r < s - 1.5)) ++count;  // A1
  if (s > 2.5 && s < 3.0 && r < 3.0 - s) ++count;                                // A2
  if (s > 2.5 && s <= 3.0 && r >= s - 1.5 && r <= 1.5 && par > 0.0) ++count;     // A3
  if (s > 2.5 && s <= 3.0 && r >= s - 1.5 && r <= 1.5 && par <= 0.0) ++count;    // A4
  if (s > 2.5 && r > s - 1.0 && r < s) ++count;                                  // A5
  if (s >= 3.0 && r < 0.0) ++count;                                              // A6
  return count;
}

int mu_predicate_count(double s, double p) {
  const double q = s - p - 1.0;
  const double par = 4.0 * q * q - 3.0 * (2.0 * s - 3.0);
  int count = 0;
  if ((s > 2.5 && p > 0.5 && p <= s - 2.0) ||
      (s > 2.75 && p >= 0.0 && p <= 0.5 && p >= 3.0 - s && p < s - 2.5)) ++count;          // B1
  if (s > 2.75 && s < 3.0 && p >= s - 2.5 && p <= 0.5 && par > 0.0) ++count;               // B2
  if ((s > 2.5 && s <= 2.75 && p <= 0.5) ||
      (s > 2.75 && s <= 3.0 && p >= s - 2.5 && p <= 0.5 && par <= 0.0)) ++count;           // B3
  if (s > 2.75 && s < 3.0 && p < 3.0 - s) ++count;                                         // B4
  if (s > 2.5 && p > s - 2.0 && p < s - 1.0) ++count;                                      // B5
  if (s >= 3.0 && p < 0.0) ++count;                                                        // B6
  return count;
}

}  // namespace

TEST_CASE("classify_gamma on the worked examples") {
  RegionResult r = classify_gamma(3.5, 1.0);
  CHECK(r.region_id == "A1");
  CHECK(r.exponent == doctest::Approx(1.0));

  r = classify_gamma(2.75, 2.0);
  CHECK(r.region_id == "A5");
  CHECK(r.exponent == doctest::Approx(0.75).epsilon(1e-14));

  r = classify_gamma(2.6, 0.2);
  CHECK(r.region_id == "A2");
  CHECK(r.exponent == doctest::Approx(2.2 / 2.4).epsilon(1e-14));
}

TEST_CASE("classify_mu on the worked examples") {
  RegionResult r = classify_mu(3.5, 1.0);
  CHECK(r.region_id == "B1");
  CHECK(r.exponent == doctest::Approx(1.0));

  r = classify_mu(3.5, 2.0);
  CHECK(r.region_id == "B5");
  CHECK(r.exponent == doctest::Approx(0.5).epsilon(1e-14));

  r = classify_mu(2.8, 0.1);
  CHECK(r.region_id == "B4");
  CHECK(r.exponent == doctest::Approx(1.6 / 1.7).epsilon(1e-14));
}

namespace {

bool throws_mentioning(const std::function<void()>& fn, const std::string& needle) {
  try {
    fn();
  } catch (const std::invalid_argument& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST_CASE("scope validation") {
  CHECK(throws_mentioning([] { classify_gamma(2.0, 1.0); }, "requires s > 5/2"));
  CHECK(throws_mentioning([] { classify_gamma(3.0, 3.0); }, "requires r < s"));
  CHECK(throws_mentioning([] { classify_mu(2.4, 0.0); }, "requires s > 5/2"));
  CHECK(throws_mentioning([] { classify_mu(3.0, 2.0); }, "requires p < s - 1"));
  // explicit eps outside the printed admissible interval
  CHECK_THROWS_AS(classify_gamma(2.8, 1.45, 0.7), std::invalid_argument);
  CHECK_THROWS_AS(classify_mu(2.9, 0.45, 0.5), std::invalid_argument);
  CHECK_NOTHROW(classify_gamma(2.8, 1.45, 0.2));
  CHECK_NOTHROW(classify_gamma(3.7, 1.45, 123.0));  // ignored for s > 3
}

TEST_CASE("partition: exactly one region predicate fires on a 200x200 grid") {
  const int cells = 200;
  for (int i = 0; i < cells; ++i) {
    const double s = 2.5001 + 1.9993 * i / (cells - 1);
    for (int j = 0; j < cells; ++j) {
      const double r = -1.4971 + (s - 1e-9 + 1.4971) * j / (cells - 1);
      CAPTURE(s);
      CAPTURE(r);
      REQUIRE(gamma_predicate_count(s, r) == 1);
      const RegionResult res = classify_gamma(s, r);
      REQUIRE(res.exponent > 0.0);
      REQUIRE(res.exponent <= 1.0);

      const double p = -1.4971 + (s - 1.0 - 1e-9 + 1.4971) * j / (cells - 1);
      CAPTURE(p);
      REQUIRE(mu_predicate_count(s, p) == 1);
      const RegionResult resm = classify_mu(s, p);
      REQUIRE(resm.exponent > 0.0);
      REQUIRE(resm.exponent <= 1.0);
    }
  }
}

TEST_CASE("eps defaults stay strictly interior") {
  // s in (5/2, 3]: eps0 in (0, 2s-5)
  for (double s : {2.51, 2.7, 3.0}) {
    const RegionResult r = classify_gamma(s, s - 1.4);  // lands in A3/A4 band
    if (r.region_id == "A3" || r.region_id == "A4") {
      CHECK(r.eps_used > 0.0);
      CHECK(r.eps_used < 2.0 * s - 5.0);
    }
  }
  const RegionResult b3 = classify_mu(2.6, 0.3);
  CHECK(b3.region_id == "B3");
  CHECK(b3.eps_used > 0.0);
  CHECK(b3.eps_used < 2.0 * 2.6 - 5.0);
}

TEST_CASE("continuity audit: gaps shrink linearly") {
  CHECK_THROWS_AS(exponent_continuity_audit(0.0), std::invalid_argument);
  CHECK_THROWS_AS(exponent_continuity_audit(0.2), std::invalid_argument);

  const auto coarse = exponent_continuity_audit(0.01);
  const auto fine = exponent_continuity_audit(0.001);
  REQUIRE(coarse.size() == fine.size());
  REQUIRE(coarse.size() >= 14);
  for (size_t i = 0; i < coarse.size(); ++i) {
    CAPTURE(coarse[i].boundary);
    CAPTURE(coarse[i].s);
    CHECK(coarse[i].gap <= 0.1);  // already small at eps = 0.01
    if (coarse[i].gap > 1e-14) {
      CHECK(fine[i].gap <= coarse[i].gap / 5.0);
    }
  }
}
