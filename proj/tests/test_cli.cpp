#include <doctest.h>

#include "commands.hpp"
#include "report.hpp"

using namespace lexseg;
using namespace lexseg::cli;

TEST_CASE("sweep record JSON round trip") {
  SweepRecord rec;
  rec.n = 4;
  rec.d = 3;
  rec.u = "1,0,1,1";
  rec.v = "0,1,0,2";
  rec.verdict = "non-completely";
  rec.completely = false;
  rec.completeness_iters = 12;
  rec.power_status = {{1, true}, {2, true}, {3, true}};
  rec.negative_search = "";
  rec.closure_probes_ok = true;
  rec.rees = ReesSummary{9, true, true};
  rec.elapsed_us = 1234;

  const json j = to_json(rec);
  CHECK(sweep_record_from_json(j) == rec);
  // Serialized text parses back to the same object too.
  CHECK(sweep_record_from_json(json::parse(j.dump())) == rec);

  SweepRecord negative;
  negative.n = 3;
  negative.d = 2;
  negative.u = "1,1,0";
  negative.v = "1,1,0";
  negative.verdict = "unclassified-by-paper";
  negative.completeness_iters = 6;
  negative.elapsed_us = 77;
  CHECK(sweep_record_from_json(to_json(negative)) == negative);
}

TEST_CASE("segment argument validation") {
  CHECK_THROWS_AS(parse_segment({3, 2, "1,1", "1,0,1"}), DimensionError);
  CHECK_THROWS_AS(parse_segment({3, 2, "1,1,1", "1,0,1"}), DimensionError);
  CHECK_THROWS_AS(parse_segment({3, 2, "1,0,1", "1,1,0"}), OrderError);
  CHECK_THROWS_AS(parse_segment({3, 2, "a,b,c", "1,1,0"}), ValidationError);
  CHECK(parse_segment({3, 2, "1,1,0", "0,2,0"}).generators.size() == 3);
}

TEST_CASE("sweep_one on the gap-shaped pair") {
  bool discrepancy = false;
  const auto rec = sweep_one(Monomial::from_csv(4, "1,0,1,1"),
                             Monomial::from_csv(4, "0,1,0,2"), 2,
                             /*seed=*/7, /*probes=*/4, &discrepancy);
  CHECK_FALSE(discrepancy);
  CHECK(rec.verdict == "non-completely");
  CHECK(rec.power_status.at(1));
  CHECK(rec.power_status.at(2));
  REQUIRE(rec.rees.has_value());
  CHECK(rec.rees->quadratic);
  CHECK(rec.rees->verified);
  CHECK(rec.closure_probes_ok);
}

TEST_CASE("sweep_one refutes negatives exhaustively") {
  // L(x1*x2^2, x1*x3^2) in three variables is completely with b1 = a1, so it
  // has no linear resolution; every generator order must fail.
  bool discrepancy = false;
  const auto rec = sweep_one(Monomial::from_csv(3, "1,2,0"),
                             Monomial::from_csv(3, "1,0,2"), 1,
                             /*seed=*/7, /*probes=*/0, &discrepancy);
  if (rec.verdict == "no-linear-resolution") {
    CHECK_FALSE(discrepancy);
    CHECK(rec.negative_search == "refuted-all-orders");
  }
}
