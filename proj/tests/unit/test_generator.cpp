#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "gridprice/errors.hpp"
#include "gridprice/generator.hpp"
#include "gridprice/heuristics.hpp"
#include "gridprice/model.hpp"
#include "gridprice/price_graph.hpp"
#include "gridprice/scenario_io.hpp"

using namespace gridprice;

namespace {

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    path_ = std::string("gridprice_test_") + std::to_string(counter_++) + ".csv";
    std::ofstream out(path_, std::ios::binary);
    out << contents;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  static int counter_;
  std::string path_;
};

int TempFile::counter_ = 0;

}  // namespace

TEST_CASE("canonical ladder counts down to one") {
  CHECK(canonical_ladder(1) == std::vector<double>{1.0});
  CHECK(canonical_ladder(3) == std::vector<double>{3.0, 2.0, 1.0});
}

TEST_CASE("generated scenarios are valid and reproducible") {
  const std::vector<double> alphas{0.7, 1.3, 0.4};
  const Scenario a =
      generate_scenario(20, 3, alphas, DemandModel::homogeneous(2.0), 42);
  const Scenario b =
      generate_scenario(20, 3, alphas, DemandModel::homogeneous(2.0), 42);
  CHECK(scenario_to_json(a) == scenario_to_json(b));
  CHECK(validate(a).empty());

  const Scenario c =
      generate_scenario(20, 3, alphas, DemandModel::homogeneous(2.0), 43);
  CHECK(scenario_to_json(a) != scenario_to_json(c));

  for (const Job& j : a.jobs) {
    CHECK(j.demand == 2.0);
    CHECK(j.deadline() <= a.horizon);
  }
}

TEST_CASE("generated ids are sequential in draw order") {
  const Scenario s = generate_scenario(12, 2, {1.0, 1.0},
                                       DemandModel::homogeneous(1.0), 7);
  for (std::size_t i = 0; i < s.jobs.size(); ++i) {
    CHECK(s.jobs[i].id == static_cast<std::int64_t>(i) + 1);
    if (i > 0) CHECK(s.jobs[i].arrival >= s.jobs[i - 1].arrival);
  }
}

TEST_CASE("zero rates generate no jobs, and rates scale counts") {
  const Scenario none =
      generate_scenario(50, 2, {0.0, 0.0}, DemandModel::homogeneous(1.0), 5);
  CHECK(none.jobs.empty());

  // Mean count over K periods is K * alpha; allow 4 sigma.
  const int horizon = 400;
  const double alpha = 3.0;
  const Scenario s = generate_scenario(horizon, 1, {alpha},
                                       DemandModel::homogeneous(1.0), 11);
  const double expected = horizon * alpha;
  const double sigma = std::sqrt(expected);
  CHECK(std::abs(static_cast<double>(s.jobs.size()) - expected) < 4.0 * sigma);
}

TEST_CASE("classes clamp near the end of the horizon") {
  const Scenario s = generate_scenario(6, 4, {0.0, 0.0, 0.0, 2.5},
                                       DemandModel::homogeneous(1.0), 3);
  for (const Job& j : s.jobs) {
    CHECK(j.deadline() <= s.horizon);
    if (j.arrival <= 3) CHECK(j.deadline_class == 4);
    if (j.arrival == 6) CHECK(j.deadline_class == 1);
  }
}

TEST_CASE("empirical demands come from the pool") {
  const std::vector<double> pool{1.0, 2.5, 4.0};
  const Scenario s =
      generate_scenario(30, 2, {1.0, 1.0}, DemandModel::empirical(pool), 9);
  REQUIRE(!s.jobs.empty());
  for (const Job& j : s.jobs) {
    CHECK(std::count(pool.begin(), pool.end(), j.demand) > 0);
  }
}

TEST_CASE("generator validates its inputs") {
  CHECK_THROWS_AS(generate_scenario(0, 1, {1.0}, DemandModel::homogeneous(1), 1),
                  ValidationError);
  CHECK_THROWS_AS(generate_scenario(5, 2, {1.0}, DemandModel::homogeneous(1), 1),
                  ValidationError);
  CHECK_THROWS_AS(
      generate_scenario(5, 1, {-1.0}, DemandModel::homogeneous(1), 1),
      ValidationError);
  CHECK_THROWS_AS(
      generate_scenario(5, 1, {1.0}, DemandModel::homogeneous(-2.0), 1),
      ValidationError);
  CHECK_THROWS_AS(generate_scenario(5, 1, {1.0}, DemandModel::empirical({}), 1),
                  ValidationError);
}

TEST_CASE("csv ingestion builds a scenario") {
  TempFile file(
      "job_id,arrival,demand\n"
      "101,1,2.5\n"
      "102,3,1.0\n"
      "103,3,0.5\n");
  const Scenario s = ingest_jobs_csv(file.path(), 2, 77);
  CHECK(s.horizon == 3);
  CHECK(s.max_deadline == 2);
  REQUIRE(s.jobs.size() == 3);
  CHECK(s.jobs[0].id == 101);
  CHECK(s.jobs[0].arrival == 1);
  CHECK(s.jobs[0].demand == 2.5);
  CHECK(validate(s).empty());

  const Scenario again = ingest_jobs_csv(file.path(), 2, 77);
  CHECK(scenario_to_json(s) == scenario_to_json(again));

  const Scenario wider = ingest_jobs_csv(file.path(), 2, 77, 10);
  CHECK(wider.horizon == 10);
}

TEST_CASE("csv ingestion reports all problems with line numbers") {
  TempFile file(
      "job_id,arrival,demand\n"
      "1,1,1.0\n"
      "2,zero,1.0\n"
      "3,2\n"
      "4,-1,1.0\n"
      "5,2,-3.0\n");
  try {
    ingest_jobs_csv(file.path(), 2, 1);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    CHECK(what.find("line 3") != std::string::npos);
    CHECK(what.find("line 4") != std::string::npos);
    CHECK(what.find("line 5") != std::string::npos);
    CHECK(what.find("line 6") != std::string::npos);
    CHECK(what.find("line 2") == std::string::npos);
  }
}

TEST_CASE("csv ingestion rejects structural problems") {
  TempFile bad_header("id,arrival,demand\n1,1,1\n");
  CHECK_THROWS_AS(ingest_jobs_csv(bad_header.path(), 2, 1), ValidationError);

  TempFile empty("");
  CHECK_THROWS_AS(ingest_jobs_csv(empty.path(), 2, 1), ValidationError);

  TempFile beyond("job_id,arrival,demand\n1,9,1.0\n");
  CHECK_THROWS_AS(ingest_jobs_csv(beyond.path(), 2, 1, 5), ValidationError);

  CHECK_THROWS_AS(ingest_jobs_csv("definitely_missing.csv", 2, 1),
                  ValidationError);
}

TEST_CASE("csv ingestion tolerates CRLF and blank lines") {
  TempFile file("job_id,arrival,demand\r\n7,2,1.5\r\n\r\n");
  const Scenario s = ingest_jobs_csv(file.path(), 3, 5);
  REQUIRE(s.jobs.size() == 1);
  CHECK(s.jobs[0].id == 7);
  CHECK(s.jobs[0].arrival == 2);
  CHECK(s.horizon == 2);
  // Class drawn in [1, min(N, K - arrival + 1)] = [1, 1].
  CHECK(s.jobs[0].deadline_class == 1);
}

TEST_CASE("flat supply keeps the optimum strictly positive") {
  const Scenario s = generate_scenario(5, 2, {1.0, 1.0},
                                       DemandModel::homogeneous(1.0), 21);
  Scenario with_supply = s;
  with_supply.supply = flat_supply(s);
  REQUIRE(with_supply.supply->size() == 5);
  const SolveResult best = brute_force(with_supply, Objective::match_supply);
  CHECK(best.objective_value > 0.0);
}

TEST_CASE("matched supply admits a perfect schedule") {
  const Scenario s = generate_scenario(6, 2, {1.2, 0.8},
                                       DemandModel::homogeneous(1.0), 33);
  Scenario with_supply = s;
  with_supply.supply = matched_supply(s, 99);
  const SolveResult best = mse_dijkstra(with_supply);
  CHECK(best.objective_value == 0.0);
}

TEST_CASE("scenario json round-trips") {
  Scenario s;
  s.horizon = 3;
  s.max_deadline = 2;
  s.thresholds = {10.0, 5.0};
  s.jobs = {{1, 1, 2, 4.0}, {2, 2, 1, 2.0}};
  s.supply = std::vector<double>{4.0, 2.0, 0.0};

  const std::string text = scenario_to_json(s);
  const Scenario back = scenario_from_json(text);
  CHECK(back.horizon == s.horizon);
  CHECK(back.max_deadline == s.max_deadline);
  CHECK(back.thresholds == s.thresholds);
  REQUIRE(back.jobs.size() == 2);
  CHECK(back.jobs[0].arrival == 1);
  CHECK(back.jobs[0].deadline_class == 2);
  CHECK(back.jobs[0].demand == 4.0);
  CHECK(back.jobs[1].id == 2);
  REQUIRE(back.supply.has_value());
  CHECK(*back.supply == *s.supply);
  CHECK(scenario_to_json(back) == text);

  s.supply.reset();
  const Scenario no_supply = scenario_from_json(scenario_to_json(s));
  CHECK(!no_supply.supply.has_value());
}

TEST_CASE("scenario json rejects malformed input") {
  CHECK_THROWS_AS(scenario_from_json("not json at all"), ValidationError);
  CHECK_THROWS_AS(scenario_from_json("{}"), ValidationError);
  CHECK_THROWS_AS(scenario_from_json(R"({"K": 2, "N": 1})"), ValidationError);
  CHECK_THROWS_AS(
      scenario_from_json(
          R"({"K": 2, "N": 1, "thresholds": [1], "jobs": [{"arrival": 5, "deadline": 1, "demand": 1}]})"),
      ValidationError);
}

TEST_CASE("scenario files round-trip") {
  const Scenario s = generate_scenario(8, 2, {0.9, 0.6},
                                       DemandModel::homogeneous(1.5), 13);
  const std::string path = "gridprice_roundtrip_test.json";
  save_scenario(s, path);
  const Scenario back = load_scenario(path);
  CHECK(scenario_to_json(back) == scenario_to_json(s));
  std::remove(path.c_str());
}
