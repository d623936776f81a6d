#include "resnil/error.hpp"
#include "resnil/job.hpp"
#include "resnil/report.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace resnil;

namespace {

struct Output {
  int code;
  std::string out, err;
};

Output run_job(const JobSpec& job) {
  std::ostringstream out, err;
  int code = run(job, out, err);
  return {code, out.str(), err.str()};
}

JobSpec example(const std::string& name, unsigned power = 1) {
  JobSpec j;
  j.example = name;
  j.power = power;
  return j;
}

}  // namespace

TEST(Cli, BuiltinExamplesMeetExpectations) {
  for (const char* name : {"mikhailov", "braid3", "klein_p2", "exnres_mixed_signs", "identity"})
    ASSERT_NE(find_example(name), nullptr) << name;
  std::ostringstream out;
  EXPECT_EQ(self_test(out), 0) << out.str();
}

TEST(Cli, MikhailovReport) {
  Output o = run_job(example("mikhailov"));
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("not residually nilpotent; lower central series length ω²"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("det=-1, tr=3"), std::string::npos);
  EXPECT_NE(o.out.find("[proven]"), std::string::npos);
}

TEST(Cli, BraidReport) {
  JobSpec j;
  j.matrices = {parse_matrix("[[1,1],[-1,0]]")};
  Output o = run_job(j);
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("γ_ω = γ₂ (length 2)"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("det(A-E)=1"), std::string::npos);
}

TEST(Cli, PoweredEndo) {
  JobSpec j;
  j.endo = parse_endo("a->b; b->a b^3");
  j.power = 2;
  Verdict v = classify_job(j);
  EXPECT_EQ(v.p_finite(Int(3)), (Claim{true, Certainty::proven()}));
  Output o = run_job(j);
  EXPECT_NE(o.out.find("det=1, tr=11"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("residually 3-finite: yes [proven]"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  JobSpec none;
  EXPECT_EQ(run_job(none).code, ExitInputError);
  JobSpec two;
  two.matrices = {IntMatrix::identity(2)};
  two.example = "identity";
  EXPECT_EQ(run_job(two).code, ExitInputError);
  JobSpec singular;
  singular.matrices = {IntMatrix{{2, 0}, {0, 1}}};
  EXPECT_EQ(run_job(singular).code, ExitInputError);
  JobSpec badprime = example("identity");
  badprime.primes = {Int(4)};
  EXPECT_EQ(run_job(badprime).code, ExitInputError);
  JobSpec unknown = example("nope");
  EXPECT_EQ(run_job(unknown).code, ExitInputError);
  JobSpec capped = example("mikhailov");
  capped.tensor_bound = 6;
  capped.caps = {16, 16};
  EXPECT_EQ(run_job(capped).code, ExitCapExceeded);
  JobSpec json_err = none;
  json_err.json = true;
  EXPECT_NE(run_job(json_err).out.find("\"error\""), std::string::npos);
}

TEST(Cli, Determinism) {
  for (const auto& ex : builtin_examples()) {
    JobSpec j = example(ex.name);
    EXPECT_EQ(run_job(j).out, run_job(j).out);
    j.json = true;
    EXPECT_EQ(run_job(j).out, run_job(j).out);
  }
}

TEST(Cli, JsonJobInput) {
  JobSpec j = job_from_json(R"({"endo": "a->b; b->a b^3", "power": 2, "primes": [3, "5"], "tensor_bound": 3})");
  EXPECT_TRUE(j.json);
  EXPECT_EQ(j.power, 2u);
  EXPECT_EQ(j.primes, (std::vector<Int>{3, 5}));
  JobSpec m = job_from_json(R"({"matrices": [[[1,0],[-2,1]], "[[-1,0],[2,1]]"]})");
  EXPECT_EQ(m.matrices.size(), 2u);
  EXPECT_THROW(job_from_json("{\"matrix\": 3"), Error);
  EXPECT_THROW(job_from_json("[1]"), Error);
}

// parse(emit(verdict)) == verdict for builtins and random matrices.
TEST(CliProperty, JsonRoundTrip) {
  for (const auto& ex : builtin_examples()) {
    Verdict v = classify_job(example(ex.name));
    EXPECT_EQ(verdict_from_json(verdict_to_json(v)), v) << ex.name;
  }
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 25; ++iter) {
    std::size_t n = static_cast<std::size_t>(testsupport::uniform(rng, 2, 3));
    Verdict v = classify_matrix(testsupport::random_unimodular(rng, n, 5));
    EXPECT_EQ(verdict_from_json(verdict_to_json(v, -1)), v);
  }
  EXPECT_THROW(verdict_from_json("{}"), Error);
}

TEST(CliProperty, EveryWitnessHasAnchor) {
  for (const auto& ex : builtin_examples())
    for (const auto& w : classify_job(example(ex.name)).witnesses) {
      EXPECT_FALSE(w.anchor.empty());
      EXPECT_NE(find_citation(w.anchor), nullptr) << w.anchor;
      EXPECT_FALSE(w.evidence.empty());
    }
}
