#include "resnil/job.hpp"

#include "resnil/error.hpp"
#include "resnil/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>

namespace resnil {

void JobSpec::validate() const {
  const int sources = (matrices.empty() ? 0 : 1) + (endo ? 1 : 0) + (example ? 1 : 0);
  if (sources != 1) throw Error(ErrorKind::InvalidInput, "exactly one of matrix, endo or example is required");
  if (inverse && !endo) throw Error(ErrorKind::InvalidInput, "an inverse needs an endomorphism input");
  if (power < 1) throw Error(ErrorKind::InvalidInput, "power must be at least 1");
  for (const auto& p : primes)
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, to_string(p) + " is not prime");
  if (example && !find_example(*example)) throw Error(ErrorKind::InvalidInput, "unknown example '" + *example + "'");
}

bool Expectation::matches(const Verdict& v) const {
  if (v.residually_nilpotent.holds != residually_nilpotent) return false;
  if (v.residually_nilpotent.certainty.kind != CertaintyKind::Proven) return false;
  if (v.lcs_length != lcs) return false;
  for (const auto& p : p_finite)
    if (!v.p_finite(p).holds) return false;
  if (all_primes && !(v.all_primes && v.all_primes->holds)) return false;
  return verdict_violations(v).empty();
}

namespace {

JobSpec endo_job(const std::string& f, const std::string& inverse = "") {
  JobSpec j;
  j.endo = parse_endo(f);
  if (!inverse.empty()) j.inverse = parse_endo(inverse);
  return j;
}

JobSpec matrices_job(std::vector<IntMatrix> ms) {
  JobSpec j;
  j.matrices = std::move(ms);
  return j;
}

}  // namespace

const std::vector<BuiltinExample>& builtin_examples() {
  static const std::vector<BuiltinExample> table = {
      {"mikhailov", "F_2 x| Z with a -> b, b -> a b^3",
       endo_job("a->b; b->a b^3", "a->b a^-3; b->a"),
       {false, LcsLength::OmegaSquared, {}, false}},
      {"braid3", "the braid group B_3 as F_2 x| Z with u -> u v^-1, v -> u",
       endo_job("u->u v^-1; v->u", "u->v; v->u^-1 v"),
       {false, LcsLength::Two, {}, false}},
      {"klein_p2", "pure braid group of the Klein bottle, F_2 x| F_2",
       matrices_job({IntMatrix{{1, 0}, {-2, 1}}, IntMatrix{{-1, 0}, {2, 1}}}),
       {true, LcsLength::Omega, {}, false}},
      {"exnres_mixed_signs", "F_3 x| Z with x1 -> x1, x2 -> x2^-1, x3 -> x3",
       endo_job("x1->x1; x2->x2^-1; x3->x3", "x1->x1; x2->x2^-1; x3->x3"),
       {true, LcsLength::Omega, {Int(2)}, false}},
      {"identity", "F_2 x Z", endo_job("a->a; b->b", "a->a; b->b"), {true, LcsLength::Omega, {}, true}},
  };
  return table;
}

const BuiltinExample* find_example(const std::string& name) {
  for (const auto& e : builtin_examples())
    if (e.name == name) return &e;
  return nullptr;
}

ResolvedJob resolve(const JobSpec& job) {
  job.validate();
  ResolvedJob r;
  const JobSpec* src = &job;
  if (job.example) {
    const BuiltinExample* ex = find_example(*job.example);
    src = &ex->job;
    r.description.push_back("example: " + ex->name + " (" + ex->description + ")");
  }
  r.matrices = src->matrices;
  r.endo = src->endo;
  r.inverse = src->inverse;
  if (r.endo) r.description.push_back("endomorphism: " + r.endo->to_string());
  if (job.power > 1) {
    r.description.push_back("power: " + std::to_string(job.power));
    for (auto& m : r.matrices) m = matrix_power(m, job.power);
    if (r.endo) r.endo = endo_power(*r.endo, job.power);
    if (r.inverse) r.inverse = endo_power(*r.inverse, job.power);
  }
  std::vector<IntMatrix> shown = r.matrices;
  if (r.endo) shown = {abelianization_matrix(*r.endo)};
  for (std::size_t i = 0; i < shown.size(); ++i) {
    const IntMatrix& m = shown[i];
    std::string line = (shown.size() > 1 ? "action matrix " + std::to_string(i + 1) : std::string("action matrix")) +
                       ": " + m.to_string();
    if (m.is_square()) line += "  det=" + to_string(determinant(m)) + ", tr=" + to_string(trace(m));
    r.description.push_back(line);
  }
  return r;
}

namespace {

Verdict classify_resolved(const ResolvedJob& r, const JobSpec& job) {
  ClassifyOptions opts;
  opts.tensor_bound = job.tensor_bound;
  opts.primes = job.primes;
  opts.caps = job.caps;
  if (r.endo) return classify_endo(*r.endo, r.inverse, opts);
  return classify_action_family(r.matrices, opts);
}

}  // namespace

Verdict classify_job(const JobSpec& job) { return classify_resolved(resolve(job), job); }

JobSpec job_from_json(const std::string& text) {
  using nlohmann::json;
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "job JSON must be an object");
    JobSpec job;
    auto read_matrix = [](const json& m) {
      if (m.is_string()) return parse_matrix(m.get<std::string>());
      return parse_matrix(m.dump());
    };
    if (j.contains("matrix")) job.matrices.push_back(read_matrix(j.at("matrix")));
    if (j.contains("matrices"))
      for (const auto& m : j.at("matrices")) job.matrices.push_back(read_matrix(m));
    if (j.contains("endo")) job.endo = parse_endo(j.at("endo").get<std::string>());
    if (j.contains("inverse")) job.inverse = parse_endo(j.at("inverse").get<std::string>());
    if (j.contains("example")) job.example = j.at("example").get<std::string>();
    if (j.contains("power")) job.power = j.at("power").get<unsigned>();
    if (j.contains("tensor_bound")) job.tensor_bound = j.at("tensor_bound").get<unsigned>();
    if (j.contains("primes"))
      for (const auto& p : j.at("primes")) job.primes.emplace_back(p.is_string() ? p.get<std::string>() : p.dump());
    if (j.contains("cap")) {
      const auto cap = j.at("cap").get<std::size_t>();
      job.caps = {cap, cap};
    }
    job.json = true;
    return job;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("job JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::InvalidInput, "job JSON: malformed prime");
  }
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    ResolvedJob r = resolve(job);
    Verdict v = classify_resolved(r, job);
    if (job.json)
      out << verdict_to_json(v) << "\n";
    else
      out << render_text(v, {r.description, job.primes});
    return ExitOk;
  } catch (const Error& e) {
    if (job.json) {
      nlohmann::ordered_json j;
      j["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
      out << j.dump(2) << "\n";
    }
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::SizeCapExceeded ? ExitCapExceeded : ExitInputError;
  }
}

int self_test(std::ostream& out) {
  int failures = 0;
  for (const auto& ex : builtin_examples()) {
    bool ok = false;
    try {
      JobSpec job;
      job.example = ex.name;
      ok = ex.expected.matches(classify_job(job));
    } catch (const Error&) {
      ok = false;
    }
    out << (ok ? "ok   " : "FAIL ") << ex.name << "\n";
    failures += ok ? 0 : 1;
  }
  return failures == 0 ? ExitOk : 1;
}

}  // namespace resnil
