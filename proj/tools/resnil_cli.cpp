// Command-line front end: classify F_n x| Z (or F_n x| F_m) from a matrix,
// an endomorphism of F_n, or a named example.

#include "resnil/error.hpp"
#include "resnil/job.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <sstream>

namespace {

std::vector<resnil::Int> parse_primes(const std::string& text) {
  std::vector<resnil::Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    resnil::Int p;
    if (p.set_str(item.substr(b, e - b + 1), 10) != 0)
      throw resnil::Error(resnil::ErrorKind::InvalidInput, "bad prime '" + item + "'");
    out.push_back(p);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Residual nilpotence and lower central series of free-by-cyclic groups"};
  std::vector<std::string> matrices;
  std::string endo, inverse, example, primes;
  unsigned power = 1, tensor_bound = 0;
  std::size_t cap = 0;
  bool json = false, list = false, selftest = false;
  // A callback per occurrence keeps CLI11 from reading "[...]" as a list.
  app.add_option_function<std::string>(
         "--matrix", [&](const std::string& m) { matrices.push_back(m); },
         "action matrix, e.g. \"[[0,1],[1,3]]\"; repeat for F_n x| F_m")
      ->trigger_on_parse()
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_option("--endo", endo, "endomorphism, e.g. \"a->b; b->a b^3\"");
  app.add_option("--inverse", inverse, "claimed inverse of --endo");
  app.add_option("--example", example, "builtin example name (see --list-examples)");
  app.add_option("--power", power, "replace the automorphism by its M-th power")->check(CLI::PositiveNumber);
  app.add_option("--tensor-bound", tensor_bound, "degree bound K for the tensor and Lie audits")
      ->check(CLI::PositiveNumber);
  app.add_option("--primes", primes, "comma-separated primes to report on");
  app.add_option("--cap", cap, "size cap for Kronecker powers and Lie components")->check(CLI::PositiveNumber);
  app.add_flag("--json", json, "JSON output; reads a JSON job from stdin when no input flag is given");
  app.add_flag("--list-examples", list, "list builtin examples");
  app.add_flag("--self-test", selftest, "classify every builtin example against its expected verdict");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : resnil::ExitInputError;
  }

  if (list) {
    for (const auto& ex : resnil::builtin_examples()) std::cout << ex.name << "\t" << ex.description << "\n";
    return 0;
  }
  if (selftest) return resnil::self_test(std::cout);

  resnil::JobSpec job;
  try {
    const bool any_input = !matrices.empty() || !endo.empty() || !example.empty();
    if (json && !any_input) {
      std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
      job = resnil::job_from_json(text);
    } else {
      for (const auto& m : matrices) job.matrices.push_back(resnil::parse_matrix(m));
      if (!endo.empty()) job.endo = resnil::parse_endo(endo);
      if (!inverse.empty()) job.inverse = resnil::parse_endo(inverse);
      if (!example.empty()) job.example = example;
      job.power = power;
      job.tensor_bound = tensor_bound;
      job.primes = parse_primes(primes);
      if (cap > 0) job.caps = {cap, cap};
      job.json = json;
    }
  } catch (const resnil::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return resnil::ExitInputError;
  }
  return resnil::run(job, std::cout, std::cerr);
}
