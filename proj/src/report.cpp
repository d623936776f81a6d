#include "resnil/report.hpp"

#include "resnil/error.hpp"

#include <json.hpp>

#include <sstream>

namespace resnil {

using nlohmann::ordered_json;

namespace {

std::string yes_no(const Claim& c) {
  if (c.certainty.kind == CertaintyKind::Unknown) return "unknown";
  return c.holds ? "yes" : "no";
}

std::string lcs_text(LcsLength l) {
  switch (l) {
    case LcsLength::Two: return "2 (γ_ω = γ₂)";
    case LcsLength::Omega: return "ω";
    case LcsLength::OmegaSquared: return "ω²";
    case LcsLength::Unknown: return "unknown";
  }
  return "unknown";
}

ordered_json certainty_json(const Certainty& c) {
  ordered_json j;
  switch (c.kind) {
    case CertaintyKind::Proven: j["kind"] = "proven"; break;
    case CertaintyKind::ProvenUpToBound:
      j["kind"] = "proven_up_to_bound";
      j["bound"] = c.bound;
      break;
    case CertaintyKind::Unknown: j["kind"] = "unknown"; break;
  }
  return j;
}

ordered_json claim_json(const Claim& c) { return {{"holds", c.holds}, {"certainty", certainty_json(c.certainty)}}; }

Certainty certainty_from(const ordered_json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "proven") return Certainty::proven();
  if (kind == "unknown") return Certainty::unknown();
  if (kind == "proven_up_to_bound") return Certainty::up_to(j.at("bound").get<unsigned>());
  throw Error(ErrorKind::InvalidInput, "unknown certainty kind '" + kind + "'");
}

Claim claim_from(const ordered_json& j) { return {j.at("holds").get<bool>(), certainty_from(j.at("certainty"))}; }

LcsLength lcs_from(const std::string& s) {
  for (LcsLength l : {LcsLength::Two, LcsLength::Omega, LcsLength::OmegaSquared, LcsLength::Unknown})
    if (s == to_string(l)) return l;
  throw Error(ErrorKind::InvalidInput, "unknown lcs length '" + s + "'");
}

}  // namespace

std::string verdict_summary(const Verdict& v) {
  std::string head;
  if (v.residually_nilpotent.certainty.kind == CertaintyKind::Unknown)
    head = "residual nilpotence undecided";
  else
    head = v.residually_nilpotent.holds ? "residually nilpotent" : "not residually nilpotent";
  switch (v.lcs_length) {
    case LcsLength::Two: return head + "; γ_ω = γ₂ (length 2)";
    case LcsLength::Omega: return head + "; lower central series length ω";
    case LcsLength::OmegaSquared: return head + "; lower central series length ω²";
    case LcsLength::Unknown: return head + "; lower central series length unknown";
  }
  return head;
}

std::string render_text(const Verdict& v, const ReportHeader& header) {
  std::ostringstream os;
  for (const auto& line : header.input_lines) os << line << "\n";
  os << "summary: " << verdict_summary(v) << "\n";
  os << "claims:\n";
  os << "  residually nilpotent: " << yes_no(v.residually_nilpotent) << " ["
     << v.residually_nilpotent.certainty.to_string() << "]\n";
  os << "  lower central series length: " << lcs_text(v.lcs_length) << " [" << v.lcs_certainty.to_string() << "]\n";
  if (v.all_primes)
    os << (v.all_primes->holds ? "  residually p-finite for every prime p: " : "  residually p-finite for some prime p: ")
       << yes_no(*v.all_primes) << " ["
       << v.all_primes->certainty.to_string() << "]\n";
  for (const auto& [p, c] : v.residually_p_finite)
    os << "  residually " << to_string(p) << "-finite: " << yes_no(c) << " [" << c.certainty.to_string() << "]\n";
  for (const auto& p : header.requested_primes) {
    if (v.residually_p_finite.count(p)) continue;
    Claim c = v.p_finite(p);
    os << "  residually " << to_string(p) << "-finite: " << yes_no(c) << " [" << c.certainty.to_string() << "]\n";
  }
  os << "witnesses:\n";
  for (const auto& w : v.witnesses) os << "  - " << w.criterion << " [" << w.anchor << "]: " << w.evidence << "\n";
  return os.str();
}

std::string verdict_to_json(const Verdict& v, int indent) {
  ordered_json j;
  j["summary"] = verdict_summary(v);
  j["residually_nilpotent"] = claim_json(v.residually_nilpotent);
  j["all_primes"] = v.all_primes ? claim_json(*v.all_primes) : ordered_json(nullptr);
  ordered_json primes = ordered_json::object();
  for (const auto& [p, c] : v.residually_p_finite) primes[to_string(p)] = claim_json(c);
  j["residually_p_finite"] = primes;
  j["lcs_length"] = to_string(v.lcs_length);
  j["lcs_certainty"] = certainty_json(v.lcs_certainty);
  ordered_json ws = ordered_json::array();
  for (const auto& w : v.witnesses) {
    const Citation* c = find_citation(w.anchor);
    ws.push_back({{"criterion", w.criterion},
                  {"anchor", w.anchor},
                  {"statement", c ? c->statement : ""},
                  {"evidence", w.evidence}});
  }
  j["witnesses"] = ws;
  return j.dump(indent);
}

Verdict verdict_from_json(const std::string& text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    Verdict v;
    v.residually_nilpotent = claim_from(j.at("residually_nilpotent"));
    if (j.contains("all_primes") && !j.at("all_primes").is_null()) v.all_primes = claim_from(j.at("all_primes"));
    for (const auto& [key, value] : j.at("residually_p_finite").items()) {
      Int p;
      if (p.set_str(key, 10) != 0) throw Error(ErrorKind::InvalidInput, "bad prime key '" + key + "'");
      v.residually_p_finite[p] = claim_from(value);
    }
    v.lcs_length = lcs_from(j.at("lcs_length").get<std::string>());
    v.lcs_certainty = certainty_from(j.at("lcs_certainty"));
    for (const auto& w : j.at("witnesses"))
      v.witnesses.push_back(
          {w.at("criterion").get<std::string>(), w.at("anchor").get<std::string>(), w.at("evidence").get<std::string>()});
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("verdict JSON: ") + e.what());
  }
}

}  // namespace resnil
