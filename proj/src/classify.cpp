#include "resnil/criteria.hpp"

#include "resnil/error.hpp"

#include <algorithm>
#include <sstream>

namespace resnil {

namespace {

std::string join_ints(const std::vector<Int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + to_string(v[i]);
  return s;
}

std::string factor_values(const AfResult& af) {
  std::string s;
  for (std::size_t i = 0; i < af.factors.size(); ++i) {
    const auto& f = af.factors[i];
    if (i) s += "; ";
    s += "p(x)=" + f.factor.to_string();
    if (f.multiplicity > 1) s += " (mult " + std::to_string(f.multiplicity) + ")";
    s += ", p(1)=" + to_string(f.value_at_one);
  }
  return s;
}

void require_2x2(const IntMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw Error(ErrorKind::Not2x2, "expected a 2x2 matrix, got " + a.to_string());
  if (!is_unimodular(a)) throw Error(ErrorKind::NotUnimodular, "matrix " + a.to_string() + " is not unimodular");
}

void require_unimodular(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "expected a square matrix, got " + a.to_string());
  if (!is_unimodular(a)) throw Error(ErrorKind::NotUnimodular, "matrix " + a.to_string() + " is not unimodular");
}

void claim_prime(Verdict& v, const Int& p, Certainty c) {
  auto it = v.residually_p_finite.find(p);
  if (it == v.residually_p_finite.end() || !it->second.holds || !it->second.certainty.at_least(c))
    v.residually_p_finite[p] = {true, c};
}

// Raises residual nilpotence to at least `c` (never lowers an existing claim).
void claim_nilpotent(Verdict& v, Certainty c) {
  if (!v.residually_nilpotent.holds || !v.residually_nilpotent.certainty.at_least(c)) v.residually_nilpotent = {true, c};
}

}  // namespace

Verdict classify_f2(const IntMatrix& a) {
  require_2x2(a);
  const Int det = determinant(a), tr = trace(a);
  const std::string dt = "det=" + to_string(det) + ", tr=" + to_string(tr);
  Verdict v;
  const bool length_two = (det == 1 && (tr == 1 || tr == 3)) || (det == -1 && abs_int(tr) == 1);
  if (length_two) {
    v.residually_nilpotent = {false, Certainty::proven()};
    v.all_primes = Claim{false, Certainty::proven()};
    v.lcs_length = LcsLength::Two;
    v.lcs_certainty = Certainty::proven();
    v.witnesses.push_back({"rank-2 trichotomy", "rank2-trichotomy", dt + ": length 2"});
    v.witnesses.push_back({"A - E invertible", "fiber-commutator", "det(A-E)=" + to_string(det - tr + 1)});
    return v;
  }
  if (det == 1) {
    v.residually_nilpotent = {true, Certainty::proven()};
    v.lcs_length = LcsLength::Omega;
    v.lcs_certainty = Certainty::proven();
    const Int t2 = tr - 2;
    std::string ev = dt + ", tr-2=" + to_string(t2);
    if (t2 == 0) {
      v.all_primes = Claim{true, Certainty::proven()};
      ev += ": every prime divides tr-2";
    } else {
      std::vector<Int> ps = prime_divisors(t2);
      for (const auto& p : ps) v.residually_p_finite[p] = {true, Certainty::proven()};
      ev += ps.empty() ? ": no prime divides tr-2" : ": p-finite for p in {" + join_ints(ps) + "}";
    }
    v.witnesses.push_back({"rank-2 residual nilpotence", "rank2-residual", ev});
    return v;
  }
  const bool even = divides(Int(2), tr);
  if (even) {
    v.residually_nilpotent = {true, Certainty::proven()};
    v.residually_p_finite[Int(2)] = {true, Certainty::proven()};
    v.lcs_length = LcsLength::Omega;
    v.lcs_certainty = Certainty::proven();
    v.witnesses.push_back({"rank-2 residual nilpotence", "rank2-residual", dt + ": trace even, 2-finite"});
    return v;
  }
  v.residually_nilpotent = {false, Certainty::proven()};
  v.all_primes = Claim{false, Certainty::proven()};
  v.lcs_length = LcsLength::OmegaSquared;
  v.lcs_certainty = Certainty::proven();
  v.witnesses.push_back({"rank-2 trichotomy", "rank2-trichotomy", dt});
  return v;
}

FiniteIndexSubgroup finite_index_resnil_subgroup(const IntMatrix& a) {
  Verdict v = classify_f2(a);
  if (v.residually_nilpotent.holds) return {1, a, std::move(v)};
  const Int det = determinant(a), tr = trace(a);
  const unsigned index = (det == -1 && abs_int(tr) == 1) ? 4 : 2;
  IntMatrix power = matrix_power(a, index);
  Verdict sub = classify_f2(power);
  sub.witnesses.push_back({"finite-index subgroup", "rank2-finite-index",
                           "index " + std::to_string(index) + ", power det=" + to_string(determinant(power)) +
                               ", tr=" + to_string(trace(power))});
  return {index, std::move(power), std::move(sub)};
}

unsigned effective_tensor_bound(std::size_t rank, const ClassifyOptions& options) {
  if (options.tensor_bound > 0) return options.tensor_bound;
  unsigned k = rank <= 2 ? 4 : 3;
  auto fits = [&](unsigned kk) {
    Int side = pow_int(Int(static_cast<unsigned long>(rank)), kk);
    return side <= Int(static_cast<unsigned long>(options.caps.kronecker_side)) &&
           witt_dimension(rank, kk) <= Int(static_cast<unsigned long>(options.caps.witt_dimension));
  };
  while (k > 1 && !fits(k)) --k;
  return k;
}

namespace {

// Evidence from the tensor and Lie audits; upgrades claims only to
// ProvenUpToBound and only in the positive direction.
void apply_audits(Verdict& v, const IntMatrix& a, const ClassifyOptions& options, bool upgrade) {
  const unsigned bound = effective_tensor_bound(a.rows(), options);
  auto tensor = tensor_power_audit(a, bound, std::nullopt, options.caps);
  auto lie = lie_component_audit(a, bound, std::nullopt, options.caps);

  auto summarize = [&](const std::vector<AuditRecord>& recs, bool& all_nil, PrimeSet& common) {
    all_nil = true;
    common.all = true;
    std::ostringstream os;
    for (const auto& r : recs) {
      all_nil = all_nil && r.af_nilpotent;
      common = intersect(common, r.af.p_primes);
      os << (r.k > 1 ? " | " : "") << "k=" << r.k << " (dim " << r.dimension << "): "
         << (r.af_nilpotent ? "residually nilpotent" : "not residually nilpotent") << ", primes "
         << r.af.p_primes.to_string();
    }
    return os.str();
  };
  bool tensor_nil = false, lie_nil = false;
  PrimeSet tensor_primes, lie_primes;
  std::string tensor_text = summarize(tensor, tensor_nil, tensor_primes);
  std::string lie_text = summarize(lie, lie_nil, lie_primes);
  v.witnesses.push_back({"tensor power audit", tensor_nil ? "tensor-nilpotent" : "abelian-criterion", tensor_text});
  v.witnesses.push_back({"Lie component audit", lie_nil ? "lie-nilpotent" : "abelian-criterion", lie_text});
  if (!upgrade) return;

  const Certainty bounded = Certainty::up_to(bound);
  if (tensor_primes.all) {
    if (!v.all_primes || !v.all_primes->holds) v.all_primes = Claim{true, bounded};
  } else {
    for (const auto& p : tensor_primes.primes) claim_prime(v, p, bounded);
  }
  if (!tensor_primes.empty()) {
    v.witnesses.push_back({"tensor p-finite audit", "tensor-p-finite",
                           "every factor value at 1 for k=1.." + std::to_string(bound) + " is divisible by p in " +
                               tensor_primes.to_string()});
    claim_nilpotent(v, bounded);
    if (v.lcs_length == LcsLength::Unknown) {
      v.lcs_length = LcsLength::Omega;
      v.lcs_certainty = bounded;
    }
  }
}

bool is_abelian_group(const IntMatrix& a) { return a.rows() <= 1 && a == IntMatrix::identity(a.rows()); }

Verdict classify_higher_rank(const IntMatrix& a, const ClassifyOptions& options) {
  const std::size_t n = a.rows();
  Verdict v;
  const AfResult af = af_criterion(a);
  v.witnesses.push_back({"abelian quotient Z^n x| Z", "abelian-criterion",
                         factor_values(af) + (af.nilpotent ? "" : "; sufficient conditions below cannot hold")});

  if (gamma_omega_is_fiber(a)) {
    v.residually_nilpotent = {false, Certainty::proven()};
    v.all_primes = Claim{false, Certainty::proven()};
    v.lcs_length = LcsLength::Two;
    v.lcs_certainty = Certainty::proven();
    v.witnesses.push_back(
        {"A - E invertible", "fiber-commutator", "det(A-E)=" + to_string(determinant(a - IntMatrix::identity(n)))});
    return v;
  }

  const Certainty proven = Certainty::proven();
  if (auto ie = integer_eigenvalue_criterion(a)) {
    claim_nilpotent(v, proven);
    if (ie->all_plus_one) {
      v.all_primes = Claim{true, proven};
      v.witnesses.push_back({"integer eigenvalues", "integer-eigenvalues", "char(A)=(x-1)^" + std::to_string(n)});
    } else {
      claim_prime(v, Int(2), proven);
      LinearRootProfile prof = linear_root_profile(char_poly(a));
      v.witnesses.push_back({"integer eigenvalues", "integer-eigenvalues",
                             "eigenvalue 1 with multiplicity " + std::to_string(prof.multiplicity_one) +
                                 ", eigenvalue -1 with multiplicity " + std::to_string(prof.multiplicity_minus_one)});
    }
  }

  // (A - E) is nilpotent mod p exactly when p divides every lower coefficient
  // of char(A - E), so those primes are the only candidates.
  IntPoly shifted = char_poly(a - IntMatrix::identity(n));
  Int g = 0;
  for (long i = 0; i < shifted.degree(); ++i) g = gcd_int(g, shifted.coeff(static_cast<std::size_t>(i)));
  std::vector<Int> candidates = g == 0 ? std::vector<Int>{} : prime_divisors(g);
  for (const auto& p : options.primes) candidates.push_back(p);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& p : candidates) {
    if (auto N = mod_p_unipotency(a, p)) {
      claim_prime(v, p, proven);
      claim_nilpotent(v, proven);
      v.witnesses.push_back({"unipotent mod p", "unipotent-mod-p",
                             "(A-E)^" + std::to_string(*N) + " = 0 mod " + to_string(p) + ", N=" +
                                 std::to_string(*N)});
    }
  }
  if (v.residually_nilpotent.holds && !v.p_finite_primes().empty() &&
      v.residually_nilpotent.certainty == proven)
    v.witnesses.push_back({"p-finite implies nilpotent", "p-finite-implies-nilpotent",
                           "residually p-finite for p in {" + join_ints(v.p_finite_primes()) + "}"});

  EigenProductCheck ep = eigen_product_check(a);
  {
    std::ostringstream os;
    os << (ep.passes ? "no" : "some") << " eigenvalue product of A-E equals +-1;";
    for (const auto& [k, minus, plus] : ep.determinants)
      os << " k=" << k << ": det(C_k-I)=" << to_string(minus) << ", det(C_k+I)=" << to_string(plus) << ";";
    std::string s = os.str();
    s.pop_back();
    v.witnesses.push_back({"eigenvalue products of A-E", "eigen-products", s});
  }

  if (v.residually_nilpotent.certainty == proven) {
    if (!is_abelian_group(a)) {
      v.lcs_length = LcsLength::Omega;
      v.lcs_certainty = proven;
    }
    apply_audits(v, a, options, false);
    return v;
  }
  apply_audits(v, a, options, af.nilpotent);
  if (n >= 3 && v.lcs_length == LcsLength::Unknown)
    v.witnesses.push_back({"length not classified", "rank-open", "rank " + std::to_string(n)});
  return v;
}

}  // namespace

Verdict classify_matrix(const IntMatrix& a, const ClassifyOptions& options) {
  require_unimodular(a);
  if (a.rows() != 2) return classify_higher_rank(a, options);
  Verdict v = classify_f2(a);
  const AfResult af = af_criterion(a);
  v.witnesses.push_back({"abelian quotient Z^2 x| Z", "abelian-criterion", factor_values(af)});
  for (const auto& p : options.primes) {
    if (auto N = mod_p_unipotency(a, p))
      v.witnesses.push_back({"unipotent mod p", "unipotent-mod-p",
                             "(A-E)^" + std::to_string(*N) + " = 0 mod " + to_string(p) + ", N=" +
                                 std::to_string(*N)});
  }
  apply_audits(v, a, options, false);
  return v;
}

Verdict classify_action_family(const std::vector<IntMatrix>& actions, const ClassifyOptions& options) {
  if (actions.empty()) throw Error(ErrorKind::InvalidInput, "no action matrices");
  if (actions.size() == 1) return classify_matrix(actions.front(), options);
  const std::size_t n = actions.front().rows();
  Int g = 0;
  for (const auto& b : actions) {
    require_unimodular(b);
    if (b.rows() != n) throw Error(ErrorKind::DimensionMismatch, "action matrices differ in size");
    const IntMatrix delta = b - IntMatrix::identity(n);
    for (const auto& e : delta.entries()) g = gcd_int(g, e);
  }
  Verdict v;
  std::vector<Int> candidates = g == 0 ? std::vector<Int>{Int(2)} : prime_divisors(g);
  for (const auto& p : options.primes) candidates.push_back(p);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& p : candidates) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, to_string(p) + " is not prime");
    std::ostringstream os;
    bool all_trivial = true;
    for (std::size_t i = 0; i < actions.size(); ++i) {
      auto N = mod_p_unipotency(actions[i], p);
      all_trivial = all_trivial && N && *N == 1;
      os << (i ? "; " : "") << "B" << (i + 1) << "=" << actions[i].to_string() << ": ";
      if (N)
        os << "(B-E)^" << *N << " = 0 mod " << to_string(p) << ", N=" << *N;
      else
        os << "B-E not nilpotent mod " << to_string(p);
    }
    auto aug = augmentation_power_check(actions, p, options.augmentation_bound);
    if (aug) os << "; products of " << *aug << " augmentation factors vanish mod " << to_string(p);
    v.witnesses.push_back({"unipotent mod p", "unipotent-mod-p", os.str()});
    if (all_trivial) {
      claim_nilpotent(v, Certainty::proven());
      v.witnesses.push_back({"trivial action mod p", "trivial-action-mod-p",
                             "free acting group of rank " + std::to_string(actions.size()) +
                                 " acts trivially mod " + to_string(p) + " (N=1)"});
    }
  }
  if (v.residually_nilpotent.holds) {
    v.lcs_length = LcsLength::Omega;
    v.lcs_certainty = Certainty::proven();
  }
  return v;
}

Verdict classify_endo(const FreeEndo& f, const std::optional<FreeEndo>& claimed_inverse,
                      const ClassifyOptions& options) {
  const AutomorphismCheck check = check_automorphism(f, claimed_inverse);
  const IntMatrix a = abelianization_matrix(f);
  if (check == AutomorphismCheck::ProvenNotAuto)
    throw Error(ErrorKind::NotUnimodular, "abelianization " + a.to_string() + " is not unimodular");
  Verdict v = classify_matrix(a, options);
  std::string ev = "abelianization " + a.to_string() + "; ";
  ev += check == AutomorphismCheck::ProvenAuto ? "automorphism verified against the supplied inverse"
                                               : "automorphism not verified, abelianization unimodular";
  v.witnesses.insert(v.witnesses.begin(), Witness{"abelianized action", "abelianized-input", ev});
  return v;
}

Verdict classify_general(const ClassifyInput& input, const ClassifyOptions& options) {
  if (const auto* m = std::get_if<IntMatrix>(&input)) return classify_matrix(*m, options);
  return classify_endo(std::get<FreeEndo>(input), std::nullopt, options);
}

}  // namespace resnil
