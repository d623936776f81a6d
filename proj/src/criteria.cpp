#include "resnil/criteria.hpp"

#include "resnil/error.hpp"
#include "resnil/lattice.hpp"

#include <algorithm>

namespace resnil {

// ---------------------------------------------------------------------------
// Verdict vocabulary
// ---------------------------------------------------------------------------

bool Certainty::at_least(const Certainty& other) const {
  if (kind != other.kind) return static_cast<int>(kind) > static_cast<int>(other.kind);
  if (kind == CertaintyKind::ProvenUpToBound) return bound >= other.bound;
  return true;
}

std::string Certainty::to_string() const {
  switch (kind) {
    case CertaintyKind::Proven: return "proven";
    case CertaintyKind::ProvenUpToBound: return "proven up to k=" + std::to_string(bound);
    case CertaintyKind::Unknown: return "unknown";
  }
  return "unknown";
}

const char* to_string(LcsLength l) {
  switch (l) {
    case LcsLength::Two: return "two";
    case LcsLength::Omega: return "omega";
    case LcsLength::OmegaSquared: return "omega^2";
    case LcsLength::Unknown: return "unknown";
  }
  return "unknown";
}

const std::vector<Citation>& citation_table() {
  static const std::vector<Citation> table = {
      {"abelian-criterion",
       "Z^n x|_A Z is residually nilpotent iff p(1) != +-1 for every irreducible factor p of char(A), and "
       "residually p-finite iff p divides every p(1)"},
      {"fiber-commutator", "gamma_omega(F_n x| Z) = gamma_2 = F_n iff A - E is invertible over Z"},
      {"integer-eigenvalues",
       "if every eigenvalue of A is an integer the group is residually nilpotent: residually p-finite for every "
       "p when all eigenvalues are 1, residually 2-finite otherwise"},
      {"tensor-nilpotent",
       "if Z^{n^k} x|_{A^(x)k} Z is residually nilpotent for every k then gamma_{omega^2}(F_n x| Z) = 1"},
      {"tensor-p-finite",
       "if Z^{n^k} x|_{A^(x)k} Z is residually p-finite for every k then F_n x| Z is residually p-finite"},
      {"lie-nilpotent", "if the free Lie ring components with the induced action are residually nilpotent for "
                        "every degree then gamma_{omega^2}(F_n x| Z) = 1"},
      {"lie-p-finite", "if the free Lie ring components with the induced action are residually p-finite for every "
                       "degree then F_n x| Z is residually p-finite"},
      {"lie-factor-inclusion",
       "every irreducible factor of the characteristic polynomial of the induced Lie map in degree k divides "
       "that of A^(x)k"},
      {"unipotent-mod-p",
       "(A - E)^N = 0 mod p forces char(A^(x)k) = (x-1)^{n^k} mod p, so every factor value at 1 lies in pZ for "
       "every k and the tensor p-finite criterion applies"},
      {"p-finite-implies-nilpotent", "a finitely generated residually p-finite group is residually nilpotent"},
      {"eigen-products", "if no product of eigenvalues of A - E equals +-1 the module Z^n over Z[t] is residually "
                         "nilpotent"},
      {"rank2-residual",
       "F_2 x|_phi Z is residually nilpotent iff det = 1 and tr not in {1,3}, or det = -1 and tr is even; it is "
       "residually p-finite for every prime divisor of tr - 2 (det = 1) and for p = 2 (det = -1)"},
      {"rank2-trichotomy",
       "the lower central series of F_2 x| Z has length 2, omega or omega^2; omega^2 exactly when det = -1 and "
       "tr is odd with tr != +-1"},
      {"rank2-finite-index",
       "F_2 x|_phi Z has a residually nilpotent subgroup F_2 x|_{phi^2} Z of index 2, or F_2 x|_{phi^4} Z of "
       "index 4 when det = -1 and tr = +-1"},
      {"trivial-action-mod-p",
       "if B is residually nilpotent and acts trivially on A/gamma_2^(p)(A) then A x| B is residually "
       "nilpotent"},
      {"augmentation-nilpotent", "if B is nilpotent and Delta_B^N A-bar = 0 then A x| B is residually nilpotent"},
      {"augmentation-mod-p",
       "if B is nilpotent and Delta_B^N A-bar lies in p A-bar then A x| B is residually p-finite"},
      {"abelianized-input", "every criterion used depends only on the induced automorphism of the abelianization"},
      {"rank-open", "for rank n > 2 the possible lengths of the lower central series of F_n x| Z are not "
                    "classified"},
  };
  return table;
}

const Citation* find_citation(const std::string& anchor) {
  for (const auto& c : citation_table())
    if (anchor == c.anchor) return &c;
  return nullptr;
}

Claim Verdict::p_finite(const Int& p) const {
  if (auto it = residually_p_finite.find(p); it != residually_p_finite.end()) return it->second;
  if (all_primes) return *all_primes;
  return {};
}

std::vector<Int> Verdict::p_finite_primes() const {
  std::vector<Int> out;
  for (const auto& [p, c] : residually_p_finite)
    if (c.holds) out.push_back(p);
  return out;
}

std::vector<std::string> verdict_violations(const Verdict& v) {
  std::vector<std::string> out;
  auto check_claim = [&](const std::string& label, const Claim& c) {
    if (!c.holds || c.certainty.kind == CertaintyKind::Unknown) return;
    if (!v.residually_nilpotent.holds)
      out.push_back(label + " holds but residual nilpotence is not claimed");
    else if (!v.residually_nilpotent.certainty.at_least(c.certainty))
      out.push_back(label + " is more certain than residual nilpotence");
  };
  if (v.all_primes) check_claim("p-finiteness for all p", *v.all_primes);
  for (const auto& [p, c] : v.residually_p_finite) check_claim(to_string(p) + "-finiteness", c);
  if (v.lcs_length == LcsLength::Two && v.residually_nilpotent.holds)
    out.push_back("length two together with residual nilpotence");
  if (v.residually_nilpotent.holds && v.lcs_length == LcsLength::OmegaSquared)
    out.push_back("length omega^2 together with residual nilpotence");
  for (const auto& w : v.witnesses)
    if (!find_citation(w.anchor)) out.push_back("unknown citation anchor '" + w.anchor + "'");
  return out;
}

// ---------------------------------------------------------------------------
// Prime sets
// ---------------------------------------------------------------------------

bool PrimeSet::contains(const Int& p) const {
  return all || std::binary_search(primes.begin(), primes.end(), p);
}

std::string PrimeSet::to_string() const {
  if (all) return "all";
  std::string s = "{";
  for (std::size_t i = 0; i < primes.size(); ++i) s += (i ? "," : "") + resnil::to_string(primes[i]);
  return s + "}";
}

PrimeSet intersect(const PrimeSet& a, const PrimeSet& b) {
  if (a.all) return b;
  if (b.all) return a;
  PrimeSet r;
  std::set_intersection(a.primes.begin(), a.primes.end(), b.primes.begin(), b.primes.end(),
                        std::back_inserter(r.primes));
  return r;
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

namespace {

void require_unimodular(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "expected a square matrix, got " + a.to_string());
  if (!is_unimodular(a)) throw Error(ErrorKind::NotUnimodular, "matrix " + a.to_string() + " is not unimodular");
}

void require_prime(const Int& p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, to_string(p) + " is not prime");
}

AfResult af_unchecked(const IntMatrix& a) {
  AfResult r;
  FactorizationZ fz = factor_over_Z(char_poly(a));
  r.nilpotent = true;
  Int g = 0;
  for (const auto& [f, mult] : fz.factors) {
    Int v = poly_eval(f, Int(1));
    if (abs_int(v) == 1) r.nilpotent = false;
    g = gcd_int(g, v);
    r.factors.push_back({f, mult, v});
  }
  if (g == 0)
    r.p_primes.all = true;
  else
    r.p_primes.primes = prime_divisors(g);
  return r;
}

IntMatrix minus_identity(const IntMatrix& a) { return a - IntMatrix::identity(a.rows()); }

}  // namespace

AfResult af_criterion(const IntMatrix& a) {
  require_unimodular(a);
  return af_unchecked(a);
}

bool gamma_omega_is_fiber(const IntMatrix& a) {
  require_unimodular(a);
  return is_unimodular(minus_identity(a));
}

std::optional<IntegerEigenvalues> integer_eigenvalue_criterion(const IntMatrix& a) {
  require_unimodular(a);
  LinearRootProfile prof = linear_root_profile(char_poly(a));
  if (prof.residual.degree() > 0) return std::nullopt;
  return IntegerEigenvalues{prof.multiplicity_minus_one == 0, prof.multiplicity_minus_one > 0};
}

std::optional<unsigned> mod_p_unipotency(const IntMatrix& a, const Int& p) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "unipotency test needs a square matrix");
  require_prime(p);
  const IntMatrix b = reduce_mod(minus_identity(a), p);
  IntMatrix power = b;
  for (unsigned n = 1; n <= std::max<std::size_t>(a.rows(), 1); ++n) {
    if (power.is_zero()) return n;
    power = reduce_mod(power * b, p);
  }
  return std::nullopt;
}

EigenProductCheck eigen_product_check(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "eigenvalue product test needs a square matrix");
  EigenProductCheck r;
  r.passes = true;
  const IntMatrix d = minus_identity(a);
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    IntMatrix c = compound_matrix(d, k);
    IntMatrix id = IntMatrix::identity(c.rows());
    Int minus = determinant(c - id), plus = determinant(c + id);
    if (minus == 0 || plus == 0) r.passes = false;
    r.determinants.emplace_back(k, minus, plus);
  }
  return r;
}

bool mikhailov_module_check(const IntMatrix& a) { return eigen_product_check(a).passes; }

namespace {

template <class MatrixAt>
std::vector<AuditRecord> audit(const IntMatrix& a, unsigned bound, const std::optional<Int>& p, MatrixAt at) {
  require_unimodular(a);
  if (p) require_prime(*p);
  std::vector<AuditRecord> out;
  for (unsigned k = 1; k <= bound; ++k) {
    IntMatrix m = at(k);
    AuditRecord rec;
    rec.k = k;
    rec.dimension = m.rows();
    rec.af = af_unchecked(m);
    rec.af_nilpotent = rec.af.nilpotent;
    if (p) rec.af_p_finite = rec.af.p_primes.contains(*p);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

std::vector<AuditRecord> tensor_power_audit(const IntMatrix& a, unsigned bound, const std::optional<Int>& p,
                                            const SizeCaps& caps) {
  require_unimodular(a);
  const Int side = pow_int(Int(static_cast<unsigned long>(a.rows())), bound);
  if (side > Int(static_cast<unsigned long>(caps.kronecker_side)))
    throw Error(ErrorKind::SizeCapExceeded, "tensor power side " + to_string(side) + " exceeds cap " +
                                                std::to_string(caps.kronecker_side));
  return audit(a, bound, p, [&](unsigned k) { return kronecker_power(a, k, caps.kronecker_side); });
}

std::vector<AuditRecord> lie_component_audit(const IntMatrix& a, unsigned bound, const std::optional<Int>& p,
                                             const SizeCaps& caps) {
  require_unimodular(a);
  for (unsigned k = 1; k <= bound; ++k) {
    const Int dim = witt_dimension(a.rows(), k);
    if (dim > Int(static_cast<unsigned long>(caps.witt_dimension)))
      throw Error(ErrorKind::SizeCapExceeded, "Lie component dimension " + to_string(dim) + " exceeds cap " +
                                                  std::to_string(caps.witt_dimension));
  }
  return audit(a, bound, p, [&](unsigned k) { return induced_lie_matrix(a, k, caps.witt_dimension); });
}

std::optional<unsigned> augmentation_power_check(const std::vector<IntMatrix>& actions, const Int& modulus,
                                                 unsigned max_n) {
  if (modulus < 0 || modulus == 1) throw Error(ErrorKind::BadModulus, "modulus must be 0 or at least 2");
  if (actions.empty()) throw Error(ErrorKind::DimensionMismatch, "no action matrices");
  const std::size_t n = actions.front().rows();
  std::vector<IntMatrix> deltas;
  for (const auto& b : actions) {
    if (!b.is_square() || b.rows() != n) throw Error(ErrorKind::DimensionMismatch, "action matrices differ in size");
    deltas.push_back(minus_identity(b));
  }
  const std::size_t dim = n * n;
  auto vec = [&](const IntMatrix& m) { return std::vector<Int>(m.entries().begin(), m.entries().end()); };
  auto unvec = [&](const std::vector<Int>& v) { return IntMatrix(n, n, v); };
  auto span_of = [&](std::vector<std::vector<Int>> cols) {
    if (modulus > 0)
      for (std::size_t i = 0; i < dim; ++i) {
        std::vector<Int> e(dim, Int(0));
        e[i] = modulus;
        cols.push_back(std::move(e));
      }
    if (cols.empty()) return SubLattice::generated_by(IntMatrix(dim, 0));
    return SubLattice::generated_by(IntMatrix::from_columns(dim, cols));
  };
  const SubLattice floor = span_of({});
  std::vector<std::vector<Int>> gens;
  for (const auto& d : deltas) gens.push_back(vec(d));
  SubLattice current = span_of(gens);
  for (unsigned level = 1; level <= max_n; ++level) {
    if (current == floor) return level;
    std::vector<std::vector<Int>> next;
    for (std::size_t j = 0; j < current.basis().cols(); ++j) {
      IntMatrix x = unvec(current.basis().column(j));
      for (const auto& d : deltas) next.push_back(vec(d * x));
    }
    SubLattice following = span_of(std::move(next));
    if (following == current) return std::nullopt;
    current = std::move(following);
  }
  return std::nullopt;
}

}  // namespace resnil
