#pragma once

#include "resnil/freegroup.hpp"
#include "resnil/intpoly.hpp"
#include "resnil/liealg.hpp"
#include "resnil/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace resnil {

// ---------------------------------------------------------------------------
// Verdict vocabulary
// ---------------------------------------------------------------------------

enum class CertaintyKind { Unknown, ProvenUpToBound, Proven };

/// How a claim was established. ProvenUpToBound records the largest tensor or
/// Lie degree that was actually checked; it never stands in for Proven.
struct Certainty {
  CertaintyKind kind = CertaintyKind::Unknown;
  unsigned bound = 0;

  static Certainty proven() { return {CertaintyKind::Proven, 0}; }
  static Certainty up_to(unsigned k) { return {CertaintyKind::ProvenUpToBound, k}; }
  static Certainty unknown() { return {CertaintyKind::Unknown, 0}; }

  /// Proven > ProvenUpToBound(larger K) > ProvenUpToBound(smaller K) > Unknown.
  bool at_least(const Certainty& other) const;
  std::string to_string() const;
  friend bool operator==(const Certainty&, const Certainty&) = default;
};

struct Claim {
  bool holds = false;
  Certainty certainty;
  friend bool operator==(const Claim&, const Claim&) = default;
};

enum class LcsLength { Two, Omega, OmegaSquared, Unknown };

const char* to_string(LcsLength l);

/// One piece of evidence: the criterion applied, a citation anchor from
/// `citation_table()`, and the numbers it was applied to.
struct Witness {
  std::string criterion;
  std::string anchor;
  std::string evidence;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Citation {
  const char* anchor;
  const char* statement;
};

/// Fixed table of results that witnesses may cite.
const std::vector<Citation>& citation_table();
const Citation* find_citation(const std::string& anchor);

struct Verdict {
  Claim residually_nilpotent;
  /// A claim about every prime at once (true: p-finite for all p; false: for none).
  std::optional<Claim> all_primes;
  /// Per-prime claims; primes not listed and not covered by all_primes are Unknown.
  std::map<Int, Claim> residually_p_finite;
  LcsLength lcs_length = LcsLength::Unknown;
  Certainty lcs_certainty;
  std::vector<Witness> witnesses;

  /// The effective claim for one prime.
  Claim p_finite(const Int& p) const;
  /// Primes with a positive claim (explicit entries only).
  std::vector<Int> p_finite_primes() const;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Empty when the verdict is internally consistent; otherwise one message per
/// violated rule (p-finiteness without matching nilpotence, length two on a
/// residually nilpotent group, unknown citation anchors).
std::vector<std::string> verdict_violations(const Verdict& v);

// ---------------------------------------------------------------------------
// Criteria on Z^n x| Z
// ---------------------------------------------------------------------------

/// Set of primes, or every prime.
struct PrimeSet {
  bool all = false;
  std::vector<Int> primes;  ///< ascending, meaningful only when !all

  bool contains(const Int& p) const;
  bool empty() const { return !all && primes.empty(); }
  std::string to_string() const;
  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;
};

PrimeSet intersect(const PrimeSet& a, const PrimeSet& b);

struct FactorValue {
  IntPoly factor;
  unsigned multiplicity = 1;
  Int value_at_one;
};

struct AfResult {
  bool nilpotent = false;
  std::vector<FactorValue> factors;
  /// Primes dividing every factor value at 1.
  PrimeSet p_primes;
};

/// Criterion for Z^n x|_A Z from the irreducible factors of char(A) at 1.
AfResult af_criterion(const IntMatrix& a);

/// True iff A - I is unimodular, i.e. gamma_omega(F_n x| Z) = gamma_2 = F_n.
bool gamma_omega_is_fiber(const IntMatrix& a);

struct IntegerEigenvalues {
  bool all_plus_one = false;
  bool has_minus_one = false;
};

/// Present only when every eigenvalue of the unimodular A is an integer (so ±1).
std::optional<IntegerEigenvalues> integer_eigenvalue_criterion(const IntMatrix& a);

/// Least N <= n with (A - I)^N = 0 mod p, if any.
std::optional<unsigned> mod_p_unipotency(const IntMatrix& a, const Int& p);

struct EigenProductCheck {
  bool passes = false;
  /// (k, det(C_k(A-I) - I), det(C_k(A-I) + I)) for k = 1..n.
  std::vector<std::tuple<std::size_t, Int, Int>> determinants;
};

/// No product of eigenvalues of A - I equals ±1, checked through compounds.
EigenProductCheck eigen_product_check(const IntMatrix& a);
bool mikhailov_module_check(const IntMatrix& a);

struct AuditRecord {
  unsigned k = 0;
  std::size_t dimension = 0;
  AfResult af;
  bool af_nilpotent = false;
  /// Set when a prime was requested.
  std::optional<bool> af_p_finite;
};

/// Criterion on the k-fold tensor powers A^{(x)k}, k = 1..K.
std::vector<AuditRecord> tensor_power_audit(const IntMatrix& a, unsigned bound, const std::optional<Int>& p,
                                            const SizeCaps& caps = {});

/// Criterion on the induced maps of the free Lie ring components, k = 1..K.
std::vector<AuditRecord> lie_component_audit(const IntMatrix& a, unsigned bound, const std::optional<Int>& p,
                                             const SizeCaps& caps = {});

/// Least N <= max_n such that every product of N matrices (B_i - I) vanishes,
/// exactly (modulus 0) or entrywise modulo `modulus` (>= 2).
std::optional<unsigned> augmentation_power_check(const std::vector<IntMatrix>& actions, const Int& modulus,
                                                 unsigned max_n);

// ---------------------------------------------------------------------------
// Classification of F_n x| Z (and F_n x| F_m for several actions)
// ---------------------------------------------------------------------------

/// Exact classification for rank 2 from det and trace.
Verdict classify_f2(const IntMatrix& a);

struct FiniteIndexSubgroup {
  unsigned index = 1;
  IntMatrix power_matrix;
  Verdict sub_verdict;
};

/// Residually nilpotent subgroup of index 1, 2 or 4 for rank 2.
FiniteIndexSubgroup finite_index_resnil_subgroup(const IntMatrix& a);

struct ClassifyOptions {
  /// 0 selects the default: 4 for rank <= 2, 3 otherwise (reduced to fit caps).
  unsigned tensor_bound = 0;
  std::vector<Int> primes;
  SizeCaps caps;
  unsigned augmentation_bound = 16;
};

/// Effective tensor bound for a given rank.
unsigned effective_tensor_bound(std::size_t rank, const ClassifyOptions& options);

Verdict classify_matrix(const IntMatrix& a, const ClassifyOptions& options = {});

/// F_n x| F_m where the m free generators act by the given matrices.
Verdict classify_action_family(const std::vector<IntMatrix>& actions, const ClassifyOptions& options = {});

/// Endomorphism input: the abelianization is classified after the
/// automorphism check (ProvenNotAuto is an input error).
Verdict classify_endo(const FreeEndo& f, const std::optional<FreeEndo>& claimed_inverse,
                      const ClassifyOptions& options = {});

using ClassifyInput = std::variant<IntMatrix, FreeEndo>;
Verdict classify_general(const ClassifyInput& input, const ClassifyOptions& options = {});

}  // namespace resnil
