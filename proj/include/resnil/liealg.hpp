#pragma once

#include "resnil/matrix.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace resnil {

/// A word over {1..n}; letter values are stored directly as chars 1..n so that
/// std::string comparison is the lexicographic order on words.
using LieWord = std::string;

bool is_lyndon(const LieWord& w);

/// Standard factorization w = u v of a Lyndon word of length >= 2, where v is
/// the longest proper suffix of w that is itself Lyndon.
std::pair<LieWord, LieWord> standard_factorization(const LieWord& w);

/// "112" for small alphabets, "1.1.12" once letters need two digits.
std::string word_label(const LieWord& w);
/// Standard bracketing, e.g. "[x1,[x1,x2]]".
std::string bracket_label(const LieWord& w);

/// Rank of the degree-k component of the free Lie ring on n generators:
/// (1/k) * sum over d | k of mu(d) n^(k/d).
Int witt_dimension(std::size_t n, unsigned k);

struct LyndonBasis {
  std::size_t alphabet_size = 0;
  unsigned degree = 0;
  std::vector<LieWord> words;  ///< lexicographically increasing
  std::map<LieWord, std::size_t> position;
};

LyndonBasis lyndon_basis(std::size_t n, unsigned k, std::size_t cap = SizeCaps{}.witt_dimension);

/// Element of the degree-k component in Lyndon coordinates.
struct LieElement {
  std::size_t alphabet_size = 0;
  unsigned degree = 0;
  std::vector<Int> coords;

  /// Basis vector for a Lyndon word.
  static LieElement basis_vector(std::size_t n, const LieWord& w, std::size_t cap = SizeCaps{}.witt_dimension);
  friend bool operator==(const LieElement&, const LieElement&) = default;
};

/// Linear combination of Lyndon words (all of one degree in practice).
using LieCombination = std::map<LieWord, Int>;

/// Brackets of standard Lyndon brackets, rewritten into the Lyndon basis by
/// antisymmetry and the Jacobi identity. Results are memoized per instance;
/// an instance is not safe for concurrent use.
class LyndonBracket {
 public:
  const LieCombination& bracket(const LieWord& u, const LieWord& v);
  LieCombination bracket(const LieCombination& a, const LieCombination& b);

 private:
  LieCombination compute(const LieWord& u, const LieWord& v, unsigned depth);
  const LieCombination& memo(const LieWord& u, const LieWord& v, unsigned depth);
  std::map<std::pair<LieWord, LieWord>, LieCombination> cache_;
};

/// [left, right] in the Lyndon basis of degree left.degree + right.degree.
LieElement bracket_normal_form(const LieElement& left, const LieElement& right,
                               std::size_t cap = SizeCaps{}.witt_dimension);

/// Matrix, in the degree-k Lyndon basis, of the graded Lie ring map induced by
/// the linear map x_j -> sum_i A(i,j) x_i on generators.
IntMatrix induced_lie_matrix(const IntMatrix& a, unsigned k, std::size_t cap = SizeCaps{}.witt_dimension);

}  // namespace resnil
