#pragma once

#include "resnil/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace resnil {

struct Syllable {
  std::size_t generator;  ///< 1-based index into x1..xn
  long exponent;          ///< never zero
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Freely reduced word in F_n: adjacent syllables have distinct generators.
class FreeWord {
 public:
  explicit FreeWord(std::size_t rank = 0) : rank_(rank) {}
  /// Reduces the given syllables freely; generators must lie in 1..rank.
  FreeWord(std::size_t rank, const std::vector<Syllable>& syllables);

  static FreeWord generator(std::size_t rank, std::size_t index, long exponent = 1);

  std::size_t rank() const { return rank_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  /// Total exponent of each generator (the image in Z^n).
  std::vector<Int> exponent_sums() const;
  /// Canonical text "x1 x2^3 x1^-1"; the empty word prints as "1".
  std::string to_string() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  void push(std::size_t generator, long exponent);
  std::size_t rank_;
  std::vector<Syllable> syllables_;
};

/// Maps a generator name to its 1-based index for a given rank: `x<digits>`
/// is taken literally; a single lowercase letter is its alphabet position
/// (a = 1) when that fits the rank, otherwise the conventional names u,v,w and
/// x,y,z stand for 1,2,3. Returns nullopt for names that do not resolve.
std::optional<std::size_t> resolve_generator(const std::string& name, std::size_t rank);

/// Grammar: syllables separated by whitespace or '*'; an atom is `x<digits>`
/// or a single letter (uppercase = inverse) optionally followed by `^` and a
/// signed integer. "1" denotes the empty word.
FreeWord parse_word(const std::string& text, std::size_t rank);

FreeWord word_multiply(const FreeWord& u, const FreeWord& v);
FreeWord word_invert(const FreeWord& u);

/// Endomorphism of F_n given by the images of x1..xn.
class FreeEndo {
 public:
  FreeEndo() = default;
  explicit FreeEndo(std::vector<FreeWord> images);

  static FreeEndo identity(std::size_t rank);

  std::size_t rank() const { return images_.size(); }
  const std::vector<FreeWord>& images() const { return images_; }
  FreeWord apply(const FreeWord& w) const;
  /// "x1 -> x2; x2 -> x1 x2^3"
  std::string to_string() const;

  friend bool operator==(const FreeEndo&, const FreeEndo&) = default;

 private:
  std::vector<FreeWord> images_;
};

/// Parses "a->b; b->a b^3": one `name->word` pair per generator, separated by
/// ';' or newlines. The rank is the number of pairs and every generator of that
/// rank must be defined exactly once.
FreeEndo parse_endo(const std::string& text);

/// (f o g)(x) = f(g(x)).
FreeEndo endo_compose(const FreeEndo& f, const FreeEndo& g);
FreeEndo endo_power(const FreeEndo& f, unsigned m);

/// Column j is the exponent-sum vector of f(x_j).
IntMatrix abelianization_matrix(const FreeEndo& f);

enum class AutomorphismCheck { ProvenAuto, ProvenNotAuto, AbelianizedUnimodularOnly };

const char* to_string(AutomorphismCheck c);

AutomorphismCheck check_automorphism(const FreeEndo& f, const std::optional<FreeEndo>& claimed_inverse);

}  // namespace resnil
