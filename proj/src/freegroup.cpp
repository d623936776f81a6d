#include "resnil/freegroup.hpp"

#include "resnil/error.hpp"

#include <cctype>
#include <sstream>

namespace resnil {

FreeWord::FreeWord(std::size_t rank, const std::vector<Syllable>& syllables) : rank_(rank) {
  for (const Syllable& s : syllables) push(s.generator, s.exponent);
}

FreeWord FreeWord::generator(std::size_t rank, std::size_t index, long exponent) {
  return FreeWord(rank, {Syllable{index, exponent}});
}

void FreeWord::push(std::size_t generator, long exponent) {
  if (generator < 1 || generator > rank_)
    throw Error(ErrorKind::UnknownGenerator, "generator x" + std::to_string(generator) + " outside rank " +
                                                 std::to_string(rank_));
  if (exponent == 0) return;
  if (!syllables_.empty() && syllables_.back().generator == generator) {
    syllables_.back().exponent += exponent;
    if (syllables_.back().exponent == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back({generator, exponent});
}

std::vector<Int> FreeWord::exponent_sums() const {
  std::vector<Int> v(rank_, Int(0));
  for (const Syllable& s : syllables_) v[s.generator - 1] += s.exponent;
  return v;
}

std::string FreeWord::to_string() const {
  if (syllables_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < syllables_.size(); ++i) {
    if (i) out << ' ';
    out << 'x' << syllables_[i].generator;
    if (syllables_[i].exponent != 1) out << '^' << syllables_[i].exponent;
  }
  return out.str();
}

std::optional<std::size_t> resolve_generator(const std::string& name, std::size_t rank) {
  if (name.size() > 1 && name[0] == 'x') {
    std::size_t idx = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
      idx = idx * 10 + static_cast<std::size_t>(name[i] - '0');
      if (idx > 1000000) return std::nullopt;
    }
    if (idx >= 1 && idx <= rank) return idx;
    return std::nullopt;
  }
  if (name.size() != 1 || name[0] < 'a' || name[0] > 'z') return std::nullopt;
  const std::size_t alpha = static_cast<std::size_t>(name[0] - 'a') + 1;
  if (alpha <= rank) return alpha;
  std::size_t conventional = 0;
  if (name[0] >= 'x') conventional = static_cast<std::size_t>(name[0] - 'x') + 1;
  else if (name[0] >= 'u' && name[0] <= 'w') conventional = static_cast<std::size_t>(name[0] - 'u') + 1;
  if (conventional >= 1 && conventional <= rank) return conventional;
  return std::nullopt;
}

namespace {

bool is_separator(char c) { return std::isspace(static_cast<unsigned char>(c)) || c == '*'; }

struct WordParser {
  const std::string& text;
  std::size_t rank;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() && is_separator(text[pos])) ++pos;
  }

  long parse_exponent() {
    const std::size_t start = pos;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      negative = text[pos] == '-';
      ++pos;
    }
    const std::size_t digits = pos;
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1000000000L) throw SyntaxError(start, "exponent too large");
      ++pos;
    }
    if (pos == digits) throw SyntaxError(pos, "expected integer exponent after '^'");
    if (value == 0) throw Error(ErrorKind::ExponentZero, "zero exponent at position " + std::to_string(start));
    return negative ? -value : value;
  }

  FreeWord parse() {
    FreeWord word(rank);
    skip();
    if (pos == text.size()) throw SyntaxError(pos, "empty word (write 1 for the identity)");
    if (pos < text.size() && text[pos] == '1') {
      ++pos;
      skip();
      if (pos != text.size()) throw SyntaxError(pos, "unexpected input after identity word '1'");
      return word;
    }
    while (pos < text.size()) {
      const std::size_t start = pos;
      const char c = text[pos];
      std::string name;
      bool inverse = false;
      if (c == 'x' && pos + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        name = text.substr(start, pos - start);
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        inverse = std::isupper(static_cast<unsigned char>(c)) != 0;
        name = std::string(1, static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        ++pos;
      } else {
        throw SyntaxError(pos, std::string("unexpected character '") + c + "'");
      }
      auto index = resolve_generator(name, rank);
      if (!index) throw Error(ErrorKind::UnknownGenerator, "'" + name + "' at position " + std::to_string(start));
      long exponent = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        exponent = parse_exponent();
      }
      if (inverse) exponent = -exponent;
      word = word_multiply(word, FreeWord::generator(rank, *index, exponent));
      if (pos < text.size() && !is_separator(text[pos]) && !std::isalpha(static_cast<unsigned char>(text[pos])))
        throw SyntaxError(pos, std::string("unexpected character '") + text[pos] + "'");
      skip();
    }
    return word;
  }
};

}  // namespace

FreeWord parse_word(const std::string& text, std::size_t rank) { return WordParser{text, rank}.parse(); }

FreeWord word_multiply(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank()) throw Error(ErrorKind::RankMismatch, "words from free groups of different rank");
  std::vector<Syllable> s = u.syllables();
  s.insert(s.end(), v.syllables().begin(), v.syllables().end());
  return FreeWord(u.rank(), s);
}

FreeWord word_invert(const FreeWord& u) {
  std::vector<Syllable> s(u.syllables().rbegin(), u.syllables().rend());
  for (Syllable& x : s) x.exponent = -x.exponent;
  return FreeWord(u.rank(), s);
}

FreeEndo::FreeEndo(std::vector<FreeWord> images) : images_(std::move(images)) {
  for (const FreeWord& w : images_)
    if (w.rank() != images_.size()) throw Error(ErrorKind::RankMismatch, "image word rank differs from endomorphism rank");
}

FreeEndo FreeEndo::identity(std::size_t rank) {
  std::vector<FreeWord> images;
  for (std::size_t i = 1; i <= rank; ++i) images.push_back(FreeWord::generator(rank, i));
  return FreeEndo(std::move(images));
}

namespace {

FreeWord power_word(const FreeWord& w, long e) {
  FreeWord base = e < 0 ? word_invert(w) : w;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  FreeWord result(w.rank());
  while (n > 0) {
    if (n & 1ul) result = word_multiply(result, base);
    n >>= 1;
    if (n > 0) base = word_multiply(base, base);
  }
  return result;
}

}  // namespace

FreeWord FreeEndo::apply(const FreeWord& w) const {
  if (w.rank() != rank()) throw Error(ErrorKind::RankMismatch, "word rank differs from endomorphism rank");
  FreeWord out(rank());
  for (const Syllable& s : w.syllables()) out = word_multiply(out, power_word(images_[s.generator - 1], s.exponent));
  return out;
}

std::string FreeEndo::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out << "; ";
    out << 'x' << (i + 1) << " -> " << images_[i].to_string();
  }
  return out.str();
}

FreeEndo parse_endo(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of(";\n", start);
    if (end == std::string::npos) end = text.size();
    std::string piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t\r") != std::string::npos) {
      std::size_t arrow = piece.find("->");
      if (arrow == std::string::npos) throw SyntaxError(start, "expected 'generator -> word'");
      std::string lhs = piece.substr(0, arrow);
      std::size_t a = lhs.find_first_not_of(" \t\r"), b = lhs.find_last_not_of(" \t\r");
      if (a == std::string::npos) throw SyntaxError(start, "missing generator before '->'");
      pairs.emplace_back(lhs.substr(a, b - a + 1), piece.substr(arrow + 2));
    }
    start = end + 1;
  }
  const std::size_t rank = pairs.size();
  if (rank == 0) throw Error(ErrorKind::InvalidInput, "empty endomorphism");
  std::vector<std::optional<FreeWord>> images(rank);
  for (const auto& [lhs, rhs] : pairs) {
    auto index = resolve_generator(lhs, rank);
    if (!index) throw Error(ErrorKind::UnknownGenerator, "'" + lhs + "' is not a generator of rank " + std::to_string(rank));
    if (images[*index - 1]) throw Error(ErrorKind::InvalidInput, "generator '" + lhs + "' defined twice");
    images[*index - 1] = parse_word(rhs, rank);
  }
  std::vector<FreeWord> out;
  for (auto& w : images) out.push_back(std::move(*w));
  return FreeEndo(std::move(out));
}

FreeEndo endo_compose(const FreeEndo& f, const FreeEndo& g) {
  if (f.rank() != g.rank()) throw Error(ErrorKind::RankMismatch, "composing endomorphisms of different rank");
  std::vector<FreeWord> images;
  for (const FreeWord& w : g.images()) images.push_back(f.apply(w));
  return FreeEndo(std::move(images));
}

FreeEndo endo_power(const FreeEndo& f, unsigned m) {
  FreeEndo result = FreeEndo::identity(f.rank());
  FreeEndo base = f;
  while (m > 0) {
    if (m & 1u) result = endo_compose(result, base);
    m >>= 1;
    if (m > 0) base = endo_compose(base, base);
  }
  return result;
}

IntMatrix abelianization_matrix(const FreeEndo& f) {
  std::vector<std::vector<Int>> columns;
  for (const FreeWord& w : f.images()) columns.push_back(w.exponent_sums());
  return IntMatrix::from_columns(f.rank(), columns);
}

const char* to_string(AutomorphismCheck c) {
  switch (c) {
    case AutomorphismCheck::ProvenAuto: return "ProvenAuto";
    case AutomorphismCheck::ProvenNotAuto: return "ProvenNotAuto";
    case AutomorphismCheck::AbelianizedUnimodularOnly: return "AbelianizedUnimodularOnly";
  }
  return "?";
}

AutomorphismCheck check_automorphism(const FreeEndo& f, const std::optional<FreeEndo>& claimed_inverse) {
  if (!is_unimodular(abelianization_matrix(f))) return AutomorphismCheck::ProvenNotAuto;
  if (!claimed_inverse) return AutomorphismCheck::AbelianizedUnimodularOnly;
  if (claimed_inverse->rank() != f.rank()) throw Error(ErrorKind::RankMismatch, "claimed inverse has a different rank");
  const FreeEndo id = FreeEndo::identity(f.rank());
  if (endo_compose(f, *claimed_inverse) == id && endo_compose(*claimed_inverse, f) == id)
    return AutomorphismCheck::ProvenAuto;
  // A wrong inverse says nothing about f itself.
  return AutomorphismCheck::AbelianizedUnimodularOnly;
}

}  // namespace resnil
