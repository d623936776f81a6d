#include "resnil/liealg.hpp"

#include "resnil/error.hpp"

#include <functional>

namespace resnil {

namespace {

constexpr unsigned kMaxRewriteDepth = 4096;

void add_scaled(LieCombination& into, const LieCombination& from, const Int& scale) {
  if (scale == 0) return;
  for (const auto& [w, c] : from) {
    Int& slot = into[w];
    slot += scale * c;
    if (slot == 0) into.erase(w);
  }
}

int mobius(unsigned n) {
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

bool is_lyndon(const LieWord& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!(w < w.substr(i) + w.substr(0, i))) return false;
  return true;
}

std::pair<LieWord, LieWord> standard_factorization(const LieWord& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    LieWord suffix = w.substr(i);
    if (is_lyndon(suffix)) return {w.substr(0, i), suffix};
  }
  throw Error(ErrorKind::InvalidInput, "standard factorization needs a Lyndon word of length >= 2");
}

std::string word_label(const LieWord& w) {
  bool small = true;
  for (char c : w)
    if (static_cast<unsigned char>(c) > 9) small = false;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!small && i) out += '.';
    out += std::to_string(static_cast<unsigned>(static_cast<unsigned char>(w[i])));
  }
  return out;
}

std::string bracket_label(const LieWord& w) {
  if (w.size() == 1) return "x" + std::to_string(static_cast<unsigned>(static_cast<unsigned char>(w[0])));
  auto [u, v] = standard_factorization(w);
  return "[" + bracket_label(u) + "," + bracket_label(v) + "]";
}

Int witt_dimension(std::size_t n, unsigned k) {
  if (k == 0) throw Error(ErrorKind::InvalidInput, "Witt dimension needs k >= 1");
  Int sum = 0;
  for (unsigned d = 1; d <= k; ++d) {
    if (k % d) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    Int term = pow_int(Int(static_cast<unsigned long>(n)), k / d);
    sum += mu > 0 ? term : Int(-term);
  }
  return divexact(sum, Int(k));
}

LyndonBasis lyndon_basis(std::size_t n, unsigned k, std::size_t cap) {
  if (n == 0 || k == 0) throw Error(ErrorKind::InvalidInput, "Lyndon basis needs n >= 1 and k >= 1");
  if (n > 255) throw Error(ErrorKind::SizeCapExceeded, "alphabet too large");
  if (witt_dimension(n, k) > static_cast<unsigned long>(cap))
    throw Error(ErrorKind::SizeCapExceeded, "Witt dimension of (" + std::to_string(n) + ", " + std::to_string(k) +
                                                ") exceeds cap " + std::to_string(cap));
  LyndonBasis basis;
  basis.alphabet_size = n;
  basis.degree = k;
  // Duval's generation of Lyndon words of length <= k in lexicographic order.
  const char first = 1;
  const char last = static_cast<char>(n);
  LieWord w(1, first);
  while (!w.empty()) {
    if (w.size() == k) {
      basis.position.emplace(w, basis.words.size());
      basis.words.push_back(w);
    }
    const std::size_t m = w.size();
    while (w.size() < k) w += w[w.size() - m];
    while (!w.empty() && w.back() == last) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return basis;
}

LieElement LieElement::basis_vector(std::size_t n, const LieWord& w, std::size_t cap) {
  LyndonBasis basis = lyndon_basis(n, static_cast<unsigned>(w.size()), cap);
  auto it = basis.position.find(w);
  if (it == basis.position.end()) throw Error(ErrorKind::InvalidInput, "not a Lyndon word over this alphabet");
  LieElement e{n, static_cast<unsigned>(w.size()), std::vector<Int>(basis.words.size(), Int(0))};
  e.coords[it->second] = 1;
  return e;
}

const LieCombination& LyndonBracket::bracket(const LieWord& u, const LieWord& v) { return memo(u, v, 0); }

const LieCombination& LyndonBracket::memo(const LieWord& u, const LieWord& v, unsigned depth) {
  auto key = std::make_pair(u, v);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  LieCombination value = compute(u, v, depth);
  return cache_.emplace(std::move(key), std::move(value)).first->second;
}

LieCombination LyndonBracket::compute(const LieWord& u, const LieWord& v, unsigned depth) {
  if (depth > kMaxRewriteDepth) throw Error(ErrorKind::InvalidInput, "bracket rewriting did not terminate");
  if (u == v) return {};
  if (v < u) {
    LieCombination r;
    add_scaled(r, memo(v, u, depth + 1), -1);
    return r;
  }
  // u < v, so uv is Lyndon; [P_u, P_v] is its standard bracket unless the
  // right standard factor of u is smaller than v.
  if (u.size() == 1) return {{u + v, 1}};
  auto [u1, u2] = standard_factorization(u);
  if (!(u2 < v)) return {{u + v, 1}};
  // [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]]
  LieCombination result;
  const LieCombination inner_right = memo(u2, v, depth + 1);
  for (const auto& [w, c] : inner_right) add_scaled(result, memo(u1, w, depth + 1), c);
  const LieCombination inner_left = memo(u1, v, depth + 1);
  for (const auto& [w, c] : inner_left) add_scaled(result, memo(u2, w, depth + 1), Int(-c));
  return result;
}

LieCombination LyndonBracket::bracket(const LieCombination& a, const LieCombination& b) {
  LieCombination result;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) add_scaled(result, bracket(u, v), cu * cv);
  return result;
}

LieElement bracket_normal_form(const LieElement& left, const LieElement& right, std::size_t cap) {
  if (left.alphabet_size != right.alphabet_size)
    throw Error(ErrorKind::AlphabetMismatch, "bracket of elements over different alphabets");
  const std::size_t n = left.alphabet_size;
  LyndonBasis lb = lyndon_basis(n, left.degree, cap);
  LyndonBasis rb = lyndon_basis(n, right.degree, cap);
  LyndonBasis out_basis = lyndon_basis(n, left.degree + right.degree, cap);
  if (left.coords.size() != lb.words.size() || right.coords.size() != rb.words.size())
    throw Error(ErrorKind::DimensionMismatch, "Lie element coordinates do not match the basis");
  LieCombination a, b;
  for (std::size_t i = 0; i < lb.words.size(); ++i)
    if (left.coords[i] != 0) a[lb.words[i]] = left.coords[i];
  for (std::size_t i = 0; i < rb.words.size(); ++i)
    if (right.coords[i] != 0) b[rb.words[i]] = right.coords[i];
  LyndonBracket engine;
  LieCombination c = engine.bracket(a, b);
  LieElement out{n, left.degree + right.degree, std::vector<Int>(out_basis.words.size(), Int(0))};
  for (const auto& [w, coeff] : c) out.coords.at(out_basis.position.at(w)) = coeff;
  return out;
}

IntMatrix induced_lie_matrix(const IntMatrix& a, unsigned k, std::size_t cap) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "induced Lie matrix of a non-square matrix");
  const std::size_t n = a.rows();
  LyndonBasis basis = lyndon_basis(n, k, cap);
  LyndonBracket engine;
  std::map<LieWord, LieCombination> images;
  std::function<const LieCombination&(const LieWord&)> image = [&](const LieWord& w) -> const LieCombination& {
    auto it = images.find(w);
    if (it != images.end()) return it->second;
    LieCombination value;
    if (w.size() == 1) {
      const std::size_t j = static_cast<unsigned char>(w[0]) - 1u;
      for (std::size_t i = 0; i < n; ++i)
        if (a(i, j) != 0) value[LieWord(1, static_cast<char>(i + 1))] = a(i, j);
    } else {
      auto [u, v] = standard_factorization(w);
      LieCombination left = image(u);
      LieCombination right = image(v);
      value = engine.bracket(left, right);
    }
    return images.emplace(w, std::move(value)).first->second;
  };
  const std::size_t dim = basis.words.size();
  IntMatrix out(dim, dim);
  for (std::size_t col = 0; col < dim; ++col)
    for (const auto& [w, c] : image(basis.words[col])) out(basis.position.at(w), col) = c;
  return out;
}

}  // namespace resnil
