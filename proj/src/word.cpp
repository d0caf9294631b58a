#include "kuniv/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace kuniv {

Word Word::from_letters(std::vector<Letter> letters, int sigma) {
  if (letters.empty()) throw std::invalid_argument("empty word");
  if (sigma < 1) throw std::invalid_argument("sigma must be positive");
  std::vector<char> seen(static_cast<std::size_t>(sigma) + 1, 0);
  for (Letter a : letters) {
    if (a < 1 || a > sigma) throw std::invalid_argument("letter out of range");
    seen[static_cast<std::size_t>(a)] = 1;
  }
  for (int a = 1; a <= sigma; ++a) {
    if (!seen[static_cast<std::size_t>(a)])
      throw std::invalid_argument("alphabet letter missing from word");
  }
  Word w;
  w.letters_ = std::move(letters);
  w.sigma_ = sigma;
  return w;
}

std::pair<Word, AlphabetMap> normalize(std::span<const Symbol> symbols) {
  if (symbols.empty()) throw std::invalid_argument("empty word");
  AlphabetMap map;
  map.forward.assign(symbols.begin(), symbols.end());
  std::sort(map.forward.begin(), map.forward.end());
  map.forward.erase(std::unique(map.forward.begin(), map.forward.end()), map.forward.end());
  std::vector<Letter> letters;
  letters.reserve(symbols.size());
  for (Symbol s : symbols) {
    auto it = std::lower_bound(map.forward.begin(), map.forward.end(), s);
    letters.push_back(static_cast<Letter>(it - map.forward.begin()) + 1);
  }
  int sigma = map.size();
  return {Word::from_letters(std::move(letters), sigma), std::move(map)};
}

std::vector<Symbol> restore(std::span<const Letter> letters, const AlphabetMap& map) {
  std::vector<Symbol> out;
  out.reserve(letters.size());
  for (Letter a : letters) {
    if (a < 1 || a > map.size()) throw std::invalid_argument("letter out of range");
    out.push_back(map.forward[static_cast<std::size_t>(a) - 1]);
  }
  return out;
}

ArchFactorization arch_factorize(std::span<const Letter> letters, int sigma) {
  ArchFactorization f;
  const int n = static_cast<int>(letters.size());
  std::vector<int> count(static_cast<std::size_t>(sigma) + 1, 0);
  int distinct = 0;
  int arch_start = 1;
  for (int i = 1; i <= n; ++i) {
    Letter a = letters[static_cast<std::size_t>(i) - 1];
    if (count[static_cast<std::size_t>(a)]++ == 0) ++distinct;
    if (distinct == sigma) {
      f.arch_ends.push_back(i);
      // reset counters for the next arch
      for (int j = arch_start; j <= i; ++j) count[static_cast<std::size_t>(letters[static_cast<std::size_t>(j) - 1])] = 0;
      distinct = 0;
      arch_start = i + 1;
    }
  }
  f.iota = static_cast<int>(f.arch_ends.size());
  f.rest_start = f.arch_ends.empty() ? 1 : f.arch_ends.back() + 1;
  return f;
}

ArchFactorization arch_factorize(const Word& w) {
  return arch_factorize(std::span<const Letter>(w.letters()), w.sigma());
}

int universality_index(std::span<const Letter> letters, int sigma) {
  return arch_factorize(letters, sigma).iota;
}

int universality_index(const Word& w) { return arch_factorize(w).iota; }

bool is_k_universal(const Word& w, std::int64_t k) {
  if (k <= 0) return true;
  return universality_index(w) >= k;
}

}  // namespace kuniv
