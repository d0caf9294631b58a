#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace kuniv {

using Symbol = std::int64_t;  // user-facing alphabet symbol (code point or integer)
using Letter = std::int32_t;  // normalized letter in [1..sigma]

// Maps normalized letters back to the original symbols. forward is strictly
// increasing; letter r corresponds to forward[r-1].
struct AlphabetMap {
  std::vector<Symbol> forward;
  int size() const { return static_cast<int>(forward.size()); }
};

// A word over the integer alphabet [1..sigma] where every letter of the
// alphabet occurs at least once. Positions are 1-based everywhere.
class Word {
 public:
  // Validates: n >= 1, letters within [1..sigma], all sigma letters present.
  static Word from_letters(std::vector<Letter> letters, int sigma);

  int n() const { return static_cast<int>(letters_.size()); }
  int sigma() const { return sigma_; }
  Letter at(int pos) const { return letters_[pos - 1]; }
  const std::vector<Letter>& letters() const { return letters_; }

 private:
  Word() = default;
  std::vector<Letter> letters_;
  int sigma_ = 0;
};

// Sorted-rank normalization: letter = rank of the symbol among the distinct
// input symbols, plus one. Throws std::invalid_argument("empty word") on
// empty input.
std::pair<Word, AlphabetMap> normalize(std::span<const Symbol> symbols);

// Inverse of the normalization mapping, applied letterwise.
std::vector<Symbol> restore(std::span<const Letter> letters, const AlphabetMap& map);

struct ArchFactorization {
  std::vector<int> arch_ends;  // 1-based end positions, strictly increasing
  int rest_start = 1;          // first position of the rest (n+1 when rest empty)
  int iota = 0;                // number of arches
};

// Greedy leftmost arch factorization w.r.t. the alphabet [1..sigma]. The span
// variant accepts sequences that do not use every letter (then iota may be 0).
ArchFactorization arch_factorize(std::span<const Letter> letters, int sigma);
ArchFactorization arch_factorize(const Word& w);

int universality_index(std::span<const Letter> letters, int sigma);
int universality_index(const Word& w);

bool is_k_universal(const Word& w, std::int64_t k);

}  // namespace kuniv
