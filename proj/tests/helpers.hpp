#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "kuniv/word.hpp"

namespace testutil {

// lowercase text -> Word (a=1, b=2, ...)
inline kuniv::Word make_word(std::string_view text) {
  std::vector<kuniv::Symbol> symbols(text.begin(), text.end());
  return kuniv::normalize(symbols).first;
}

inline std::string to_text(const std::vector<kuniv::Letter>& letters) {
  std::string s;
  for (kuniv::Letter a : letters) s.push_back(static_cast<char>('a' + a - 1));
  return s;
}

// random word using every letter of [1..sigma] at least once
inline kuniv::Word random_word(std::mt19937_64& rng, int n, int sigma) {
  std::vector<kuniv::Letter> letters(static_cast<std::size_t>(n));
  std::uniform_int_distribution<int> pick(1, sigma);
  for (auto& a : letters) a = static_cast<kuniv::Letter>(pick(rng));
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (int a = 1; a <= sigma; ++a) letters[static_cast<std::size_t>(order[static_cast<std::size_t>(a) - 1])] = a;
  return kuniv::Word::from_letters(std::move(letters), sigma);
}

}  // namespace testutil
