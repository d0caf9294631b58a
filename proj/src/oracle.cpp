#include "kuniv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <unordered_set>

#include "kuniv/infinity.hpp"

namespace kuniv::oracle {

namespace {

std::int64_t checked_pow(std::int64_t base, std::int64_t exp, std::int64_t cap) {
  std::int64_t v = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

// distinct letters in w[i:j], 1-based inclusive
int delta_scan(std::span<const Letter> w, int sigma, int i, int j) {
  std::vector<char> seen(static_cast<std::size_t>(sigma) + 1, 0);
  int f = 0;
  for (int p = std::max(i, 1); p <= j; ++p)
    if (!seen[static_cast<std::size_t>(w[static_cast<std::size_t>(p) - 1])]++) ++f;
  return f;
}

int iota_scan(std::span<const Letter> w, int sigma) {
  std::vector<int> count(static_cast<std::size_t>(sigma) + 1, 0);
  int f = 0, arches = 0;
  for (Letter a : w) {
    if (count[static_cast<std::size_t>(a)]++ == 0) ++f;
    if (f == sigma) {
      ++arches;
      std::fill(count.begin(), count.end(), 0);
      f = 0;
    }
  }
  return arches;
}

void enumerate_subsequences(std::span<const Letter> w, int sigma,
                            const std::vector<std::vector<int>>& next_occ, std::int64_t k,
                            std::vector<Letter>& prefix, int from,
                            std::set<std::vector<Letter>>& out) {
  if (static_cast<std::int64_t>(prefix.size()) == k) {
    out.insert(prefix);
    return;
  }
  for (Letter a = 1; a <= sigma; ++a) {
    int pos = next_occ[static_cast<std::size_t>(from)][static_cast<std::size_t>(a)];
    if (pos == 0) continue;
    prefix.push_back(a);
    enumerate_subsequences(w, sigma, next_occ, k, prefix, pos + 1, out);
    prefix.pop_back();
  }
}

bool decomposition_universal(std::span<const Letter> w, int sigma, int from, std::int64_t k) {
  if (k == 0) return true;
  const int n = static_cast<int>(w.size());
  std::vector<char> seen(static_cast<std::size_t>(sigma) + 1, 0);
  int f = 0;
  for (int j = from; j <= n; ++j) {
    if (!seen[static_cast<std::size_t>(w[static_cast<std::size_t>(j) - 1])]++) ++f;
    if (f == sigma && decomposition_universal(w, sigma, j + 1, k - 1)) return true;
  }
  return false;
}

std::string canonical_key(std::span<const Letter> w, int sigma) {
  // first-occurrence renaming, letters packed into bytes
  std::vector<Letter> rename(static_cast<std::size_t>(sigma) + 1, 0);
  Letter next = 0;
  std::string key;
  key.reserve(w.size());
  for (Letter a : w) {
    if (rename[static_cast<std::size_t>(a)] == 0) rename[static_cast<std::size_t>(a)] = ++next;
    key.push_back(static_cast<char>(rename[static_cast<std::size_t>(a)]));
  }
  return key;
}

bool bfs_target_reached(std::span<const Letter> cand, int sigma, std::int64_t k, EditOp op,
                        std::int64_t source_iota) {
  std::int64_t iota = iota_scan(cand, sigma);
  switch (op) {
    case EditOp::Insert: return iota >= k;
    case EditOp::Delete: return iota == k;
    case EditOp::Substitute: return k < source_iota ? iota == k : iota >= k;
  }
  return false;
}

}  // namespace

Spectrum spectrum(const Word& w, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (checked_pow(w.sigma(), k, 1'000'000) > 1'000'000) throw ScaleError("oracle scale");
  Spectrum s;
  s.k = k;
  const int n = w.n();
  // next_occ[i][a]: smallest position >= i holding a (0 when none); i in [1:n+1]
  std::vector<std::vector<int>> next_occ(static_cast<std::size_t>(n) + 2,
                                         std::vector<int>(static_cast<std::size_t>(w.sigma()) + 1, 0));
  for (int i = n; i >= 1; --i) {
    next_occ[static_cast<std::size_t>(i)] = next_occ[static_cast<std::size_t>(i) + 1];
    next_occ[static_cast<std::size_t>(i)][static_cast<std::size_t>(w.at(i))] = i;
  }
  std::vector<Letter> prefix;
  enumerate_subsequences(w.letters(), w.sigma(), next_occ, k, prefix, 1, s.words);
  return s;
}

bool is_k_universal(const Word& w, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  bool by_decomposition = decomposition_universal(w.letters(), w.sigma(), 1, k);
  std::int64_t full = checked_pow(w.sigma(), k, 1'000'000);
  if (full <= 1'000'000) {
    bool by_spectrum =
        static_cast<std::int64_t>(spectrum(w, k).words.size()) == full;
    if (by_spectrum != by_decomposition) throw std::logic_error("universality oracles disagree");
  }
  return by_decomposition;
}

std::int64_t bfs_distance(const Word& w, std::int64_t k, EditOp op, int max_depth) {
  if (w.n() > 12) throw ScaleError("oracle scale: word too long for search");
  const int sigma = w.sigma();
  const std::int64_t source_iota = iota_scan(w.letters(), sigma);
  std::vector<std::vector<Letter>> frontier{w.letters()};
  std::unordered_set<std::string> seen{canonical_key(w.letters(), sigma)};
  if (bfs_target_reached(w.letters(), sigma, k, op, source_iota)) return 0;

  for (int depth = 1; depth <= max_depth; ++depth) {
    std::vector<std::vector<Letter>> next;
    for (const auto& cur : frontier) {
      const int m = static_cast<int>(cur.size());
      auto try_push = [&](std::vector<Letter>&& cand) -> bool {
        auto key = canonical_key(cand, sigma);
        if (!seen.insert(std::move(key)).second) return false;
        if (bfs_target_reached(cand, sigma, k, op, source_iota)) return true;
        next.push_back(std::move(cand));
        return false;
      };
      switch (op) {
        case EditOp::Insert:
          for (int pos = 0; pos <= m; ++pos)
            for (Letter a = 1; a <= sigma; ++a) {
              std::vector<Letter> cand = cur;
              cand.insert(cand.begin() + pos, a);
              if (try_push(std::move(cand))) return depth;
            }
          break;
        case EditOp::Delete:
          for (int pos = 0; pos < m; ++pos) {
            std::vector<Letter> cand = cur;
            cand.erase(cand.begin() + pos);
            if (try_push(std::move(cand))) return depth;
          }
          break;
        case EditOp::Substitute:
          for (int pos = 0; pos < m; ++pos)
            for (Letter a = 1; a <= sigma; ++a) {
              if (cur[static_cast<std::size_t>(pos)] == a) continue;
              std::vector<Letter> cand = cur;
              cand[static_cast<std::size_t>(pos)] = a;
              if (try_push(std::move(cand))) return depth;
            }
          break;
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  throw ScaleError("oracle scale: search bound exceeded");
}

std::int64_t naive_dp_distance(const Word& w, std::int64_t k, EditOp op) {
  const int n = w.n();
  const int sigma = w.sigma();
  std::span<const Letter> letters(w.letters());
  if (static_cast<double>(n) * n * std::max<std::int64_t>(k, 1) > 1e8)
    throw ScaleError("oracle scale: dp too large");
  const std::int64_t iota = iota_scan(letters, sigma);

  switch (op) {
    case EditOp::Insert: {
      if (k <= iota) return 0;
      const std::int64_t kk = std::min<std::int64_t>(k, n);
      // M[l][t], l in [0:n]
      std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(n) + 1,
                                               std::vector<std::int64_t>(static_cast<std::size_t>(kk) + 1, 0));
      for (int l = 0; l <= n; ++l) m[static_cast<std::size_t>(l)][0] = 0;
      for (std::int64_t t = 1; t <= kk; ++t) {
        for (int l = 0; l <= n; ++l) {
          std::int64_t best = kInf;
          for (int lp = 0; lp <= l; ++lp) {
            std::int64_t cost = m[static_cast<std::size_t>(lp)][static_cast<std::size_t>(t) - 1] +
                                (sigma - delta_scan(letters, sigma, lp + 1, l));
            best = std::min(best, cost);
          }
          m[static_cast<std::size_t>(l)][static_cast<std::size_t>(t)] = best;
        }
      }
      std::int64_t base = m[static_cast<std::size_t>(n)][static_cast<std::size_t>(kk)];
      return k <= n ? base : base + (k - n) * sigma;
    }
    case EditOp::Delete: {
      if (k > iota) throw InfeasibleError("target index exceeds current index; use insertions");
      if (k == iota) return 0;
      std::vector<std::int64_t> count(static_cast<std::size_t>(sigma) + 1, 0);
      for (Letter a : letters) ++count[static_cast<std::size_t>(a)];
      if (k == 0) {
        std::int64_t best = kInf;
        for (Letter a = 1; a <= sigma; ++a) best = std::min(best, count[static_cast<std::size_t>(a)]);
        return best;
      }
      // univ by direct scan
      std::vector<int> univ(static_cast<std::size_t>(n) + 1, 0);
      for (int i = 1; i <= n; ++i)
        for (int j = i; j >= 1; --j)
          if (delta_scan(letters, sigma, j, i) == sigma) {
            univ[static_cast<std::size_t>(i)] = j;
            break;
          }
      auto occurrences = [&](Letter a, int lo, int hi) {
        std::int64_t c = 0;
        for (int p = std::max(lo, 1); p <= hi; ++p)
          if (letters[static_cast<std::size_t>(p) - 1] == a) ++c;
        return c;
      };
      std::vector<std::vector<std::int64_t>> nmat(static_cast<std::size_t>(n) + 1,
                                                  std::vector<std::int64_t>(static_cast<std::size_t>(k) + 1, kInf));
      for (int i = 1; i <= n; ++i)
        if (delta_scan(letters, sigma, 1, i) == sigma)
          nmat[static_cast<std::size_t>(i)][1] = occurrences(letters[static_cast<std::size_t>(i) - 1], 1, i) - 1;
      for (std::int64_t p = 2; p <= k; ++p)
        for (int i = 1; i <= n; ++i) {
          std::int64_t best = kInf;
          for (int ip = 1; ip <= univ[static_cast<std::size_t>(i)] - 1; ++ip) {
            std::int64_t prev = nmat[static_cast<std::size_t>(ip)][static_cast<std::size_t>(p) - 1];
            if (prev == kInf) continue;
            best = std::min(best, prev + occurrences(letters[static_cast<std::size_t>(i) - 1], ip + 1, i) - 1);
          }
          nmat[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)] = best;
        }
      std::int64_t answer = kInf;
      for (int i = 1; i <= n; ++i) {
        if (nmat[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] == kInf) continue;
        // t_min by direct scan
        std::int64_t tmin = kInf;
        for (Letter a = 1; a <= sigma; ++a) tmin = std::min(tmin, occurrences(a, i + 1, n));
        answer = std::min(answer, nmat[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] + tmin);
      }
      return answer;
    }
    case EditOp::Substitute: {
      if (k > n / sigma) throw InfeasibleError("infeasible: substitutions preserve length");
      if (k == iota) return 0;
      if (sigma == 1)
        throw InfeasibleError("infeasible: unary alphabet admits no index-lowering substitutions");
      if (k < iota) return naive_dp_distance(w, k, EditOp::Delete);
      std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(n) + 1,
                                               std::vector<std::int64_t>(static_cast<std::size_t>(k) + 1, kInf));
      for (int l = sigma; l <= n; ++l)
        m[static_cast<std::size_t>(l)][1] = sigma - delta_scan(letters, sigma, 1, l);
      for (std::int64_t t = 2; t <= k; ++t)
        for (int l = 1; l <= n; ++l) {
          std::int64_t best = kInf;
          for (int lp1 = static_cast<int>(sigma * (t - 1)) + 1; lp1 <= l - sigma + 1; ++lp1) {
            std::int64_t prev = m[static_cast<std::size_t>(lp1) - 1][static_cast<std::size_t>(t) - 1];
            if (prev == kInf) continue;
            best = std::min(best, prev + (sigma - delta_scan(letters, sigma, lp1, l)));
          }
          m[static_cast<std::size_t>(l)][static_cast<std::size_t>(t)] = best;
        }
      return m[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }
  }
  throw std::logic_error("unreachable");
}

NaiveMinSuffixList::MinResult NaiveMinSuffixList::min() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < a_.size(); ++i)
    if (a_[i] <= a_[best]) best = i;  // rightmost tie
  return {static_cast<int>(best) + 1, a_[best]};
}

void NaiveMinSuffixList::decrement_suffix(std::size_t j) {
  for (std::size_t i = j - 1; i < a_.size(); ++i)
    if (a_[i] != kInf) --a_[i];
}

void NaiveMinSuffixList::append(std::int64_t value) { a_.push_back(value); }

SweepStats exhaustive_check(int max_n, int sigma, int bfs_limit, std::ostream* log) {
  SweepStats stats;
  std::vector<Letter> word;

  auto mismatch = [&](const Word& w, std::int64_t k, EditOp op, std::int64_t fast,
                      std::int64_t slow, const char* what) {
    ++stats.mismatches;
    if (log) {
      *log << "mismatch (" << what << ") op=" << to_string(op) << " k=" << k << " fast=" << fast
           << " slow=" << slow << " word=";
      for (Letter a : w.letters()) *log << static_cast<char>('a' + a - 1);
      *log << '\n';
    }
  };

  auto check_word = [&](const std::vector<Letter>& letters) {
    Word w = Word::from_letters(letters, sigma);
    ++stats.words;
    const int n = w.n();
    const std::int64_t iota = universality_index(w);

    auto compare = [&](std::int64_t k, EditOp op, std::int64_t fast) {
      ++stats.checks;
      std::int64_t slow = naive_dp_distance(w, k, op);
      if (slow != fast) mismatch(w, k, op, fast, slow, "naive dp");
      if (fast <= bfs_limit) {
        ++stats.bfs_checks;
        try {
          std::int64_t by_search = bfs_distance(w, k, op, bfs_limit);
          if (by_search != fast) mismatch(w, k, op, fast, by_search, "bfs");
        } catch (const ScaleError&) {
          // no solution within depth `fast` means the fast answer is too low
          mismatch(w, k, op, fast, -1, "bfs exhausted");
        }
      }
    };

    for (std::int64_t k = 0; k <= n + 2; ++k)
      compare(k, EditOp::Insert, insert_distance(w, k));
    for (std::int64_t k = 0; k <= iota; ++k)
      compare(k, EditOp::Delete, delete_distance(w, k));
    for (std::int64_t k = 0; k <= n / sigma; ++k) {
      if (sigma == 1 && k < iota) continue;
      compare(k, EditOp::Substitute, subst_distance(w, k));
    }
  };

  // canonical words: letter i may appear only if letters 1..i-1 already did
  auto rec = [&](auto&& self, Letter high) -> void {
    if (!word.empty() && high == sigma) check_word(word);
    if (static_cast<int>(word.size()) == max_n) return;
    Letter limit = std::min<Letter>(static_cast<Letter>(high + 1), static_cast<Letter>(sigma));
    for (Letter a = 1; a <= limit; ++a) {
      word.push_back(a);
      self(self, std::max(high, a));
      word.pop_back();
    }
  };
  rec(rec, 0);
  return stats;
}

}  // namespace kuniv::oracle
