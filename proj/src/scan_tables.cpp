#include "kuniv/scan_tables.hpp"

#include <algorithm>

namespace kuniv {

namespace {
inline std::size_t uz(int v) { return static_cast<std::size_t>(v); }
inline Letter at(std::span<const Letter> w, int pos) { return w[uz(pos) - 1]; }
}  // namespace

PrefixDistinct prefix_distinct(std::span<const Letter> w, int sigma) {
  const int n = static_cast<int>(w.size());
  PrefixDistinct out;
  out.delta1.assign(uz(n) + 1, 0);
  std::vector<int> count(uz(sigma) + 1, 0);
  int f = 0;
  for (int i = 1; i <= n; ++i) {
    if (count[uz(at(w, i))]++ == 0) ++f;
    out.delta1[uz(i)] = f;
  }
  return out;
}

PrefixDistinct prefix_distinct(const Word& w) {
  return prefix_distinct(std::span<const Letter>(w.letters()), w.sigma());
}

WindowDistinct window_distinct(std::span<const Letter> w, int sigma) {
  const int n = static_cast<int>(w.size());
  WindowDistinct out;
  out.delta.assign(uz(n) + 1, 0);
  std::vector<int> count(uz(sigma) + 1, 0);
  int f = 0;
  for (int i = 1; i <= n; ++i) {
    if (count[uz(at(w, i))]++ == 0) ++f;
    if (i >= sigma) {
      out.delta[uz(i)] = f;
      // slide: drop w[i-sigma+1] before the next step
      Letter gone = at(w, i - sigma + 1);
      if (--count[uz(gone)] == 0) --f;
    }
  }
  return out;
}

WindowDistinct window_distinct(const Word& w) {
  return window_distinct(std::span<const Letter>(w.letters()), w.sigma());
}

SampledLastD sampled_last_d(std::span<const Letter> w, int sigma) {
  const int n = static_cast<int>(w.size());
  const int samples = n == 0 ? 0 : (n - 1) / sigma + 1;
  SampledLastD out(sigma, samples);

  std::vector<int> last(uz(sigma) + 1, n + 1);
  // recency list over letters: doubly linked, head = oldest last-occurrence
  std::vector<int> next(uz(sigma) + 1, 0), prev(uz(sigma) + 1, 0);
  std::vector<char> in_list(uz(sigma) + 1, 0);
  int head = 0, tail = 0, f = 0;

  auto unlink = [&](int a) {
    int p = prev[uz(a)], q = next[uz(a)];
    if (p) next[uz(p)] = q; else head = q;
    if (q) prev[uz(q)] = p; else tail = p;
  };
  auto push_back = [&](int a) {
    prev[uz(a)] = tail;
    next[uz(a)] = 0;
    if (tail) next[uz(tail)] = a; else head = a;
    tail = a;
  };

  int j = 0;
  for (int i = 1; i <= (samples - 1) * sigma + 1; ++i) {
    Letter a = at(w, i);
    if (last[uz(a)] == n + 1) ++f;
    last[uz(a)] = i;
    if (in_list[uz(a)]) unlink(a);
    push_back(a);
    in_list[uz(a)] = 1;
    if ((i - 1) % sigma == 0) {
      for (Letter b = 1; b <= sigma; ++b) {
        out.last_ref(j, b) = last[uz(b)];
        out.d_ref(j, b) = 0;
      }
      int g = f;
      for (int e = head; e != 0; e = next[uz(e)]) out.d_ref(j, static_cast<Letter>(e)) = g--;
      ++j;
    }
  }
  return out;
}

SampledLastD sampled_last_d(const Word& w) {
  return sampled_last_d(std::span<const Letter>(w.letters()), w.sigma());
}

DeletionTables deletion_tables(std::span<const Letter> w, int sigma) {
  const int n = static_cast<int>(w.size());
  DeletionTables out;
  out.univ.assign(uz(n) + 1, 0);

  // univ / V / L via the backward two-pointer scan
  {
    std::vector<int> count(uz(sigma) + 1, 0);
    int f = 0, a = n, b = n + 1;
    while (b > 0) {
      while (f < sigma && b > 1) {
        --b;
        if (count[uz(at(w, b))]++ == 0) ++f;
      }
      if (f < sigma && b == 1) b = 0;
      while (f == sigma) {
        out.univ[uz(a)] = b;
        if (--count[uz(at(w, a))] == 0) --f;
        --a;
      }
    }
  }

  // group equal univ values into intervals (they are contiguous)
  for (int i = 1; i <= n;) {
    int j = out.univ[uz(i)];
    int hi = i;
    while (hi < n && out.univ[uz(hi) + 1] == j) ++hi;
    out.groups.push_back({j, i, hi});
    out.v_set.push_back(j);
    i = hi + 1;
  }

  // freq and t_min
  out.freq.assign(uz(n) + 1, 0);
  out.t_min.assign(uz(n) + 1, 0);
  {
    std::vector<int> count(uz(sigma) + 1, 0);
    for (int i = 1; i <= n; ++i) out.freq[uz(i)] = ++count[uz(at(w, i))];
    int m = n + 1;
    for (Letter a = 1; a <= sigma; ++a) m = std::min(m, count[uz(a)]);
    out.t_min[0] = m;
    for (int i = 1; i <= n - 1; ++i) {
      m = std::min(m, --count[uz(at(w, i))]);
      out.t_min[uz(i)] = m;
    }
    if (n >= 1) out.t_min[uz(n)] = 0;
  }

  // last_prev and last_at_arch in one forward pass
  out.last_prev.assign(uz(n) + 1, n + 1);
  out.last_at_arch.assign(uz(n) + 1, n + 1);
  {
    std::vector<int> last(uz(sigma) + 1, n + 1);
    std::size_t g = 0;
    for (int i = 0; i <= n - 1; ++i) {
      while (g < out.groups.size() && out.groups[g].j < i + 1) ++g;
      if (g < out.groups.size() && out.groups[g].j == i + 1) {
        for (int e = out.groups[g].lo; e <= out.groups[g].hi; ++e)
          out.last_at_arch[uz(e)] = last[uz(at(w, e))];
      }
      out.last_prev[uz(i) + 1] = last[uz(at(w, i + 1))];
      last[uz(at(w, i + 1))] = i + 1;
    }
  }
  return out;
}

DeletionTables deletion_tables(const Word& w) {
  return deletion_tables(std::span<const Letter>(w.letters()), w.sigma());
}

}  // namespace kuniv
