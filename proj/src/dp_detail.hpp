#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

#include "kuniv/infinity.hpp"
#include "kuniv/min_suffix_list.hpp"
#include "kuniv/rmq.hpp"
#include "kuniv/scan_tables.hpp"
#include "kuniv/word.hpp"

namespace kuniv::detail {

// Column buffers are counted so tests can check that the linear-space paths
// never hold more than a handful of columns alive at once.
long peak_column_buffers();
void reset_column_buffer_stats();
void column_buffer_created();
void column_buffer_destroyed();

struct ColumnBuffer {
  std::vector<std::int64_t> v;

  explicit ColumnBuffer(std::size_t n) : v(n, 0) { column_buffer_created(); }
  ColumnBuffer(ColumnBuffer&& o) noexcept : v(std::move(o.v)) { column_buffer_created(); }
  ColumnBuffer(const ColumnBuffer&) = delete;
  ColumnBuffer& operator=(const ColumnBuffer&) = delete;
  ~ColumnBuffer() { column_buffer_destroyed(); }
};

// Trace policies. cell(pos, split) reports the chosen predecessor for one DP
// cell: for insertions/substitutions split is the end of the prefix handled
// by the previous column; for deletions it is the end position of the
// previous block. split < 0 marks an infeasible cell.

struct NoTrace {
  void column_start(int) {}
  void cell(int, int) {}
  void column_done(int) {}
};

// Full split matrix, sol[t][pos]; O(nk) memory, reference path for tests.
struct SolTrace {
  explicit SolTrace(int n) : n_(n) {}
  void column_start(int t) {
    if (static_cast<int>(sol.size()) <= t) sol.resize(static_cast<std::size_t>(t) + 1);
    sol[static_cast<std::size_t>(t)].assign(static_cast<std::size_t>(n_) + 1, -1);
    cur_ = t;
  }
  void cell(int pos, int split) { sol[static_cast<std::size_t>(cur_)][static_cast<std::size_t>(pos)] = split; }
  void column_done(int) {}

  std::vector<std::vector<std::int32_t>> sol;

 private:
  int n_;
  int cur_ = 0;
};

// Midpoint tracker: after the final column, result(pos) is the end of the
// prefix consumed by the first `half` blocks in one optimal solution.
struct HTrace {
  HTrace(int half, int n) : half_(half), h_prev_(static_cast<std::size_t>(n) + 1), h_cur_(static_cast<std::size_t>(n) + 1) {}

  void column_start(int t) {
    cur_ = t;
    if (t == half_) h_cur_.v[0] = 0;
    else if (t > half_) h_cur_.v[0] = h_prev_.v[0];
  }
  void cell(int pos, int split) {
    if (cur_ == half_) h_cur_.v[static_cast<std::size_t>(pos)] = pos;
    else if (cur_ > half_)
      h_cur_.v[static_cast<std::size_t>(pos)] = split >= 0 ? h_prev_.v[static_cast<std::size_t>(split)] : -1;
  }
  void column_done(int t) {
    if (t >= half_) std::swap(h_prev_.v, h_cur_.v);
  }
  long result(int pos) const { return h_prev_.v[static_cast<std::size_t>(pos)]; }

 private:
  int half_, cur_ = 0;
  ColumnBuffer h_prev_, h_cur_;
};

// ---------------------------------------------------------------------------
// Insertions: M[l][t] = min insertions making w[1:l] t-universal.
// Column t is derived from column t-1 in O(n) using phases of length sigma;
// each phase seeds a min-suffix list from the sampled last/d tables and then
// interleaves min / suffix-decrement / append steps.
// Returns the final column (index 0 holds M[0][k] = k*sigma).
// ---------------------------------------------------------------------------
template <class Trace>
ColumnBuffer insert_sweep(std::span<const Letter> w, int sigma, int k, Trace& tr) {
  const int n = static_cast<int>(w.size());
  const PrefixDistinct pd = prefix_distinct(w, sigma);
  const SampledLastD sld = sampled_last_d(w, sigma);

  ColumnBuffer prev(static_cast<std::size_t>(n) + 1), cur(static_cast<std::size_t>(n) + 1);
  tr.column_start(1);
  prev.v[0] = sigma;
  for (int ell = 1; ell <= n; ++ell) {
    prev.v[static_cast<std::size_t>(ell)] = sigma - pd.delta1[static_cast<std::size_t>(ell)];
    tr.cell(ell, 0);
  }
  tr.column_done(1);

  MinSuffixList msl;
  std::vector<std::int64_t> init_vals(static_cast<std::size_t>(sigma));
  std::vector<std::int32_t> init_pos(static_cast<std::size_t>(sigma), 0);
  std::vector<std::int32_t> init_letter(static_cast<std::size_t>(sigma), 0);
  std::vector<int> last_occ(static_cast<std::size_t>(sigma) + 1, 0);

  for (int t = 2; t <= k; ++t) {
    tr.column_start(t);
    cur.v[0] = static_cast<std::int64_t>(t) * sigma;
    std::fill(last_occ.begin(), last_occ.end(), 0);

    for (int j = 0; static_cast<std::int64_t>(j) * sigma + 1 <= n; ++j) {
      const int p = j * sigma + 1;
      std::fill(init_vals.begin(), init_vals.end(), kInf);
      for (Letter a = 1; a <= sigma; ++a) {
        int d = sld.d(j, a);
        if (d > 0) {
          int slot = sigma - d;  // 0-based
          int lastp = sld.last(j, a);
          init_vals[static_cast<std::size_t>(slot)] = inf_add(prev.v[static_cast<std::size_t>(lastp) - 1], slot);
          init_pos[static_cast<std::size_t>(slot)] = lastp;
          init_letter[static_cast<std::size_t>(slot)] = a;
        }
      }
      msl.reset(init_vals, init_pos, init_letter);

      for (int i = 1; i <= sigma; ++i) {
        const int ell = p + i - 1;
        if (ell > n) break;
        last_occ[static_cast<std::size_t>(w[static_cast<std::size_t>(ell) - 1])] = ell;

        auto q = msl.min();
        std::int64_t alt = inf_add(prev.v[static_cast<std::size_t>(ell)], sigma);
        if (q.value <= alt) {
          cur.v[static_cast<std::size_t>(ell)] = q.value;
          tr.cell(ell, q.value == kInf ? -1 : q.sat_pos - 1);
        } else {
          cur.v[static_cast<std::size_t>(ell)] = alt;
          tr.cell(ell, ell);
        }

        if (i < sigma && ell + 1 <= n) {
          Letter x = w[static_cast<std::size_t>(ell)];  // w[ell+1]
          int last = last_occ[static_cast<std::size_t>(x)];
          int cut;
          if (last == 0) cut = 0;
          else if (last <= p) cut = sigma - sld.d(j, x) + 1;
          else cut = sigma + (last - p);
          if (cut < msl.size()) msl.decrement_suffix(cut + 1);
          msl.append(inf_add(prev.v[static_cast<std::size_t>(ell)], sigma - 1), ell + 1, x);
        }
      }
    }
#ifndef NDEBUG
    for (int ell = 0; ell < n; ++ell)
      assert(cur.v[static_cast<std::size_t>(ell)] >= cur.v[static_cast<std::size_t>(ell) + 1]);
#endif
    tr.column_done(t);
    std::swap(prev.v, cur.v);
  }
  return prev;
}

// ---------------------------------------------------------------------------
// Substitutions, case iota(w) < k: M[l][t] = min substitutions making w[1:l]
// t-universal, blocks of length >= sigma. Same phase scheme; candidate
// positions are clipped to [(t-1)*sigma : l-sigma] plus the window edge
// l-sigma+1, whose cost comes from the sliding-window distinct counts.
// ---------------------------------------------------------------------------
template <class Trace>
ColumnBuffer subst_sweep(std::span<const Letter> w, int sigma, int k, Trace& tr) {
  const int n = static_cast<int>(w.size());
  const PrefixDistinct pd = prefix_distinct(w, sigma);
  const WindowDistinct wd = window_distinct(w, sigma);
  const SampledLastD sld = sampled_last_d(w, sigma);

  ColumnBuffer prev(static_cast<std::size_t>(n) + 1), cur(static_cast<std::size_t>(n) + 1);
  tr.column_start(1);
  prev.v[0] = kInf;
  for (int ell = 1; ell <= n; ++ell) {
    prev.v[static_cast<std::size_t>(ell)] = ell >= sigma ? sigma - pd.delta1[static_cast<std::size_t>(ell)] : kInf;
    tr.cell(ell, ell >= sigma ? 0 : -1);
  }
  tr.column_done(1);

  MinSuffixList msl;
  std::vector<std::int64_t> init_vals(static_cast<std::size_t>(sigma));
  std::vector<std::int32_t> init_pos(static_cast<std::size_t>(sigma), 0);
  std::vector<std::int32_t> init_letter(static_cast<std::size_t>(sigma), 0);
  std::vector<int> last_occ(static_cast<std::size_t>(sigma) + 1, 0);

  for (int t = 2; t <= k; ++t) {
    tr.column_start(t);
    cur.v[0] = kInf;
    std::fill(last_occ.begin(), last_occ.end(), 0);
    const int lo_bound = (t - 1) * sigma;  // < n because t <= n/sigma

    for (int j = 0; static_cast<std::int64_t>(j) * sigma + 1 <= n; ++j) {
      const int p = j * sigma + 1;
      const int c0 = p - sigma + 1;  // window-edge candidate for position p
      std::fill(init_vals.begin(), init_vals.end(), kInf);
      for (Letter a = 1; a <= sigma; ++a) {
        int lastp = sld.last(j, a);
        if (lastp <= n && lastp >= lo_bound && lastp < c0) {
          int slot = sigma - sld.d(j, a);  // 0-based; d >= 2 here
          init_vals[static_cast<std::size_t>(slot)] = inf_add(prev.v[static_cast<std::size_t>(lastp) - 1], slot);
          init_pos[static_cast<std::size_t>(slot)] = lastp;
          init_letter[static_cast<std::size_t>(slot)] = a;
        }
      }
      if (c0 >= 1) {
        init_vals[static_cast<std::size_t>(sigma) - 1] =
            inf_add(prev.v[static_cast<std::size_t>(c0) - 1], sigma - wd.delta[static_cast<std::size_t>(p)]);
        init_pos[static_cast<std::size_t>(sigma) - 1] = c0;
        init_letter[static_cast<std::size_t>(sigma) - 1] = w[static_cast<std::size_t>(c0) - 1];
      }
      msl.reset(init_vals, init_pos, init_letter);

      for (int i = 1; i <= sigma; ++i) {
        const int ell = p + i - 1;
        if (ell > n) break;
        last_occ[static_cast<std::size_t>(w[static_cast<std::size_t>(ell) - 1])] = ell;

        auto q = msl.min();
        cur.v[static_cast<std::size_t>(ell)] = q.value;
        tr.cell(ell, q.value == kInf ? -1 : q.sat_pos - 1);

        if (i < sigma && ell + 1 <= n) {
          Letter x = w[static_cast<std::size_t>(ell)];  // w[ell+1]
          int last = last_occ[static_cast<std::size_t>(x)];
          int cut;
          if (last == 0 || last < lo_bound) cut = 0;
          else if (last < c0) cut = sigma - sld.d(j, x) + 1;
          else if (last <= ell - sigma + 1) cut = sigma + (last - c0);
          else cut = msl.size();
          if (cut < msl.size()) msl.decrement_suffix(cut + 1);

          const int cnew = ell + 2 - sigma;  // window-edge candidate for ell+1
          if (cnew >= 1) {
            msl.append(inf_add(prev.v[static_cast<std::size_t>(cnew) - 1],
                               sigma - wd.delta[static_cast<std::size_t>(ell) + 1]),
                       cnew, w[static_cast<std::size_t>(cnew) - 1]);
          } else {
            msl.append(kInf, 0, 0);
          }
        }
      }
    }
    tr.column_done(t);
    std::swap(prev.v, cur.v);
  }
  return prev;
}

// ---------------------------------------------------------------------------
// Deletions: N[i][p] = min deletions turning w[1:i] into a weak-p-universal
// word without deleting w[i]. Auxiliary array M' and a range-minimum index
// over the previous column give O(n) per column.
// ---------------------------------------------------------------------------
template <class Trace>
ColumnBuffer delete_sweep(std::span<const Letter> w, int sigma, int k, const DeletionTables& dt,
                          const PrefixDistinct& pd, Trace& tr) {
  const int n = static_cast<int>(w.size());
  ColumnBuffer prev(static_cast<std::size_t>(n) + 1), cur(static_cast<std::size_t>(n) + 1);
  tr.column_start(1);
  prev.v[0] = kInf;
  for (int i = 1; i <= n; ++i) {
    bool universal = pd.delta1[static_cast<std::size_t>(i)] == sigma;
    prev.v[static_cast<std::size_t>(i)] = universal ? dt.freq[static_cast<std::size_t>(i)] - 1 : kInf;
    tr.cell(i, universal ? 0 : -1);
  }
  tr.column_done(1);
  if (k == 1) return prev;

  RmqIndex rmq;
  ColumnBuffer mp(static_cast<std::size_t>(n) + 1);
  std::vector<std::int32_t> sol_mp(static_cast<std::size_t>(n) + 1, -1);

  for (int p = 2; p <= k; ++p) {
    tr.column_start(p);
    rmq.rebuild(std::span<const std::int64_t>(prev.v.data() + 1, static_cast<std::size_t>(n)));
    cur.v[0] = kInf;
    const std::int64_t floor_len = static_cast<std::int64_t>(p - 1) * sigma;

    mp.v[0] = kInf;
    for (int i = 1; i <= n; ++i) {
      if (i < floor_len) {
        mp.v[static_cast<std::size_t>(i)] = kInf;
        sol_mp[static_cast<std::size_t>(i)] = -1;
        continue;
      }
      int l = dt.last_prev[static_cast<std::size_t>(i)];
      if (l == n + 1) {
        mp.v[static_cast<std::size_t>(i)] = kInf;
        sol_mp[static_cast<std::size_t>(i)] = -1;
        continue;
      }
      int r = rmq.query(l, i - 1);
      std::int64_t via_chain = mp.v[static_cast<std::size_t>(l)];
      std::int64_t via_prev = prev.v[static_cast<std::size_t>(r)];
      if (via_chain <= via_prev) {
        mp.v[static_cast<std::size_t>(i)] = inf_add(via_chain, 1);
        sol_mp[static_cast<std::size_t>(i)] = sol_mp[static_cast<std::size_t>(l)];
      } else {
        mp.v[static_cast<std::size_t>(i)] = inf_add(via_prev, 1);
        sol_mp[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(r);
      }
    }

    for (int i = 1; i <= n; ++i) {
      int j = dt.univ[static_cast<std::size_t>(i)];
      if (j == 0) {
        cur.v[static_cast<std::size_t>(i)] = kInf;
        tr.cell(i, -1);
        continue;
      }
      int t0 = dt.last_at_arch[static_cast<std::size_t>(i)];
      if (t0 == n + 1) {
        cur.v[static_cast<std::size_t>(i)] = kInf;
        tr.cell(i, -1);
        continue;
      }
      std::int64_t base = dt.freq[static_cast<std::size_t>(i)] - dt.freq[static_cast<std::size_t>(t0)] - 1;
      int r = rmq.query(t0, j - 1);
      std::int64_t via_chain = mp.v[static_cast<std::size_t>(t0)];
      std::int64_t via_prev = prev.v[static_cast<std::size_t>(r)];
      std::int64_t best;
      int split;
      if (via_chain <= via_prev) {
        best = via_chain;
        split = sol_mp[static_cast<std::size_t>(t0)];
      } else {
        best = via_prev;
        split = r;
      }
      cur.v[static_cast<std::size_t>(i)] = inf_add(best, base);
      tr.cell(i, best == kInf ? -1 : split);
    }
    tr.column_done(p);
    std::swap(prev.v, cur.v);
  }
  return prev;
}

}  // namespace kuniv::detail
