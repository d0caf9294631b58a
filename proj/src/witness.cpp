#include "kuniv/witness.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "dp_detail.hpp"
#include "kuniv/scan_tables.hpp"

namespace kuniv {

namespace detail {

namespace {
thread_local long t_live_columns = 0;
thread_local long t_peak_columns = 0;
}  // namespace

long peak_column_buffers() { return t_peak_columns; }
void reset_column_buffer_stats() { t_peak_columns = t_live_columns; }
void column_buffer_created() {
  if (++t_live_columns > t_peak_columns) t_peak_columns = t_live_columns;
}
void column_buffer_destroyed() { --t_live_columns; }

}  // namespace detail

namespace {

using detail::HTrace;
using detail::NoTrace;
using detail::SolTrace;

std::vector<Letter> least_frequent_removed(std::span<const Letter> rest, int sigma,
                                           std::int64_t* removed) {
  std::vector<std::int64_t> count(static_cast<std::size_t>(sigma) + 1, 0);
  for (Letter a : rest) ++count[static_cast<std::size_t>(a)];
  Letter victim = 1;
  for (Letter a = 2; a <= sigma; ++a)
    if (count[static_cast<std::size_t>(a)] < count[static_cast<std::size_t>(victim)]) victim = a;
  std::vector<Letter> out;
  out.reserve(rest.size());
  for (Letter a : rest)
    if (a != victim) out.push_back(a);
  if (removed) *removed = count[static_cast<std::size_t>(victim)];
  return out;
}

// ---- boundary reconstruction, full-matrix reference ----

std::vector<int> chain_from_sol(const SolTrace& tr, int k, int last) {
  std::vector<int> bounds(static_cast<std::size_t>(k) + 1, 0);
  bounds[static_cast<std::size_t>(k)] = last;
  for (int t = k; t >= 2; --t) {
    int split = tr.sol[static_cast<std::size_t>(t)][static_cast<std::size_t>(bounds[static_cast<std::size_t>(t)])];
    if (split < 0) throw std::logic_error("infeasible cell on traceback path");
    bounds[static_cast<std::size_t>(t) - 1] = split;
  }
  bounds[0] = 0;
  return bounds;
}

// ---- Hirschberg recursions ----

// insert/subst: blocks partition the span; appends i_1..i_k (absolute).
void rec_partition(std::span<const Letter> w, int sigma, int k, EditOp op, int offset,
                   std::vector<int>& out) {
  const int n = static_cast<int>(w.size());
  if (k == 0) return;
  if (n == 0) {
    for (int t = 0; t < k; ++t) out.push_back(offset);
    return;
  }
  if (k == 1) {
    out.push_back(offset + n);
    return;
  }
  const int half = k / 2;
  long mid;
  {
    HTrace tr(half, n);
    auto col = op == EditOp::Insert ? detail::insert_sweep(w, sigma, k, tr)
                                    : detail::subst_sweep(w, sigma, k, tr);
    if (col.v[static_cast<std::size_t>(n)] == kInf) throw std::logic_error("infeasible subproblem");
    mid = tr.result(n);
  }
  rec_partition(w.subspan(0, static_cast<std::size_t>(mid)), sigma, half, op, offset, out);
  rec_partition(w.subspan(static_cast<std::size_t>(mid)), sigma, k - half, op,
                offset + static_cast<int>(mid), out);
}

// delete: blocks partition the span with the last block ending exactly at its
// right edge.
void rec_delete(std::span<const Letter> w, int sigma, int p, int offset, std::vector<int>& out) {
  const int n = static_cast<int>(w.size());
  if (p == 1) {
    out.push_back(offset + n);
    return;
  }
  const int half = p / 2;
  long mid;
  {
    const DeletionTables dt = deletion_tables(w, sigma);
    const PrefixDistinct pd = prefix_distinct(w, sigma);
    HTrace tr(half, n);
    auto col = detail::delete_sweep(w, sigma, p, dt, pd, tr);
    if (col.v[static_cast<std::size_t>(n)] == kInf) throw std::logic_error("infeasible subproblem");
    mid = tr.result(n);
  }
  rec_delete(w.subspan(0, static_cast<std::size_t>(mid)), sigma, half, offset, out);
  rec_delete(w.subspan(static_cast<std::size_t>(mid)), sigma, p - half, offset + static_cast<int>(mid), out);
}

BoundarySolution unary_boundaries(const Word& w, std::int64_t k, EditOp op) {
  // iota = n and k <= n here, so blocks are single letters
  BoundarySolution b{op, k, {0}, 0};
  const int n = w.n();
  switch (op) {
    case EditOp::Insert:
      for (std::int64_t j = 1; j < k; ++j) b.boundaries.push_back(static_cast<int>(j));
      if (k >= 1) b.boundaries.push_back(n);
      break;
    case EditOp::Delete:
      for (std::int64_t j = 1; j <= k; ++j) b.boundaries.push_back(static_cast<int>(j));
      b.cost = n - k;
      break;
    case EditOp::Substitute:
      for (std::int64_t j = 1; j <= k; ++j) b.boundaries.push_back(static_cast<int>(j));
      break;
  }
  return b;
}

std::int64_t delete_final_column_argmin(const Word& w, std::int64_t k, std::int64_t* best_out) {
  std::span<const Letter> letters(w.letters());
  const DeletionTables dt = deletion_tables(letters, w.sigma());
  const PrefixDistinct pd = prefix_distinct(letters, w.sigma());
  NoTrace tr;
  auto col = detail::delete_sweep(letters, w.sigma(), static_cast<int>(k), dt, pd, tr);
  std::int64_t best = kInf;
  int best_i = -1;
  for (int i = 1; i <= w.n(); ++i) {
    std::int64_t v = inf_add(col.v[static_cast<std::size_t>(i)], dt.t_min[static_cast<std::size_t>(i)]);
    if (v < best) {
      best = v;
      best_i = i;
    }
  }
  if (best_i < 0) throw std::logic_error("no feasible deletion target");
  if (best_out) *best_out = best;
  return best_i;
}

std::int64_t checked_k(const Word& w, std::int64_t k, EditOp op) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const std::int64_t iota = universality_index(w);
  if (op == EditOp::Delete && k > iota)
    throw InfeasibleError("target index exceeds current index; use insertions");
  if (op == EditOp::Substitute && k > w.n() / w.sigma())
    throw InfeasibleError("infeasible: substitutions preserve length");
  if (op == EditOp::Substitute && w.sigma() == 1 && k < iota)
    throw InfeasibleError("infeasible: unary alphabet admits no index-lowering substitutions");
  if (op == EditOp::Insert && k > w.n())
    throw std::invalid_argument("boundary reconstruction needs k <= n; stream instead");
  return iota;
}

}  // namespace

BoundarySolution hirschberg_boundaries(const Word& w, std::int64_t k, EditOp op) {
  checked_k(w, k, op);
  if (w.sigma() == 1) return unary_boundaries(w, k, op);
  std::span<const Letter> letters(w.letters());
  BoundarySolution b{op, k, {0}, 0};
  if (op == EditOp::Delete) {
    if (k == 0) {
      std::int64_t removed = 0;
      least_frequent_removed(letters, w.sigma(), &removed);
      b.cost = removed;
      return b;
    }
    std::int64_t cost = 0;
    int mstar = static_cast<int>(delete_final_column_argmin(w, k, &cost));
    b.cost = cost;
    rec_delete(letters.subspan(0, static_cast<std::size_t>(mstar)), w.sigma(), static_cast<int>(k), 0,
               b.boundaries);
    return b;
  }
  if (op == EditOp::Substitute && k < universality_index(w)) {
    // index decrease delegates to deletions; same boundaries
    BoundarySolution d = hirschberg_boundaries(w, k, EditOp::Delete);
    d.op = EditOp::Substitute;
    return d;
  }
  b.cost = op == EditOp::Insert ? insert_distance(w, k) : subst_distance(w, k);
  rec_partition(letters, w.sigma(), static_cast<int>(k), op, 0, b.boundaries);
  return b;
}

BoundarySolution full_matrix_boundaries(const Word& w, std::int64_t k, EditOp op) {
  checked_k(w, k, op);
  if (w.sigma() == 1) return unary_boundaries(w, k, op);
  std::span<const Letter> letters(w.letters());
  const int n = w.n();
  BoundarySolution b{op, k, {0}, 0};
  switch (op) {
    case EditOp::Insert: {
      if (k == 0) return b;
      SolTrace tr(n);
      auto col = detail::insert_sweep(letters, w.sigma(), static_cast<int>(k), tr);
      b.cost = col.v[static_cast<std::size_t>(n)];
      b.boundaries = chain_from_sol(tr, static_cast<int>(k), n);
      return b;
    }
    case EditOp::Substitute: {
      if (k < universality_index(w)) {
        BoundarySolution d = full_matrix_boundaries(w, k, EditOp::Delete);
        d.op = EditOp::Substitute;
        return d;
      }
      if (k == 0) return b;
      SolTrace tr(n);
      auto col = detail::subst_sweep(letters, w.sigma(), static_cast<int>(k), tr);
      b.cost = col.v[static_cast<std::size_t>(n)];
      b.boundaries = chain_from_sol(tr, static_cast<int>(k), n);
      return b;
    }
    case EditOp::Delete: {
      if (k == 0) {
        std::int64_t removed = 0;
        least_frequent_removed(letters, w.sigma(), &removed);
        b.cost = removed;
        return b;
      }
      const DeletionTables dt = deletion_tables(letters, w.sigma());
      const PrefixDistinct pd = prefix_distinct(letters, w.sigma());
      SolTrace tr(n);
      auto col = detail::delete_sweep(letters, w.sigma(), static_cast<int>(k), dt, pd, tr);
      std::int64_t best = kInf;
      int mstar = -1;
      for (int i = 1; i <= n; ++i) {
        std::int64_t v = inf_add(col.v[static_cast<std::size_t>(i)], dt.t_min[static_cast<std::size_t>(i)]);
        if (v < best) {
          best = v;
          mstar = i;
        }
      }
      if (mstar < 0) throw std::logic_error("no feasible deletion target");
      b.cost = best;
      b.boundaries = chain_from_sol(tr, static_cast<int>(k), mstar);
      return b;
    }
  }
  return b;
}

namespace {

// insert: make every block universal by appending its missing letters in
// ascending order.
std::vector<Letter> build_insert_witness(std::span<const Letter> w, int sigma,
                                         const std::vector<int>& bounds) {
  std::vector<Letter> out;
  out.reserve(w.size());
  std::vector<char> seen(static_cast<std::size_t>(sigma) + 1, 0);
  for (std::size_t b = 1; b < bounds.size(); ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int pos = bounds[b - 1] + 1; pos <= bounds[b]; ++pos) {
      Letter a = w[static_cast<std::size_t>(pos) - 1];
      seen[static_cast<std::size_t>(a)] = 1;
      out.push_back(a);
    }
    for (Letter a = 1; a <= sigma; ++a)
      if (!seen[static_cast<std::size_t>(a)]) out.push_back(a);
  }
  return out;
}

// delete: inside each block keep only the final occurrence of its last letter.
std::vector<Letter> build_delete_witness(std::span<const Letter> w, int sigma,
                                         const std::vector<int>& bounds, std::int64_t* cost) {
  std::vector<Letter> out;
  out.reserve(w.size());
  std::int64_t deleted = 0;
  for (std::size_t b = 1; b < bounds.size(); ++b) {
    Letter closer = w[static_cast<std::size_t>(bounds[b]) - 1];
    for (int pos = bounds[b - 1] + 1; pos <= bounds[b]; ++pos) {
      Letter a = w[static_cast<std::size_t>(pos) - 1];
      if (a == closer && pos != bounds[b]) {
        ++deleted;
        continue;
      }
      out.push_back(a);
    }
  }
  std::int64_t removed = 0;
  auto rest = least_frequent_removed(w.subspan(static_cast<std::size_t>(bounds.back())), sigma, &removed);
  deleted += removed;
  out.insert(out.end(), rest.begin(), rest.end());
  if (cost) *cost = deleted;
  return out;
}

// subst, index increase: replace the leftmost redundant positions of each
// block by its missing letters in ascending order.
std::vector<Letter> build_subst_witness(std::span<const Letter> w, int sigma,
                                        const std::vector<int>& bounds, std::int64_t* cost) {
  std::vector<Letter> out(w.begin(), w.end());
  std::vector<std::int64_t> count(static_cast<std::size_t>(sigma) + 1, 0);
  std::int64_t changed = 0;
  for (std::size_t b = 1; b < bounds.size(); ++b) {
    std::fill(count.begin(), count.end(), 0);
    for (int pos = bounds[b - 1] + 1; pos <= bounds[b]; ++pos)
      ++count[static_cast<std::size_t>(w[static_cast<std::size_t>(pos) - 1])];
    std::vector<Letter> missing;
    for (Letter a = 1; a <= sigma; ++a)
      if (count[static_cast<std::size_t>(a)] == 0) missing.push_back(a);
    std::size_t next = 0;
    for (int pos = bounds[b - 1] + 1; pos <= bounds[b] && next < missing.size(); ++pos) {
      Letter a = w[static_cast<std::size_t>(pos) - 1];
      if (count[static_cast<std::size_t>(a)] > 1) {
        --count[static_cast<std::size_t>(a)];
        out[static_cast<std::size_t>(pos) - 1] = missing[next++];
        ++changed;
      }
    }
    if (next < missing.size()) throw std::logic_error("block too short for substitutions");
  }
  if (cost) *cost = changed;
  return out;
}

}  // namespace

WitnessResult insert_witness(const Word& w, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const std::int64_t iota = universality_index(w);
  if (k <= iota) return {0, w.letters()};
  if (w.sigma() == 1) {
    std::vector<Letter> out = w.letters();
    out.insert(out.end(), static_cast<std::size_t>(k - w.n()), 1);
    return {k - w.n(), std::move(out)};
  }
  const int n = w.n();
  std::int64_t kk = std::min<std::int64_t>(k, n);
  BoundarySolution b = hirschberg_boundaries(w, kk, EditOp::Insert);
  auto out = build_insert_witness(std::span<const Letter>(w.letters()), w.sigma(), b.boundaries);
  std::int64_t cost = b.cost;
  if (k > n) {
    if (k - n > (std::int64_t{1} << 31) / w.sigma())
      throw std::invalid_argument("witness too large to materialize; stream instead");
    for (std::int64_t block = n; block < k; ++block)
      for (Letter a = 1; a <= w.sigma(); ++a) out.push_back(a);
    cost += (k - n) * w.sigma();
  }
  return {cost, std::move(out)};
}

WitnessResult delete_witness(const Word& w, std::int64_t k) {
  std::int64_t iota = checked_k(w, k, EditOp::Delete);
  if (k == iota) return {0, w.letters()};
  if (k == 0) {
    std::int64_t removed = 0;
    auto out = least_frequent_removed(std::span<const Letter>(w.letters()), w.sigma(), &removed);
    return {removed, std::move(out)};
  }
  if (w.sigma() == 1) {
    std::vector<Letter> out(w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(k));
    return {w.n() - k, std::move(out)};
  }
  BoundarySolution b = hirschberg_boundaries(w, k, EditOp::Delete);
  std::int64_t cost = 0;
  auto out = build_delete_witness(std::span<const Letter>(w.letters()), w.sigma(), b.boundaries, &cost);
  assert(cost == b.cost);
  return {cost, std::move(out)};
}

WitnessResult subst_witness(const Word& w, std::int64_t k) {
  std::int64_t iota = checked_k(w, k, EditOp::Substitute);
  if (k == iota) return {0, w.letters()};
  if (k > iota) {
    BoundarySolution b = hirschberg_boundaries(w, k, EditOp::Substitute);
    std::int64_t cost = 0;
    auto out = build_subst_witness(std::span<const Letter>(w.letters()), w.sigma(), b.boundaries, &cost);
    assert(cost == b.cost);
    return {cost, std::move(out)};
  }
  // k < iota: delete an optimal set of positions, then substitute each of
  // them instead with a letter avoiding the enclosing block's closing letter
  // (or the rest's removed letter).
  BoundarySolution b = hirschberg_boundaries(w, k, EditOp::Delete);
  std::vector<Letter> out = w.letters();
  std::int64_t changed = 0;
  auto replacement = [&](Letter avoid) -> Letter { return avoid == 1 ? 2 : 1; };
  for (std::size_t blk = 1; blk < b.boundaries.size(); ++blk) {
    Letter closer = w.at(b.boundaries[blk]);
    for (int pos = b.boundaries[blk - 1] + 1; pos <= b.boundaries[blk]; ++pos) {
      if (w.at(pos) == closer && pos != b.boundaries[blk]) {
        out[static_cast<std::size_t>(pos) - 1] = replacement(closer);
        ++changed;
      }
    }
  }
  {
    std::span<const Letter> rest(w.letters().data() + b.boundaries.back(),
                                 static_cast<std::size_t>(w.n() - b.boundaries.back()));
    std::vector<std::int64_t> count(static_cast<std::size_t>(w.sigma()) + 1, 0);
    for (Letter a : rest) ++count[static_cast<std::size_t>(a)];
    Letter victim = 1;
    for (Letter a = 2; a <= w.sigma(); ++a)
      if (count[static_cast<std::size_t>(a)] < count[static_cast<std::size_t>(victim)]) victim = a;
    for (int pos = b.boundaries.back() + 1; pos <= w.n(); ++pos) {
      if (w.at(pos) == victim) {
        out[static_cast<std::size_t>(pos) - 1] = replacement(victim);
        ++changed;
      }
    }
  }
  assert(changed == b.cost);
  return {changed, std::move(out)};
}

void insert_witness_stream(const Word& w, const BigUint& k,
                           const std::function<void(std::span<const Letter>)>& sink) {
  BigUint nn(static_cast<std::uint64_t>(w.n()));
  if (k <= nn) {
    auto res = insert_witness(w, static_cast<std::int64_t>(k.to_u64()));
    sink(res.word);
    return;
  }
  auto head = insert_witness(w, w.n());
  sink(head.word);
  std::vector<Letter> block(static_cast<std::size_t>(w.sigma()));
  for (Letter a = 1; a <= w.sigma(); ++a) block[static_cast<std::size_t>(a) - 1] = a;
  for (BigUint left = k - nn; !left.is_zero(); left -= BigUint(1)) sink(block);
}

bool is_subsequence(std::span<const Letter> needle, std::span<const Letter> hay) {
  std::size_t i = 0;
  for (Letter a : hay) {
    if (i < needle.size() && needle[i] == a) ++i;
  }
  return i == needle.size();
}

VerifyReport verify_witness(const Word& w, const BigUint& k, EditOp op,
                            std::span<const Letter> witness) {
  VerifyReport rep;
  for (Letter a : witness) {
    if (a < 1 || a > w.sigma()) {
      rep.reason = "witness uses a letter outside the word's alphabet";
      return rep;
    }
  }
  std::span<const Letter> source(w.letters());
  const std::int64_t wit_iota = universality_index(witness, w.sigma());
  const std::int64_t iota = universality_index(w);

  switch (op) {
    case EditOp::Insert:
      if (witness.size() < source.size() || !is_subsequence(source, witness)) {
        rep.reason = "witness is not a supersequence of the word";
        return rep;
      }
      rep.edit_count = BigUint(static_cast<std::uint64_t>(witness.size() - source.size()));
      if (BigUint(static_cast<std::uint64_t>(wit_iota)) < k) {
        rep.reason = "witness is not k-universal";
        return rep;
      }
      break;
    case EditOp::Delete:
      if (witness.size() > source.size() || !is_subsequence(witness, source)) {
        rep.reason = "witness is not a subsequence of the word";
        return rep;
      }
      rep.edit_count = BigUint(static_cast<std::uint64_t>(source.size() - witness.size()));
      if (BigUint(static_cast<std::uint64_t>(wit_iota)) != k) {
        rep.reason = "witness universality index differs from k";
        return rep;
      }
      break;
    case EditOp::Substitute: {
      if (witness.size() != source.size()) {
        rep.reason = "witness length differs from the word";
        return rep;
      }
      std::uint64_t hamming = 0;
      for (std::size_t i = 0; i < source.size(); ++i)
        if (source[i] != witness[i]) ++hamming;
      rep.edit_count = BigUint(hamming);
      bool exact = k < BigUint(static_cast<std::uint64_t>(iota));
      if (exact ? BigUint(static_cast<std::uint64_t>(wit_iota)) != k
                : BigUint(static_cast<std::uint64_t>(wit_iota)) < k) {
        rep.reason = exact ? "witness universality index differs from k" : "witness is not k-universal";
        return rep;
      }
      break;
    }
  }
  DistanceResult d = distance(w, k, op);
  if (rep.edit_count != d.cost) {
    rep.reason = "witness edit count " + rep.edit_count.to_string() + " is not minimal (distance " +
                 d.cost.to_string() + ")";
    return rep;
  }
  rep.ok = true;
  return rep;
}

}  // namespace kuniv
