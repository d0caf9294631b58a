#include "kuniv/distances.hpp"

#include <stdexcept>

#include "dp_detail.hpp"
#include "kuniv/scan_tables.hpp"

namespace kuniv {

namespace {

std::int64_t min_letter_count(const Word& w) {
  std::vector<std::int64_t> count(static_cast<std::size_t>(w.sigma()) + 1, 0);
  for (Letter a : w.letters()) ++count[static_cast<std::size_t>(a)];
  std::int64_t m = kInf;
  for (int a = 1; a <= w.sigma(); ++a) m = std::min(m, count[static_cast<std::size_t>(a)]);
  return m;
}

// insertions needed to make w n-universal plus (k-n)*sigma for the rest
BigUint insert_distance_big(const Word& w, const BigUint& k) {
  const int n = w.n();
  const std::int64_t iota = universality_index(w);
  if (k <= BigUint(static_cast<std::uint64_t>(iota))) return BigUint(0);
  if (k <= BigUint(static_cast<std::uint64_t>(n))) {
    detail::NoTrace tr;
    auto col = detail::insert_sweep(std::span<const Letter>(w.letters()), w.sigma(),
                                    static_cast<int>(k.to_u64()), tr);
    return BigUint(static_cast<std::uint64_t>(col.v[static_cast<std::size_t>(n)]));
  }
  detail::NoTrace tr;
  auto col = detail::insert_sweep(std::span<const Letter>(w.letters()), w.sigma(), n, tr);
  BigUint tail = k - BigUint(static_cast<std::uint64_t>(n));
  tail *= static_cast<std::uint64_t>(w.sigma());
  return BigUint(static_cast<std::uint64_t>(col.v[static_cast<std::size_t>(n)])) + tail;
}

}  // namespace

const char* to_string(EditOp op) {
  switch (op) {
    case EditOp::Insert: return "insert";
    case EditOp::Delete: return "delete";
    case EditOp::Substitute: return "subst";
  }
  return "?";
}

BigUint insert_distance(const Word& w, const BigUint& k) {
  if (w.sigma() == 1) {
    BigUint nn(static_cast<std::uint64_t>(w.n()));
    return k <= nn ? BigUint(0) : k - nn;
  }
  return insert_distance_big(w, k);
}

std::int64_t insert_distance(const Word& w, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  BigUint r = insert_distance(w, BigUint(static_cast<std::uint64_t>(k)));
  return static_cast<std::int64_t>(r.to_u64());
}

std::int64_t delete_distance(const Word& w, std::int64_t k) {
  const std::int64_t iota = universality_index(w);
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (k > iota) throw InfeasibleError("target index exceeds current index; use insertions");
  if (k == iota) return 0;
  if (k == 0) return min_letter_count(w);
  if (w.sigma() == 1) return w.n() - k;  // iota = n for unary words

  std::span<const Letter> letters(w.letters());
  const DeletionTables dt = deletion_tables(letters, w.sigma());
  const PrefixDistinct pd = prefix_distinct(letters, w.sigma());
  detail::NoTrace tr;
  auto col = detail::delete_sweep(letters, w.sigma(), static_cast<int>(k), dt, pd, tr);
  std::int64_t best = kInf;
  for (int i = 1; i <= w.n(); ++i)
    best = std::min(best, inf_add(col.v[static_cast<std::size_t>(i)], dt.t_min[static_cast<std::size_t>(i)]));
  return best;
}

std::int64_t subst_distance(const Word& w, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const int n = w.n();
  const int sigma = w.sigma();
  if (k > n / sigma) throw InfeasibleError("infeasible: substitutions preserve length");
  const std::int64_t iota = universality_index(w);
  if (k == iota) return 0;
  if (sigma == 1)
    throw InfeasibleError("infeasible: unary alphabet admits no index-lowering substitutions");
  if (k < iota) return delete_distance(w, k);

  detail::NoTrace tr;
  auto col = detail::subst_sweep(std::span<const Letter>(w.letters()), sigma, static_cast<int>(k), tr);
  return col.v[static_cast<std::size_t>(n)];
}

BigUint binary_insert_distance(const Word& w, const BigUint& k) {
  if (w.sigma() != 2) throw std::invalid_argument("binary closed form needs sigma == 2");
  const std::uint64_t ell = static_cast<std::uint64_t>(universality_index(w));
  const std::uint64_t n = static_cast<std::uint64_t>(w.n());
  if (k <= BigUint(ell)) return BigUint(0);
  // Middle region ends where the spare letters run out: k - ell extra arches
  // can be completed by single insertions while k - ell <= n - 2*ell.
  if (k <= BigUint(n - ell)) return k - BigUint(ell);
  return k * 2 - BigUint(n);
}

DistanceResult distance(const Word& w, const BigUint& k, EditOp op, const DistanceOptions& opts) {
  DistanceResult r{op, k, BigUint(0)};
  switch (op) {
    case EditOp::Insert:
      if (w.sigma() == 2 && !opts.force_generic) r.cost = binary_insert_distance(w, k);
      else r.cost = insert_distance(w, k);
      break;
    case EditOp::Delete: {
      BigUint nn(static_cast<std::uint64_t>(w.n()));
      if (k > nn) throw InfeasibleError("target index exceeds current index; use insertions");
      r.cost = BigUint(static_cast<std::uint64_t>(delete_distance(w, static_cast<std::int64_t>(k.to_u64()))));
      break;
    }
    case EditOp::Substitute: {
      BigUint bound(static_cast<std::uint64_t>(w.n() / w.sigma()));
      if (k > bound) throw InfeasibleError("infeasible: substitutions preserve length");
      r.cost = BigUint(static_cast<std::uint64_t>(subst_distance(w, static_cast<std::int64_t>(k.to_u64()))));
      break;
    }
  }
  return r;
}

}  // namespace kuniv
