// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "helpers.hpp"
#include "kuniv/distances.hpp"
#include "kuniv/oracle.hpp"
#include "kuniv/scan_tables.hpp"
#include "kuniv/witness.hpp"

using namespace kuniv;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int number, const char* name, bool ok, const std::string& detail = "") {
  std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// 1. golden toolbox tables on w = "bacacabac"
// ---------------------------------------------------------------------------
void criterion1() {
  auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream why;
  Word w = testutil::make_word("bacacabac");

  auto pd = prefix_distinct(w);
  ok &= std::vector<int>(pd.delta1.begin() + 1, pd.delta1.end()) ==
        std::vector<int>{1, 2, 3, 3, 3, 3, 3, 3, 3};

  auto wd = window_distinct(w);
  ok &= std::vector<int>(wd.delta.begin() + 3, wd.delta.end()) ==
        std::vector<int>{3, 2, 2, 2, 3, 2, 3};

  auto sld = sampled_last_d(w);
  ok &= sld.samples() == 3;
  int want_last4[] = {4, 1, 3}, want_d4[] = {1, 3, 2};
  int want_last7[] = {6, 7, 5}, want_d7[] = {2, 1, 3};
  for (Letter a = 1; a <= 3; ++a) {
    ok &= sld.last(1, a) == want_last4[a - 1] && sld.d(1, a) == want_d4[a - 1];
    ok &= sld.last(2, a) == want_last7[a - 1] && sld.d(2, a) == want_d7[a - 1];
  }

  auto dt = deletion_tables(w);
  ok &= std::vector<int>(dt.univ.begin() + 1, dt.univ.end()) ==
        std::vector<int>{0, 0, 1, 1, 1, 1, 5, 5, 7};
  ok &= dt.v_set == std::vector<int>{0, 1, 5, 7};
  ok &= dt.groups.size() == 4 && dt.groups[1].j == 1 && dt.groups[1].lo == 3 &&
        dt.groups[1].hi == 6 && dt.groups[2].j == 5 && dt.groups[2].lo == 7 &&
        dt.groups[2].hi == 8 && dt.groups[3].j == 7 && dt.groups[3].lo == 9 &&
        dt.groups[3].hi == 9;
  ok &= std::vector<int>(dt.freq.begin() + 1, dt.freq.end()) ==
        std::vector<int>{1, 1, 1, 2, 2, 3, 2, 4, 3};
  ok &= dt.t_min == std::vector<int>{2, 1, 1, 1, 1, 1, 1, 0, 0, 0};
  ok &= std::vector<int>(dt.last_prev.begin() + 1, dt.last_prev.end()) ==
        std::vector<int>{10, 10, 10, 2, 3, 4, 1, 6, 5};
  int want_laa[] = {10, 10, 10, 10, 1, 4, 5};  // positions 3..9
  for (int i = 3; i <= 9; ++i) ok &= dt.last_at_arch[static_cast<std::size_t>(i)] == want_laa[i - 3];

  double el = seconds_since(t0);
  ok &= el < 1.0;
  why << "elapsed " << el << "s";
  report(1, "golden toolbox tables", ok, why.str());
}

// ---------------------------------------------------------------------------
// 2. remark values on "aabb"
// ---------------------------------------------------------------------------
void criterion2() {
  Word w = testutil::make_word("aabb");
  bool ok = insert_distance(w, std::int64_t{2}) == 1 && subst_distance(w, 2) == 2;
  report(2, "one insertion / two substitutions on aabb", ok);
}

// ---------------------------------------------------------------------------
// 3. exhaustive fast-vs-oracle sweep
// ---------------------------------------------------------------------------
void criterion3() {
  auto t0 = Clock::now();
  auto s2 = oracle::exhaustive_check(9, 2, 4, &std::cerr);
  auto s3 = oracle::exhaustive_check(8, 3, 4, &std::cerr);
  double el = seconds_since(t0);
  std::ostringstream why;
  why << s2.words + s3.words << " words, " << s2.checks + s3.checks << " checks, "
      << s2.bfs_checks + s3.bfs_checks << " search cross-checks, "
      << s2.mismatches + s3.mismatches << " mismatches, elapsed " << el << "s";
  report(3, "exhaustive oracle equivalence", s2.mismatches + s3.mismatches == 0 && el < 600.0,
         why.str());
}

// ---------------------------------------------------------------------------
// 4. binary closed form vs generic insertion DP
// ---------------------------------------------------------------------------
void criterion4() {
  std::mt19937_64 rng(424242);
  long mismatches = 0;
  for (int round = 0; round < 1000; ++round) {
    int n = std::uniform_int_distribution<int>(2, 200)(rng);
    Word w = testutil::random_word(rng, n, 2);
    for (std::int64_t k = 0; k <= n + 5; ++k) {
      BigUint fast = binary_insert_distance(w, BigUint(static_cast<std::uint64_t>(k)));
      BigUint generic = insert_distance(w, BigUint(static_cast<std::uint64_t>(k)));
      if (fast != generic) {
        if (++mismatches <= 5)
          std::cerr << "binary mismatch n=" << n << " k=" << k << " fast=" << fast.to_string()
                    << " generic=" << generic.to_string() << " w="
                    << testutil::to_text(w.letters()) << '\n';
      }
    }
  }
  std::ostringstream why;
  why << mismatches << " mismatches over 1000 words";
  report(4, "binary insertion closed form", mismatches == 0, why.str());
}

// ---------------------------------------------------------------------------
// 5. witness suite
// ---------------------------------------------------------------------------
void criterion5() {
  long failures = 0;
  long checked = 0;

  auto check_witness = [&](const Word& w, std::int64_t k, EditOp op) {
    WitnessResult res;
    switch (op) {
      case EditOp::Insert: res = insert_witness(w, k); break;
      case EditOp::Delete: res = delete_witness(w, k); break;
      case EditOp::Substitute: res = subst_witness(w, k); break;
    }
    ++checked;
    auto rep = verify_witness(w, BigUint(static_cast<std::uint64_t>(k)), op, res.word);
    bool cost_ok = rep.edit_count == BigUint(static_cast<std::uint64_t>(res.cost));
    if (!rep.ok || !cost_ok) {
      if (++failures <= 5)
        std::cerr << "witness failure op=" << to_string(op) << " k=" << k << " w="
                  << testutil::to_text(w.letters()) << " reason=" << rep.reason << '\n';
    }
  };

  // exhaustive sweep of criterion 3's word universe
  for (int sigma : {2, 3}) {
    int max_n = sigma == 2 ? 9 : 8;
    std::vector<Letter> word;
    auto rec = [&](auto&& self, Letter high) -> void {
      if (!word.empty() && high == sigma) {
        Word w = Word::from_letters(word, sigma);
        std::int64_t iota = universality_index(w);
        for (std::int64_t k = 0; k <= w.n() + 2; ++k) check_witness(w, k, EditOp::Insert);
        for (std::int64_t k = 0; k <= iota; ++k) check_witness(w, k, EditOp::Delete);
        for (std::int64_t k = 0; k <= w.n() / sigma; ++k) check_witness(w, k, EditOp::Substitute);
      }
      if (static_cast<int>(word.size()) == max_n) return;
      Letter limit = std::min<Letter>(static_cast<Letter>(high + 1), static_cast<Letter>(sigma));
      for (Letter a = 1; a <= limit; ++a) {
        word.push_back(a);
        self(self, std::max(high, a));
        word.pop_back();
      }
    };
    rec(rec, 0);
  }

  // 1000 random instances
  std::mt19937_64 rng(52525);
  for (int round = 0; round < 1000; ++round) {
    int sigma = std::uniform_int_distribution<int>(2, 8)(rng);
    int n = std::uniform_int_distribution<int>(sigma, 300)(rng);
    Word w = testutil::random_word(rng, n, sigma);
    std::int64_t iota = universality_index(w);
    check_witness(w, std::uniform_int_distribution<std::int64_t>(0, n + 3)(rng), EditOp::Insert);
    check_witness(w, std::uniform_int_distribution<std::int64_t>(0, iota)(rng), EditOp::Delete);
    check_witness(w, std::uniform_int_distribution<std::int64_t>(0, n / sigma)(rng),
                  EditOp::Substitute);
  }

  // Hirschberg vs full-matrix reconstruction on 200 random instances
  long rec_mismatch = 0;
  for (int round = 0; round < 200; ++round) {
    int sigma = std::uniform_int_distribution<int>(2, 8)(rng);
    int n = std::uniform_int_distribution<int>(sigma, 150)(rng);
    Word w = testutil::random_word(rng, n, sigma);
    std::int64_t iota = universality_index(w);
    std::int64_t k_ins = std::uniform_int_distribution<std::int64_t>(1, n)(rng);
    if (hirschberg_boundaries(w, k_ins, EditOp::Insert).cost !=
        full_matrix_boundaries(w, k_ins, EditOp::Insert).cost)
      ++rec_mismatch;
    std::int64_t k_del = std::uniform_int_distribution<std::int64_t>(0, iota)(rng);
    if (hirschberg_boundaries(w, k_del, EditOp::Delete).cost !=
        full_matrix_boundaries(w, k_del, EditOp::Delete).cost)
      ++rec_mismatch;
    std::int64_t k_sub = std::uniform_int_distribution<std::int64_t>(0, n / sigma)(rng);
    if (hirschberg_boundaries(w, k_sub, EditOp::Substitute).cost !=
        full_matrix_boundaries(w, k_sub, EditOp::Substitute).cost)
      ++rec_mismatch;
  }

  std::ostringstream why;
  why << checked << " witnesses, " << failures << " failures, " << rec_mismatch
      << " reconstruction mismatches";
  report(5, "witness validity and optimality", failures == 0 && rec_mismatch == 0, why.str());
}

// ---------------------------------------------------------------------------
// 6. structure stress (min-suffix list, rmq, interval union-find)
// ---------------------------------------------------------------------------
void criterion6();

// ---------------------------------------------------------------------------
// 7. complexity sanity
// ---------------------------------------------------------------------------
double time_distance(const Word& w, std::int64_t k, EditOp op) {
  auto once = [&] {
    switch (op) {
      case EditOp::Insert: (void)insert_distance(w, k); break;
      case EditOp::Delete: (void)delete_distance(w, k); break;
      case EditOp::Substitute: (void)subst_distance(w, k); break;
    }
  };
  once();  // warmup
  // best of three averages, each accumulated long enough to be stable
  double best = 1e30;
  for (int rep = 0; rep < 3; ++rep) {
    long iters = 0;
    auto t0 = Clock::now();
    double elapsed = 0;
    do {
      once();
      ++iters;
      elapsed = seconds_since(t0);
    } while (elapsed < 0.25 && iters < 200000);
    best = std::min(best, elapsed / static_cast<double>(iters));
  }
  return best;
}

void criterion7() {
  std::mt19937_64 rng(777);
  Word w1 = testutil::random_word(rng, 100000, 26);
  Word w2 = testutil::random_word(rng, 200000, 26);
  bool ok = true;
  std::ostringstream why;
  for (EditOp op : {EditOp::Insert, EditOp::Delete, EditOp::Substitute}) {
    double a = time_distance(w1, 50, op);
    double b = time_distance(w2, 50, op);
    double ratio = b / a;
    why << to_string(op) << " 1e5:" << a << "s 2e5:" << b << "s ratio " << ratio << "; ";
    ok &= ratio <= 3.0;
  }
  Word big = testutil::random_word(rng, 1000000, 26);
  for (EditOp op : {EditOp::Insert, EditOp::Delete, EditOp::Substitute}) {
    auto t0 = Clock::now();
    switch (op) {
      case EditOp::Insert: (void)insert_distance(big, std::int64_t{100}); break;
      case EditOp::Delete: (void)delete_distance(big, 100); break;
      case EditOp::Substitute: (void)subst_distance(big, 100); break;
    }
    double el = seconds_since(t0);
    why << to_string(op) << " 1e6/k=100: " << el << "s; ";
    ok &= el < 60.0;
  }
  report(7, "linear scaling and large-input budget", ok, why.str());
}

// ---------------------------------------------------------------------------
// 8. huge-k insertion with exact arithmetic
// ---------------------------------------------------------------------------
void criterion8() {
  Word w = testutil::make_word("ab");
  BigUint k = BigUint::from_string("1000000000000000000");
  BigUint cost = insert_distance(w, k);
  BigUint expect = BigUint(static_cast<std::uint64_t>(insert_distance(w, std::int64_t{2}))) +
                   (k - BigUint(2)) * 2;
  bool ok = cost == expect;
  std::string s = cost.to_string();
  ok &= BigUint::from_string(s) == cost;  // decimal string round-trips
  ok &= distance(w, k, EditOp::Insert).cost == expect;
  report(8, "huge-k insertion, exact arithmetic", ok, "cost " + s);
}

}  // namespace

#include "kuniv/min_suffix_list.hpp"
#include "kuniv/rmq.hpp"
#include "kuniv/interval_union_find.hpp"

namespace {

void criterion6() {
  std::mt19937_64 rng(6666);
  long mismatches = 0;

  // min-suffix list vs naive mirror
  MinSuffixList fast;
  for (int round = 0; round < 1000; ++round) {
    int sigma = std::uniform_int_distribution<int>(1, 50)(rng);
    std::vector<std::int64_t> init(static_cast<std::size_t>(sigma));
    for (auto& v : init) v = std::uniform_int_distribution<std::int64_t>(0, 100)(rng);
    std::vector<std::int32_t> sat(static_cast<std::size_t>(sigma), 0);
    fast.reset(init, sat, sat);
    oracle::NaiveMinSuffixList slow(init);
    for (int i = 0; i < sigma; ++i) {
      auto got = fast.min();
      auto want = slow.min();
      if (got.pos != want.pos || got.value != want.value) ++mismatches;
      int j = std::uniform_int_distribution<int>(1, fast.size())(rng);
      fast.decrement_suffix(j);
      slow.decrement_suffix(static_cast<std::size_t>(j));
      std::int64_t x = std::uniform_int_distribution<std::int64_t>(0, 100)(rng);
      fast.append(x, 0, 0);
      slow.append(x);
    }
  }

  // rmq vs leftmost scan, 1e4 random queries
  RmqIndex rmq;
  {
    int queries = 0;
    while (queries < 10000) {
      int n = std::uniform_int_distribution<int>(1, 500)(rng);
      std::vector<std::int64_t> a(static_cast<std::size_t>(n));
      for (auto& v : a) v = std::uniform_int_distribution<std::int64_t>(0, 50)(rng);
      rmq.rebuild(a);
      for (int q = 0; q < 100 && queries < 10000; ++q, ++queries) {
        int i = std::uniform_int_distribution<int>(1, n)(rng);
        int j = std::uniform_int_distribution<int>(i, n)(rng);
        int naive = i;
        for (int p = i; p <= j; ++p)
          if (a[static_cast<std::size_t>(p) - 1] < a[static_cast<std::size_t>(naive) - 1]) naive = p;
        if (rmq.query(i, j) != naive) ++mismatches;
      }
    }
  }

  // interval union-find vs naive borders model
  for (int round = 0; round < 300; ++round) {
    int n = std::uniform_int_distribution<int>(1, 80)(rng);
    std::vector<int> borders;
    for (int b = 1; b <= n; ++b)
      if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) borders.push_back(b);
    std::vector<int> sats(borders.size() + (borders.empty() || borders.back() < n ? 1 : 0), 0);
    IntervalUnionFind<int> uf(n, borders, sats);
    std::vector<int> model = borders;
    for (int step = 0; step < 100; ++step) {
      if (!model.empty() && std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
        int idx = std::uniform_int_distribution<int>(0, static_cast<int>(model.size()) - 1)(rng);
        int b = model[static_cast<std::size_t>(idx)];
        uf.unite(b, 0);
        model.erase(model.begin() + idx);
      }
      int u = std::uniform_int_distribution<int>(1, n)(rng);
      int lo = 1, hi = n;
      for (int b : model) {
        if (u <= b) {
          hi = b;
          break;
        }
        lo = b + 1;
      }
      auto got = uf.find(u);
      if (got.lo != lo || got.hi != hi) ++mismatches;
    }
  }

  std::ostringstream why;
  why << mismatches << " mismatches";
  report(6, "structure correctness vs naive models", mismatches == 0, why.str());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}
