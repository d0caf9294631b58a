#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "kuniv/infinity.hpp"
#include "kuniv/interval_union_find.hpp"
#include "kuniv/min_suffix_list.hpp"
#include "kuniv/oracle.hpp"
#include "kuniv/rmq.hpp"

using namespace kuniv;

namespace {

// naive border-set model of the interval partition
struct NaivePartition {
  int n;
  std::vector<int> borders;  // sorted interval ends, excluding the generic n+1

  std::pair<int, int> find(int u) const {
    int lo = 1;
    for (int b : borders) {
      if (u <= b) return {lo, b};
      lo = b + 1;
    }
    return {lo, n};
  }
  void unite(int b) { borders.erase(std::find(borders.begin(), borders.end(), b)); }
};

}  // namespace

TEST_CASE("interval union-find basic partitions") {
  std::vector<int> borders{2, 5};
  std::vector<int> sats{10, 20, 30};
  IntervalUnionFind<int> uf(6, borders, sats);

  auto iv = uf.find(4);
  CHECK(iv.lo == 3);
  CHECK(iv.hi == 5);
  CHECK(uf.satellite(iv.border) == 20);
  CHECK(uf.find(6).lo == 6);
  CHECK(uf.find(6).hi == 6);
  CHECK(uf.find(1).lo == 1);
  CHECK(uf.find(1).hi == 2);

  uf.unite(2, 99);
  CHECK(uf.find(1).lo == 1);
  CHECK(uf.find(1).hi == 5);
  CHECK(uf.satellite(uf.find(1).border) == 99);
  uf.unite(5, 7);
  CHECK(uf.find(3).lo == 1);
  CHECK(uf.find(3).hi == 6);

  CHECK_THROWS(uf.unite(4, 0));  // not a border
}

TEST_CASE("interval union-find degenerate shapes") {
  {
    std::vector<int> borders;
    std::vector<int> sats{1};
    IntervalUnionFind<int> uf(3, borders, sats);
    CHECK(uf.find(2).lo == 1);
    CHECK(uf.find(2).hi == 3);
  }
  {
    std::vector<int> borders{1};
    std::vector<int> sats{1};
    IntervalUnionFind<int> uf(1, borders, sats);
    CHECK(uf.find(1).lo == 1);
    CHECK(uf.find(1).hi == 1);
  }
  {
    std::vector<int> borders{3, 2};
    std::vector<int> sats{0, 0, 0};
    CHECK_THROWS_AS(IntervalUnionFind<int>(4, borders, sats), std::invalid_argument);
  }
}

TEST_CASE("interval union-find matches the naive partition model") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    int n = std::uniform_int_distribution<int>(1, 60)(rng);
    std::vector<int> borders;
    for (int b = 1; b <= n; ++b)
      if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) borders.push_back(b);
    std::vector<int> sats(borders.size() + (borders.empty() || borders.back() < n ? 1 : 0), 0);
    IntervalUnionFind<int> uf(n, borders, sats);
    NaivePartition model{n, borders};

    for (int step = 0; step < 120; ++step) {
      if (!model.borders.empty() && std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
        int idx = std::uniform_int_distribution<int>(0, static_cast<int>(model.borders.size()) - 1)(rng);
        int b = model.borders[static_cast<std::size_t>(idx)];
        uf.unite(b, 0);
        model.unite(b);
      }
      int u = std::uniform_int_distribution<int>(1, n)(rng);
      auto got = uf.find(u);
      auto want = model.find(u);
      REQUIRE(got.lo == want.first);
      REQUIRE(got.hi == want.second);
    }
  }
}

TEST_CASE("rmq leftmost argmin") {
  {
    std::vector<std::int64_t> a{3, 1, 2, 1};
    RmqIndex rmq(a);
    CHECK(rmq.query(1, 4) == 2);  // leftmost tie
    CHECK(rmq.query(3, 4) == 4);
    CHECK(rmq.query(1, 1) == 1);
  }
  {
    std::vector<std::int64_t> a{5};
    RmqIndex rmq(a);
    CHECK(rmq.query(1, 1) == 1);
    CHECK_THROWS(rmq.query(2, 1));
  }
  {
    std::vector<std::int64_t> a{kInf, 4, kInf};
    RmqIndex rmq(a);
    CHECK(rmq.query(1, 3) == 2);
    CHECK(rmq.query(3, 3) == 3);  // all-infinite range still yields a position
  }
}

TEST_CASE("rmq equals naive scan on random queries") {
  std::mt19937_64 rng(11);
  RmqIndex rmq;
  for (int round = 0; round < 50; ++round) {
    int n = std::uniform_int_distribution<int>(1, 300)(rng);
    std::vector<std::int64_t> a(static_cast<std::size_t>(n));
    for (auto& v : a) {
      v = std::uniform_int_distribution<std::int64_t>(0, 40)(rng);
      if (v == 40) v = kInf;
    }
    rmq.rebuild(a);
    for (int q = 0; q < 200; ++q) {
      int i = std::uniform_int_distribution<int>(1, n)(rng);
      int j = std::uniform_int_distribution<int>(i, n)(rng);
      int naive = i;
      for (int p = i; p <= j; ++p)
        if (a[static_cast<std::size_t>(p) - 1] < a[static_cast<std::size_t>(naive) - 1]) naive = p;
      REQUIRE(rmq.query(i, j) == naive);
    }
  }
}

namespace {

void run_msl_pair(MinSuffixList& fast, oracle::NaiveMinSuffixList& slow, std::mt19937_64& rng,
                  int appends) {
  for (int i = 0; i < appends; ++i) {
    auto got = fast.min();
    auto want = slow.min();
    REQUIRE(got.pos == want.pos);
    REQUIRE(got.value == want.value);

    int j = std::uniform_int_distribution<int>(1, fast.size())(rng);
    fast.decrement_suffix(j);
    slow.decrement_suffix(static_cast<std::size_t>(j));

    std::int64_t x = std::uniform_int_distribution<std::int64_t>(0, 100)(rng);
    if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) x = kInf;
    fast.append(x, 0, 0);
    slow.append(x);

    auto got2 = fast.min();
    auto want2 = slow.min();
    REQUIRE(got2.pos == want2.pos);
    REQUIRE(got2.value == want2.value);
  }
}

}  // namespace

TEST_CASE("min-suffix list worked sequence") {
  MinSuffixList msl;
  std::vector<std::int64_t> init{5, 3, 4};
  std::vector<std::int32_t> pos{1, 2, 3}, letter{1, 2, 3};
  msl.reset(init, pos, letter);
  oracle::NaiveMinSuffixList mirror(init);

  auto m = msl.min();
  CHECK(m.pos == 2);
  CHECK(m.value == 3);
  CHECK(mirror.min().pos == 2);
  CHECK(mirror.min().value == 3);

  msl.decrement_suffix(3);  // logical A = [5,3,3]
  mirror.decrement_suffix(3);
  m = msl.min();
  CHECK(m.pos == 3);  // rightmost tie
  CHECK(m.value == 3);
  CHECK(mirror.min().pos == 3);

  msl.append(2, 4, 1);  // logical A = [5,3,3,2]
  mirror.append(2);
  m = msl.min();
  CHECK(m.pos == 4);
  CHECK(m.value == 2);
  CHECK(mirror.min().pos == 4);

  CHECK_THROWS_AS(msl.decrement_suffix(5), std::out_of_range);
}

TEST_CASE("min-suffix list capacity contract") {
  MinSuffixList msl;
  std::vector<std::int64_t> init{1, 2};
  std::vector<std::int32_t> sat{0, 0};
  msl.reset(init, sat, sat);
  msl.append(5, 0, 0);
  msl.append(5, 0, 0);
  CHECK_THROWS_AS(msl.append(5, 0, 0), std::length_error);
}

TEST_CASE("min-suffix list infinities stay infinite") {
  MinSuffixList msl;
  std::vector<std::int64_t> init{kInf, kInf, kInf};
  std::vector<std::int32_t> sat{0, 0, 0};
  msl.reset(init, sat, sat);
  CHECK(msl.min().value == kInf);
  msl.decrement_suffix(1);
  msl.decrement_suffix(3);
  CHECK(msl.min().value == kInf);  // decrements never produce finite values
  msl.append(7, 0, 0);
  CHECK(msl.min().pos == 4);
  CHECK(msl.min().value == 7);
  msl.decrement_suffix(1);
  CHECK(msl.min().value == 6);
}

TEST_CASE("min-suffix list equals the naive mirror") {
  std::mt19937_64 rng(23);
  MinSuffixList fast;
  for (int round = 0; round < 1000; ++round) {
    int sigma = std::uniform_int_distribution<int>(1, 50)(rng);
    std::vector<std::int64_t> init(static_cast<std::size_t>(sigma));
    for (auto& v : init) {
      v = std::uniform_int_distribution<std::int64_t>(0, 100)(rng);
      if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) v = kInf;
    }
    std::vector<std::int32_t> sat(static_cast<std::size_t>(sigma), 0);
    fast.reset(init, sat, sat);
    oracle::NaiveMinSuffixList slow(init);
    run_msl_pair(fast, slow, rng, sigma);
  }
}

TEST_CASE("min-suffix list amortized cost stays linear") {
  std::mt19937_64 rng(29);
  MinSuffixList fast;
  for (int sigma : {10, 100, 1000}) {
    std::vector<std::int64_t> init(static_cast<std::size_t>(sigma));
    for (auto& v : init) v = std::uniform_int_distribution<std::int64_t>(0, 1000)(rng);
    std::vector<std::int32_t> sat(static_cast<std::size_t>(sigma), 0);
    fast.reset(init, sat, sat);
    for (int i = 0; i < sigma; ++i) {
      fast.min();
      fast.decrement_suffix(std::uniform_int_distribution<int>(1, fast.size())(rng));
      fast.append(std::uniform_int_distribution<std::int64_t>(0, 1000)(rng), 0, 0);
    }
    CHECK(fast.op_cost() <= 8L * sigma);
  }
}
