#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "kuniv/bigint.hpp"
#include "kuniv/distances.hpp"
#include "kuniv/word.hpp"

namespace kuniv {

// Segment boundaries of one optimal solution. boundaries = i_0 = 0 < ... <=
// i_k; for insertions/substitutions i_k = n, for deletions i_k is the end of
// the k-th block and the rest w[i_k+1 : n] loses a least-frequent letter.
struct BoundarySolution {
  EditOp op;
  std::int64_t k = 0;
  std::vector<int> boundaries;
  std::int64_t cost = 0;
};

// Linear-space divide and conquer: O(nk) time, O(n + k) working memory.
BoundarySolution hirschberg_boundaries(const Word& w, std::int64_t k, EditOp op);

// Reference path keeping the full split matrix; used to cross-check the
// linear-space reconstruction.
BoundarySolution full_matrix_boundaries(const Word& w, std::int64_t k, EditOp op);

struct WitnessResult {
  std::int64_t cost = 0;
  std::vector<Letter> word;
};

WitnessResult insert_witness(const Word& w, std::int64_t k);  // k <= iota returns (0, w)
WitnessResult delete_witness(const Word& w, std::int64_t k);  // 0 <= k <= iota
WitnessResult subst_witness(const Word& w, std::int64_t k);   // 0 <= k <= n/sigma

// Streams an insertion witness in bounded memory; the tail beyond n arches is
// emitted as repeated 1..sigma blocks, so arbitrarily large k are fine.
void insert_witness_stream(const Word& w, const BigUint& k,
                           const std::function<void(std::span<const Letter>)>& sink);

bool is_subsequence(std::span<const Letter> needle, std::span<const Letter> hay);

struct VerifyReport {
  bool ok = false;
  std::string reason;
  BigUint edit_count;
};

// Checks shape (single-operation reachability), target index, and optimality
// of a claimed witness.
VerifyReport verify_witness(const Word& w, const BigUint& k, EditOp op,
                            std::span<const Letter> witness);

namespace detail {
long peak_column_buffers();
void reset_column_buffer_stats();
}  // namespace detail

}  // namespace kuniv
