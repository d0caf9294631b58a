#pragma once

#include <cstdint>
#include <stdexcept>

#include "kuniv/bigint.hpp"
#include "kuniv/word.hpp"

namespace kuniv {

enum class EditOp { Insert, Delete, Substitute };

const char* to_string(EditOp op);

// Raised when no sequence of the requested operation can reach the target
// index (CLI maps it to exit code 2).
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DistanceResult {
  EditOp op;
  BigUint k;
  BigUint cost;
};

// Minimal number of insertions so that the result is k-universal. Defined for
// every k; O(nk) for k <= n, O(n^2) plus the closed tail (k-n)*sigma beyond.
BigUint insert_distance(const Word& w, const BigUint& k);
std::int64_t insert_distance(const Word& w, std::int64_t k);

// Minimal number of deletions reaching universality index exactly k.
// Requires 0 <= k <= iota(w); otherwise throws InfeasibleError.
std::int64_t delete_distance(const Word& w, std::int64_t k);

// Minimal number of substitutions reaching a k-universal word (exact index k
// when k < iota(w)). Requires 0 <= k <= n/sigma; throws InfeasibleError
// otherwise, and for sigma = 1 with k < n.
std::int64_t subst_distance(const Word& w, std::int64_t k);

// Closed form for binary alphabets; equals insert_distance on every input.
// Throws std::invalid_argument when sigma != 2.
BigUint binary_insert_distance(const Word& w, const BigUint& k);

struct DistanceOptions {
  bool force_generic = false;  // disable the binary insertion fast path
};

DistanceResult distance(const Word& w, const BigUint& k, EditOp op, const DistanceOptions& opts = {});

}  // namespace kuniv
