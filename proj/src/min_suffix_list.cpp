#include "kuniv/min_suffix_list.hpp"

#include <algorithm>
#include <stdexcept>

namespace kuniv {

void MinSuffixList::reset(std::span<const std::int64_t> values,
                          std::span<const std::int32_t> sat_pos,
                          std::span<const std::int32_t> sat_letter) {
  sigma_ = static_cast<int>(values.size());
  if (sigma_ < 1) throw std::invalid_argument("min-suffix list needs at least one entry");
  m_ = sigma_;
  appends_ = 0;
  const int cap = 2 * sigma_;

  // suffix-minima positions, right to left; rightmost occurrence wins ties
  border_buf_.clear();
  int prev = sigma_;
  border_buf_.push_back(sigma_);
  for (int t = sigma_ - 1; t >= 1; --t) {
    std::int64_t vt = values[static_cast<std::size_t>(t) - 1];
    std::int64_t vp = values[static_cast<std::size_t>(prev) - 1];
    bool less = vt != kInf && (vp == kInf || vt < vp);
    if (less) {
      border_buf_.push_back(t);
      prev = t;
    }
  }
  std::reverse(border_buf_.begin(), border_buf_.end());
  for (int s = sigma_ + 1; s <= cap; ++s) border_buf_.push_back(s);

  sat_buf_.clear();
  std::int64_t prior = 0;  // A[0] = 0
  tail_inf_ = false;
  fin_last_ = 0;
  std::size_t live = border_buf_.size() - static_cast<std::size_t>(sigma_);
  for (std::size_t i = 0; i < live; ++i) {
    std::int64_t v = values[static_cast<std::size_t>(border_buf_[i]) - 1];
    if (v == kInf) {
      sat_buf_.push_back({true, 0});
      tail_inf_ = true;   // only the last live interval can be infinite
      fin_last_ = prior;
    } else {
      sat_buf_.push_back({false, v - prior});
      prior = v;
    }
  }
  for (int s = sigma_ + 1; s <= cap; ++s) sat_buf_.push_back({});

  uf_.reset(cap, border_buf_, sat_buf_);
  last_val_ = values[static_cast<std::size_t>(sigma_) - 1];  // kInf allowed

  sat_pos_.assign(static_cast<std::size_t>(cap) + 1, 0);
  sat_letter_.assign(static_cast<std::size_t>(cap) + 1, 0);
  for (int i = 1; i <= sigma_; ++i) {
    sat_pos_[static_cast<std::size_t>(i)] = sat_pos[static_cast<std::size_t>(i) - 1];
    sat_letter_[static_cast<std::size_t>(i)] = sat_letter[static_cast<std::size_t>(i) - 1];
  }
}

MinSuffixList::MinResult MinSuffixList::min() {
  auto iv = uf_.find(1);
  const Sat& s = uf_.satellite(iv.border);
  if (s.inf) {
    // the first interval is infinite only when the whole list is
    return {m_, kInf, sat_pos_[static_cast<std::size_t>(m_)], sat_letter_[static_cast<std::size_t>(m_)]};
  }
  return {iv.hi, s.diff, sat_pos_[static_cast<std::size_t>(iv.hi)], sat_letter_[static_cast<std::size_t>(iv.hi)]};
}

void MinSuffixList::decrement_suffix(int j) {
  if (j < 1 || j > m_) throw std::out_of_range("decrement_suffix: position out of range");
  auto iv = uf_.find(j);
  Sat& s = uf_.satellite(iv.border);
  if (s.inf) return;  // the whole suffix is infinite
  if (tail_inf_) --fin_last_; else --last_val_;
  --s.diff;
  if (iv.lo != 1 && s.diff == 0) {
    auto left = uf_.find(iv.lo - 1);
    Sat merged = uf_.satellite(left.border);
    uf_.unite(left.border, merged);
  }
}

void MinSuffixList::append(std::int64_t value, std::int32_t sat_pos, std::int32_t sat_letter) {
  if (appends_ == sigma_) throw std::length_error("capacity exceeded");
  ++appends_;
  const int newpos = m_ + 1;
  sat_pos_[static_cast<std::size_t>(newpos)] = sat_pos;
  sat_letter_[static_cast<std::size_t>(newpos)] = sat_letter;

  std::int64_t q = tail_inf_ ? kInf : last_val_;  // A[m]
  int t = m_;
  while (t >= 1) {
    bool take = (q == kInf) || (value != kInf && q >= value);
    if (!take) break;
    auto iv = uf_.find(t);
    const Sat s = uf_.satellite(iv.border);
    std::int64_t q_next = s.inf ? fin_last_ : q - s.diff;
    uf_.unite(iv.border, Sat{});  // final satellite written after the loop
    q = q_next;
    t = iv.lo - 1;
  }

  auto tail = uf_.find(newpos);
  if (value == kInf) {
    if (!tail_inf_) fin_last_ = last_val_;
    uf_.satellite(tail.border) = Sat{true, 0};
    tail_inf_ = true;
  } else {
    uf_.satellite(tail.border) = Sat{false, value - q};
    tail_inf_ = false;
  }
  last_val_ = value;
  m_ = newpos;
}

}  // namespace kuniv
