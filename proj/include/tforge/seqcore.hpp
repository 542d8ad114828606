// Copyright 2026 The triangle-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tforge/rat.hpp"

namespace tforge {

using Index = std::int64_t;

/// Nonnegative sequence indexed by the integers with finite support.
///
/// Stored as a dense window starting at `offset()`. The window is kept
/// trimmed: its first and last terms are nonzero, so two sequences compare
/// equal exactly when they agree at every index. The zero sequence has an
/// empty window and offset 0.
class FiniteSeq {
 public:
  FiniteSeq() = default;

  /// Throws std::invalid_argument if any term is negative.
  FiniteSeq(Index offset, std::vector<Rat> terms);

  static FiniteSeq delta(Index at = 0);
  /// `len` copies of `value` starting at `offset`.
  static FiniteSeq constant(Index offset, std::size_t len, const Rat& value);
  /// (1, r, r^2, ..., r^(len-1)) at offset 0.
  static FiniteSeq geometric(const Rat& ratio, std::size_t len);

  bool is_zero() const { return terms_.empty(); }
  Index offset() const { return offset_; }
  /// Index of the last stored term. Undefined for the zero sequence.
  Index last() const { return offset_ + static_cast<Index>(terms_.size()) - 1; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Rat>& terms() const { return terms_; }

  Rat at(Index n) const;
  const Rat& operator[](Index n) const;

  /// Same terms moved by `delta` indices.
  FiniteSeq shifted(Index delta) const;
  /// Restriction to [lo, hi].
  FiniteSeq window(Index lo, Index hi) const;

  friend bool operator==(const FiniteSeq&, const FiniteSeq&) = default;

 private:
  Index offset_ = 0;
  std::vector<Rat> terms_;
};

/// Indices attaining the maximum of a unimodal sequence.
struct ModeInterval {
  Index lo = 0;
  Index hi = 0;

  bool contains(Index n) const { return lo <= n && n <= hi; }
  friend bool operator==(const ModeInterval&, const ModeInterval&) = default;
};

/// A triple (n, p, q), p, q >= 1, violating a_n a_{n+p+q} <= a_{n+p} a_{n+q}.
struct LogConcavityWitness {
  Index n = 0;
  Index p = 1;
  Index q = 1;

  friend bool operator==(const LogConcavityWitness&,
                         const LogConcavityWitness&) = default;
};

struct LogConcavity {
  bool holds = true;
  std::optional<LogConcavityWitness> witness;

  explicit operator bool() const { return holds; }
};

struct Unimodality {
  bool holds = true;
  /// Empty for the zero sequence and for non-unimodal input.
  std::optional<ModeInterval> mode;

  explicit operator bool() const { return holds; }
};

FiniteSeq conv(const FiniteSeq& a, const FiniteSeq& b);

/// Convolution restricted to indices <= max_index.
FiniteSeq conv_truncated(const FiniteSeq& a, const FiniteSeq& b,
                         Index max_index);

/// k-fold self convolution; k = 0 gives the delta at 0. Throws
/// std::invalid_argument for negative k.
FiniteSeq conv_power(const FiniteSeq& q, Index k);

FiniteSeq termwise_product(const FiniteSeq& a, const FiniteSeq& b);

/// n -> a_n * b_{p-n}.
FiniteSeq skew_product(const FiniteSeq& a, const FiniteSeq& b, Index p);

/// Contiguous support plus a_k^2 >= a_{k-1} a_{k+1} for every k. The
/// witness for a failure satisfies the defining (n, p, q) inequality the
/// wrong way round.
LogConcavity is_log_concave(const FiniteSeq& a);

/// Exhaustive check of a_n a_{n+p+q} <= a_{n+p} a_{n+q} over all n and
/// p, q >= 1 inside [offset - 1, last + 1]. O(len^3); test oracle.
bool is_log_concave_bruteforce(const FiniteSeq& a);

Unimodality is_unimodal(const FiniteSeq& a);

/// The band of p for which the skew self-product of `a` can be non-null,
/// padded by one on each side: [2 offset - 2, 2 (offset + len)].
std::pair<Index, Index> skew_band(const FiniteSeq& a);

/// Strictly positive log-concave sequence of length `len` at offset 0,
/// built as running products of a nonincreasing ratio sequence drawn from
/// `seed`, each ratio in (0, ratio_bound]. Deterministic per seed.
FiniteSeq random_log_concave(std::size_t len, std::uint64_t seed,
                             const Rat& ratio_bound);

/// `offset:v0,v1,...` or `zero`. Throws std::invalid_argument.
FiniteSeq parse_seq(std::string_view text);
std::string to_string(const FiniteSeq& s);

}  // namespace tforge
