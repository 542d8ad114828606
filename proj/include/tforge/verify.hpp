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

#include <optional>
#include <string>
#include <vector>

#include "tforge/seqcore.hpp"
#include "tforge/triangles.hpp"

namespace tforge {

/// A located inequality failure: `lhs` should not exceed `rhs` (or the
/// reverse, depending on the check) but did.
struct Witness {
  std::vector<Index> at;
  Rat lhs;
  Rat rhs;
};

/// Outcome of a scanner. Passed exactly when no witnesses were collected.
/// `observations` is informational and never affects the verdict.
struct Report {
  std::string check;
  std::vector<Witness> witnesses;
  std::vector<Witness> observations;
  std::string inputs_digest;

  bool passed() const { return witnesses.empty(); }
};

/// 16 hex digits of FNV-1a over the given text.
std::string digest(const std::string& text);

/// Every row of `t` (restricted to [0, n]) is log-concave. Witnesses are
/// at (n, i, p, q) with lhs = T(n,i) T(n,i+p+q), rhs = T(n,i+p) T(n,i+q).
Report check_rows_log_concave(const Triangle& t);

/// c_n^2 >= d_{n-1} b_{n+1} for k in [1, max_k], n in [1, max_n], with
/// (b, c, d) the convolution triple at k. Witnesses at (k, n).
/// Throws std::invalid_argument unless a and q are log-concave and
/// supported on nonnegative indices.
Report check_lemma31(const FiniteSeq& a, const FiniteSeq& q, Index max_k,
                     Index max_n);

/// Over (k, n) in [-window, window]^2 with
///   p(k,n) = a_k a_n b_{-k} b_{-n},  r(k,n) = a_k a_n b_{-k-1} b_{-n+1},
/// checks p(k,n) + p(s(k,n)) >= r(k,n) + r(s(k,n)) for s(k,n) = (n-1, k+1).
/// Indices where p(k,n) < r(k,n) alone are recorded as observations.
/// Throws std::invalid_argument for non-log-concave input.
Report menon_pairing_check(const FiniteSeq& a, const FiniteSeq& b,
                           Index window);

struct LogConvexityCounterexample {
  FiniteSeq a;
  FiniteSeq b;
  FiniteSeq product;
  /// Interior index where product^2 > left * right.
  Index index = 0;
};

/// Log-convex on the interior of the support: s_k^2 <= s_{k-1} s_{k+1}.
bool is_log_convex_interior(const FiniteSeq& s);

/// Enumerates positive integer sequences of length 1..max_len with terms in
/// [1, value_bound] at offset 0 (by length, then lexicographically), pairs
/// (a, b) in that order with a outer, and returns the first pair of
/// log-convex sequences whose convolution is not log-convex.
std::optional<LogConvexityCounterexample> search_logconvexity_counterexample(
    Index max_len, Index value_bound);

/// a is log-concave iff every non-null skew self-product over the band of
/// `skew_band(a)` is unimodal.
bool skew_self_products_unimodal(const FiniteSeq& a);

/// Exhaustive check of the equivalence above over all integer sequences of
/// length 1..max_len with terms in [0, value_bound]. A witness lists the
/// offending terms in `at`, lhs/rhs = the two sides as 0/1.
Report check_fact12_equivalence(Index max_len, Index value_bound);

/// Report as JSON text: {"check", "passed", "witnesses", ...}.
std::string to_json(const Report& r);

}  // namespace tforge
