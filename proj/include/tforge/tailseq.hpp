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
#include <string_view>

#include "tforge/seqcore.hpp"

namespace tforge {

/// Constant multiplicative step per index moving away from the core. A
/// ratio of 0 means the sequence vanishes beyond the core on that side.
struct GeomTail {
  Rat ratio{0};

  friend bool operator==(const GeomTail&, const GeomTail&) = default;
};

/// Nonnegative two-sided infinite sequence: a finite core plus
/// eventually-geometric tails.
///
///   a_n = a_first * left.ratio^(first - n)   for n < first
///   a_n = a_last  * right.ratio^(n - last)   for n > last
///
/// The core is trimmed, so both anchors a_first and a_last are nonzero.
/// A zero core denotes the zero sequence and forces both ratios to 0.
class TwoSidedSeq {
 public:
  TwoSidedSeq() = default;
  /// Throws std::invalid_argument on a negative ratio.
  TwoSidedSeq(GeomTail left, FiniteSeq core, GeomTail right);

  bool is_zero() const { return core_.is_zero(); }
  const FiniteSeq& core() const { return core_; }
  const GeomTail& left() const { return left_; }
  const GeomTail& right() const { return right_; }
  Index first() const { return core_.offset(); }
  Index last() const { return core_.last(); }

  Rat term_at(Index n) const;
  /// Realization on [lo, hi] as a finite sequence.
  FiniteSeq realize(Index lo, Index hi) const;

  friend bool operator==(const TwoSidedSeq&, const TwoSidedSeq&) = default;

 private:
  GeomTail left_;
  FiniteSeq core_;
  GeomTail right_;
};

inline Rat term_at(const TwoSidedSeq& s, Index n) { return s.term_at(n); }

/// Log-concavity of the whole two-sided sequence. Checks the core for
/// internal zeros and that the successive ratios a_{n+1}/a_n are
/// nonincreasing from the left tail through the core into the right tail.
LogConcavity is_log_concave_twosided(const TwoSidedSeq& s);

enum class Direction { kPlus, kMinus, kBoth };

std::string to_string(Direction d);

struct TailLimits {
  bool plus = true;   // n -> +infinity
  bool minus = true;  // n -> -infinity
};

/// Whether n -> a_n b_{p-n} tends to 0 in each direction.
TailLimits skew_tends_to_zero(const TwoSidedSeq& a, const TwoSidedSeq& b,
                              Index p);

struct FinitenessVerdict {
  bool finite = true;
  std::optional<Rat> value;                   // iff finite
  std::optional<Direction> divergent_toward;  // iff !finite
};

/// The p-th term of a * b, i.e. sum over n of a_n b_{p-n}, in closed form.
FinitenessVerdict convolution_term(const TwoSidedSeq& a, const TwoSidedSeq& b,
                                   Index p);

/// The three conditions of the finite-sum trichotomy for a non-null
/// sequence, each derived independently of the others.
struct Trichotomy {
  bool has_finite_sum = false;
  std::optional<Rat> sum;  // iff has_finite_sum
  bool tends_to_zero = false;
  bool max_interval_finite = false;
  std::optional<ModeInterval> max_interval;  // iff max_interval_finite
};

/// Throws std::invalid_argument for the zero sequence.
Trichotomy fact4_trichotomy(const TwoSidedSeq& s);

/// `L<ratio>|<seq literal>|R<ratio>`.
TwoSidedSeq parse_twosided(std::string_view text);
std::string to_string(const TwoSidedSeq& s);

}  // namespace tforge
