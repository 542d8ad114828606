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

#include "tforge/tailseq.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace tforge {

namespace {

unsigned distance(Index from, Index to) {
  return static_cast<unsigned>(to > from ? to - from : from - to);
}

/// Sum over j >= 1 of anchor * ratio^j, or nullopt when it diverges.
std::optional<Rat> tail_sum(const Rat& anchor, const Rat& ratio) {
  if (anchor == 0 || ratio == 0) return Rat(0);
  if (ratio >= 1) return std::nullopt;
  return anchor * ratio / (1 - ratio);
}

enum class Limit { kZero, kPositive, kInfinite };

/// Limit of anchor * ratio^j as j -> infinity.
Limit tail_limit(const Rat& anchor, const Rat& ratio) {
  if (anchor == 0) return Limit::kZero;
  if (ratio < 1) return Limit::kZero;
  if (ratio == 1) return Limit::kPositive;
  return Limit::kInfinite;
}

}  // namespace

TwoSidedSeq::TwoSidedSeq(GeomTail left, FiniteSeq core, GeomTail right)
    : left_(std::move(left)), core_(std::move(core)), right_(std::move(right)) {
  if (left_.ratio < 0 || right_.ratio < 0) {
    throw std::invalid_argument("tail ratios must be nonnegative");
  }
  if (core_.is_zero()) {
    left_.ratio = 0;
    right_.ratio = 0;
  }
}

Rat TwoSidedSeq::term_at(Index n) const {
  if (is_zero()) return Rat(0);
  if (n < first()) return core_[first()] * pow(left_.ratio, distance(n, first()));
  if (n > last()) return core_[last()] * pow(right_.ratio, distance(last(), n));
  return core_[n];
}

FiniteSeq TwoSidedSeq::realize(Index lo, Index hi) const {
  std::vector<Rat> terms;
  for (Index n = lo; n <= hi; ++n) terms.push_back(term_at(n));
  return FiniteSeq(lo, std::move(terms));
}

LogConcavity is_log_concave_twosided(const TwoSidedSeq& s) {
  if (s.is_zero()) return {};
  const FiniteSeq& core = s.core();
  for (const Rat& t : core.terms()) {
    if (t == 0) return is_log_concave(core);  // reports the internal zero
  }
  // (j, a_{j+1} / a_j) for consecutive j. A zero left ratio puts an
  // unconstrained jump from 0 at the left junction; a zero right ratio is
  // the smallest possible final step.
  std::vector<std::pair<Index, Rat>> steps;
  if (s.left().ratio != 0) steps.emplace_back(s.first() - 1, 1 / s.left().ratio);
  for (Index j = s.first(); j < s.last(); ++j) {
    steps.emplace_back(j, core[j + 1] / core[j]);
  }
  steps.emplace_back(s.last(), s.right().ratio);
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (steps[i].second < steps[i + 1].second) {
      return {false, LogConcavityWitness{steps[i].first, 1, 1}};
    }
  }
  return {};
}

std::string to_string(Direction d) {
  switch (d) {
    case Direction::kPlus:
      return "+inf";
    case Direction::kMinus:
      return "-inf";
    case Direction::kBoth:
      return "both";
  }
  return "?";
}

TailLimits skew_tends_to_zero(const TwoSidedSeq& a, const TwoSidedSeq& b,
                              Index /*p*/) {
  if (a.is_zero() || b.is_zero()) return {};
  // Far right: a sits in its right tail while b_{p-n} sits in its left
  // tail, so each step multiplies the product by a.right * b.left. The
  // anchors are nonzero, so the product tends to 0 iff that factor is < 1.
  return {a.right().ratio * b.left().ratio < 1,
          a.left().ratio * b.right().ratio < 1};
}

FinitenessVerdict convolution_term(const TwoSidedSeq& a, const TwoSidedSeq& b,
                                   Index p) {
  if (a.is_zero() || b.is_zero()) return {true, Rat(0), std::nullopt};
  auto skew = [&](Index n) { return a.term_at(n) * b.term_at(p - n); };

  // Beyond these indices both factors are in their geometric regime.
  const Index hi = std::max(a.last(), p - b.first());
  const Index lo = std::min(a.first(), p - b.last());
  const Rat x_plus = a.right().ratio * b.left().ratio;
  const Rat x_minus = a.left().ratio * b.right().ratio;
  const Rat s_hi = skew(hi);
  const Rat s_lo = skew(lo);

  const bool plus_diverges = s_hi != 0 && x_plus >= 1;
  const bool minus_diverges = s_lo != 0 && x_minus >= 1;
  if (plus_diverges || minus_diverges) {
    const Direction d = plus_diverges && minus_diverges ? Direction::kBoth
                        : plus_diverges                 ? Direction::kPlus
                                                        : Direction::kMinus;
    return {false, std::nullopt, d};
  }

  // sum_{n >= hi} = s_hi / (1 - x_plus), sum_{n <= lo} likewise.
  const Rat right = s_hi == 0 ? Rat(0) : s_hi / (1 - x_plus);
  const Rat left = s_lo == 0 ? Rat(0) : s_lo / (1 - x_minus);
  Rat total = right + left;
  if (lo == hi) {
    total -= s_hi;
  } else {
    for (Index n = lo + 1; n < hi; ++n) total += skew(n);
  }
  return {true, total, std::nullopt};
}

Trichotomy fact4_trichotomy(const TwoSidedSeq& s) {
  if (s.is_zero()) {
    throw std::invalid_argument("trichotomy requires a non-null sequence");
  }
  const FiniteSeq& core = s.core();
  const Rat& left_anchor = core[s.first()];
  const Rat& right_anchor = core[s.last()];
  Trichotomy out;

  // (i) finite sum
  const auto left_sum = tail_sum(left_anchor, s.left().ratio);
  const auto right_sum = tail_sum(right_anchor, s.right().ratio);
  if (left_sum && right_sum) {
    Rat total = *left_sum + *right_sum;
    for (const Rat& t : core.terms()) total += t;
    out.has_finite_sum = true;
    out.sum = total;
  }

  // (ii) terms tend to 0 in both directions
  out.tends_to_zero =
      tail_limit(left_anchor, s.left().ratio) == Limit::kZero &&
      tail_limit(right_anchor, s.right().ratio) == Limit::kZero;

  // (iii) the argmax set is a nonempty finite interval
  Rat top(0);
  for (const Rat& t : core.terms()) top = std::max(top, t);
  auto tail_escapes = [&](const Rat& anchor, const Rat& ratio) {
    // ratio > 1: no maximum at all; ratio == 1: the tail repeats its anchor
    // forever, which is a maximum whenever the anchor is.
    return ratio > 1 || (ratio == 1 && anchor == top);
  };
  if (!tail_escapes(left_anchor, s.left().ratio) &&
      !tail_escapes(right_anchor, s.right().ratio)) {
    std::vector<Index> argmax;
    for (Index n = s.first(); n <= s.last(); ++n) {
      if (core[n] == top) argmax.push_back(n);
    }
    if (argmax.back() - argmax.front() + 1 ==
        static_cast<Index>(argmax.size())) {
      out.max_interval_finite = true;
      out.max_interval = ModeInterval{argmax.front(), argmax.back()};
    }
  }
  return out;
}

TwoSidedSeq parse_twosided(std::string_view text) {
  const auto bar1 = text.find('|');
  const auto bar2 = text.rfind('|');
  if (bar1 == std::string_view::npos || bar1 == bar2 || text.size() < 2 ||
      text.front() != 'L' || bar2 + 1 >= text.size() ||
      text[bar2 + 1] != 'R') {
    throw std::invalid_argument("two-sided literal '" + std::string(text) +
                                "' is not of the form L<r>|<seq>|R<r>");
  }
  const Rat left = parse_rat(text.substr(1, bar1 - 1));
  const FiniteSeq core = parse_seq(text.substr(bar1 + 1, bar2 - bar1 - 1));
  const Rat right = parse_rat(text.substr(bar2 + 2));
  return TwoSidedSeq(GeomTail{left}, core, GeomTail{right});
}

std::string to_string(const TwoSidedSeq& s) {
  return "L" + to_string(s.left().ratio) + "|" + to_string(s.core()) + "|R" +
         to_string(s.right().ratio);
}

}  // namespace tforge
