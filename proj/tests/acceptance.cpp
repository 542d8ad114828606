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

// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tforge/seqcore.hpp"
#include "tforge/tailseq.hpp"
#include "tforge/triangles.hpp"
#include "tforge/verify.hpp"

namespace {

using namespace tforge;

struct Outcome {
  bool ok = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.ok) o.detail = why;
  o.ok = false;
}

std::vector<FiniteSeq> words(Index max_len, Index lo, Index hi) {
  std::vector<FiniteSeq> out;
  for (Index len = 1; len <= max_len; ++len) {
    std::vector<Index> w(static_cast<std::size_t>(len), lo);
    while (true) {
      out.emplace_back(0, std::vector<Rat>(w.begin(), w.end()));
      Index pos = len - 1;
      while (pos >= 0 && w[static_cast<std::size_t>(pos)] == hi) {
        w[static_cast<std::size_t>(pos)] = lo;
        --pos;
      }
      if (pos < 0) break;
      ++w[static_cast<std::size_t>(pos)];
    }
  }
  return out;
}

// The random suite shared by criteria 2 and 3: seeds 1..1000, lengths <= 12.
struct RandomPair {
  FiniteSeq a;
  FiniteSeq b;
};

std::vector<RandomPair> random_suite() {
  std::vector<RandomPair> out;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const Rat bound_a = seed % 2 == 0 ? Rat(2) : Rat(3, 2);
    const Rat bound_b = seed % 3 == 0 ? Rat(1) : Rat(5, 2);
    FiniteSeq a = random_log_concave(1 + seed % 12, seed, bound_a)
                      .shifted(static_cast<Index>(seed % 5) - 2);
    FiniteSeq b = random_log_concave(1 + (seed * 7 + 3) % 12, seed + 100000,
                                     bound_b);
    out.push_back({std::move(a), std::move(b)});
  }
  return out;
}

// 200 pairs supported on n >= 0, used by criteria 6, 7 and (shifted) 12.
std::vector<RandomPair> nonnegative_pairs() {
  std::vector<RandomPair> out;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    FiniteSeq a = random_log_concave(1 + seed % 12, 7000 + seed, Rat(2))
                      .shifted(static_cast<Index>(seed % 3));
    FiniteSeq q = random_log_concave(1 + (seed * 5) % 9, 9000 + seed,
                                     seed % 2 == 0 ? Rat(3, 2) : Rat(1, 2));
    out.push_back({std::move(a), std::move(q)});
  }
  return out;
}

Outcome ac1_predicate_oracle() {
  Outcome o;
  std::size_t n = 0;
  for (const FiniteSeq& a : words(7, 0, 3)) {
    ++n;
    if (static_cast<bool>(is_log_concave(a)) != is_log_concave_bruteforce(a)) {
      fail(o, "disagreement on " + to_string(a));
    }
  }
  if (o.ok) o.detail = std::to_string(n) + " sequences";
  return o;
}

Outcome ac2_convolution_preservation() {
  Outcome o;
  for (const auto& [a, b] : random_suite()) {
    if (!is_log_concave(conv(a, b))) {
      fail(o, "random pair " + to_string(a) + " * " + to_string(b));
    }
  }
  std::vector<FiniteSeq> concave;
  for (const FiniteSeq& s : words(4, 0, 2)) {
    if (is_log_concave(s)) concave.push_back(s);
  }
  std::size_t pairs = 0;
  for (const FiniteSeq& a : concave) {
    for (const FiniteSeq& b : concave) {
      ++pairs;
      if (!is_log_concave(conv(a, b))) {
        fail(o, "grid pair " + to_string(a) + " * " + to_string(b));
      }
    }
  }
  if (o.ok) o.detail = "1000 random + " + std::to_string(pairs) + " grid pairs";
  return o;
}

Outcome ac3_termwise_and_skew() {
  Outcome o;
  std::size_t modes = 0;
  auto check_modes = [&](const FiniteSeq& a) {
    const auto [lo, hi] = skew_band(a);
    for (Index p = lo; p <= hi; ++p) {
      const FiniteSeq s = skew_product(a, a, p);
      if (s.is_zero()) continue;
      const Unimodality u = is_unimodal(s);
      const Index floor_half = p >= 0 ? p / 2 : -((1 - p) / 2);
      ++modes;
      if (!u || !u.mode->contains(floor_half) ||
          !u.mode->contains(p - floor_half)) {
        fail(o, "mode of skew self-product of " + to_string(a) + " at p=" +
                    std::to_string(p));
      }
    }
  };
  for (const auto& [a, b] : random_suite()) {
    if (!is_log_concave(termwise_product(a, b))) {
      fail(o, "termwise " + to_string(a) + " . " + to_string(b));
    }
    check_modes(a);
    check_modes(b);
  }
  const Report fact12 = check_fact12_equivalence(5, 3);
  if (!fact12.passed()) fail(o, "check_fact12_equivalence(5,3) failed");
  if (o.ok) o.detail = std::to_string(modes) + " skew modes checked";
  return o;
}

// Log-concave two-sided sequences over tail ratios {0, 1/3, 1/2, 1, 2} with
// random positive cores.
std::vector<TwoSidedSeq> tail_grid() {
  const Rat ratios[] = {Rat(0), Rat(1, 3), Rat(1, 2), Rat(1), Rat(2)};
  std::vector<TwoSidedSeq> out;
  std::uint64_t seed = 1;
  for (const Rat& left : ratios) {
    for (const Rat& right : ratios) {
      for (int rep = 0; rep < 12; ++rep, ++seed) {
        const FiniteSeq core =
            random_log_concave(1 + seed % 4, 500 + seed, Rat(seed % 3 + 1, 2))
                .shifted(static_cast<Index>(seed % 5) - 2);
        TwoSidedSeq s(GeomTail{left}, core, GeomTail{right});
        if (is_log_concave_twosided(s)) out.push_back(std::move(s));
      }
    }
  }
  return out;
}

Outcome ac4_trichotomy() {
  Outcome o;
  const auto grid = tail_grid();
  std::size_t finite = 0;
  for (const TwoSidedSeq& s : grid) {
    const Trichotomy t = fact4_trichotomy(s);
    if (t.has_finite_sum != t.tends_to_zero ||
        t.tends_to_zero != t.max_interval_finite) {
      fail(o, "conditions disagree on " + to_string(s));
    }
    finite += t.has_finite_sum;
  }
  if (o.ok) {
    o.detail = std::to_string(grid.size()) + " sequences, " +
               std::to_string(finite) + " with finite sum";
  }
  return o;
}

// Partial sums S_M = sum_{|n| <= M} a_n b_{p-n} computed term by term.
Outcome ac5_convergence_criterion() {
  Outcome o;
  const auto grid = tail_grid();
  std::size_t finite = 0, divergent = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t step = 0; step < 4; ++step) {
      const TwoSidedSeq& a = grid[i];
      const TwoSidedSeq& b = grid[(i * 7 + step * 13 + 1) % grid.size()];
      for (Index p = -5; p <= 5; ++p) {
        const FinitenessVerdict v = convolution_term(a, b, p);
        auto term = [&](Index n) { return a.term_at(n) * b.term_at(p - n); };
        // Past `reach` both factors are in their tails on both sides.
        Index reach = 0;
        for (Index e : {a.first(), a.last(), p - b.first(), p - b.last()}) {
          reach = std::max(reach, e < 0 ? -e : e);
        }
        Rat scale(0);
        for (Index n = -reach; n <= reach; ++n) scale = std::max(scale, term(n));
        const std::string where = to_string(a) + " * " + to_string(b) +
                                  " at p=" + std::to_string(p);
        Rat partial = term(0);
        if (v.finite) {
          ++finite;
          const Rat& value = *v.value;
          const Rat x_plus = a.right().ratio * b.left().ratio;
          const Rat x_minus = a.left().ratio * b.right().ratio;
          for (Index m = 1;; ++m) {
            partial += term(m) + term(-m);
            if (partial > value) {
              fail(o, "partial sum exceeds value for " + where);
              break;
            }
            if (m < reach) continue;
            // Geometric remainder beyond |n| = m on each side.
            auto rest = [](const Rat& next, const Rat& x) {
              return next == 0 ? Rat(0) : next / (1 - x);
            };
            const Rat bound = rest(term(m + 1), x_plus) + rest(term(-m - 1), x_minus);
            if (bound * 1000000 <= value || bound == 0) {
              if (value - partial > bound || (value - partial) * 1000000 > value) {
                fail(o, "remainder outside bound for " + where);
              }
              break;
            }
            if (m > 100000) {
              fail(o, "no convergence for " + where);
              break;
            }
          }
        } else {
          ++divergent;
          if (scale == 0) scale = 1;
          // Per side: the increment at the first step past `reach`, and how
          // many steps since then have added at least that much.
          Rat floor_plus(-1), floor_minus(-1);
          int steady_plus = 0, steady_minus = 0;
          bool confirmed = false;
          for (Index m = 1; m <= 1000000 && !confirmed; ++m) {
            const Rat up = term(m);
            const Rat down = term(-m);
            partial += up + down;
            if (partial > scale * 1000000) confirmed = true;
            if (m <= reach) continue;
            if (floor_plus < 0) floor_plus = up;
            if (floor_minus < 0) floor_minus = down;
            steady_plus = floor_plus > 0 && up >= floor_plus ? steady_plus + 1 : 0;
            steady_minus =
                floor_minus > 0 && down >= floor_minus ? steady_minus + 1 : 0;
            // Grows by at least a fixed positive amount per step.
            if (steady_plus >= 200 || steady_minus >= 200) confirmed = true;
          }
          if (!confirmed) fail(o, "divergence not observed for " + where);
        }
      }
    }
  }
  if (o.ok) {
    o.detail = std::to_string(finite) + " finite, " + std::to_string(divergent) +
               " divergent verdicts confirmed";
  }
  return o;
}

Outcome ac6_lemma31() {
  Outcome o;
  for (const auto& [a, q] : nonnegative_pairs()) {
    if (!check_lemma31(a, q, 10, 10).passed()) {
      fail(o, "lemma fails for " + to_string(a) + ", " + to_string(q));
    }
  }
  if (o.ok) o.detail = "200 pairs, k,n in [1,10]";
  return o;
}

Outcome ac7_convolution_array_rows() {
  Outcome o;
  for (const auto& [a, q] : nonnegative_pairs()) {
    if (!check_rows_log_concave(convolution_array(a, q, 30)).passed()) {
      fail(o, "row failure for " + to_string(a) + ", " + to_string(q));
    }
  }
  if (o.ok) o.detail = "200 arrays, N=30";
  return o;
}

std::vector<DelannoyParams> delannoy_grid() {
  const Rat values[] = {Rat(0), Rat(1, 2), Rat(1), Rat(2)};
  std::vector<DelannoyParams> out;
  for (const Rat& b : values) {
    for (const Rat& c : values) {
      for (const Rat& d : values) out.push_back({b, c, d});
    }
  }
  return out;
}

std::string params_text(const DelannoyParams& p) {
  return "b=" + to_string(p.b) + " c=" + to_string(p.c) + " d=" + to_string(p.d);
}

Outcome ac8_delannoy_triple_equality() {
  Outcome o;
  for (const DelannoyParams& p : delannoy_grid()) {
    const Triangle rec = delannoy_recursion(p, 12);
    if (!rec.same_entries(delannoy_as_convolution(p, 12)) ||
        !rec.same_entries(bivariate_rows(p, 12))) {
      fail(o, "mismatch at " + params_text(p));
    }
  }
  const std::vector<std::vector<Rat>> expected = {
      {1}, {1, 1}, {1, 3, 1}, {1, 5, 5, 1}, {1, 7, 13, 7, 1}};
  const Triangle oracle = bivariate_rows({1, 1, 1}, 4);
  if (oracle.rows() != expected) fail(o, "b=c=d=1 rows differ from 1,7,13,7,1");
  if (o.ok) o.detail = "64 parameter triples, N=12";
  return o;
}

Outcome ac9_delannoy_rows() {
  Outcome o;
  for (const DelannoyParams& p : delannoy_grid()) {
    if (!check_rows_log_concave(delannoy_recursion(p, 20)).passed()) {
      fail(o, "non-log-concave row at " + params_text(p));
    }
  }
  if (o.ok) o.detail = "64 parameter triples, N=20";
  return o;
}

Outcome ac10_pascal() {
  Outcome o;
  const FiniteSeq ones = FiniteSeq::constant(0, 21, 1);
  const Triangle t = convolution_array(ones, ones, 20);
  auto fact = [](Index n) {
    BigInt f = 1;
    for (Index i = 2; i <= n; ++i) f *= i;
    return f;
  };
  for (Index n = 0; n <= 20; ++n) {
    for (Index k = 0; k <= n; ++k) {
      if (t.at(n, k) != Rat(fact(n) / (fact(k) * fact(n - k)))) {
        fail(o, "C(" + std::to_string(n) + "," + std::to_string(k) + ")");
      }
    }
  }
  if (o.ok) o.detail = "rows 0..20";
  return o;
}

Outcome ac11_log_convexity() {
  Outcome o;
  const auto found = search_logconvexity_counterexample(3, 2);
  if (!found) {
    fail(o, "no witness");
    return o;
  }
  const FiniteSeq& c = found->product;
  const Index k = found->index;
  // Pinned from the first run: (1,1) * (1,1) = (1,2,1), 2^2 > 1*1.
  if (found->a != parse_seq("0:1,1") || found->b != parse_seq("0:1,1") ||
      k != 1 || c[k] * c[k] != 4 || c[k - 1] * c[k + 1] != 1) {
    fail(o, "witness changed: " + to_string(found->a) + " * " + to_string(found->b));
  }
  if (o.ok) o.detail = "(1,1)*(1,1)=(1,2,1) at index 1";
  return o;
}

Outcome ac12_menon_pairing() {
  Outcome o;
  std::size_t with_observations = 0;
  for (const auto& [a0, b0] : nonnegative_pairs()) {
    const FiniteSeq a = a0.shifted(-(a0.offset() + a0.last()) / 2);
    const FiniteSeq b = b0.shifted(-(b0.offset() + b0.last() + 1) / 2);
    Index window = 1;
    for (Index i : {a.offset(), a.last(), b.offset(), b.last()}) {
      window = std::max(window, (i < 0 ? -i : i) + 1);
    }
    const Report r = menon_pairing_check(a, b, window);
    if (!r.passed()) fail(o, "pairing fails for " + to_string(a) + ", " + to_string(b));
    with_observations += !r.observations.empty();
  }
  if (with_observations == 0) fail(o, "no unpaired p < r observed");
  if (o.ok) {
    o.detail = "200 pairs, " + std::to_string(with_observations) +
               " with unpaired p < r";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1  log-concavity predicate = brute-force oracle", ac1_predicate_oracle},
      {"AC2  convolution preserves log-concavity", ac2_convolution_preservation},
      {"AC3  termwise products, skew self-products", ac3_termwise_and_skew},
      {"AC4  finite-sum trichotomy", ac4_trichotomy},
      {"AC5  convolution term finiteness vs partial sums", ac5_convergence_criterion},
      {"AC6  convolution triple inequality", ac6_lemma31},
      {"AC7  convolution array rows log-concave", ac7_convolution_array_rows},
      {"AC8  Delannoy recursion = convolution = bivariate", ac8_delannoy_triple_equality},
      {"AC9  Delannoy rows log-concave", ac9_delannoy_rows},
      {"AC10 Pascal identity", ac10_pascal},
      {"AC11 log-convexity not preserved", ac11_log_convexity},
      {"AC12 pairing inequality", ac12_menon_pairing},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      fail(o, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    std::printf("[%s] %s (%.2fs) %s\n", o.ok ? "PASS" : "FAIL", name, secs,
                o.detail.c_str());
    std::fflush(stdout);
    failures += !o.ok;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
