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

#include "tforge/verify.hpp"

#include <cstdio>
#include <functional>
#include <stdexcept>

#include <json.hpp>

namespace tforge {

namespace {

void require_log_concave(const FiniteSeq& s, const char* name) {
  if (!is_log_concave(s)) {
    throw std::invalid_argument(std::string(name) + " = " + to_string(s) +
                                " is not log-concave");
  }
}

/// Calls `visit` on every vector of length 1..max_len with entries in
/// [lo, hi], shorter first, each length in lexicographic order.
void for_each_word(Index max_len, Index lo, Index hi,
                   const std::function<void(const std::vector<Index>&)>& visit) {
  for (Index len = 1; len <= max_len; ++len) {
    std::vector<Index> word(static_cast<std::size_t>(len), lo);
    while (true) {
      visit(word);
      Index pos = len - 1;
      while (pos >= 0 && word[static_cast<std::size_t>(pos)] == hi) {
        word[static_cast<std::size_t>(pos)] = lo;
        --pos;
      }
      if (pos < 0) break;
      ++word[static_cast<std::size_t>(pos)];
    }
  }
}

FiniteSeq from_word(const std::vector<Index>& word) {
  std::vector<Rat> terms(word.begin(), word.end());
  return FiniteSeq(0, std::move(terms));
}

}  // namespace

std::string digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Report check_rows_log_concave(const Triangle& t) {
  std::string inputs = t.construction();
  for (const auto& [k, v] : t.params()) inputs += ";" + k + "=" + v;
  inputs += ";N=" + std::to_string(t.depth());
  Report report{"rows-log-concave", {}, {}, digest(inputs)};
  for (Index n = 0; n <= t.depth(); ++n) {
    const FiniteSeq row = t.row(n);
    const LogConcavity lc = is_log_concave(row);
    if (lc) continue;
    const auto& w = *lc.witness;
    report.witnesses.push_back(
        {{n, w.n, w.p, w.q},
         row[w.n] * row[w.n + w.p + w.q],
         row[w.n + w.p] * row[w.n + w.q]});
  }
  return report;
}

Report check_lemma31(const FiniteSeq& a, const FiniteSeq& q, Index max_k,
                     Index max_n) {
  require_log_concave(a, "a");
  require_log_concave(q, "q");
  if ((!a.is_zero() && a.offset() < 0) || (!q.is_zero() && q.offset() < 0)) {
    throw std::invalid_argument("a and q must vanish at negative indices");
  }
  Report report{"lemma31", {}, {},
                digest(to_string(a) + ";" + to_string(q) + ";" +
                       std::to_string(max_k) + ";" + std::to_string(max_n))};
  if (max_k < 1) return report;
  ConvolutionTriple triple = lemma31_triple(a, q, 1);
  for (Index k = 1; k <= max_k; ++k) {
    for (Index n = 1; n <= max_n; ++n) {
      Rat lhs = triple.c[n] * triple.c[n];
      Rat rhs = triple.d[n - 1] * triple.b[n + 1];
      if (lhs < rhs) report.witnesses.push_back({{k, n}, lhs, rhs});
    }
    triple.b = std::move(triple.c);
    triple.c = std::move(triple.d);
    triple.d = conv(triple.c, q);
  }
  return report;
}

Report menon_pairing_check(const FiniteSeq& a, const FiniteSeq& b,
                           Index window) {
  require_log_concave(a, "a");
  require_log_concave(b, "b");
  Report report{"menon-pairing", {}, {},
                digest(to_string(a) + ";" + to_string(b) + ";" +
                       std::to_string(window))};
  auto p_term = [&](Index k, Index n) { return a[k] * a[n] * b[-k] * b[-n]; };
  auto r_term = [&](Index k, Index n) {
    return a[k] * a[n] * b[-k - 1] * b[-n + 1];
  };
  for (Index k = -window; k <= window; ++k) {
    for (Index n = -window; n <= window; ++n) {
      const Rat p = p_term(k, n);
      const Rat r = r_term(k, n);
      const Rat lhs = p + p_term(n - 1, k + 1);
      const Rat rhs = r + r_term(n - 1, k + 1);
      if (lhs < rhs) report.witnesses.push_back({{k, n}, lhs, rhs});
      if (p < r) report.observations.push_back({{k, n}, p, r});
    }
  }
  return report;
}

bool is_log_convex_interior(const FiniteSeq& s) {
  const auto& t = s.terms();
  for (std::size_t k = 1; k + 1 < t.size(); ++k) {
    if (t[k] * t[k] > t[k - 1] * t[k + 1]) return false;
  }
  return true;
}

std::optional<LogConvexityCounterexample> search_logconvexity_counterexample(
    Index max_len, Index value_bound) {
  if (max_len < 1 || value_bound < 1) return std::nullopt;
  std::vector<FiniteSeq> convex;
  for_each_word(max_len, 1, value_bound, [&](const std::vector<Index>& w) {
    FiniteSeq s = from_word(w);
    if (is_log_convex_interior(s)) convex.push_back(std::move(s));
  });
  for (const FiniteSeq& a : convex) {
    for (const FiniteSeq& b : convex) {
      FiniteSeq c = conv(a, b);
      const auto& t = c.terms();
      for (std::size_t k = 1; k + 1 < t.size(); ++k) {
        if (t[k] * t[k] > t[k - 1] * t[k + 1]) {
          return LogConvexityCounterexample{a, b, c,
                                            c.offset() + static_cast<Index>(k)};
        }
      }
    }
  }
  return std::nullopt;
}

bool skew_self_products_unimodal(const FiniteSeq& a) {
  if (a.is_zero()) return true;
  const auto [lo, hi] = skew_band(a);
  for (Index p = lo; p <= hi; ++p) {
    const FiniteSeq s = skew_product(a, a, p);
    if (!s.is_zero() && !is_unimodal(s)) return false;
  }
  return true;
}

Report check_fact12_equivalence(Index max_len, Index value_bound) {
  Report report{"fact12-equivalence", {}, {},
                digest(std::to_string(max_len) + ";" +
                       std::to_string(value_bound))};
  for_each_word(max_len, 0, value_bound, [&](const std::vector<Index>& w) {
    const FiniteSeq a = from_word(w);
    const bool concave = static_cast<bool>(is_log_concave(a));
    const bool unimodal = skew_self_products_unimodal(a);
    if (concave != unimodal) {
      report.witnesses.push_back({w, Rat(concave ? 1 : 0), Rat(unimodal ? 1 : 0)});
    }
  });
  return report;
}

std::string to_json(const Report& r) {
  auto encode = [](const std::vector<Witness>& ws) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Witness& w : ws) {
      arr.push_back({{"at", w.at}, {"lhs", to_string(w.lhs)},
                     {"rhs", to_string(w.rhs)}});
    }
    return arr;
  };
  nlohmann::json j = {{"check", r.check},
                      {"passed", r.passed()},
                      {"witnesses", encode(r.witnesses)},
                      {"inputs_digest", r.inputs_digest}};
  if (!r.observations.empty()) j["observations"] = encode(r.observations);
  return j.dump();
}

}  // namespace tforge
