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

#include "tforge/seqcore.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <random>
#include <stdexcept>

namespace tforge {

namespace {

const Rat kZero{0};

}  // namespace

FiniteSeq::FiniteSeq(Index offset, std::vector<Rat> terms) {
  for (const Rat& t : terms) {
    if (t < 0) {
      throw std::invalid_argument("sequence term " + to_string(t) +
                                  " is negative");
    }
  }
  auto first = std::find_if(terms.begin(), terms.end(),
                            [](const Rat& t) { return t != 0; });
  if (first == terms.end()) return;
  auto last = std::find_if(terms.rbegin(), terms.rend(),
                           [](const Rat& t) { return t != 0; })
                  .base();
  offset_ = offset + (first - terms.begin());
  terms_.assign(std::make_move_iterator(first), std::make_move_iterator(last));
}

FiniteSeq FiniteSeq::delta(Index at) { return FiniteSeq(at, {Rat(1)}); }

FiniteSeq FiniteSeq::constant(Index offset, std::size_t len, const Rat& value) {
  return FiniteSeq(offset, std::vector<Rat>(len, value));
}

FiniteSeq FiniteSeq::geometric(const Rat& ratio, std::size_t len) {
  std::vector<Rat> terms;
  terms.reserve(len);
  Rat cur(1);
  for (std::size_t i = 0; i < len; ++i) {
    terms.push_back(cur);
    cur *= ratio;
  }
  return FiniteSeq(0, std::move(terms));
}

Rat FiniteSeq::at(Index n) const { return (*this)[n]; }

const Rat& FiniteSeq::operator[](Index n) const {
  if (terms_.empty() || n < offset_ || n > last()) return kZero;
  return terms_[static_cast<std::size_t>(n - offset_)];
}

FiniteSeq FiniteSeq::shifted(Index delta) const {
  FiniteSeq out = *this;
  if (!out.is_zero()) out.offset_ += delta;
  return out;
}

FiniteSeq FiniteSeq::window(Index lo, Index hi) const {
  if (is_zero() || hi < lo) return {};
  lo = std::max(lo, offset_);
  hi = std::min(hi, last());
  if (hi < lo) return {};
  auto begin = terms_.begin() + (lo - offset_);
  return FiniteSeq(lo, std::vector<Rat>(begin, begin + (hi - lo + 1)));
}

FiniteSeq conv(const FiniteSeq& a, const FiniteSeq& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return conv_truncated(a, b, a.last() + b.last());
}

FiniteSeq conv_truncated(const FiniteSeq& a, const FiniteSeq& b,
                         Index max_index) {
  if (a.is_zero() || b.is_zero()) return {};
  const Index lo = a.offset() + b.offset();
  const Index hi = std::min(a.last() + b.last(), max_index);
  if (hi < lo) return {};
  std::vector<Rat> out(static_cast<std::size_t>(hi - lo + 1));
  const auto& at = a.terms();
  const auto& bt = b.terms();
  for (std::size_t i = 0; i < at.size(); ++i) {
    const Index limit = hi - lo - static_cast<Index>(i);
    if (limit < 0) break;
    const std::size_t jmax =
        std::min(bt.size(), static_cast<std::size_t>(limit) + 1);
    for (std::size_t j = 0; j < jmax; ++j) out[i + j] += at[i] * bt[j];
  }
  return FiniteSeq(lo, std::move(out));
}

FiniteSeq conv_power(const FiniteSeq& q, Index k) {
  if (k < 0) {
    throw std::invalid_argument("negative convolution power " +
                                std::to_string(k));
  }
  FiniteSeq result = FiniteSeq::delta();
  FiniteSeq base = q;
  while (k != 0) {
    if (k & 1) result = conv(result, base);
    k >>= 1;
    if (k != 0) base = conv(base, base);
  }
  return result;
}

FiniteSeq termwise_product(const FiniteSeq& a, const FiniteSeq& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Index lo = std::max(a.offset(), b.offset());
  const Index hi = std::min(a.last(), b.last());
  if (hi < lo) return {};
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (Index n = lo; n <= hi; ++n) out.push_back(a[n] * b[n]);
  return FiniteSeq(lo, std::move(out));
}

FiniteSeq skew_product(const FiniteSeq& a, const FiniteSeq& b, Index p) {
  if (a.is_zero() || b.is_zero()) return {};
  // b_{p-n} is nonzero for n in [p - b.last, p - b.offset].
  const Index lo = std::max(a.offset(), p - b.last());
  const Index hi = std::min(a.last(), p - b.offset());
  if (hi < lo) return {};
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (Index n = lo; n <= hi; ++n) out.push_back(a[n] * b[p - n]);
  return FiniteSeq(lo, std::move(out));
}

LogConcavity is_log_concave(const FiniteSeq& a) {
  const auto& t = a.terms();
  // Internal zero: the nearest nonzero neighbours i < z < j give
  // a_i a_j > 0 = a_z a_{i+j-z}.
  for (std::size_t z = 1; z + 1 < t.size(); ++z) {
    if (t[z] != 0) continue;
    std::size_t i = z - 1;
    while (t[i] == 0) --i;
    std::size_t j = z + 1;
    while (t[j] == 0) ++j;
    return {false, LogConcavityWitness{a.offset() + static_cast<Index>(i),
                                       static_cast<Index>(z - i),
                                       static_cast<Index>(j - z)}};
  }
  for (std::size_t k = 1; k + 1 < t.size(); ++k) {
    if (t[k] * t[k] < t[k - 1] * t[k + 1]) {
      return {false,
              LogConcavityWitness{a.offset() + static_cast<Index>(k) - 1, 1, 1}};
    }
  }
  return {};
}

bool is_log_concave_bruteforce(const FiniteSeq& a) {
  if (a.is_zero()) return true;
  const Index lo = a.offset() - 1;
  const Index hi = a.last() + 1;
  for (Index n = lo; n <= hi; ++n) {
    for (Index p = 1; n + p + 1 <= hi; ++p) {
      for (Index q = 1; n + p + q <= hi; ++q) {
        if (a[n] * a[n + p + q] > a[n + p] * a[n + q]) return false;
      }
    }
  }
  return true;
}

Unimodality is_unimodal(const FiniteSeq& a) {
  const auto& t = a.terms();
  if (t.empty()) return {true, std::nullopt};
  std::size_t k = 0;
  while (k + 1 < t.size() && t[k] <= t[k + 1]) ++k;
  const std::size_t peak_end = k;
  while (k + 1 < t.size() && t[k] >= t[k + 1]) ++k;
  if (k + 1 != t.size()) return {false, std::nullopt};
  // The top is a plateau ending at peak_end, possibly continued by equal
  // terms on the descending side.
  std::size_t lo = peak_end;
  while (lo > 0 && t[lo - 1] == t[peak_end]) --lo;
  std::size_t hi = peak_end;
  while (hi + 1 < t.size() && t[hi + 1] == t[peak_end]) ++hi;
  return {true, ModeInterval{a.offset() + static_cast<Index>(lo),
                             a.offset() + static_cast<Index>(hi)}};
}

std::pair<Index, Index> skew_band(const FiniteSeq& a) {
  return {2 * a.offset() - 2, 2 * (a.offset() + static_cast<Index>(a.size()))};
}

FiniteSeq random_log_concave(std::size_t len, std::uint64_t seed,
                             const Rat& ratio_bound) {
  if (len == 0) throw std::invalid_argument("length must be at least 1");
  if (ratio_bound <= 0) {
    throw std::invalid_argument("ratio bound must be positive");
  }
  // Ratios are drawn from the grid {bound * u / 12 : u = 1..12}.
  constexpr std::uint64_t kGrid = 12;
  std::mt19937_64 rng(seed);
  std::vector<Rat> ratios;
  ratios.reserve(len - 1);
  for (std::size_t i = 1; i < len; ++i) {
    const auto u = static_cast<long long>(rng() % kGrid + 1);
    ratios.push_back(ratio_bound * Rat(u, static_cast<long long>(kGrid)));
  }
  std::sort(ratios.begin(), ratios.end(), std::greater<>());
  std::vector<Rat> terms;
  terms.reserve(len);
  terms.emplace_back(1);
  for (const Rat& r : ratios) terms.push_back(terms.back() * r);
  return FiniteSeq(0, std::move(terms));
}

FiniteSeq parse_seq(std::string_view text) {
  if (text == "zero") return {};
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("sequence literal '" + std::string(text) +
                                "' lacks 'offset:'");
  }
  const std::string_view off_text = text.substr(0, colon);
  Index offset = 0;
  const char* off_end = off_text.data() + off_text.size();
  auto [ptr, ec] = std::from_chars(off_text.data(), off_end, offset);
  if (ec != std::errc{} || ptr != off_end || off_text.empty()) {
    throw std::invalid_argument("bad offset in sequence literal '" +
                                std::string(text) + "'");
  }
  std::vector<Rat> terms;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    terms.push_back(parse_rat(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return FiniteSeq(offset, std::move(terms));
}

std::string to_string(const FiniteSeq& s) {
  if (s.is_zero()) return "zero";
  std::string out = std::to_string(s.offset()) + ":";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != 0) out += ',';
    out += to_string(s.terms()[i]);
  }
  return out;
}

}  // namespace tforge
