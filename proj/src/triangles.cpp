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

#include "tforge/triangles.hpp"

#include <stdexcept>

namespace tforge {

namespace {

void require_depth(Index depth) {
  if (depth < 0) throw std::invalid_argument("triangle depth must be >= 0");
}

void require_nonnegative_support(const FiniteSeq& s, const char* name) {
  if (!s.is_zero() && s.offset() < 0) {
    throw std::invalid_argument(std::string(name) +
                                " has support at a negative index");
  }
}

std::map<std::string, std::string> delannoy_params(const DelannoyParams& p) {
  return {{"b", to_string(p.b)}, {"c", to_string(p.c)}, {"d", to_string(p.d)}};
}

std::vector<std::vector<Rat>> empty_rows(Index depth) {
  std::vector<std::vector<Rat>> rows;
  rows.reserve(static_cast<std::size_t>(depth + 1));
  for (Index n = 0; n <= depth; ++n) {
    rows.emplace_back(static_cast<std::size_t>(n + 1));
  }
  return rows;
}

BigInt factorial(Index n) {
  BigInt out = 1;
  for (Index i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace

Triangle::Triangle(std::string construction,
                   std::map<std::string, std::string> params,
                   std::vector<std::vector<Rat>> rows)
    : construction_(std::move(construction)),
      params_(std::move(params)),
      rows_(std::move(rows)) {
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    if (rows_[n].size() != n + 1) {
      throw std::invalid_argument("row " + std::to_string(n) + " has " +
                                  std::to_string(rows_[n].size()) +
                                  " entries, expected " +
                                  std::to_string(n + 1));
    }
    for (const Rat& t : rows_[n]) {
      if (t < 0) throw std::invalid_argument("negative triangle entry");
    }
  }
}

Rat Triangle::at(Index n, Index k) const {
  if (n < 0 || n > depth() || k < 0 || k > n) return Rat(0);
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

FiniteSeq Triangle::row(Index n) const {
  if (n < 0 || n > depth()) return {};
  return FiniteSeq(0, rows_[static_cast<std::size_t>(n)]);
}

Triangle convolution_array(const FiniteSeq& a, const FiniteSeq& q,
                           Index depth) {
  require_depth(depth);
  if (a.is_zero()) throw std::invalid_argument("initial side must be non-null");
  require_nonnegative_support(a, "initial side");
  require_nonnegative_support(q, "multiplier");

  auto rows = empty_rows(depth);
  // column[m] = a * q^{*m}, only indices <= depth are ever read.
  FiniteSeq column = a.window(0, depth);
  for (Index m = 0; m <= depth; ++m) {
    for (Index k = 0; k + m <= depth; ++k) {
      rows[static_cast<std::size_t>(k + m)][static_cast<std::size_t>(k)] =
          column[k];
    }
    column = conv_truncated(column, q, depth);
  }
  return Triangle("convarray", {{"a", to_string(a)}, {"q", to_string(q)}},
                  std::move(rows));
}

Triangle delannoy_recursion(const DelannoyParams& p, Index depth) {
  require_depth(depth);
  auto rows = empty_rows(depth);
  rows[0][0] = 1;
  for (Index n = 1; n <= depth; ++n) {
    auto& row = rows[static_cast<std::size_t>(n)];
    const auto& up = rows[static_cast<std::size_t>(n - 1)];
    for (Index k = 0; k <= n; ++k) {
      Rat v(0);
      if (k >= 1) v += p.b * up[static_cast<std::size_t>(k - 1)];
      if (k <= n - 1) v += p.c * up[static_cast<std::size_t>(k)];
      if (n >= 2 && k >= 1 && k - 1 <= n - 2) {
        v += p.d * rows[static_cast<std::size_t>(n - 2)]
                       [static_cast<std::size_t>(k - 1)];
      }
      row[static_cast<std::size_t>(k)] = std::move(v);
    }
  }
  return Triangle("delannoy", delannoy_params(p), std::move(rows));
}

Triangle delannoy_as_convolution(const DelannoyParams& p, Index depth) {
  require_depth(depth);
  const auto len = static_cast<std::size_t>(depth + 1);
  const FiniteSeq side = FiniteSeq::geometric(p.b, len);
  const FiniteSeq step(0, {p.c, p.d});
  const FiniteSeq multiplier = conv_truncated(side, step, depth);
  Triangle arr = convolution_array(side, multiplier, depth);
  return Triangle("delannoy-conv", delannoy_params(p), arr.rows());
}

BivarPoly expand_delannoy_series(const DelannoyParams& p, Index max_degree) {
  BivarPoly poly;
  // (bx + cy + dxy)^m contributes m!/(i! j! k!) b^i c^j d^k to x^(i+k)
  // y^(j+k), with i + j + k = m and total degree m + k.
  for (Index m = 0; m <= max_degree; ++m) {
    const BigInt m_fact = factorial(m);
    for (Index k = 0; k <= m && m + k <= max_degree; ++k) {
      for (Index i = 0; i + k <= m; ++i) {
        const Index j = m - i - k;
        const BigInt count = m_fact / (factorial(i) * factorial(j) * factorial(k));
        Rat term = Rat(count) * pow(p.b, static_cast<unsigned>(i)) *
                   pow(p.c, static_cast<unsigned>(j)) *
                   pow(p.d, static_cast<unsigned>(k));
        if (term == 0) continue;
        poly[{i + k, j + k}] += term;
      }
    }
  }
  return poly;
}

Triangle bivariate_rows(const DelannoyParams& p, Index depth) {
  require_depth(depth);
  auto rows = empty_rows(depth);
  for (const auto& [exps, coeff] : expand_delannoy_series(p, depth)) {
    const auto [xi, yj] = exps;
    rows[static_cast<std::size_t>(xi + yj)][static_cast<std::size_t>(xi)] =
        coeff;
  }
  return Triangle("bivariate", delannoy_params(p), std::move(rows));
}

Triangle kurtz_triangle(const FiniteSeq& top, const KurtzWeights& w,
                        Index depth) {
  require_depth(depth);
  if (!top.is_zero() && (top.offset() != 0 || top.size() != 1)) {
    throw std::invalid_argument("row 0 seed must be supported on index 0");
  }
  auto rows = empty_rows(depth);
  rows[0][0] = top[0];
  for (Index n = 1; n <= depth; ++n) {
    const auto& up = rows[static_cast<std::size_t>(n - 1)];
    auto& row = rows[static_cast<std::size_t>(n)];
    for (Index k = 0; k <= n; ++k) {
      Rat v(0);
      if (k >= 1) v += w.u[k] * up[static_cast<std::size_t>(k - 1)];
      if (k <= n - 1) v += w.v[k] * up[static_cast<std::size_t>(k)];
      row[static_cast<std::size_t>(k)] = std::move(v);
    }
  }
  return Triangle("kurtz",
                  {{"top", to_string(top)},
                   {"u", to_string(w.u)},
                   {"v", to_string(w.v)}},
                  std::move(rows));
}

ConvolutionTriple lemma31_triple(const FiniteSeq& a, const FiniteSeq& q,
                                 Index k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  require_nonnegative_support(a, "a");
  require_nonnegative_support(q, "q");
  ConvolutionTriple out;
  out.b = conv(a, conv_power(q, k - 1));
  out.c = conv(out.b, q);
  out.d = conv(out.c, q);
  return out;
}

Triangle pascal_preset(Index depth) {
  require_depth(depth);
  const auto ones = FiniteSeq::constant(0, static_cast<std::size_t>(depth + 1), 1);
  Triangle arr = convolution_array(ones, ones, depth);
  return Triangle("pascal-preset", {}, arr.rows());
}

Triangle hoggar_preset(const FiniteSeq& a, Index depth) {
  require_depth(depth);
  const auto ones = FiniteSeq::constant(0, static_cast<std::size_t>(depth + 1), 1);
  Triangle arr = convolution_array(a, ones, depth);
  return Triangle("hoggar-preset", {{"a", to_string(a)}}, arr.rows());
}

}  // namespace tforge
