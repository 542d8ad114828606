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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tforge/seqcore.hpp"

namespace tforge {

/// Rows 0..N of a triangular array T(n, k), zero unless 0 <= k <= n.
///
/// Each row is stored densely with exactly n + 1 entries; `row(n)` gives
/// the trimmed FiniteSeq view used by the predicates.
class Triangle {
 public:
  Triangle(std::string construction, std::map<std::string, std::string> params,
           std::vector<std::vector<Rat>> rows);

  const std::string& construction() const { return construction_; }
  const std::map<std::string, std::string>& params() const { return params_; }
  /// Index of the last row.
  Index depth() const { return static_cast<Index>(rows_.size()) - 1; }
  const std::vector<std::vector<Rat>>& rows() const { return rows_; }

  Rat at(Index n, Index k) const;
  FiniteSeq row(Index n) const;

  /// Entry-wise equality, ignoring provenance.
  bool same_entries(const Triangle& other) const { return rows_ == other.rows_; }

 private:
  std::string construction_;
  std::map<std::string, std::string> params_;
  std::vector<std::vector<Rat>> rows_;
};

struct DelannoyParams {
  Rat b{1};
  Rat c{1};
  Rat d{1};
};

/// Truncated bivariate polynomial: (i, j) -> coefficient of x^i y^j.
/// Zero coefficients are never stored.
using BivarPoly = std::map<std::pair<Index, Index>, Rat>;

struct KurtzWeights {
  FiniteSeq u;  // weight on T(n-1, k-1), indexed by k
  FiniteSeq v;  // weight on T(n-1, k), indexed by k
};

/// T(n, k) = (a * q^{*(n-k)})_k. Throws std::invalid_argument when a is
/// null or either sequence has support at a negative index.
Triangle convolution_array(const FiniteSeq& a, const FiniteSeq& q, Index depth);

/// T(0,0) = 1, T(n,k) = b T(n-1,k-1) + c T(n-1,k) + d T(n-2,k-1).
Triangle delannoy_recursion(const DelannoyParams& p, Index depth);

/// The same triangle as a convolution array with initial side
/// (1, b, b^2, ...) and multiplier (1, b, b^2, ...) * (c, d).
Triangle delannoy_as_convolution(const DelannoyParams& p, Index depth);

/// Sum over m <= max_degree of (bx + cy + dxy)^m, truncated to total
/// degree <= max_degree, by multinomial expansion.
BivarPoly expand_delannoy_series(const DelannoyParams& p, Index max_degree);

/// Row n holds the coefficients of x^k y^(n-k) of the series above.
Triangle bivariate_rows(const DelannoyParams& p, Index depth);

/// T(n, k) = u_k T(n-1, k-1) + v_k T(n-1, k), seeded with T(0, 0) = top_0.
/// Throws std::invalid_argument if `top` has support outside index 0.
Triangle kurtz_triangle(const FiniteSeq& top, const KurtzWeights& w,
                        Index depth);

struct ConvolutionTriple {
  FiniteSeq b;  // a * q^{*(k-1)}
  FiniteSeq c;  // a * q^{*k}
  FiniteSeq d;  // a * q^{*(k+1)}
};

ConvolutionTriple lemma31_triple(const FiniteSeq& a, const FiniteSeq& q,
                                 Index k);

/// Binomial coefficient rows 0..depth as the convolution array of two
/// all-ones prefixes.
Triangle pascal_preset(Index depth);

/// Convolution array with the given initial side and an all-ones
/// multiplier.
Triangle hoggar_preset(const FiniteSeq& a, Index depth);

}  // namespace tforge
