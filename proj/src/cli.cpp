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

#include "tforge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "tforge/seqcore.hpp"
#include "tforge/tailseq.hpp"
#include "tforge/triangle_io.hpp"
#include "tforge/triangles.hpp"
#include "tforge/verify.hpp"

namespace tforge::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TriangleOptions {
  std::string construction;
  long long depth = -1;
  std::string a, q;
  std::string b, c, d;
  std::string top = "0:1";
  std::string u, v;
  std::string input;
};

long long max_depth() {
  const char* env = std::getenv("TRIANGLE_FORGE_MAX_N");
  if (env == nullptr || *env == '\0') return kDefaultMaxDepth;
  try {
    return std::stoll(env);
  } catch (const std::exception&) {
    throw UsageError("TRIANGLE_FORGE_MAX_N is not an integer");
  }
}

void add_triangle_options(CLI::App* cmd, TriangleOptions& o) {
  cmd->add_option("--construction", o.construction, "Triangle construction")
      ->check(CLI::IsMember({"convarray", "delannoy", "delannoy-conv",
                             "bivariate", "kurtz", "pascal-preset",
                             "hoggar-preset"}));
  cmd->add_option("--N", o.depth, "Index of the last row");
  cmd->add_option("--a", o.a, "Initial side sequence literal");
  cmd->add_option("--q", o.q, "Convolution multiplier sequence literal");
  cmd->add_option("--b", o.b, "Delannoy weight b (default 1)");
  cmd->add_option("--c", o.c, "Delannoy weight c");
  cmd->add_option("--d", o.d, "Delannoy weight d");
  cmd->add_option("--top", o.top, "Row 0 seed for kurtz");
  cmd->add_option("--u", o.u, "Left-parent weights for kurtz");
  cmd->add_option("--v", o.v, "Right-parent weights for kurtz");
}

FiniteSeq require_seq(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  return parse_seq(text);
}

Triangle build_triangle(const TriangleOptions& o) {
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw UsageError("cannot read " + o.input);
    std::stringstream buf;
    buf << in.rdbuf();
    return triangle_from_json(buf.str());
  }
  if (o.construction.empty()) throw UsageError("--construction is required");
  if (o.depth < 0) throw UsageError("--N must be given and >= 0");
  if (o.depth > max_depth()) {
    throw UsageError("--N exceeds TRIANGLE_FORGE_MAX_N (" +
                     std::to_string(max_depth()) + ")");
  }
  const Index n = o.depth;
  const std::string& c = o.construction;
  if (c == "convarray") {
    return convolution_array(require_seq(o.a, "--a"), require_seq(o.q, "--q"), n);
  }
  if (c == "pascal-preset") return pascal_preset(n);
  if (c == "hoggar-preset") return hoggar_preset(require_seq(o.a, "--a"), n);
  if (c == "kurtz") {
    return kurtz_triangle(parse_seq(o.top),
                          {require_seq(o.u, "--u"), require_seq(o.v, "--v")}, n);
  }
  auto weight = [](const std::string& w) {
    return w.empty() ? Rat(1) : parse_rat(w);
  };
  const DelannoyParams p{weight(o.b), weight(o.c), weight(o.d)};
  if (c == "delannoy") return delannoy_recursion(p, n);
  if (c == "delannoy-conv") return delannoy_as_convolution(p, n);
  return bivariate_rows(p, n);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

std::string pretty_report(const Report& r) {
  std::string s = r.check + ": " + (r.passed() ? "passed" : "FAILED") + "\n";
  for (const Witness& w : r.witnesses) {
    s += "  at (";
    for (std::size_t i = 0; i < w.at.size(); ++i) {
      if (i != 0) s += ", ";
      s += std::to_string(w.at[i]);
    }
    s += "): " + to_string(w.lhs) + " vs " + to_string(w.rhs) + "\n";
  }
  if (!r.observations.empty()) {
    s += "  " + std::to_string(r.observations.size()) + " observation(s)\n";
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Pascal-type triangles and log-concavity checks",
               "triangle-forge"};
  app.require_subcommand(1);

  TriangleOptions gen_opts;
  std::string gen_format = "json";
  std::string output;
  auto* gen = app.add_subcommand("gen", "Generate a triangular array");
  add_triangle_options(gen, gen_opts);
  gen->add_option("--format", gen_format)
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  gen->add_option("--output", output, "Write to a file instead of stdout");

  TriangleOptions ver_opts;
  std::string check;
  std::string ver_format = "json";
  long long nk = 10, nn = 10, window = -1, max_len = 5, bound = 3;
  auto* ver = app.add_subcommand("verify", "Run a verification scanner");
  ver->add_option("--check", check)
      ->required()
      ->check(CLI::IsMember({"rows-log-concave", "lemma31", "menon", "fact12"}));
  add_triangle_options(ver, ver_opts);
  ver->add_option("--input", ver_opts.input, "Triangle JSON file to scan");
  ver->add_option("--Nk", nk);
  ver->add_option("--Nn", nn);
  ver->add_option("--window", window);
  ver->add_option("--max-len", max_len);
  ver->add_option("--bound", bound);
  ver->add_option("--format", ver_format)->check(CLI::IsMember({"json", "pretty"}));
  ver->add_option("--output", output);

  std::string conv_a, conv_b;
  long long power = -1;
  auto* conv_cmd = app.add_subcommand("conv", "Convolve finite sequences");
  conv_cmd->add_option("--a", conv_a)->required();
  conv_cmd->add_option("--b", conv_b);
  conv_cmd->add_option("--power", power, "Convolution power of --a");

  std::string tail_a, tail_b;
  long long tail_p = 0;
  auto* tail = app.add_subcommand("tail", "One term of a two-sided convolution");
  tail->add_option("--a", tail_a)->required();
  tail->add_option("--b", tail_b)->required();
  tail->add_option("--p", tail_p)->required();

  long long search_len = 3, search_bound = 2;
  auto* search = app.add_subcommand(
      "search", "Look for log-convex pairs with a non-log-convex convolution");
  search->add_option("--max-len", search_len);
  search->add_option("--bound", search_bound);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      const Triangle t = build_triangle(gen_opts);
      const std::string text = gen_format == "csv"    ? to_csv(t)
                               : gen_format == "json" ? to_json(t) + "\n"
                                                      : to_pretty(t);
      emit(text, output, out);
      return kExitOk;
    }
    if (ver->parsed()) {
      Report report;
      if (check == "rows-log-concave") {
        report = check_rows_log_concave(build_triangle(ver_opts));
      } else if (check == "lemma31") {
        report = check_lemma31(require_seq(ver_opts.a, "--a"),
                               require_seq(ver_opts.q, "--q"), nk, nn);
      } else if (check == "menon") {
        const FiniteSeq a = require_seq(ver_opts.a, "--a");
        const FiniteSeq b = require_seq(ver_opts.b, "--b");
        if (window < 0) {
          // Cover both supports, b is read at negated indices.
          window = 1;
          for (Index i : {a.offset(), a.last(), b.offset(), b.last()}) {
            window = std::max<long long>(window, std::abs(i) + 1);
          }
        }
        report = menon_pairing_check(a, b, window);
      } else {
        report = check_fact12_equivalence(max_len, bound);
      }
      emit(ver_format == "json" ? to_json(report) + "\n" : pretty_report(report),
           output, out);
      return report.passed() ? kExitOk : kExitCheckFailed;
    }
    if (conv_cmd->parsed()) {
      const FiniteSeq a = parse_seq(conv_a);
      if (power >= 0) {
        out << to_string(conv_power(a, power)) << "\n";
      } else {
        out << to_string(conv(a, require_seq(conv_b, "--b"))) << "\n";
      }
      return kExitOk;
    }
    if (tail->parsed()) {
      const FinitenessVerdict v = convolution_term(
          parse_twosided(tail_a), parse_twosided(tail_b), tail_p);
      if (v.finite) {
        out << "finite " << to_string(*v.value) << "\n";
      } else {
        out << "divergent " << to_string(*v.divergent_toward) << "\n";
      }
      return kExitOk;
    }
    const auto found = search_logconvexity_counterexample(search_len, search_bound);
    if (!found) {
      out << "none\n";
    } else {
      const Index k = found->index;
      nlohmann::json j = {
          {"a", to_string(found->a)},
          {"b", to_string(found->b)},
          {"conv", to_string(found->product)},
          {"index", k},
          {"lhs", to_string(found->product[k] * found->product[k])},
          {"rhs", to_string(found->product[k - 1] * found->product[k + 1])}};
      out << j.dump() << "\n";
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace tforge::cli
