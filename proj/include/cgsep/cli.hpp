// Copyright 2026 The cgsep Authors
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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cgsep/correlation.hpp"
#include "cgsep/errors.hpp"
#include "cgsep/separability.hpp"
#include "cgsep/stabilizer.hpp"
#include "cgsep/state_factory.hpp"
#include "cgsep/state_file.hpp"

namespace cgsep::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kCompute = 2 };

/// 12 significant digits, the fixed numeric format of every CSV field.
inline std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

/// Runs `body`, mapping library exceptions onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kCompute;
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kCompute;
  }
}

struct NormsArgs {
  std::string families = "cg,ghz,w,cluster";
  int n_min = 2;
  int n_max = 8;
  std::string format = "csv";
  bool dense = false;  // force the dense sweep even where a stabilizer path exists
};

inline int cmd_norms(const NormsArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (a.format != "csv" && a.format != "json") throw ArgumentError("--format must be csv or json");
    std::vector<Family> fams;
    for (const auto& f : split_list(a.families)) fams.push_back(parse_family(f));
    if (fams.empty()) throw ArgumentError("--families is empty");
    FullTensorOptions opts;
    opts.use_fast_path = !a.dense;
    const auto rows = norm_table(fams, a.n_min, a.n_max, opts);
    if (a.format == "csv") {
      out << "family,n,norm_sq,norm\n";
      for (const auto& r : rows)
        out << family_name(r.family) << ',' << r.n << ',' << num(r.norm_sq) << ',' << num(r.norm) << '\n';
    } else {
      auto arr = nlohmann::json::array();
      for (const auto& r : rows)
        arr.push_back({{"family", family_name(r.family)}, {"n", r.n}, {"norm_sq", r.norm_sq}, {"norm", r.norm}});
      out << arr.dump(2) << '\n';
    }
    return static_cast<int>(kOk);
  });
}

struct BoundsArgs {
  int n = 0;
  std::optional<int> k_min;
  std::optional<int> k_max;
  std::string rule = "canonical";
  std::string format = "csv";
};

inline int cmd_bounds(const BoundsArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (a.format != "csv" && a.format != "json") throw ArgumentError("--format must be csv or json");
    if (a.n < 3) throw ArgumentError("--n must be at least 3");
    const int k_min = a.k_min.value_or(2), k_max = a.k_max.value_or(a.n);
    if (k_min < 2 || k_max > a.n || k_min > k_max)
      throw ArgumentError("k range must satisfy 2 <= k-min <= k-max <= n");
    const auto rule = parse_rule(a.rule);
    auto arr = nlohmann::json::array();
    if (a.format == "csv") out << "n,k,bound,partition\n";
    for (int k = k_min; k <= k_max; ++k) {
      const auto b = k_sep_bound(a.n, k, rule);
      if (a.format == "csv")
        out << a.n << ',' << k << ',' << num(b.bound) << ',' << format_partition(b.parts) << '\n';
      else
        arr.push_back({{"n", a.n}, {"k", k}, {"bound", b.bound}, {"partition", format_partition(b.parts)}});
    }
    if (a.format == "json") out << arr.dump(2) << '\n';
    return static_cast<int>(kOk);
  });
}

struct SweepArgs {
  std::string family = "cg";
  int n = 0;
  int k = 2;
  int p_steps = 101;
  std::string out_path;  // empty: write to `out`
  std::string rule = "canonical";
};

/// Writes the sweep CSV to `csv`.
inline void write_sweep(const SweepArgs& a, std::ostream& csv) {
  const Family fam = parse_family(a.family);
  if (fam != Family::kCompleteGraph && fam != Family::kGhz)
    throw ArgumentError("--family must be cg or ghz");
  if (a.p_steps < 2) throw ArgumentError("--p-steps must be at least 2");
  if (a.n < 2) throw ArgumentError("--n must be at least 2");
  if (a.k < 2 || a.k > a.n) throw ArgumentError("--k must satisfy 2 <= k <= n");
  const auto rule = parse_rule(a.rule);
  const auto pb = k_sep_bound(a.n, a.k, rule);
  const auto quad = noise_quadratic(fam, a.n);
  const auto pstar = threshold_p(a.n, a.k, fam, rule);

  csv << "# family=" << a.family << " n=" << a.n << " k=" << a.k << " rule=" << rule_name(rule)
      << " partition=" << format_partition(pb.parts) << '\n';
  csv << "# threshold_p=" << (pstar ? num(*pstar) : std::string("none")) << '\n';
  csv << "p,norm_sq,bound_sq,xi,verdict\n";
  for (int i = 0; i < a.p_steps; ++i) {
    const double p = static_cast<double>(i) / (a.p_steps - 1);
    const double num_sq = quad.at(p);
    const auto v = detect(std::sqrt(num_sq), a.n, a.k, rule);
    csv << num(p) << ',' << num(num_sq) << ',' << num(pb.bound_sq) << ',' << num(num_sq / pb.bound_sq) << ','
        << outcome_name(v.outcome) << '\n';
  }
}

inline int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (a.out_path.empty()) {
      write_sweep(a, out);
      return static_cast<int>(kOk);
    }
    std::ostringstream buffer;
    write_sweep(a, buffer);
    std::ofstream file(a.out_path);
    if (!file) throw ResourceError("cannot open '" + a.out_path + "' for writing");
    file << buffer.str();
    if (!file.flush()) throw ResourceError("failed writing '" + a.out_path + "'");
    return static_cast<int>(kOk);
  });
}

struct DetectArgs {
  std::string state_file;
  int k = 2;
  double zero_tol = 1e-9;
  std::string format = "text";
  std::string rule = "canonical";
};

inline int cmd_detect(const DetectArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (a.format != "text" && a.format != "json") throw ArgumentError("--format must be text or json");
    const auto loaded = load_state_file(a.state_file);
    for (const auto& w : loaded.warnings) err << "warning: " << w << '\n';
    const int n = loaded.ensemble.n();
    if (a.k < 2 || a.k > n)
      throw ArgumentError("--k must satisfy 2 <= k <= n (n = " + std::to_string(n) + ")");
    FullTensorOptions opts;
    opts.zero_tol = a.zero_tol;
    const auto t = full_tensor(loaded.ensemble, opts);
    const double norm = tensor_norm(t);
    const auto v = detect(norm, n, a.k, parse_rule(a.rule));
    const double xi = (norm * norm) / (v.bound * v.bound);

    if (a.format == "json") {
      nlohmann::json j = {{"n", n},        {"k", a.k},   {"norm", norm},
                          {"bound", v.bound}, {"partition", format_partition(v.partition)},
                          {"xi", xi},      {"verdict", outcome_name(v.outcome)}};
      j["p"] = loaded.p;
      out << j.dump(2) << '\n';
    } else {
      out << "state: " << loaded.description << '\n'
          << "n: " << n << '\n'
          << "k: " << a.k << '\n'
          << "norm: " << num(norm) << '\n'
          << "bound: " << num(v.bound) << '\n'
          << "partition: " << format_partition(v.partition) << '\n'
          << "xi: " << num(xi) << '\n'
          << "verdict: " << outcome_name(v.outcome) << '\n';
    }
    return static_cast<int>(kOk);
  });
}

struct SettingsArgs {
  std::string family = "cg";
  int n = 0;
  bool noise = false;
};

inline int cmd_settings(const SettingsArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto settings = measurement_settings(parse_family(a.family), a.n, a.noise);
    for (const auto& s : settings) out << s.str() << '\n';
    out << "# count=" << settings.size() << '\n';
    return static_cast<int>(kOk);
  });
}

struct AppendixArgs {
  int n = 0;
};

inline int cmd_appendix(const AppendixArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (a.n < 2) throw ArgumentError("--n must be at least 2");
    const auto terms = permutation_terms(a.n);
    BigInt sum = 0;
    int x = 1;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (a.n % 2 == 0 && i + 1 == terms.size()) {
        out << "Y^" << a.n << ": " << terms[i] << '\n';
      } else {
        out << "C(" << a.n << "," << x << "): " << terms[i] << '\n';
        x += 2;
      }
      sum += terms[i];
    }
    const BigInt closed = permutation_closed_form(a.n);
    out << "sum: " << sum << '\n'
        << "closed form 2^" << (a.n - 1) << "+" << (a.n % 2 == 0 ? 1 : 0) << ": " << closed << '\n';
    if (sum != closed) {
      out << "MISMATCH\n";
      return static_cast<int>(kCompute);
    }
    out << "match\n";
    return static_cast<int>(kOk);
  });
}

struct GraphArgs {
  int n = 0;
  std::string format = "dot";
};

inline int cmd_graph(const GraphArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (a.format != "dot") throw ArgumentError("--format must be dot");
    const auto g = GraphSpec::complete(a.n);
    out << "graph K" << a.n << " {\n";
    for (int v = 1; v <= a.n; ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return static_cast<int>(kOk);
  });
}

}  // namespace cgsep::cli
