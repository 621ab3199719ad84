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
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cgsep/errors.hpp"
#include "cgsep/graph.hpp"
#include "cgsep/stabilizer.hpp"
#include "cgsep/state.hpp"
#include "cgsep/state_factory.hpp"

namespace cgsep {

// State files are JSON documents, optionally preceded by '#' comment lines.
//
//   # basis order: qubit 1 is the most significant bit of the amplitude index
//   {"family": "cg", "n": 5, "p": 0.1}
//   {"family": "graph", "n": 4, "edges": [[1,2],[2,3],[3,4]]}
//   {"n": 1, "amplitudes": [[1, 0], [0, 0]]}
//
// "p" is optional everywhere and mixes in |1...1> with that weight.

inline constexpr double kStateFileNormTolerance = 1e-6;

struct LoadedState {
  MixedEnsemble ensemble;
  std::string description;
  std::vector<std::string> warnings;
  double p = 0.0;  // weight of the |1...1> admixture
};

namespace detail {

inline std::string strip_comment_lines(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') continue;
    out << line << '\n';
  }
  return out.str();
}

inline double json_number(const nlohmann::json& v, const std::string& what) {
  if (!v.is_number()) throw ArgumentError(what + " must be a number");
  return v.get<double>();
}

inline int json_int(const nlohmann::json& v, const std::string& what) {
  if (!v.is_number_integer()) throw ArgumentError(what + " must be an integer");
  return v.get<int>();
}

}  // namespace detail

inline LoadedState parse_state_file(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(detail::strip_comment_lines(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError(std::string("state file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ArgumentError("state file must contain a JSON object");
  if (!doc.contains("n")) throw ArgumentError("state file is missing \"n\"");
  const int n = detail::json_int(doc["n"], "\"n\"");
  detail::require(n >= 1 && n <= kMaxStateQubits, "\"n\" out of range");
  const double p = doc.contains("p") ? detail::json_number(doc["p"], "\"p\"") : 0.0;
  detail::require(p >= 0.0 && p <= 1.0, "\"p\" must lie in [0, 1]");

  const bool has_family = doc.contains("family"), has_amps = doc.contains("amplitudes");
  if (has_family == has_amps) throw ArgumentError("state file needs exactly one of \"family\" or \"amplitudes\"");

  std::vector<std::string> warnings;
  std::ostringstream desc;
  if (has_family) {
    if (!doc["family"].is_string()) throw ArgumentError("\"family\" must be a string");
    const auto name = doc["family"].get<std::string>();
    desc << name << " n=" << n << " p=" << p;
    if (name == "graph") {
      if (!doc.contains("edges") || !doc["edges"].is_array())
        throw ArgumentError("graph family needs an \"edges\" array");
      std::vector<GraphSpec::Edge> edges;
      for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2) throw ArgumentError("each edge must be a pair [a, b]");
        edges.emplace_back(detail::json_int(e[0], "edge vertex"), detail::json_int(e[1], "edge vertex"));
      }
      GraphSpec g(n, edges);
      return {noisy_mixture(graph_state(g), NoiseSpec(p), stabilizer_group(g)), desc.str(), warnings, p};
    }
    if (doc.contains("edges")) throw ArgumentError("\"edges\" is only valid with family \"graph\"");
    return {family_ensemble(parse_family(name), n, p), desc.str(), warnings, p};
  }

  const auto& raw = doc["amplitudes"];
  if (!raw.is_array()) throw ArgumentError("\"amplitudes\" must be an array of [re, im] pairs");
  if (raw.size() != (std::size_t{1} << n))
    throw ArgumentError("expected " + std::to_string(std::size_t{1} << n) + " amplitudes, got " +
                        std::to_string(raw.size()));
  std::vector<Complex> amps;
  amps.reserve(raw.size());
  for (const auto& c : raw) {
    if (!c.is_array() || c.size() != 2) throw ArgumentError("each amplitude must be a pair [re, im]");
    amps.emplace_back(detail::json_number(c[0], "amplitude"), detail::json_number(c[1], "amplitude"));
  }
  const double norm_sq = PureState::squared_norm(amps);
  if (!(norm_sq > 0.0) || !std::isfinite(norm_sq)) throw ArgumentError("amplitudes have zero or non-finite norm");
  if (std::abs(norm_sq - 1.0) > kStateFileNormTolerance)
    warnings.push_back("amplitudes had squared norm " + std::to_string(norm_sq) + "; renormalized");
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (auto& c : amps) c *= scale;
  desc << "raw n=" << n << " p=" << p;
  return {noisy_mixture(PureState(n, std::move(amps)), NoiseSpec(p)), desc.str(), warnings, p};
}

inline LoadedState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open state file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_state_file(ss.str());
}

/// Raw-amplitude state file for `state`, with the bit-order header comment.
inline std::string write_state_file(const PureState& state, std::optional<double> p = std::nullopt) {
  nlohmann::json doc;
  doc["n"] = state.n();
  auto amps = nlohmann::json::array();
  for (const auto& c : state.amplitudes()) amps.push_back({c.real(), c.imag()});
  doc["amplitudes"] = std::move(amps);
  if (p) doc["p"] = *p;
  return "# basis order: qubit 1 is the most significant bit of the amplitude index\n" + doc.dump() + "\n";
}

}  // namespace cgsep
