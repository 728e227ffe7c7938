// Copyright 2026 The recallnet Authors
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

#include "recallnet/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "recallnet/errors.hpp"
#include "strings.hpp"

namespace recallnet {

namespace {

using internal::lower;
using internal::trim;

std::string unquote(std::string_view v) {
  if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front()) {
    return std::string(v.substr(1, v.size() - 2));
  }
  return std::string(v);
}

double to_double(std::string_view raw, const std::string& key) {
  const std::string text = unquote(trim(raw));
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw ValidationError(key + ": expected a number, got '" + text + "'");
  }
  return value;
}

double unit_interval(std::string_view raw, const std::string& key) {
  const double v = to_double(raw, key);
  if (!(v >= 0.0 && v <= 1.0)) {
    throw ValidationError(key + " = " + std::string(trim(raw)) + " out of range [0, 1]");
  }
  return v;
}

std::uint64_t to_u64(std::string_view raw, const std::string& key) {
  const std::string text = unquote(trim(raw));
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ValidationError(key + ": expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

std::size_t at_least(std::string_view raw, const std::string& key, std::uint64_t min) {
  const std::uint64_t v = to_u64(raw, key);
  if (v < min) {
    throw ValidationError(key + " = " + std::to_string(v) + " out of range [" +
                          std::to_string(min) + ", inf)");
  }
  return static_cast<std::size_t>(v);
}

bool to_bool(std::string_view raw, const std::string& key) {
  const std::string v = lower(unquote(trim(raw)));
  if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
  if (v == "false" || v == "no" || v == "0" || v == "off") return false;
  throw ValidationError(key + ": expected true | false, got '" + v + "'");
}

std::vector<std::string> split_list(std::string_view raw) {
  std::string_view body = trim(raw);
  if (body.size() >= 2 && body.front() == '[' && body.back() == ']') {
    body = body.substr(1, body.size() - 2);
  }
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t comma = body.find(',', start);
    const std::string_view item =
        trim(body.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                : comma - start));
    if (!item.empty()) items.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

std::vector<double> unit_list(std::string_view raw, const std::string& key) {
  std::vector<double> values;
  for (const auto& item : split_list(raw)) values.push_back(unit_interval(item, key));
  if (values.empty()) throw ValidationError(key + " must list at least one value in [0, 1]");
  return values;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  // Prefer the shortest form that still reads back exactly.
  for (int precision = 1; precision <= 17; ++precision) {
    char shorter[64];
    std::snprintf(shorter, sizeof shorter, "%.*g", precision, v);
    if (std::stod(shorter) == v) return shorter;
  }
  return buf;
}

std::string fmt_list(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += fmt(values[i]);
  }
  return out;
}

using Setter = std::function<void(ExperimentConfig&, std::string_view, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"topology.kind",
       [](ExperimentConfig& c, std::string_view v, const std::string&) {
         c.topology.kind = parse_topology_kind(unquote(trim(v)));
       }},
      {"topology.n",
       [](ExperimentConfig& c, std::string_view v, const std::string& k) {
         c.topology.n = at_least(v, k, 1);
       }},
      {"topology.er_p",
       [](ExperimentConfig& c, std::string_view v, const std::string& k) {
         c.topology.er_p = unit_interval(v, k);
       }},
      {"topology.sbm_blocks",
       [](ExperimentConfig& c, std::string_view v, const std::string& k) {
         c.topology.sbm_blocks = at_least(v, k, 1);
       }},
      {"topology.sbm_p_in",
       [](ExperimentConfig& c, std::string_view v, const std::string& k) {
         c.topology.sbm_p_in = unit_interval(v, k);
       }},
      {"topology.sbm_p_out",
       [](ExperimentConfig& c, std::string_view v, const std::string& k) {
         c.topology.sbm_p_out = unit_interval(v, k);
       }},
      {"similarity.metric",
       [](ExperimentConfig& c, std::string_view v, const std::string&) {
         c.metric = parse_similarity_metric(unquote(trim(v)));
       }},
      {"decay.family",
       [](ExperimentConfig& c, std::string_view v, const std::string&) {
         c.decay.set_family(parse_decay_family(unquote(trim(v))));
       }},
      {"decay.delta",
       [](ExperimentConfig& c, std::string_view v, const std::string& k) {
         c.decay.set_delta(unit_interval(v, k));
       }},
      {"decay.overrides",
       [](ExperimentConfig& c, std::string_view v, const std::string& k) {
         for (const auto& item : split_list(v)) {
           const auto colon = item.find(':');
           if (colon == std::string::npos) {
             throw ValidationError(k + ": expected node:delta pairs, got '" + item + "'");
           }
           const auto node = to_u64(std::string_view(item).substr(0, colon), k);
           c.decay.set_node_delta(static_cast<NodeId>(node),
                                  unit_interval(std::string_view(item).substr(colon + 1), k));
         }
       }},
      {"adversary.criterion",
       [](ExperimentConfig& c, std::string_view v, const std::string&) {
         c.adversary.criterion = parse_attack_criterion(unquote(trim(v)));
       }},
      {"adversary.fraction",
       [](ExperimentConfig& c, std::string_view v, const std::string& k) {
         c.adversary.fraction = unit_interval(v, k);
       }},
      {"adversary.k",
       [](ExperimentConfig& c, std::string_view v, const std::string& k) {
         c.adversary.absolute_k = at_least(v, k, 0);
       }},
      {"adversary.initial_fraction",
       [](ExperimentConfig& c, std::string_view v, const std::string& k) {
         c.initial_attack_fraction = unit_interval(v, k);
       }},
      {"reconnect.rho",
       [](ExperimentConfig& c, std::string_view v, const std::string& k) {
         c.reconnect.rho = unit_interval(v, k);
       }},
      {"reconnect.theta",
       [](ExperimentConfig& c, std::string_view v, const std::string& k) {
         c.reconnect.theta = unit_interval(v, k);
       }},
      {"reconnect.theta_rule",
       [](ExperimentConfig& c, std::string_view v, const std::string&) {
         c.reconnect.theta_rule = parse_theta_rule(unquote(trim(v)));
       }},
      {"reconnect.candidate_rule",
       [](ExperimentConfig& c, std::string_view v, const std::string&) {
         c.reconnect.candidate_rule = parse_candidate_rule(unquote(trim(v)));
       }},
      {"reconnect.m",
       [](ExperimentConfig& c, std::string_view v, const std::string& k) {
         c.reconnect.m = at_least(v, k, 1);
       }},
      {"experiment.mode",
       [](ExperimentConfig& c, std::string_view v, const std::string&) {
         c.mode = parse_mode(unquote(trim(v)));
       }},
      {"experiment.steps",
       [](ExperimentConfig& c, std::string_view v, const std::string& k) {
         c.steps = at_least(v, k, 1);
       }},
      {"experiment.runs",
       [](ExperimentConfig& c, std::string_view v, const std::string& k) {
         c.runs = at_least(v, k, 1);
       }},
      {"experiment.base_seed",
       [](ExperimentConfig& c, std::string_view v, const std::string& k) {
         c.base_seed = to_u64(v, k);
       }},
      {"experiment.reference_runs",
       [](ExperimentConfig& c, std::string_view v, const std::string& k) {
         c.reference_runs = to_bool(v, k);
       }},
      {"sweep.delta",
       [](ExperimentConfig& c, std::string_view v, const std::string& k) {
         c.sweep->deltas = unit_list(v, k);
       }},
      {"sweep.rho",
       [](ExperimentConfig& c, std::string_view v, const std::string& k) {
         c.sweep->rhos = unit_list(v, k);
       }},
  };
  return table;
}

}  // namespace

ExperimentConfig parse_config_text(std::string_view text) {
  ExperimentConfig cfg;
  cfg.sweep = SweepSpec{};
  std::string section;
  bool saw_kind = false;
  std::size_t line_no = 0;
  std::istringstream lines{std::string(text)};
  std::string raw;
  while (std::getline(lines, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto cut = line.find_first_of("#;"); cut != std::string_view::npos) {
      line = line.substr(0, cut);
    }
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') throw ValidationError(where + "unterminated section header");
      section = lower(trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError(where + "expected `key = value`, got '" + std::string(line) + "'");
    }
    std::string key = lower(trim(line.substr(0, eq)));
    if (key.find('.') == std::string::npos) {
      if (section.empty()) throw ValidationError(where + "key '" + key + "' outside a section");
      key = section + "." + key;
    }
    const auto it = setters().find(key);
    if (it == setters().end()) throw ValidationError(where + "unknown key '" + key + "'");
    it->second(cfg, line.substr(eq + 1), key);
    if (key == "topology.kind") saw_kind = true;
  }
  if (!saw_kind) throw ValidationError("missing required key 'topology.kind' in [topology]");
  cfg.validate();
  return cfg;
}

ExperimentConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str());
}

std::string serialize_config(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "[topology]\n"
      << "kind = " << to_string(c.topology.kind) << '\n'
      << "n = " << c.topology.n << '\n'
      << "er_p = " << fmt(c.topology.er_p) << '\n'
      << "sbm_blocks = " << c.topology.sbm_blocks << '\n'
      << "sbm_p_in = " << fmt(c.topology.sbm_p_in) << '\n'
      << "sbm_p_out = " << fmt(c.topology.sbm_p_out) << "\n\n";
  out << "[similarity]\n"
      << "metric = " << to_string(c.metric) << "\n\n";
  out << "[decay]\n"
      << "family = " << to_string(c.decay.family()) << '\n'
      << "delta = " << fmt(c.decay.delta()) << '\n';
  if (!c.decay.node_overrides().empty()) {
    out << "overrides = ";
    bool first = true;
    for (const auto& [node, delta] : c.decay.node_overrides()) {
      out << (first ? "" : ", ") << node << ':' << fmt(delta);
      first = false;
    }
    out << '\n';
  }
  out << "\n[adversary]\n"
      << "criterion = " << to_string(c.adversary.criterion) << '\n'
      << "fraction = " << fmt(c.adversary.fraction) << '\n';
  if (c.adversary.absolute_k) out << "k = " << *c.adversary.absolute_k << '\n';
  out << "initial_fraction = " << fmt(c.initial_attack_fraction) << "\n\n";
  out << "[reconnect]\n"
      << "rho = " << fmt(c.reconnect.rho) << '\n'
      << "theta_rule = " << to_string(c.reconnect.theta_rule) << '\n'
      << "theta = " << fmt(c.reconnect.theta) << '\n'
      << "candidate_rule = " << to_string(c.reconnect.candidate_rule) << '\n'
      << "m = " << c.reconnect.m << "\n\n";
  out << "[experiment]\n"
      << "mode = " << to_string(c.mode) << '\n'
      << "steps = " << c.steps << '\n'
      << "runs = " << c.runs << '\n'
      << "base_seed = " << c.base_seed << '\n'
      << "reference_runs = " << (c.reference_runs ? "true" : "false") << '\n';
  if (c.sweep) {
    out << "\n[sweep]\n"
        << "delta = " << fmt_list(c.sweep->deltas) << '\n'
        << "rho = " << fmt_list(c.sweep->rhos) << '\n';
  }
  return out.str();
}

}  // namespace recallnet
