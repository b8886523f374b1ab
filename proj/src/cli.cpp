// Copyright 2026 The divbound Authors.
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

#include "divbound/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "divbound/bounds.hpp"
#include "divbound/csiszar.hpp"
#include "divbound/error.hpp"
#include "divbound/harness.hpp"
#include "divbound/measures.hpp"
#include "divbound/simplex.hpp"

namespace divbound::cli {
namespace {

using json = nlohmann::ordered_json;

// JSON numbers carry the same 9 significant digits as the text output.
json number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return std::strtod(format_number(value).c_str(), nullptr);
}

std::string format_s(double s) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, s);
  return std::string(buf, res.ptr);
}

std::string trim(std::string_view text) {
  const auto space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!text.empty() && space(text.front())) text.remove_prefix(1);
  while (!text.empty() && space(text.back())) text.remove_suffix(1);
  return std::string(text);
}

[[noreturn]] void input_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kMalformedInput, where + ": " + what);
}

double parse_literal(const std::string& token, const std::string& where) {
  std::string_view view = token;
  if (!view.empty() && view.front() == '+') view.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(view.data(), view.data() + view.size(), value);
  if (view.empty() || res.ec != std::errc() || res.ptr != view.data() + view.size()) {
    input_error(where, "not a decimal literal: '" + token + "'");
  }
  return value;
}

struct Row {
  std::vector<double> values;
  std::string where;  // file and line (CSV) or distribution index (JSON)
};

std::vector<Row> parse_csv(const std::string& path, std::istream& in) {
  std::vector<Row> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    std::vector<double> row;
    std::stringstream fields(line);
    std::string field;
    std::size_t entry = 0;
    while (std::getline(fields, field, ',')) {
      ++entry;
      row.push_back(parse_literal(trim(field), path + ":" + std::to_string(line_no) +
                                                   ": entry " + std::to_string(entry)));
    }
    if (line.back() == ',') {
      input_error(path + ":" + std::to_string(line_no), "trailing comma");
    }
    rows.push_back({std::move(row), path + ":" + std::to_string(line_no)});
  }
  return rows;
}

std::vector<double> json_row(const json& array, const std::string& where) {
  std::vector<double> row;
  for (std::size_t i = 0; i < array.size(); ++i) {
    if (!array[i].is_number()) {
      input_error(where + ": entry " + std::to_string(i + 1), "expected a number");
    }
    row.push_back(array[i].get<double>());
  }
  return row;
}

std::vector<Row> parse_json(const std::string& path, const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    input_error(path, e.what());
  }
  if (!doc.is_array() || doc.empty()) input_error(path, "expected a non-empty array");
  if (!doc.front().is_array()) return {Row{json_row(doc, path), path}};
  std::vector<Row> rows;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string where = path + ": distribution " + std::to_string(i + 1);
    if (!doc[i].is_array()) input_error(where, "expected an array of numbers");
    rows.push_back({json_row(doc[i], where), where});
  }
  return rows;
}

bool looks_like_json(const std::string& path, const std::string& text) {
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) return true;
  const auto first = std::find_if(text.begin(), text.end(),
                                  [](unsigned char c) { return std::isspace(c) == 0; });
  return first != text.end() && *first == '[';
}

std::vector<Row> read_rows(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kMalformedInput, path + ": cannot open file");
  const std::string text((std::istreambuf_iterator<char>(in)), {});
  std::vector<Row> rows;
  if (looks_like_json(path, text)) {
    rows = parse_json(path, text);
  } else {
    std::istringstream stream(text);
    rows = parse_csv(path, stream);
  }
  if (rows.empty()) input_error(path, "no distributions found");
  return rows;
}

// Validation errors are re-raised with the file and line of the offending row.
std::vector<Distribution> load(const std::string& path, bool normalize) {
  std::vector<Distribution> out;
  for (Row& row : read_rows(path)) {
    try {
      if (normalize) {
        double total = 0.0;
        for (std::size_t k = 0; k < row.values.size(); ++k) {
          const double v = row.values[k];
          if (!(v > 0.0) || !std::isfinite(v)) {
            throw Error(ErrorCode::kNonPositiveEntry,
                        "entry " + std::to_string(k + 1) + " must be positive and finite");
          }
          total += v;
        }
        for (double& v : row.values) v /= total;
      }
      out.push_back(validate(row.values));
    } catch (const Error& e) {
      throw Error(e.code(), row.where + ": " + e.what());
    }
  }
  return out;
}

struct Pairs {
  std::vector<Distribution> p;
  std::vector<Distribution> q;
  std::size_t count = 0;

  const Distribution& left(std::size_t i) const { return p.size() == 1 ? p[0] : p[i]; }
  const Distribution& right(std::size_t i) const { return q.size() == 1 ? q[0] : q[i]; }
};

// A single distribution on either side is paired with every row of the other.
Pairs load_pairs(const std::string& p_path, const std::string& q_path, bool normalize) {
  Pairs pairs{load(p_path, normalize), load(q_path, normalize), 0};
  if (pairs.p.size() != pairs.q.size() && pairs.p.size() != 1 && pairs.q.size() != 1) {
    throw Error(ErrorCode::kLengthMismatch,
                "--p has " + std::to_string(pairs.p.size()) + " distributions but --q has " +
                    std::to_string(pairs.q.size()));
  }
  pairs.count = std::max(pairs.p.size(), pairs.q.size());
  for (std::size_t i = 0; i < pairs.count; ++i) {
    if (pairs.left(i).size() != pairs.right(i).size()) {
      throw Error(ErrorCode::kLengthMismatch,
                  "pair " + std::to_string(i + 1) + ": P has " +
                      std::to_string(pairs.left(i).size()) + " entries but Q has " +
                      std::to_string(pairs.right(i).size()));
    }
  }
  return pairs;
}

std::string suffix(const Pairs& pairs, std::size_t i) {
  return pairs.count == 1 ? "" : "[" + std::to_string(i + 1) + "]";
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

json inputs_json(const std::string& p, const std::string& q, bool normalize) {
  return json{{"p", p}, {"q", q}, {"normalize", normalize}};
}

// -- compute ---------------------------------------------------------------

struct MeasureRequest {
  std::optional<MeasureKind> kind;
  double s = 0.0;
  std::string label;
};

MeasureRequest parse_measure_flag(const std::string& flag) {
  MeasureRequest req;
  req.label = flag;
  if (flag.rfind("phi_s:", 0) == 0) {
    req.s = parse_literal(flag.substr(6), "--measure");
    if (!std::isfinite(req.s)) throw Error(ErrorCode::kBadParameter, "phi_s order must be finite");
    return req;
  }
  req.kind = parse_measure(flag);
  if (!req.kind) throw Error(ErrorCode::kBadParameter, "unknown measure '" + flag + "'");
  return req;
}

int do_compute(const std::string& measure, const std::string& p_path, const std::string& q_path,
               bool normalize, bool as_json, std::ostream& out) {
  const MeasureRequest req = parse_measure_flag(measure);
  const Pairs pairs = load_pairs(p_path, q_path, normalize);
  json results = json::array();
  for (std::size_t i = 0; i < pairs.count; ++i) {
    const double value = req.kind ? divergence(*req.kind, pairs.left(i), pairs.right(i))
                                  : phi_s(req.s, pairs.left(i), pairs.right(i));
    if (as_json) {
      results.push_back({{"pair", i + 1}, {"measure", req.label}, {"value", number(value)}});
    } else {
      out << req.label << suffix(pairs, i) << '\t' << format_number(value) << '\n';
    }
  }
  if (as_json) {
    json inputs = inputs_json(p_path, q_path, normalize);
    inputs["measure"] = req.label;
    emit(out, json{{"command", "compute"},
                   {"inputs", inputs},
                   {"results", results},
                   {"violations", json::array()}});
  }
  return kExitOk;
}

// -- verify ----------------------------------------------------------------

json link_json(const ChainLink& link) {
  return json{{"label", link.label},         {"lhs", number(link.lhs)},
              {"rhs", number(link.rhs)},     {"slack", number(link.slack)},
              {"pass", link.pass},           {"equality", link.equality}};
}

json chain_json(const BoundChainReport& report) {
  json values = json::object();
  for (const auto& [name, value] : report.values) values[name] = number(value);
  json links = json::array();
  for (const ChainLink& link : report.links) links.push_back(link_json(link));
  return json{{"id", report.chain_id},
              {"applicable", report.applicable},
              {"note", report.note},
              {"s", report.s ? number(*report.s) : json(nullptr)},
              {"range", {{"r", number(report.range.lower)}, {"R", number(report.range.upper)}}},
              {"values", values},
              {"links", links}};
}

int do_verify(const std::string& p_path, const std::string& q_path,
              const std::vector<double>& s_values, bool normalize, bool as_json,
              std::ostream& out) {
  const Pairs pairs = load_pairs(p_path, q_path, normalize);
  json results = json::array();
  json violations = json::array();
  for (std::size_t i = 0; i < pairs.count; ++i) {
    json chains = json::array();
    for (const BoundChainReport& report : verify_all(pairs.left(i), pairs.right(i), s_values)) {
      if (as_json) chains.push_back(chain_json(report));
      const std::string prefix = report.chain_id + suffix(pairs, i);
      if (!report.applicable) {
        if (!as_json) out << prefix << "\tn/a\t" << report.note << '\n';
        continue;
      }
      for (const ChainLink& link : report.links) {
        if (!link.pass) {
          violations.push_back({{"pair", i + 1},
                                {"chain", report.chain_id},
                                {"link", link.label},
                                {"lhs", number(link.lhs)},
                                {"rhs", number(link.rhs)},
                                {"slack", number(link.slack)}});
        }
        if (!as_json) {
          out << prefix << '/' << link.label << '\t' << format_number(link.lhs) << '\t'
              << format_number(link.rhs) << '\t' << format_number(link.slack) << '\t'
              << (link.pass ? (link.equality ? "equal" : "pass") : "FAIL") << '\n';
        }
      }
    }
    if (as_json) results.push_back({{"pair", i + 1}, {"chains", chains}});
  }
  if (as_json) {
    json inputs = inputs_json(p_path, q_path, normalize);
    json s_list = json::array();
    for (double s : s_values) s_list.push_back(number(s));
    inputs["s"] = s_list;
    emit(out, json{{"command", "verify"},
                   {"inputs", inputs},
                   {"results", results},
                   {"violations", violations}});
  } else {
    out << "violations\t" << violations.size() << '\n';
  }
  return violations.empty() ? kExitOk : kExitViolation;
}

// -- fuzz ------------------------------------------------------------------

json witness_json(const Witness& w) {
  json p = json::array();
  json q = json::array();
  for (double v : w.p) p.push_back(number(v));
  for (double v : w.q) q.push_back(number(v));
  return json{{"dim", w.dim},   {"concentration", number(w.concentration)},
              {"trial", w.trial}, {"seed", w.seed},
              {"p", p},         {"q", q}};
}

int do_fuzz(const FuzzConfig& config, bool as_json, std::ostream& out) {
  const FuzzSummary summary = fuzz(config);
  if (as_json) {
    json dims = json::array();
    json conc = json::array();
    json s_list = json::array();
    for (std::size_t d : config.dims) dims.push_back(d);
    for (double c : config.concentrations) conc.push_back(number(c));
    for (double s : config.s_values) s_list.push_back(number(s));
    json per_chain = json::object();
    for (const auto& [id, m] : summary.min_slack_per_chain) {
      per_chain[id] = {{"slack", number(m.slack)}, {"link", m.link},
                       {"witness", witness_json(m.witness)}};
    }
    json per_link = json::object();
    for (const auto& [key, m] : summary.min_slack_per_link) per_link[key] = number(m.slack);
    json errata = json::array();
    for (const ErrataDiff& d : summary.errata_diffs) {
      errata.push_back({{"equation", d.equation},
                        {"printed", number(d.printed)},
                        {"derived", number(d.derived)},
                        {"disagreements", d.disagreements},
                        {"witness", witness_json(d.witness)}});
    }
    json violations = json::array();
    for (const Violation& v : summary.violations) {
      violations.push_back({{"chain", v.chain_id},
                            {"link", v.link},
                            {"lhs", number(v.lhs)},
                            {"rhs", number(v.rhs)},
                            {"slack", number(v.slack)},
                            {"witness", witness_json(v.witness)}});
    }
    emit(out, json{{"command", "fuzz"},
                   {"inputs",
                    {{"dims", dims},
                     {"trials", config.trials_per_dim},
                     {"seed", config.seed},
                     {"concentrations", conc},
                     {"s", s_list},
                     {"tolerance_scale", number(config.tolerance_scale)}}},
                   {"results",
                    {{"trials", summary.trials},
                     {"total_links_checked", summary.total_links_checked},
                     {"not_applicable", summary.not_applicable},
                     {"max_identity_residual", number(summary.max_identity_residual)},
                     {"min_slack_per_chain", per_chain},
                     {"min_slack_per_link", per_link},
                     {"errata_diffs", errata}}},
                   {"violations", violations}});
  } else {
    out << "trials\t" << summary.trials << '\n'
        << "total_links_checked\t" << summary.total_links_checked << '\n'
        << "not_applicable\t" << summary.not_applicable << '\n'
        << "max_identity_residual\t" << format_number(summary.max_identity_residual) << '\n';
    for (const auto& [id, m] : summary.min_slack_per_chain) {
      out << "min_slack/" << id << '\t' << format_number(m.slack) << '\t' << m.link << '\n';
    }
    for (const ErrataDiff& d : summary.errata_diffs) {
      out << "errata/" << d.equation << '\t' << d.disagreements << '\n';
    }
    for (const Violation& v : summary.violations) {
      out << "violation/" << v.chain_id << '/' << v.link << '\t' << format_number(v.slack)
          << "\tdim=" << v.witness.dim << " conc=" << format_number(v.witness.concentration)
          << " trial=" << v.witness.trial << '\n';
    }
    out << "violations\t" << summary.violations.size() << '\n';
  }
  return summary.violations.empty() ? kExitOk : kExitViolation;
}

// -- errata ----------------------------------------------------------------

int do_errata(const std::string& p_path, const std::string& q_path, bool normalize,
              bool as_json, std::ostream& out) {
  const Pairs pairs = load_pairs(p_path, q_path, normalize);
  json results = json::array();
  for (std::size_t i = 0; i < pairs.count; ++i) {
    for (const ErrataEntry& e : errata_compare(pairs.left(i), pairs.right(i))) {
      if (as_json) {
        results.push_back({{"pair", i + 1},
                           {"equation", e.equation},
                           {"description", e.description},
                           {"printed_coefficient", number(e.printed_coefficient)},
                           {"derived_coefficient", number(e.derived_coefficient)},
                           {"printed_bound", number(e.printed_bound)},
                           {"derived_bound", number(e.derived_bound)},
                           {"agree", e.agree}});
      } else {
        out << e.equation << suffix(pairs, i) << '\t' << format_number(e.printed_coefficient)
            << '\t' << format_number(e.derived_coefficient) << '\t'
            << format_number(e.printed_bound) << '\t' << format_number(e.derived_bound) << '\t'
            << (e.agree ? "agree" : "disagree") << '\n';
      }
    }
  }
  if (as_json) {
    emit(out, json{{"command", "errata"},
                   {"inputs", inputs_json(p_path, q_path, normalize)},
                   {"results", results},
                   {"violations", json::array()}});
  }
  return kExitOk;
}

// -- table -----------------------------------------------------------------

int do_table(double r, double R, const std::vector<double>& s_values, bool as_json,
             std::ostream& out) {
  const RatioRange range = RatioRange::make(r, R);
  std::vector<std::pair<std::string, double>> rows;
  const auto add_set = [&](const std::string& fam, const BoundSet& set) {
    rows.emplace_back("alpha_" + fam, set.alpha);
    rows.emplace_back("beta_" + fam, set.beta);
    rows.emplace_back("gamma_" + fam, set.gamma);
  };
  add_set("delta", delta_bound_set(range));
  add_set("psi", psi_bound_set(range));
  // As printed; these are not the secant and divided difference of f_psi.
  rows.emplace_back("beta_psi_printed", psi_beta_printed_form(range));
  rows.emplace_back("gamma_psi_printed",
                    range.degenerate() ? 1.0 : psi_gamma_power_mean_form(range));
  for (double s : s_values) {
    if (!std::isfinite(s)) throw Error(ErrorCode::kBadParameter, "s values must be finite");
    const std::string tag = "[s=" + format_s(s) + "]";
    for (Family fam : {Family::kDelta, Family::kPsi}) {
      const ExtremaPair e = extrema_g(fam, s, range);
      const std::string name(to_string(fam));
      rows.emplace_back("m_" + name + tag, e.m);
      rows.emplace_back("M_" + name + tag, e.M);
    }
  }
  if (as_json) {
    json results = json::object();
    for (const auto& [label, value] : rows) results[label] = number(value);
    json s_list = json::array();
    for (double s : s_values) s_list.push_back(number(s));
    emit(out, json{{"command", "table"},
                   {"inputs", {{"r", number(r)}, {"R", number(R)}, {"s", s_list}}},
                   {"results", results},
                   {"violations", json::array()}});
  } else {
    for (const auto& [label, value] : rows) out << label << '\t' << format_number(value) << '\n';
  }
  return kExitOk;
}

}  // namespace

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

std::vector<std::vector<double>> read_distributions(const std::string& path) {
  std::vector<std::vector<double>> out;
  for (Row& row : read_rows(path)) out.push_back(std::move(row.values));
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Csiszar f-divergence bounds: compute, verify and fuzz"};
  app.name("divbound");
  app.require_subcommand(1);

  std::string p_path;
  std::string q_path;
  std::string measure;
  bool as_json = false;
  bool normalize = false;
  std::vector<double> s_values{-1.0, 0.0, 0.5, 1.0, 2.0};
  FuzzConfig config;
  config.threads = threads_from_env();
  double r = 1.0;
  double R = 1.0;

  const auto pair_options = [&](CLI::App* sub) {
    sub->add_option("--p", p_path, "file holding P (CSV or JSON)")->required();
    sub->add_option("--q", q_path, "file holding Q (CSV or JSON)")->required();
    sub->add_flag("--normalize", normalize, "divide each row by its sum after positivity check");
    sub->add_flag("--json", as_json, "emit a JSON document");
  };

  CLI::App* compute = app.add_subcommand("compute", "evaluate one measure");
  compute->add_option("--measure", measure, "measure name or phi_s:S")->required();
  pair_options(compute);

  CLI::App* verify = app.add_subcommand("verify", "run every registered chain");
  pair_options(verify);
  verify->add_option("--s", s_values, "comma-separated s values")->delimiter(',');

  CLI::App* fuzz_cmd = app.add_subcommand("fuzz", "randomized verification");
  fuzz_cmd->add_option("--dims", config.dims, "dimensions")->delimiter(',');
  fuzz_cmd->add_option("--trials", config.trials_per_dim, "trials per (dim, concentration)");
  fuzz_cmd->add_option("--seed", config.seed, "base seed");
  fuzz_cmd->add_option("--conc", config.concentrations, "Dirichlet concentrations")
      ->delimiter(',');
  fuzz_cmd->add_option("--s", config.s_values, "s values")->delimiter(',');
  fuzz_cmd->add_option("--tolerance-scale", config.tolerance_scale, "link tolerance multiplier");
  fuzz_cmd->add_flag("--json", as_json, "emit a JSON document");

  CLI::App* errata = app.add_subcommand("errata", "compare printed and derived variants");
  pair_options(errata);

  CLI::App* table = app.add_subcommand("table", "alpha/beta/gamma and m/M constants");
  table->add_option("--r", r, "lower ratio bound")->required();
  table->add_option("--R", R, "upper ratio bound")->required();
  table->add_option("--s", s_values, "s values")->delimiter(',');
  table->add_flag("--json", as_json, "emit a JSON document");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "divbound: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*compute) return do_compute(measure, p_path, q_path, normalize, as_json, out);
    if (*verify) return do_verify(p_path, q_path, s_values, normalize, as_json, out);
    if (*fuzz_cmd) return do_fuzz(config, as_json, out);
    if (*errata) return do_errata(p_path, q_path, normalize, as_json, out);
    if (*table) return do_table(r, R, s_values, as_json, out);
  } catch (const Error& e) {
    err << "divbound: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace divbound::cli
