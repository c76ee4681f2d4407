// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tangent/catalog/catalog.hpp"
#include "tangent/catalog/existence.hpp"
#include "tangent/engine/classify.hpp"
#include "tangent/engine/verify.hpp"
#include "tangent/invariants/invariants.hpp"

namespace tangent::engine {

enum class Format { Markdown, Csv, Json };

inline Format parse_format(const std::string& s) {
  if (s == "md" || s == "markdown") return Format::Markdown;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw Error("unknown format '" + s + "' (expected md, csv or json)");
}

inline const std::vector<std::string>& table_names() {
  static const std::vector<std::string> names{"table1", "table2", "table3", "table4",
                                              "table5", "unknown_set", "full_sweep"};
  return names;
}

struct Table {
  std::string name;
  std::string title;
  std::int64_t bound = 0;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> problems;  // rows the engine failed to reproduce

  bool ok() const { return problems.empty(); }
};

namespace detail {

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

inline std::string params_text(const SymmetricPairInstance& inst) {
  return inst.params.empty() ? std::string("-") : inst.bindings();
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string numerals(const std::set<std::string>& s) {
  // (i) .. (v) in numbering order
  static const std::vector<std::string> order{"i", "ii", "iii", "iv", "v"};
  std::vector<std::string> out;
  for (const auto& o : order)
    if (s.count(o)) out.push_back("(" + o + ")");
  return out.empty() ? std::string("-") : join(out, ", ");
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline std::string md_field(const std::string& s) {
  std::string q;
  for (char c : s) q += c == '|' ? std::string("\\|") : std::string(1, c);
  return q;
}

}  // namespace detail

inline std::string render(const Table& t, Format f, const std::string& catalog_hash = "") {
  std::ostringstream out;
  switch (f) {
    case Format::Markdown: {
      out << "## " << t.title << " (bound " << t.bound << ")\n\n|";
      for (const auto& c : t.columns) out << ' ' << detail::md_field(c) << " |";
      out << "\n|";
      for (std::size_t i = 0; i < t.columns.size(); ++i) out << "---|";
      out << '\n';
      for (const auto& r : t.rows) {
        out << '|';
        for (const auto& c : r) out << ' ' << detail::md_field(c) << " |";
        out << '\n';
      }
      out << '\n' << (t.ok() ? "All rows reproduced." : "Rows not reproduced: " + std::to_string(t.problems.size()))
          << '\n';
      for (const auto& p : t.problems) out << "- " << p << '\n';
      break;
    }
    case Format::Csv: {
      std::vector<std::string> cells;
      for (const auto& c : t.columns) cells.push_back(detail::csv_field(c));
      out << detail::join(cells, ",") << '\n';
      for (const auto& r : t.rows) {
        cells.clear();
        for (const auto& c : r) cells.push_back(detail::csv_field(c));
        out << detail::join(cells, ",") << '\n';
      }
      break;
    }
    case Format::Json: {
      nlohmann::ordered_json j;
      j["table"] = t.name;
      j["title"] = t.title;
      j["bound"] = t.bound;
      if (!catalog_hash.empty()) j["catalog_hash"] = catalog_hash;
      j["columns"] = t.columns;
      j["rows"] = nlohmann::ordered_json::array();
      for (const auto& r : t.rows) {
        nlohmann::ordered_json row;
        for (std::size_t i = 0; i < t.columns.size(); ++i) row[t.columns[i]] = r[i];
        j["rows"].push_back(row);
      }
      j["ok"] = t.ok();
      j["problems"] = t.problems;
      out << j.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

// Instances of a standard-form row within the bound, as pairs of family
// instances found by the parser.
struct Table1Instance {
  const Table1Row* row;
  Params row_params;
  SymmetricPairInstance instance;
};

inline std::vector<Table1Instance> table1_instances(const Catalog& cat, std::int64_t bound) {
  std::vector<Table1Instance> out;
  for (const auto& row : cat.table1()) {
    std::vector<Params> tries;
    if (row.params.empty())
      tries.push_back({});
    else
      for (std::int64_t n = 0; n <= bound; ++n) tries.push_back({n});
    for (const auto& p : tries) {
      const auto m = cat.match_table1(row, p);
      if (!m || invariants::real_rank(m->g) > bound) continue;
      out.push_back({&row, p, cat.parse_pair(m->pair())});
    }
  }
  return out;
}

inline Table table1(Engine& eng, std::int64_t bound) {
  const Catalog& cat = eng.catalog();
  Table t{"table1", "Standard compact quotients", bound,
          {"row", "G/H", "L", "parameters", "instances", "d(G)=d(H)+d(L)", "status"}, {}, {}};
  const auto all = table1_instances(cat, bound);
  for (const auto& row : cat.table1()) {
    std::size_t count = 0;
    bool identity = true;
    std::set<std::string> statuses;
    std::vector<std::string> ps;
    for (const auto& ti : all) {
      if (ti.row != &row) continue;
      ++count;
      if (!ti.row_params.empty()) ps.push_back(std::to_string(ti.row_params[0]));
      Env env;
      for (std::size_t i = 0; i < row.params.size(); ++i) env[row.params[i]] = ti.row_params[i];
      const bool id =
          invariants::check_cocompact_triple(row.pair.g.instantiate(env), row.pair.h.instantiate(env), row.l.instantiate(env));
      identity = identity && id;
      const auto& rep = eng.classify(ti.instance);
      statuses.insert(status_name(rep.status));
      if (!id) t.problems.push_back("row " + std::to_string(row.row) + ": identity fails at " + ti.instance.str());
      if (rep.status != StatusTag::Exists)
        t.problems.push_back("row " + std::to_string(row.row) + ": " + ti.instance.str() + " is " + status_name(rep.status));
    }
    std::string params = "-";
    if (!row.params.empty())
      params = ps.empty() ? std::string("none") : row.params[0] + "=" + ps.front() + ".." + ps.back();
    if (count == 0) t.problems.push_back("row " + std::to_string(row.row) + ": no instance within the bound");
    t.rows.push_back({std::to_string(row.row), row.pair_text, row.l_text, params, std::to_string(count),
                      count ? detail::yes_no(identity) : "-", detail::join({statuses.begin(), statuses.end()}, "/")});
  }
  return t;
}

// Tables 2 and 3: every in-bound instance meeting the row condition must be
// NotExists by a method the row lists.
inline Table nonexistence_table(Engine& eng, int which, std::int64_t bound) {
  const Catalog& cat = eng.catalog();
  Table t{"table" + std::to_string(which),
          which == 2 ? "Pairs without compact tangential quotients: rank equality"
                     : "Pairs without compact tangential quotients: further methods",
          bound,
          {"G", "H", "condition", "methods", "instances", "NotExists", "methods used", "reproduced"},
          {},
          {}};
  for (const auto& f : cat.families()) {
    if (!f.table || f.table->table != which) continue;
    const auto& a = *f.table;
    std::size_t count = 0, nonex = 0;
    std::set<std::string> used;
    bool within = true;
    for (const auto& inst : cat.enumerate_instances(f, bound)) {
      if (!a.condition.test(inst.env())) continue;
      ++count;
      const auto& rep = eng.classify(inst);
      if (rep.status != StatusTag::NotExists) {
        t.problems.push_back(f.id + ": " + inst.str() + " is " + status_name(rep.status));
        continue;
      }
      ++nonex;
      const std::string m = method_numeral(rep.certificate->method);
      used.insert(m);
      if (std::find(a.coverage.begin(), a.coverage.end(), m) == a.coverage.end()) {
        within = false;
        t.problems.push_back(f.id + ": " + inst.str() + " uses (" + m + ") outside the listed methods");
      }
    }
    const std::set<std::string> cov(a.coverage.begin(), a.coverage.end());
    t.rows.push_back({a.g, a.h, a.condition_label, detail::numerals(cov), std::to_string(count), std::to_string(nonex),
                      detail::numerals(used), detail::yes_no(count == nonex && within)});
  }
  return t;
}

inline Table table4(Engine& eng, std::int64_t bound) {
  const Catalog& cat = eng.catalog();
  Table t{"table4", "Real ranks and rank-equality conditions", bound,
          {"G", "H", "rank_R G", "rank_R H", "condition", "instances", "ranks agree", "condition agrees"}, {}, {}};
  for (const auto& row : cat.table4()) {
    const auto& f = cat.family(row.family);
    std::size_t count = 0;
    bool ranks = true, tags = true;
    for (const auto& inst : cat.enumerate_instances(f, bound)) {
      const Env env = inst.env();
      if (row.condition.valid() && !row.condition.test(env)) continue;
      ++count;
      const auto rg = invariants::real_rank(inst.g), rh = invariants::real_rank(inst.h);
      if (rg != row.rank_g.eval(env) || rh != row.rank_h.eval(env)) {
        ranks = false;
        t.problems.push_back(row.family + ": ranks " + std::to_string(rg) + "," + std::to_string(rh) + " at " +
                             inst.str());
      }
      const bool holds = row.tag == "A" ? obstructions::detail::rank_equality(cat, inst).has_value()
                                        : obstructions::detail::rank_equality(cat, cat.associated_pair(inst)).has_value();
      if (!holds) {
        tags = false;
        t.problems.push_back(row.family + ": condition " + row.tag + " does not hold at " + inst.str());
      }
    }
    t.rows.push_back({row.g, row.h, row.rank_g_text, row.rank_h_text, row.tag, std::to_string(count),
                      count ? detail::yes_no(ranks) : "-", count ? detail::yes_no(tags) : "-"});
  }
  return t;
}

// Methods the published list gives per family against every method that
// fires within the bound.
inline Table table5(Engine& eng, std::int64_t bound) {
  const Catalog& cat = eng.catalog();
  Table t{"table5", "Methods per family", bound,
          {"G", "H", "methods listed", "methods firing", "instances"}, {}, {}};
  for (const auto& f : cat.families()) {
    if (!f.table || f.table->methods.empty()) continue;
    std::set<std::string> fired;
    std::size_t count = 0;
    for (const auto& inst : cat.enumerate_instances(f, bound)) {
      ++count;
      for (const auto& c : eng.classify(inst).all) {
        const std::string m = method_numeral(c.method);
        if (!m.empty() && m != "i") fired.insert(m);
      }
    }
    const std::set<std::string> listed(f.table->methods.begin(), f.table->methods.end());
    t.rows.push_back({f.table->g, f.table->h, detail::numerals(listed), detail::numerals(fired), std::to_string(count)});
  }
  return t;
}

inline Table unknown_set(Engine& eng, std::int64_t bound) {
  Table t{"unknown_set", "Pairs left undecided", bound, {"family", "parameters", "G/H"}, {}, {}};
  for (const auto& inst : eng.catalog().enumerate_all(bound)) {
    const auto& rep = eng.classify(inst);
    if (rep.status == StatusTag::Unknown)
      t.rows.push_back({inst.family_id, detail::params_text(inst), rep.instance.pair()});
  }
  return t;
}

inline Table full_sweep(Engine& eng, std::int64_t bound) {
  Table t{"full_sweep", "Classification of every catalog instance", bound,
          {"family", "parameters", "G/H", "status", "method", "via associated", "firing"}, {}, {}};
  for (const auto& inst : eng.catalog().enumerate_all(bound)) {
    const auto& rep = eng.classify(inst);
    const auto& c = rep.certificate;
    t.rows.push_back({inst.family_id, detail::params_text(inst), inst.pair(), status_name(rep.status),
                      c ? method_name(c->method) : "-", c ? detail::yes_no(c->via_associated) : "-",
                      rep.firing.empty() ? std::string("-") : detail::join(rep.firing, " ")});
  }
  return t;
}

inline Table regenerate_table(Engine& eng, const std::string& which, std::int64_t bound) {
  if (bound < 0) throw Error("bound must be non-negative");
  if (which == "table1") return table1(eng, bound);
  if (which == "table2") return nonexistence_table(eng, 2, bound);
  if (which == "table3") return nonexistence_table(eng, 3, bound);
  if (which == "table4") return table4(eng, bound);
  if (which == "table5") return table5(eng, bound);
  if (which == "unknown_set") return unknown_set(eng, bound);
  if (which == "full_sweep") return full_sweep(eng, bound);
  throw Error("unknown table '" + which + "'");
}

struct SweepSummary {
  std::size_t instances = 0, exists = 0, not_exists = 0, unknown = 0, certificates = 0, externally_cited = 0;
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

// Consistency checks over every instance within the bound: no clash between
// existence and obstruction, equal status across association, and every
// certificate re-derived by its checker.
inline SweepSummary sweep(Engine& eng, std::int64_t bound) {
  const Catalog& cat = eng.catalog();
  SweepSummary s;
  for (const auto& inst : cat.enumerate_all(bound)) {
    ++s.instances;
    const ClassificationReport* rep = nullptr;
    try {
      rep = &eng.classify(inst);
    } catch (const InconsistencyError& e) {
      s.problems.push_back(e.what());
      continue;
    }
    switch (rep->status) {
      case StatusTag::Exists: ++s.exists; break;
      case StatusTag::NotExists: ++s.not_exists; break;
      case StatusTag::Unknown: ++s.unknown; break;
    }
    const auto assoc = cat.associated_pair(rep->instance);
    try {
      const auto& other = eng.classify(assoc);
      if (other.status != rep->status)
        s.problems.push_back(inst.str() + " is " + status_name(rep->status) + " but its associated pair " +
                             assoc.str() + " is " + status_name(other.status));
    } catch (const InconsistencyError& e) {
      s.problems.push_back(e.what());
    }
    for (const auto& c : rep->all) {
      ++s.certificates;
      const auto round = certificate_from_json(nlohmann::ordered_json::parse(to_json(c).dump()));
      const auto v = verify_certificate(cat, round, rep->instance);
      if (!v.ok) s.problems.push_back(inst.str() + ": " + method_name(c.method) + " certificate: " + v.reason);
      if (v.externally_cited) ++s.externally_cited;
    }
  }
  return s;
}

inline nlohmann::ordered_json to_json(const SweepSummary& s) {
  return {{"instances", s.instances}, {"Exists", s.exists},           {"NotExists", s.not_exists},
          {"Unknown", s.unknown},     {"certificates", s.certificates}, {"externally_cited", s.externally_cited},
          {"ok", s.ok()},             {"problems", s.problems}};
}

}  // namespace tangent::engine
