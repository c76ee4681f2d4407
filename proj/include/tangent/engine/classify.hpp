// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tangent/catalog/catalog.hpp"
#include "tangent/catalog/existence.hpp"
#include "tangent/obstructions/adams.hpp"
#include "tangent/obstructions/calabi_markus.hpp"
#include "tangent/obstructions/comparison.hpp"
#include "tangent/obstructions/pfister.hpp"
#include "tangent/obstructions/pontrjagin.hpp"

namespace tangent::engine {

// Existence and non-existence were both derived for one instance.
class InconsistencyError : public Error {
 public:
  InconsistencyError(Certificate exists, Certificate not_exists)
      : Error("inconsistent catalog: " + exists.pair + " is both Exists (" + method_name(exists.method) +
              ") and NotExists (" + method_name(not_exists.method) + ")"),
        exists_(std::move(exists)),
        not_exists_(std::move(not_exists)) {}
  const Certificate& exists() const { return exists_; }
  const Certificate& not_exists() const { return not_exists_; }

 private:
  Certificate exists_;
  Certificate not_exists_;
};

using Check = std::function<std::optional<Certificate>(const Catalog&, const SymmetricPairInstance&)>;

inline std::optional<Certificate> existence(const Catalog& cat, const SymmetricPairInstance& inst) {
  return obstructions::with_associated(cat, inst, existence_sources);
}

// Evaluation order: (i), (v), (iii), (iv), (ii).
inline const std::vector<std::pair<std::string, Check>>& obstruction_checks() {
  static const std::vector<std::pair<std::string, Check>> checks{
      {"i", obstructions::calabi_markus}, {"v", obstructions::adams},     {"iii", obstructions::comparison},
      {"iv", obstructions::pontrjagin},   {"ii", obstructions::pfister},
  };
  return checks;
}

// The checker that re-derives a certificate with the given method tag.
inline Check checker_for(Method m) {
  switch (m) {
    case Method::StandardTable1:
    case Method::AdamsExistence:
    case Method::RiemannianOrGroupManifold: return existence;
    case Method::CalabiMarkusA:
    case Method::CalabiMarkusB: return obstructions::calabi_markus;
    case Method::Pfister: return obstructions::pfister;
    case Method::Comparison: return obstructions::comparison;
    case Method::Pontrjagin: return obstructions::pontrjagin;
    case Method::AdamsNonexistence: return obstructions::adams;
    case Method::AccidentalIsomorphism: break;
  }
  throw UnsupportedError(std::string("no checker for method ") + method_name(m));
}

struct ClassificationReport {
  SymmetricPairInstance instance;
  StatusTag status = StatusTag::Unknown;
  std::optional<Certificate> certificate;
  std::vector<Certificate> all;  // every certificate derived, existence first
  std::vector<std::string> firing;
  double timing_ms = 0;
  std::string catalog_hash;
  std::string catalog_version;
};

inline ClassificationReport classify(const Catalog& cat, const SymmetricPairInstance& input) {
  const auto t0 = std::chrono::steady_clock::now();
  ClassificationReport r;
  r.instance = cat.canonicalize(input);
  r.catalog_hash = cat.hash();
  r.catalog_version = cat.version();
  std::optional<Certificate> exists = existence(cat, r.instance);
  if (exists) r.all.push_back(*exists);
  std::optional<Certificate> first_not;
  for (const auto& [tag, check] : obstruction_checks()) {
    if (auto c = check(cat, r.instance)) {
      if (!first_not) first_not = *c;
      r.all.push_back(std::move(*c));
    }
  }
  for (const auto& c : r.all) r.firing.emplace_back(method_name(c.method));
  if (exists && first_not) throw InconsistencyError(*exists, *first_not);
  if (exists) {
    r.status = StatusTag::Exists;
    r.certificate = exists;
  } else if (first_not) {
    r.status = StatusTag::NotExists;
    r.certificate = first_not;
  }
  if (r.certificate) r.certificate->also = r.firing;
  for (auto& c : r.all) c.also = r.firing;
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline nlohmann::ordered_json instance_json(const SymmetricPairInstance& inst) {
  nlohmann::ordered_json j;
  j["family"] = inst.family_id;
  j["params"] = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < inst.params.size(); ++i) j["params"][inst.param_names[i]] = inst.params[i];
  j["pair"] = inst.pair();
  j["G"] = inst.g.str();
  j["H"] = inst.h.str();
  j["rewrites"] = inst.rewrites;
  return j;
}

inline nlohmann::ordered_json to_json(const ClassificationReport& r, bool with_timing = true) {
  nlohmann::ordered_json j;
  j["instance"] = instance_json(r.instance);
  j["status"] = status_name(r.status);
  j["method"] = r.certificate ? nlohmann::ordered_json(method_name(r.certificate->method)) : nlohmann::ordered_json();
  j["certificate"] = r.certificate ? to_json(*r.certificate) : nlohmann::ordered_json();
  j["all_firing_methods"] = r.firing;
  if (with_timing) j["timing_ms"] = r.timing_ms;
  j["catalog_hash"] = r.catalog_hash;
  j["catalog_version"] = r.catalog_version;
  return j;
}

inline std::string to_text(const ClassificationReport& r) {
  std::string s = r.instance.str() + "\n  status: " + status_name(r.status) + "\n";
  for (const auto& w : r.instance.rewrites) s += "  rewritten from " + w.from_pair + " (" + w.note + ")\n";
  if (r.certificate) {
    const auto& c = *r.certificate;
    s += std::string("  method: ") + method_name(c.method);
    if (c.via_associated) s += " (via associated pair " + c.associated_pair + ")";
    s += "\n  citation: " + c.citation + "\n  data: " + c.data.dump() + "\n";
  }
  std::string f;
  for (const auto& m : r.firing) f += (f.empty() ? "" : ", ") + m;
  s += "  firing: " + (f.empty() ? std::string("none") : f) + "\n";
  return s;
}

// Memoizing front end over classify().
class Engine {
 public:
  explicit Engine(const Catalog& cat) : cat_(cat) {}

  const Catalog& catalog() const { return cat_; }

  const ClassificationReport& classify(const SymmetricPairInstance& inst) {
    const auto canon = cat_.canonicalize(inst);
    std::string key = canon.str();
    for (const auto& w : canon.rewrites) key += " <- " + w.from_pair;
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(std::move(key), engine::classify(cat_, canon)).first;
    return it->second;
  }

  const ClassificationReport& classify(std::string_view pair_text) { return classify(cat_.parse_pair(pair_text)); }

 private:
  const Catalog& cat_;
  std::map<std::string, ClassificationReport> cache_;
};

}  // namespace tangent::engine
