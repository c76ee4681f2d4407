// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tangent/core/error.hpp"

namespace tangent {

enum class Method {
  StandardTable1,
  AdamsExistence,
  RiemannianOrGroupManifold,
  CalabiMarkusA,
  CalabiMarkusB,
  Pfister,
  Comparison,
  Pontrjagin,
  AdamsNonexistence,
  AccidentalIsomorphism,
};

enum class StatusTag { Exists, NotExists, Unknown };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::StandardTable1: return "StandardTable1";
    case Method::AdamsExistence: return "AdamsExistence";
    case Method::RiemannianOrGroupManifold: return "RiemannianOrGroupManifold";
    case Method::CalabiMarkusA: return "CalabiMarkusA";
    case Method::CalabiMarkusB: return "CalabiMarkusB";
    case Method::Pfister: return "Pfister";
    case Method::Comparison: return "Comparison";
    case Method::Pontrjagin: return "Pontrjagin";
    case Method::AdamsNonexistence: return "AdamsNonexistence";
    case Method::AccidentalIsomorphism: return "AccidentalIsomorphism";
  }
  return "?";
}

inline Method parse_method(const std::string& s) {
  for (Method m : {Method::StandardTable1, Method::AdamsExistence, Method::RiemannianOrGroupManifold,
                   Method::CalabiMarkusA, Method::CalabiMarkusB, Method::Pfister, Method::Comparison,
                   Method::Pontrjagin, Method::AdamsNonexistence, Method::AccidentalIsomorphism})
    if (s == method_name(m)) return m;
  throw Error("unknown certificate method '" + s + "'");
}

// Obstruction numbering used by the published tables: (i) rank equality,
// (ii) even characteristic polynomials, (iii) comparison, (iv) Pontrjagin
// class, (v) Hurwitz-Radon. Existence methods have none.
inline std::string method_numeral(Method m) {
  switch (m) {
    case Method::CalabiMarkusA:
    case Method::CalabiMarkusB: return "i";
    case Method::Pfister: return "ii";
    case Method::Comparison: return "iii";
    case Method::Pontrjagin: return "iv";
    case Method::AdamsNonexistence: return "v";
    default: return "";
  }
}

inline const char* status_name(StatusTag s) {
  switch (s) {
    case StatusTag::Exists: return "Exists";
    case StatusTag::NotExists: return "NotExists";
    case StatusTag::Unknown: return "Unknown";
  }
  return "?";
}

inline StatusTag parse_status(const std::string& s) {
  if (s == "Exists") return StatusTag::Exists;
  if (s == "NotExists") return StatusTag::NotExists;
  if (s == "Unknown") return StatusTag::Unknown;
  throw Error("unknown status '" + s + "'");
}

struct Rewrite {
  std::string from_family;
  std::vector<std::int64_t> from_params;
  std::string from_pair;
  std::string to_family;
  std::vector<std::int64_t> to_params;
  std::string to_pair;
  std::string note;

  friend bool operator==(const Rewrite&, const Rewrite&) = default;
};

inline void to_json(nlohmann::ordered_json& j, const Rewrite& r) {
  j = nlohmann::ordered_json{{"from_family", r.from_family}, {"from_params", r.from_params},
                             {"from_pair", r.from_pair},     {"to_family", r.to_family},
                             {"to_params", r.to_params},     {"to_pair", r.to_pair},
                             {"note", r.note}};
}

inline void from_json(const nlohmann::ordered_json& j, Rewrite& r) {
  j.at("from_family").get_to(r.from_family);
  j.at("from_params").get_to(r.from_params);
  j.at("from_pair").get_to(r.from_pair);
  j.at("to_family").get_to(r.to_family);
  j.at("to_params").get_to(r.to_params);
  j.at("to_pair").get_to(r.to_pair);
  j.at("note").get_to(r.note);
}

struct Certificate {
  Method method = Method::CalabiMarkusA;
  StatusTag status = StatusTag::NotExists;
  std::string family;
  std::vector<std::int64_t> params;
  std::string pair;
  // The method fired on the associated pair; its instance is recorded here.
  bool via_associated = false;
  std::string associated_family;
  std::vector<std::int64_t> associated_params;
  std::string associated_pair;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  std::string citation;
  std::vector<Rewrite> rewrites;
  std::vector<std::string> also;  // every method that fired, in evaluation order
};

inline nlohmann::ordered_json to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["method"] = method_name(c.method);
  j["status"] = status_name(c.status);
  j["family"] = c.family;
  j["params"] = c.params;
  j["pair"] = c.pair;
  j["via_associated"] = c.via_associated;
  if (c.via_associated) {
    j["associated_family"] = c.associated_family;
    j["associated_params"] = c.associated_params;
    j["associated_pair"] = c.associated_pair;
  }
  j["data"] = c.data;
  j["citation"] = c.citation;
  j["rewrites"] = c.rewrites;
  j["also"] = c.also;
  return j;
}

inline Certificate certificate_from_json(const nlohmann::ordered_json& j) {
  try {
    Certificate c;
    c.method = parse_method(j.at("method").get<std::string>());
    c.status = parse_status(j.at("status").get<std::string>());
    j.at("family").get_to(c.family);
    j.at("params").get_to(c.params);
    j.at("pair").get_to(c.pair);
    j.at("via_associated").get_to(c.via_associated);
    if (c.via_associated) {
      j.at("associated_family").get_to(c.associated_family);
      j.at("associated_params").get_to(c.associated_params);
      j.at("associated_pair").get_to(c.associated_pair);
    }
    c.data = j.at("data");
    j.at("citation").get_to(c.citation);
    if (j.contains("rewrites")) j.at("rewrites").get_to(c.rewrites);
    if (j.contains("also")) j.at("also").get_to(c.also);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed certificate: ") + e.what());
  }
}

// Serialization of the fields a checker re-derives; `also` depends on the
// other methods and is excluded.
inline std::string certificate_digest(const Certificate& c) {
  Certificate copy = c;
  copy.also.clear();
  return to_json(copy).dump();
}

}  // namespace tangent
