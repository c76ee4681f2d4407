// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "tangent/catalog/catalog.hpp"
#include "tangent/engine/classify.hpp"

namespace tangent::engine {

struct VerifyResult {
  bool ok = false;
  bool externally_cited = false;
  std::string reason;
};

inline nlohmann::ordered_json to_json(const VerifyResult& v) {
  nlohmann::ordered_json j{{"ok", v.ok}, {"externally_cited", v.externally_cited}};
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

// The canonical instance a certificate speaks about, rebuilt from the
// catalog rather than trusted.
inline SymmetricPairInstance certificate_instance(const Catalog& cat, const Certificate& cert) {
  if (!cert.rewrites.empty()) {
    const auto& w = cert.rewrites.front();
    return cat.canonicalize(cat.instance(w.from_family, w.from_params));
  }
  return cat.canonicalize(cat.instance(cert.family, cert.params));
}

inline bool externally_cited(const Certificate& c) {
  return c.data.is_object() && c.data.contains("externally_cited") && c.data.at("externally_cited") == true;
}

// Re-runs the certificate's method on inst and compares the result field by
// field. Throws when the certificate names a different instance.
inline VerifyResult verify_certificate(const Catalog& cat, const Certificate& cert, const SymmetricPairInstance& inst) {
  const auto canon = cat.canonicalize(inst);
  if (canon.family_id != cert.family || canon.params != cert.params)
    throw Error("certificate is for " + cert.family + " " + nlohmann::json(cert.params).dump() + ", not " +
                canon.str());
  VerifyResult r;
  const auto derived = checker_for(cert.method)(cat, canon);
  if (!derived) {
    r.reason = std::string("method ") + method_name(cert.method) + " does not fire on " + canon.str();
    return r;
  }
  if (derived->method != cert.method) {
    r.reason = std::string("re-derivation produced method ") + method_name(derived->method);
    return r;
  }
  if (certificate_digest(*derived) != certificate_digest(cert)) {
    r.reason = "payload differs from the re-derived certificate";
    return r;
  }
  r.ok = true;
  r.externally_cited = externally_cited(*derived);
  return r;
}

inline VerifyResult verify_certificate(const Catalog& cat, const Certificate& cert) {
  return verify_certificate(cat, cert, certificate_instance(cat, cert));
}

}  // namespace tangent::engine
