#ifndef BIRKIT_SESSION_HPP
#define BIRKIT_SESSION_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "birkit/birational.hpp"

namespace birkit {

inline constexpr const char* kReportSchemaVersion = "1";

/// A loaded session file: the variety with cached basis plus named maps.
struct Session {
  FieldSpec field;
  RingPtr ring;
  VarietyPtr variety;
  std::vector<std::pair<std::string, RationalMap>> maps;  // sorted by name
  ResourceLimits limits;
  uint64_t seed = 1;
  std::string path;
  std::string digest;

  const RationalMap& map(const std::string& name) const;
  bool has_map(const std::string& name) const;
};

Session load_session(const std::string& path, const ResourceLimits& base_limits = {});
Session session_from_json(const nlohmann::json& j, const std::string& path,
                          const ResourceLimits& base_limits = {});

/// Canonical re-serialization (polynomials in canonical form).
nlohmann::ordered_json session_to_json(const Session& s);

uint64_t fnv1a64(const std::string& data);

/// Report envelope with pinned schema version and stable key order.
nlohmann::ordered_json make_report(const std::string& command, const Session* session,
                                   const nlohmann::ordered_json& params,
                                   const nlohmann::ordered_json& verdicts,
                                   const nlohmann::ordered_json& witnesses, double total_ms,
                                   const ResourceLimits& limits);

/// Structural validation against the published report schema.
bool report_conforms(const nlohmann::json& report, std::string* why = nullptr);

}  // namespace birkit

#endif
