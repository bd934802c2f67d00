#ifndef STRANGEDUAL_CATALOG_HPP
#define STRANGEDUAL_CATALOG_HPP

#include <string>
#include <vector>

#include "strangedual/rational.hpp"

namespace strangedual::catalog {

inline constexpr const char* kVersion = "1.0.0";

/// One verified identity. status is "pass", "fail", "rejected" (precondition
/// violation surfaced as an error), or "unresolved" (a documented convention
/// gap, reported but non-fatal).
struct IdentityCheck {
  std::string id;
  std::string description;
  std::string status;
  std::string lhs, rhs;
  double runtime_ms = 0.0;

  bool operator==(const IdentityCheck& o) const {
    return id == o.id && description == o.description && status == o.status && lhs == o.lhs &&
           rhs == o.rhs;
  }
};

struct Report {
  std::string version = kVersion;
  std::vector<std::string> models;
  std::vector<IdentityCheck> checks;

  int passed() const;
  int failed() const;
  int unresolved() const;
  int rejected() const;
  bool ok() const { return failed() == 0 && rejected() == 0; }

  bool operator==(const Report& o) const {
    return version == o.version && models == o.models && checks == o.checks;
  }
};

/// Identifiers of every catalog item, in execution order.
std::vector<std::string> catalog_ids();

/// Runs the identity catalog; the glob filter ('*' and '?') selects by id.
/// Options trade sweep breadth for time; the defaults run everything the
/// acceptance gate requires.
struct RunOptions {
  std::string filter = "*";
  Int solver_group_order_limit = 200;  // brute-force oracle bound
  int property_cases = 500;            // randomized algebra property cases
};
Report run_catalog(const RunOptions& opts = {});

bool glob_match(const std::string& pattern, const std::string& text);

std::string report_to_json(const Report& r, bool pretty = true);
Report report_from_json(const std::string& text);

}  // namespace strangedual::catalog

#endif
