#pragma once

// Command-line front end: verify, pullback, intersect, export.
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace m1n::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// Corpus items by name: "bn:<d>", "gp", "golden:trigonal", "golden:gp",
// "profile:<trig|bnd|gonal:d|gp>", "certificate:<trigonal|gp|gonal:d>",
// "chow:invariants". DomainError for unknown names.
nlohmann::json export_item(const std::string &name);

} // namespace m1n::cli
