#pragma once

#include <map>
#include <string>
#include <vector>

#include "roughtop/limits.hpp"
#include "roughtop/report.hpp"
#include "roughtop/trg.hpp"
#include "roughtop/workspace.hpp"

namespace roughtop {

// One CLI request against a workspace. `verb` is "check" or "enumerate";
// `kind` names the check (for `check prop`, `prop` names the proposition).
// Operands are looked up by option name, e.g. args["group"] = "G".
struct Command {
  std::string verb;
  std::string kind;
  std::string prop;
  std::map<std::string, std::string> args;
  bool strict_hom = false;
  CodomainTopology codomain = CodomainTopology::upper;
  Limits limits{};
};

// Check kinds, enumeration kinds and proposition names run_command accepts.
const std::vector<std::string>& check_kinds();
const std::vector<std::string>& enumerate_kinds();
const std::vector<std::string>& proposition_names();

// Throws InputError on unknown kinds, missing operands and unresolvable
// references; every other outcome is carried by the report.
VerificationReport run_command(const Workspace& ws, const Command& cmd);

// Workspace document describing the product of two topological rough
// groups: universe, table, partition, subset G1 x G2 and the product
// topology on its upper approximation. Both operands must pass verify_trg.
std::string product_document(const Workspace& left, const std::string& left_group,
                             const std::string& left_topology, const Workspace& right,
                             const std::string& right_group, const std::string& right_topology,
                             const Limits& limits = {});

}  // namespace roughtop
