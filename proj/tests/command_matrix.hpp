#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "roughtop/commands.hpp"
#include "roughtop/errors.hpp"

// CLI invocations shared by the in-process command tests and the acceptance
// binary. `words` is the argument list without the program and the file.
namespace matrix {

struct Invocation {
  const char* fixture;
  const char* words;
  int exit_code;
};

inline const std::vector<Invocation>& invocations() {
  static const std::vector<Invocation> all = {
      {"z3.rt", "check approx --subset G", 0},
      {"z3.rt", "check topology --topology tau", 0},
      {"z3.rt", "check rough-group --group G", 0},
      {"z3.rt", "check subgroup --group G --subset H", 1},
      {"z3.rt", "check normal --group G --subset G", 0},
      {"z3.rt", "check hom --group G --target-group G --map neg", 0},
      {"z3.rt", "check kernel --group G --target-group G --map neg", 2},
      {"z3.rt", "check continuity --map neg --topology tau --target-topology tau", 0},
      {"z3.rt", "check homeomorphism --map neg --topology tau --target-topology tau", 0},
      {"z3.rt", "check trg --group G --topology tau", 0},
      {"z3.rt", "check trg-hom --group G --topology tau --target-group G --target-topology tau --map neg", 0},
      {"z3.rt", "check trg-homeo --group G --topology tau --target-group G --target-topology tau --map neg", 0},
      {"z3.rt", "check action --group G --topology tau --self", 1},
      {"z3.rt", "check translation --group G --topology tau --self --element 1", 1},
      {"z3.rt", "check homogeneous --space G --space-topology tau", 1},
      {"z3.rt", "check prop suite --group G --topology tau", 0},
      {"z3.rt", "check prop translations --group G --topology tau --element 1", 0},
      {"z3.rt", "check prop g-inverse --group G --topology tau", 0},
      {"z3.rt", "check prop open-inverse --group G --topology tau", 0},
      {"z3.rt", "check prop symmetric --group G --topology tau --subset H", 1},
      {"z3.rt", "check prop topological-group --group G --topology tau", 2},
      {"z3.rt", "check prop closure-symmetric --group G --topology tau --subset G", 2},
      {"z3.rt", "check prop closure-subgroup --group G --topology tau --subset G", 2},
      {"z3.rt", "check prop base-translation --group G --topology tau --base B", 2},
      {"z3.rt", "check prop au-open --group G --topology tau --subset H --open G", 1},
      {"z3.rt", "check prop subgroup-open --group G --topology tau --subset G --open G", 2},
      {"z3.rt", "enumerate subgroups --group G", 0},
      {"z3.rt", "enumerate topologies --group G", 0},
      {"z3.rt", "enumerate witness --group G --topology tau", 0},
      {"s4.rt", "check approx --subset G", 0},
      {"s4.rt", "check rough-group --group G", 0},
      {"s4.rt", "check rough-group --group Gp", 1},
      {"s4.rt", "check subgroup --group G --subset N", 1},
      {"s4.rt", "check trg --group G --topology tau", 0},
      {"s4.rt", "check trg --group G --topology tau --codomain-topology relative", 1},
      {"s4.rt", "check prop symmetric-square --group G --topology tau --open W", 0},
      {"s4.rt", "check prop suite --group G --topology tau", 0},
      {"s4.rt", "enumerate subgroups --group G", 0},
      {"s4.rt", "enumerate witness --group G --topology tau", 0},
      {"z4.rt", "check trg --group G --topology tau", 0},
      {"z4.rt", "check prop base-translation --group G --topology tau --base B", 0},
      {"z4.rt", "check prop subgroup-open --group G --topology tau --subset G --open O", 0},
      {"z4.rt", "check prop subgroup-open --group G --topology tau --subset O --open O", 1},
      {"z4.rt", "enumerate topologies --group G --max-size 4", 0},
      {"z3_squared.rt", "check approx --subset GxG", 0},
      {"z3_squared.rt", "check rough-group --group GxG", 0},
      {"z3_squared.rt", "check trg --group GxG --topology tauxtau", 0},
      {"z3_to_s4.rt", "check trg-hom --group G --topology tau --target-group K --target-topology sigma --map Phi", 0},
      {"z3_to_s4.rt", "check trg-homeo --group G --topology tau --target-group K --target-topology sigma --map Phi", 1},
      {"z3_to_s4.rt", "check kernel --group G --target-group K --map Phi", 0},
      {"z3_to_s4.rt", "check hom --group G --target-group K --map Psi", 1},
      {"z3_to_s4.rt", "check hom --group G --target-group K --map Phi --strict-hom", 0},
  };
  return all;
}

inline std::vector<std::string> split(const std::string& words) {
  std::istringstream in(words);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// Same reading of the words as the CLI front end.
inline roughtop::Command to_command(const std::string& words) {
  const auto w = split(words);
  roughtop::Command cmd;
  std::size_t i = 0;
  std::vector<std::string> positional;
  for (; i < w.size(); ++i) {
    if (w[i] == "--self") {
      cmd.args["self"] = "yes";
    } else if (w[i] == "--strict-hom") {
      cmd.strict_hom = true;
    } else if (w[i].rfind("--", 0) == 0) {
      if (i + 1 >= w.size()) throw roughtop::InputError("missing value for " + w[i]);
      const std::string key = w[i].substr(2);
      const std::string value = w[++i];
      if (key == "codomain-topology") {
        cmd.codomain = value == "relative" ? roughtop::CodomainTopology::relative
                                           : roughtop::CodomainTopology::upper;
      } else {
        cmd.args[key] = value;
      }
    } else {
      positional.push_back(w[i]);
    }
  }
  if (positional.size() < 2) throw roughtop::InputError("need a verb and a kind");
  cmd.verb = positional[0];
  cmd.kind = positional[1];
  if (cmd.kind == "prop") {
    if (positional.size() < 3) throw roughtop::InputError("need a proposition");
    cmd.prop = positional[2];
  }
  return cmd;
}

}  // namespace matrix
