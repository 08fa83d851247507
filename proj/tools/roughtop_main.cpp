// roughtop: verify rough-group and topological statements about finite
// structures described in a workspace file.
//
//   roughtop check trg --group G --topology tau fixtures/z3.rt
//   roughtop check prop suite --group G --topology tau fixtures/z3.rt
//   roughtop enumerate topologies --group G --max-size 3 fixtures/z3.rt
//   roughtop format fixtures/s4.rt
//   roughtop product --group G --topology tau fixtures/z3.rt
//
// Exit codes: 0 pass, 1 fail, 2 not applicable, 3 input error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "roughtop/commands.hpp"
#include "roughtop/errors.hpp"
#include "roughtop/report.hpp"
#include "roughtop/workspace.hpp"

namespace {

constexpr int kInputError = 3;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw roughtop::InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string label(const std::string& path) { return path.empty() || path == "-" ? "<stdin>" : path; }

bool one_of(const std::string& s, const std::vector<std::string>& options) {
  return std::find(options.begin(), options.end(), s) != options.end();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verifier for rough groups and topological rough groups on finite structures"};
  app.footer("Exit codes: 0 pass, 1 fail, 2 not applicable, 3 input error.");

  std::vector<std::string> words;
  std::string check_kind;
  std::string enumerate_kind;
  std::string prop;
  bool json = false;
  bool strict_hom = false;
  bool self = false;
  std::size_t cap = roughtop::Limits{}.universe_cap;
  std::string codomain = "upper";
  std::map<std::string, std::string> operands;

  app.add_option("words", words, "COMMAND [KIND] [PROPOSITION] [FILE]; FILE defaults to stdin");
  app.add_option("--check", check_kind, "Check to run (same as the `check KIND` form)");
  app.add_option("--enumerate", enumerate_kind, "Enumeration to run (subgroups, topologies, witness)");
  app.add_option("--prop", prop, "Proposition name for `check prop`");
  app.add_flag("--json", json, "Emit the report as JSON");
  app.add_flag("--strict-hom", strict_hom, "Require upper(G1) closed for homomorphism checks");
  app.add_flag("--self", self, "Use the group acting on itself by multiplication");
  app.add_option("--cap", cap, "Largest universe any construction may build")->check(CLI::PositiveNumber);
  app.add_option("--codomain-topology", codomain, "Topology the product map lands in")
      ->check(CLI::IsMember({"upper", "relative"}));
  const std::pair<const char*, const char*> operand_help[] = {
      {"group", "Subset acting as the (source) rough group"},
      {"topology", "Topology on upper(group)"},
      {"subset", "Subset under test"},
      {"target-group", "Target rough group of a homomorphism"},
      {"target-topology", "Topology on upper(target-group)"},
      {"map", "Map declaration"},
      {"space", "Subset acted on, or tested for homogeneity"},
      {"space-topology", "Topology on upper(space)"},
      {"base", "Family declaration used as a base"},
      {"open", "Open set operand of a proposition"},
      {"element", "Element name"},
      {"side", "Action side: left or right"},
      {"max-size", "Largest carrier `enumerate topologies` accepts"},
  };
  for (const auto& [key, help] : operand_help) {
    app.add_option(std::string("--") + key, operands[key], help);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }

  roughtop::Command cmd;
  cmd.strict_hom = strict_hom;
  cmd.codomain = codomain == "relative" ? roughtop::CodomainTopology::relative
                                        : roughtop::CodomainTopology::upper;
  cmd.limits.universe_cap = cap;
  for (auto& [k, v] : operands) {
    if (!v.empty()) cmd.args[k] = v;
  }
  if (self) cmd.args["self"] = "yes";

  std::string path;
  try {
    std::size_t next = 0;
    auto take = [&](const char* what) -> std::string {
      if (next >= words.size()) throw roughtop::InputError(std::string("missing ") + what);
      return words[next++];
    };
    std::string verb;
    if (!check_kind.empty()) {
      verb = "check";
      cmd.kind = check_kind;
    } else if (!enumerate_kind.empty()) {
      verb = "enumerate";
      cmd.kind = enumerate_kind;
    } else {
      verb = take("command (check, enumerate, format or product)");
      if (verb == "check" || verb == "enumerate") cmd.kind = take("kind");
    }
    if (verb == "check" && !one_of(cmd.kind, roughtop::check_kinds())) {
      throw roughtop::InputError("unknown check '" + cmd.kind + "'");
    }
    if (verb == "enumerate" && !one_of(cmd.kind, roughtop::enumerate_kinds())) {
      throw roughtop::InputError("unknown enumeration '" + cmd.kind + "'");
    }
    if (verb == "check" && cmd.kind == "prop") cmd.prop = prop.empty() ? take("proposition name") : prop;

    if (verb == "product") {
      std::string left_path = take("input file");
      std::string right_path = next < words.size() ? words[next++] : left_path;
      path = left_path;
      auto left = roughtop::parse_workspace(read_input(left_path), cmd.limits);
      path = right_path;
      auto right = roughtop::parse_workspace(read_input(right_path), cmd.limits);
      path.clear();
      auto get = [&](const char* key, const char* fallback) {
        auto it = cmd.args.find(key);
        if (it != cmd.args.end()) return it->second;
        it = cmd.args.find(fallback);
        if (it == cmd.args.end()) throw roughtop::InputError(std::string("product needs --") + fallback);
        return it->second;
      };
      std::cout << roughtop::product_document(left, get("group", "group"), get("topology", "topology"),
                                              right, get("target-group", "group"),
                                              get("target-topology", "topology"), cmd.limits);
      return 0;
    }
    if (verb != "check" && verb != "enumerate" && verb != "format") {
      throw roughtop::InputError("unknown command '" + verb + "'");
    }
    path = next < words.size() ? words[next++] : "";
    if (next < words.size()) throw roughtop::InputError("unexpected argument '" + words[next] + "'");

    auto ws = roughtop::parse_workspace(read_input(path), cmd.limits);
    path.clear();
    if (verb == "format") {
      std::cout << roughtop::serialize_workspace(ws);
      return 0;
    }
    cmd.verb = verb;
    auto report = roughtop::run_command(ws, cmd);
    std::cout << roughtop::serialize_report(report, json ? roughtop::ReportFormat::json
                                                         : roughtop::ReportFormat::text);
    return roughtop::exit_code(report.verdict);
  } catch (const roughtop::ParseError& e) {
    std::cerr << label(path) << ": " << e.what() << '\n';
    return kInputError;
  } catch (const roughtop::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const roughtop::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInputError;
  }
}
