// Acceptance run: one line per criterion, nonzero exit if any criterion fails
// or exceeds its time budget.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>

#include "command_matrix.hpp"
#include "oracles.hpp"
#include "roughtop/commands.hpp"
#include "roughtop/enumerate.hpp"
#include "roughtop/rough_group.hpp"
#include "roughtop/topology.hpp"
#include "roughtop/trg.hpp"
#include "support.hpp"

using namespace roughtop;

namespace {

// Thrown by `expect`; the message becomes the criterion's failure line.
struct Unmet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Unmet(what);
}

std::string show(const Universe& u, const ElementSet& s) { return format_set(u, s); }

RoughGroupCert certify(const ApproxSpacePtr& space, const ElementSet& g, const std::string& name) {
  auto r = verify_rough_group(space, g);
  expect(r.cert.has_value(), name + " is not a rough group");
  return *r.cert;
}

void expect_passed(const VerificationReport& r, const std::string& what) {
  if (r.passed()) return;
  const Clause* c = r.first_failure();
  throw Unmet(what + ": " + (c ? c->name + " (" + c->witness + ")" : std::string(to_string(r.verdict))));
}

struct Run {
  int exit_code = -1;
  std::string output;
};

Run run_cli(const std::string& args, bool merge_stderr) {
  const std::string cmd = std::string("\"") + ROUGHTOP_CLI + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw Unmet("cannot start " + cmd);
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) r.output.append(buf, n);
  const int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string quoted(const std::string& path) { return "\"" + path + "\""; }

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(ROUGHTOP_FIXTURE_DIR)) {
    if (e.path().extension() == ".rt") out.push_back(e.path().filename().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void integers_mod_three() {
  auto ws = support::load("z3.rt");
  auto report = run_command(ws, matrix::to_command("check trg --group G --topology tau"));
  expect_passed(report, "check trg");
  const Universe& u = *ws.universe("Z3").universe;
  expect(ws.resolve("lower(G)").set == support::named(u, {"1"}), "lower(G) is " + show(u, ws.resolve("lower(G)").set));
  expect(ws.resolve("upper(G)").set == u.full_set(), "upper(G) is " + show(u, ws.resolve("upper(G)").set));
  auto cert = verify_trg(certify(ws.space_of_subset("G"), ws.subset("G").set, "G"), ws.topology("tau"));
  expect(cert.cert.has_value(), "verify_trg rejected G");
  const Family want = support::named_family(u, {{}, {"1", "2"}, {"1"}, {"2"}});
  expect(cert.cert->tau_g.opens() == want, "tau_G is " + format_family(u, cert.cert->tau_g.opens()));
}

void permutations_of_four() {
  auto ws = support::load("s4.rt");
  auto space = ws.space_of_subset("G");
  const auto& blocks = space->partition().blocks();
  std::vector<std::size_t> sizes;
  for (const auto& b : blocks) sizes.push_back(b.count());
  expect(sizes == std::vector<std::size_t>{7, 8, 6, 3}, "block sizes differ");
  const ElementSet upper = ws.resolve("upper(G)").set;
  expect(upper == (blocks[0] | blocks[1]), "upper(G) is not the union of the first two blocks");
  expect(upper.count() == 15, "upper(G) has " + std::to_string(upper.count()) + " elements");
  expect_passed(run_command(ws, matrix::to_command("check trg --group G --topology tau")), "check trg");
}

void product_of_examples() {
  auto z3 = support::load("z3.rt");
  const std::string doc = product_document(z3, "G", "tau", z3, "G", "tau");
  expect(doc == support::read_file(support::fixture_path("z3_squared.rt")),
         "product document differs from the bundled one");
  auto ws = parse_workspace(doc);
  const Universe& u = *ws.universe("Z3xZ3").universe;
  auto space = ws.space_of_subset("GxG");
  const Family blocks = canonical(space->partition().blocks());
  const Family want = support::named_family(
      u, {{"(0,0)", "(0,2)", "(2,0)", "(2,2)"}, {"(0,1)", "(2,1)"}, {"(1,0)", "(1,2)"}, {"(1,1)"}});
  expect(blocks == want, "classification is " + format_family(u, blocks));

  const std::vector<std::array<const char*, 3>> products = {
      {"(2,2)", "(2,2)", "(1,1)"}, {"(2,2)", "(2,1)", "(1,0)"}, {"(2,2)", "(1,1)", "(0,0)"},
      {"(2,2)", "(1,2)", "(0,1)"}, {"(2,1)", "(2,1)", "(1,2)"}, {"(2,1)", "(1,1)", "(0,2)"},
      {"(2,1)", "(1,2)", "(0,0)"}, {"(1,1)", "(1,1)", "(2,2)"}, {"(1,1)", "(1,2)", "(2,0)"}};
  for (const auto& [x, y, xy] : products) {
    const Element got = space->op()(u.at(x), u.at(y));
    expect(got == u.at(xy), std::string(x) + std::string(y) + " is " + u.name(got));
  }
  auto cert = certify(space, ws.subset("GxG").set, "GxG");
  expect(cert.inverses[u.at("(2,1)")] == support::named(u, {"(1,2)"}), "inverse of (2,1)");
  expect(cert.inverses[u.at("(1,1)")] == support::named(u, {"(2,2)"}), "inverse of (1,1)");
  expect_passed(run_command(ws, matrix::to_command("check trg --group GxG --topology tauxtau")), "check trg");
}

void constant_homomorphism() {
  auto ws = support::load("z3_to_s4.rt");
  expect_passed(run_command(ws, matrix::to_command(
                                    "check trg-hom --group G --topology tau --target-group K "
                                    "--target-topology sigma --map Phi")),
                "check trg-hom");
  auto g = certify(ws.space_of_subset("G"), ws.subset("G").set, "G");
  auto k = certify(ws.space_of_subset("K"), ws.subset("K").set, "K");
  auto hom = verify_rough_homomorphism(g, k, ws.map("Phi").map);
  expect(hom.hom.has_value(), "Phi is not a rough homomorphism");
  auto kernel = rough_kernel(*hom.hom);
  const Universe& u = g.universe();
  expect(kernel.kernel == support::named(u, {"1", "2"}), "kernel is " + show(u, kernel.kernel));
  expect_passed(kernel.report, "kernel");
  expect_passed(is_rough_normal(g, kernel.kernel), "kernel normality");
}

void proposition_suite_on_all_topologies() {
  auto ws = support::load("z3.rt");
  auto g = certify(ws.space_of_subset("G"), ws.subset("G").set, "G");
  auto tops = enumerate_topologies(g.universe_ptr(), g.upper);
  expect(tops.size() == oracle::count_topologies(3),
         std::to_string(tops.size()) + " topologies, oracle counts " + std::to_string(oracle::count_topologies(3)));
  const auto subgroups = enumerate_rough_subgroups(g);
  std::size_t trgs = 0;
  for (const auto& t : tops) {
    auto r = verify_trg(g, t);
    oracle::MaskFamily fam;
    for (const auto& o : t.opens()) fam.insert(support::mask(o));
    const bool want = oracle::is_trg({1, 2}, fam, [](int a, int b) { return (a + b) % 3; },
                                     [](int a) { return (3 - a) % 3; });
    const std::string where = " on " + format_family(g.universe(), t.opens());
    expect(r.cert.has_value() == want, "verify_trg disagrees with the oracle" + where);
    if (!r.cert) continue;
    ++trgs;
    const TRGCert& c = *r.cert;
    expect_passed(check_g_equals_g_inverse(c), "G = G^-1" + where);
    expect_passed(check_open_iff_inverse_open(c), "inverse of open" + where);
    expect_passed(is_homeomorphism(c.inverse_map, c.tau_g, c.tau_g), "inverse homeomorphism" + where);
    for (const auto& h : subgroups) {
      expect(is_rough_symmetric(c, h), "subgroup " + show(g.universe(), h) + " not symmetric" + where);
    }
  }
  expect(trgs > 0, "no topological rough groups found");
}

void oracle_equivalence() {
  for (unsigned n = 1; n <= 4; ++n) {
    auto u = support::numbered(n);
    const oracle::Mask carrier = (oracle::Mask{1} << n) - 1;
    const unsigned proper = (1u << n) - 2;
    // Subbases drawn from the nonempty proper subsets; the empty set and the
    // carrier belong to every generated topology.
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << proper); ++f) {
      std::vector<oracle::Mask> sub;
      Family family;
      for (unsigned s = 1; s <= proper; ++s) {
        if (f >> (s - 1) & 1) {
          sub.push_back(s);
          family.push_back(support::from_mask(n, s));
        }
      }
      const auto want = oracle::topology_closure(carrier, sub);
      const FiniteTopology generated = generate_topology(u, u->full_set(), family);
      oracle::MaskFamily got;
      for (const auto& o : generated.opens()) got.insert(support::mask(o));
      expect(got == want, "generated topology differs on " + std::to_string(n) + " points, subbasis " +
                              std::to_string(f));
    }
  }
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    std::vector<oracle::Mask> blocks(n, 0);
    for (std::size_t e = 0; e < n; ++e) blocks[rng() % n] |= oracle::Mask{1} << e;
    std::vector<ElementSet> bs;
    std::vector<oracle::Mask> nonempty;
    for (auto b : blocks) {
      if (b == 0) continue;
      nonempty.push_back(b);
      bs.push_back(support::from_mask(n, b));
    }
    auto u = support::numbered(n);
    ApproxSpace space(Partition(u, bs));
    const oracle::Mask x = rng() & ((oracle::Mask{1} << n) - 1);
    const auto [lower, upper] = oracle::approximations(nonempty, x);
    const ElementSet xs = support::from_mask(n, x);
    expect(support::mask(lower_approx(space, xs)) == lower, "lower approximation differs");
    expect(support::mask(upper_approx(space, xs)) == upper, "upper approximation differs");
  }
}

void parser_round_trip_and_diagnostics() {
  const auto files = fixture_names();
  expect(files.size() >= 5, "fewer than five fixtures");
  for (const auto& f : files) {
    auto ws = support::load(f);
    const std::string text = serialize_workspace(ws);
    auto again = parse_workspace(text);
    expect(again == ws && serialize_workspace(again) == text, f + " does not round trip");
    auto formatted = run_cli("format " + quoted(support::fixture_path(f)), false);
    expect(formatted.exit_code == 0 && formatted.output == text, f + ": format output differs");
  }
  std::size_t cases = 0;
  for (const auto& e : std::filesystem::directory_iterator(ROUGHTOP_MALFORMED_DIR)) {
    if (e.path().extension() != ".rt") continue;
    ++cases;
    const std::string text = support::read_file(e.path().string());
    std::smatch m;
    expect(std::regex_search(text, m, std::regex(R"(# expect-line: (\d+))")),
           e.path().filename().string() + " has no expected line");
    const std::string line = m[1];
    auto r = run_cli("check topology --topology t " + quoted(e.path().string()), true);
    const std::string name = e.path().filename().string();
    expect(r.exit_code == 3, name + " exits " + std::to_string(r.exit_code));
    expect(r.output.find(": line " + line + ", column ") != std::string::npos,
           name + " reports " + r.output);
  }
  expect(cases >= 10, "malformed corpus has " + std::to_string(cases) + " cases");
}

void determinism() {
  std::vector<std::string> commands;
  for (const auto& inv : matrix::invocations()) {
    const std::string file = quoted(support::fixture_path(inv.fixture));
    commands.push_back(std::string(inv.words) + " " + file);
    commands.push_back(std::string(inv.words) + " --json " + file);
  }
  for (const auto& f : fixture_names()) commands.push_back("format " + quoted(support::fixture_path(f)));
  commands.push_back("product --group G --topology tau " + quoted(support::fixture_path("z3.rt")));
  for (const auto& c : commands) {
    auto a = run_cli(c, true);
    auto b = run_cli(c, true);
    expect(a.exit_code == b.exit_code && a.output == b.output, "output differs between runs of " + c);
    expect(a.exit_code >= 0 && a.exit_code <= 2, c + " exits " + std::to_string(a.exit_code));
  }
}

struct Criterion {
  int number;
  const char* title;
  double budget_seconds;
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "integers mod 3 example end to end", 1.0, integers_mod_three},
      {2, "permutations of four objects end to end", 1.0, permutations_of_four},
      {3, "product of the integers mod 3 example with itself", 5.0, product_of_examples},
      {4, "constant homomorphism and its kernel", 1.0, constant_homomorphism},
      {5, "propositions on every topological rough group over 3 points", 10.0,
       proposition_suite_on_all_topologies},
      {6, "generated topologies and approximations against oracles", 30.0, oracle_equivalence},
      {7, "parser round trip and malformed-input diagnostics", 30.0, parser_round_trip_and_diagnostics},
      {8, "byte-identical reports across repeated runs", 60.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      c.body();
    } catch (const std::exception& e) {
      problem = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && seconds > c.budget_seconds) {
      std::ostringstream msg;
      msg << "took longer than " << c.budget_seconds << " s";
      problem = msg.str();
    }
    std::ostringstream line;
    line.precision(3);
    line << std::fixed << (problem.empty() ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title
         << " (" << seconds << " s)";
    if (!problem.empty()) line << ": " << problem;
    std::cout << line.str() << std::endl;
    failed += !problem.empty();
  }
  return failed == 0 ? 0 : 1;
}
