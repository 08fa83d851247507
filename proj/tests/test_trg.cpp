#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "roughtop/enumerate.hpp"
#include "roughtop/trg.hpp"
#include "support.hpp"

using namespace roughtop;
using support::named;
using support::named_family;

namespace {

RoughGroupCert certify(const ApproxSpacePtr& space, const ElementSet& g) {
  auto r = verify_rough_group(space, g);
  REQUIRE(r.cert.has_value());
  return *r.cert;
}

TRGCert trg_of(const RoughGroupCert& g, const FiniteTopology& tau, TRGOptions options = {}) {
  auto r = verify_trg(g, tau, options);
  INFO(serialize_report(r.report, ReportFormat::text));
  REQUIRE(r.cert.has_value());
  return *r.cert;
}

TRGCert fixture_trg(const std::string& file) {
  auto ws = support::load(file);
  return trg_of(certify(ws.space_of_subset("G"), ws.subset("G").set), ws.topology("tau"));
}

oracle::MaskFamily masks(const Family& f) {
  oracle::MaskFamily out;
  for (const auto& s : f) out.insert(support::mask(s));
  return out;
}

bool oracle_trg(const RoughGroupCert& g, const FiniteTopology& tau) {
  std::vector<int> members;
  for (Element x : g.group.elements()) members.push_back(static_cast<int>(x));
  auto mul = [&](int a, int b) { return static_cast<int>(g.op()(a, b)); };
  auto inv = [&](int x) { return static_cast<int>(g.inverses[x].first()); };
  return oracle::is_trg(members, masks(tau.opens()), mul, inv);
}

// Smallest closed set of `tau` containing `a`, from the complements of the opens.
oracle::Mask oracle_closure(const FiniteTopology& tau, oracle::Mask a) {
  const oracle::Mask carrier = support::mask(tau.carrier());
  oracle::Mask best = carrier;
  for (const auto& o : tau.opens()) {
    const oracle::Mask closed = carrier & ~support::mask(o);
    if ((a & ~closed) == 0) best &= closed;
  }
  return best;
}

std::vector<Element> table_of(std::size_t n, bool s3) {
  std::vector<Element> t;
  if (!s3) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) t.push_back((a + b) % n);
    }
    return t;
  }
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& x : perms) {
    for (const auto& y : perms) {
      std::array<int, 3> z{x[y[0]], x[y[1]], x[y[2]]};
      t.push_back(static_cast<Element>(std::find(perms.begin(), perms.end(), z) - perms.begin()));
    }
  }
  return t;
}

std::optional<RoughGroupCert> random_group(std::mt19937& rng) {
  const bool s3 = rng() % 4 == 0;
  const std::size_t n = s3 ? 6 : 1 + rng() % 6;
  auto u = support::numbered(n);
  std::vector<oracle::Mask> blocks(n, 0);
  for (std::size_t e = 0; e < n; ++e) blocks[rng() % n] |= oracle::Mask{1} << e;
  std::vector<ElementSet> sets;
  for (auto b : blocks) {
    if (b != 0) sets.push_back(support::from_mask(n, b));
  }
  auto space = std::make_shared<const ApproxSpace>(Partition(u, sets), CayleyTable(u, table_of(n, s3)));
  ElementSet g = support::from_mask(n, rng() & ((1u << n) - 1));
  if (g.empty() || g.count() > 5) return std::nullopt;
  auto r = verify_rough_group(space, g);
  if (!r.cert) return std::nullopt;
  // Associativity on upper(G) forces inverses to be unique.
  CHECK(r.cert->unique_inverses());
  return r.cert;
}

}  // namespace

TEST_CASE("the Z3 and S4 examples are topological rough groups") {
  auto z3 = fixture_trg("z3.rt");
  CHECK(z3.tau_g.opens() == named_family(z3.universe(), {{}, {"1"}, {"2"}, {"1", "2"}}));
  CHECK(z3.inverse_map(1) == 2);
  CHECK(oracle_trg(z3.group, z3.tau));

  auto s4 = fixture_trg("s4.rt");
  CHECK(oracle_trg(s4.group, s4.tau));
  const Universe& u = s4.universe();
  CHECK(s4.inverse_map(u.at("(123)")) == u.at("(132)"));
  CHECK(s4.inverse_map(u.at("(12)")) == u.at("(12)"));
}

TEST_CASE("verify_trg with a coarser topology on the Z3 example") {
  auto ws = support::load("z3.rt");
  auto g = certify(ws.space_of_subset("G"), ws.subset("G").set);
  FiniteTopology coarse(g.universe_ptr(), g.upper, named_family(g.universe(), {{}, {"0"}, {"0", "1", "2"}}));
  auto r = verify_trg(g, coarse);
  CHECK(r.report.passed() == oracle_trg(g, coarse));
  CHECK(r.report.verdict == Verdict::fail);
  CHECK(r.report.first_failure()->witness.find("preimage of {0}") == 0);
  CHECK_FALSE(r.cert.has_value());
}

TEST_CASE("verify_trg preconditions") {
  auto ws = support::load("z3.rt");
  auto g = certify(ws.space_of_subset("G"), ws.subset("G").set);
  auto wrong = FiniteTopology::discrete(g.universe_ptr(), g.group);
  CHECK_THROWS_AS(verify_trg(g, wrong), InputError);
}

TEST_CASE("relative codomain mode is stricter on the S4 example") {
  auto ws = support::load("s4.rt");
  auto g = certify(ws.space_of_subset("G"), ws.subset("G").set);
  TRGOptions relative;
  relative.codomain = CodomainTopology::relative;
  auto r = verify_trg(g, ws.topology("tau"), relative);
  CHECK(r.report.verdict == Verdict::fail);
  CHECK(r.report.first_failure()->witness.find("preimage of {(123) (132)}") == 0);
}

TEST_CASE("inverse sets and rough symmetry") {
  auto z3 = fixture_trg("z3.rt");
  CHECK(inverse_of_set(z3, ElementSet(3, {1})) == ElementSet(3, {2}));
  CHECK(inverse_of_set(z3, ElementSet(3)).empty());
  CHECK(is_rough_symmetric(z3, ElementSet(3, {1, 2})));
  CHECK_FALSE(is_rough_symmetric(z3, ElementSet(3, {1})));
  CHECK_THROWS_AS(inverse_of_set(z3, ElementSet(3, {0})), InputError);

  auto s4 = fixture_trg("s4.rt");
  CHECK(is_rough_symmetric(s4, named(s4.universe(), {"(12)"})));
  for (const auto& h : enumerate_rough_subgroups(s4.group)) CHECK(inverse_of_set(s4, h) == h);
}

TEST_CASE("translations") {
  auto z3 = fixture_trg("z3.rt");
  CHECK(z3.op()(1, 1) == 2);
  CHECK(z3.op()(1, 2) == 0);
  CHECK(check_translations(z3, 1).passed());
  CHECK_THROWS_AS(check_translations(z3, 0), InputError);
  auto s4 = fixture_trg("s4.rt");
  CHECK(check_translations(s4, s4.universe().at("(12)")).passed());
}

TEST_CASE("G = G^-1 and inverse openness on the examples") {
  for (const char* f : {"z3.rt", "s4.rt", "z4.rt"}) {
    auto c = fixture_trg(f);
    CHECK(check_g_equals_g_inverse(c).passed());
    CHECK(check_open_iff_inverse_open(c).passed());
  }
  auto ws = support::load("z3.rt");
  auto g = certify(ws.space_of_subset("G"), ws.subset("G").set);
  auto ind = trg_of(g, FiniteTopology::indiscrete(g.universe_ptr(), g.upper));
  CHECK(check_open_iff_inverse_open(ind).passed());
}

TEST_CASE("symmetric neighbourhoods with VV inside W") {
  auto z3 = fixture_trg("z3.rt");
  auto a = find_symmetric_square_nbhd(z3, z3.group.upper);
  REQUIRE(a.witness);
  CHECK(*a.witness == ElementSet::full(3));
  CHECK_THROWS_AS(find_symmetric_square_nbhd(z3, ElementSet(3, {1})), InputError);

  // Oracle: scan the opens containing 1 in canonical order.
  auto s4 = fixture_trg("s4.rt");
  const Universe& u = s4.universe();
  const ElementSet w = named(u, {"1", "(12)", "(123)", "(132)"});
  std::map<oracle::Perm, std::string> names;
  for (const auto& n : u.names()) names[oracle::parse_cycles(n)] = n;
  auto mul = [&](Element x, Element y) {
    return u.at(names.at(oracle::compose(oracle::parse_cycles(u.name(x)), oracle::parse_cycles(u.name(y)))));
  };
  std::optional<ElementSet> expected;
  for (const auto& v : s4.tau.opens()) {
    if (expected || !v.contains(u.at("1"))) continue;
    ElementSet inv = u.empty_set();
    bool every_member_inverted = true;
    v.for_each([&](Element x) {
      bool found = false;
      s4.group.upper.for_each([&](Element y) {
        if (mul(x, y) == u.at("1") && mul(y, x) == u.at("1")) {
          inv.insert(y);
          found = true;
        }
      });
      every_member_inverted = every_member_inverted && found;
    });
    bool square = true;
    v.for_each([&](Element x) { v.for_each([&](Element y) { square = square && w.contains(mul(x, y)); }); });
    if (every_member_inverted && inv == v && square) expected = v;
  }
  auto b = find_symmetric_square_nbhd(s4, w);
  REQUIRE(expected);
  REQUIRE(b.witness);
  CHECK(*b.witness == *expected);
  CHECK(*b.witness == named(u, {"1", "(123)", "(132)"}));
}

TEST_CASE("topological group check") {
  auto fine = support::cyclic(3, {{0}, {1}, {2}});
  auto g = certify(fine, ElementSet::full(3));
  CHECK(check_topological_group(g, FiniteTopology::discrete(g.universe_ptr(), g.upper)).passed());
  CHECK(check_topological_group(fixture_trg("z3.rt")).verdict == Verdict::not_applicable);

  // Search for a topology on Z3 that breaks the classical conditions.
  std::optional<FiniteTopology> breaking;
  for (const auto& t : enumerate_topologies(g.universe_ptr(), g.upper)) {
    if (!breaking && check_topological_group(g, t).verdict == Verdict::fail) breaking = t;
  }
  REQUIRE(breaking);
  auto r = check_topological_group(g, *breaking);
  REQUIRE(r.first_failure() != nullptr);
  CHECK_FALSE(r.first_failure()->witness.empty());
  // The oracle's TRG test coincides with the classical one when G = upper(G).
  CHECK_FALSE(oracle_trg(g, *breaking));
}

TEST_CASE("closures of rough symmetric sets and rough subgroups") {
  auto s4 = fixture_trg("s4.rt");
  const Universe& u = s4.universe();
  const ElementSet a = named(u, {"(12)"});
  auto r = check_closure_symmetric(s4, a);
  const ElementSet cl = support::from_mask(24, oracle_closure(s4.tau, support::mask(a)));
  CHECK(closure(s4.tau, a) == cl);
  CHECK(r.verdict == (cl.is_subset_of(s4.group.group) ? Verdict::pass : Verdict::not_applicable));
  CHECK(check_closure_symmetric(s4, u.empty_set()).passed());
  CHECK_THROWS_AS(check_closure_symmetric(fixture_trg("z3.rt"), ElementSet(3, {1})), InputError);

  // S4: cl(G) takes in 1, which is outside G.
  CHECK(check_closure_subgroup(s4, s4.group.group).verdict == Verdict::not_applicable);
  CHECK_THROWS_AS(check_closure_subgroup(s4, named(u, {"(123)", "(132)"})), InputError);

  auto fine = support::cyclic(3, {{0}, {1}, {2}});
  auto g = certify(fine, ElementSet::full(3));
  auto discrete = trg_of(g, FiniteTopology::discrete(g.universe_ptr(), g.upper));
  CHECK(check_closure_subgroup(discrete, ElementSet(3, {0})).passed());
  CHECK(check_closure_symmetric(discrete, ElementSet::full(3)).passed());
}

TEST_CASE("products of topological rough groups") {
  auto z3 = fixture_trg("z3.rt");
  auto p = product_trg(z3, z3);
  CHECK(p.universe().size() == 9);
  CHECK(p.tau.opens().size() == 48);

  auto s4 = fixture_trg("s4.rt");
  CHECK_THROWS_AS(product_trg(z3, s4), LimitError);
  Limits roomy;
  roomy.universe_cap = 72;
  auto mixed = product_trg(z3, s4, roomy);
  CHECK(mixed.group.group.count() == 6);

  auto one = certify(support::cyclic(1, {{0}}), ElementSet(1, {0}));
  auto point = trg_of(one, FiniteTopology::discrete(one.universe_ptr(), one.upper));
  auto copy = product_trg(z3, point);
  CHECK(copy.tau.opens().size() == z3.tau.opens().size());
  CHECK(copy.group.group.count() == 2);
}

TEST_CASE("base translation") {
  auto z3 = fixture_trg("z3.rt");
  auto ws3 = support::load("z3.rt");
  CHECK(check_base_translation(z3, ws3.family("B").members).verdict == Verdict::not_applicable);

  auto ws = support::load("z4.rt");
  auto z4 = fixture_trg("z4.rt");
  const Family& b = ws.family("B").members;
  CHECK(check_base_translation(z4, b).passed());

  // eO = O for every O in the base at e.
  const Element e = z4.identity();
  for (const auto& o : base_at(Base{z4.group.group, b}, e)) {
    ElementSet moved(4);
    o.for_each([&](Element x) { moved.insert(z4.op()(e, x)); });
    CHECK(moved == o);
  }
}

TEST_CASE("topological rough group laws on random instances") {
  std::mt19937 rng(4242);
  std::vector<TRGCert> found;
  int compared = 0;
  for (int trial = 0; trial < 1500 && found.size() < 600; ++trial) {
    auto g = random_group(rng);
    if (!g) continue;
    std::vector<FiniteTopology> candidates;
    if (g->upper.count() <= 4) {
      candidates = enumerate_topologies(g->universe_ptr(), g->upper);
    } else {
      const oracle::Mask upper = support::mask(g->upper);
      for (int k = 0; k < 10; ++k) {
        std::vector<oracle::Mask> sub;
        for (unsigned s = rng() % 4; s > 0; --s) sub.push_back(rng() & upper);
        Family fam;
        for (auto m : oracle::topology_closure(upper, sub)) fam.push_back(support::from_mask(g->universe().size(), m));
        candidates.emplace_back(g->universe_ptr(), g->upper, canonical(std::move(fam)));
      }
    }
    for (const auto& tau : candidates) {
      auto r = verify_trg(*g, tau);
      ++compared;
      CHECK(r.report.passed() == oracle_trg(*g, tau));
      if (!r.cert) continue;
      const auto& c = *r.cert;
      found.push_back(c);

      CHECK(check_g_equals_g_inverse(c).passed());
      CHECK(check_open_iff_inverse_open(c).passed());
      CHECK(c.inverse_map.after(c.inverse_map) == FiniteMap::identity(c.group.universe_ptr(), c.group.group));
      CHECK(is_homeomorphism(c.inverse_map, c.tau_g, c.tau_g).passed());
      for (const auto& v : c.tau_g.opens()) CHECK(c.tau_g.is_open(inverse_of_set(c, v)));
      for (const auto& h : enumerate_rough_subgroups(c.group)) CHECK(is_rough_symmetric(c, h));

      const ElementSet a = support::from_mask(c.universe().size(), rng()) & c.group.group;
      if (is_rough_symmetric(c, a)) CHECK(check_closure_symmetric(c, a).verdict != Verdict::fail);
    }
  }
  CHECK(compared > 2000);
  REQUIRE(found.size() > 50);

  // The product map is checked on (G1 x G2)^2, which must stay under the cap.
  int products = 0;
  for (int k = 0; k < 2000 && products < 60; ++k) {
    const auto& a = found[rng() % found.size()];
    const auto& b = found[rng() % found.size()];
    if (a.group.group.count() * b.group.group.count() > 8) continue;
    if (a.group.upper.count() * b.group.upper.count() > 16) continue;
    ++products;
    CHECK_NOTHROW(product_trg(a, b));
  }
  CHECK(products == 60);
}
