#include "roughtop/topology.hpp"

#include <unordered_set>

#include "roughtop/errors.hpp"

namespace roughtop {

namespace {

// Refuse to materialize families beyond this many opens.
constexpr std::size_t kMaxOpens = std::size_t{1} << 22;

void require_members_inside(const Universe& u, const ElementSet& carrier, const Family& family,
                            const char* what) {
  if (carrier.universe_size() != u.size()) {
    throw InputError(std::string(what) + ": carrier does not range over the universe");
  }
  for (const auto& m : family) {
    if (m.universe_size() != u.size() || !m.is_subset_of(carrier)) {
      throw InputError(std::string(what) + ": member " +
                       (m.universe_size() == u.size() ? format_set(u, m) : std::string("?")) +
                       " is not a subset of the carrier " + format_set(u, carrier));
    }
  }
}

void require_subset(const FiniteTopology& top, const ElementSet& a, const char* what) {
  if (a.universe_size() != top.universe().size() || !a.is_subset_of(top.carrier())) {
    throw InputError(std::string(what) + ": set is not contained in the carrier " +
                     format_set(top.universe(), top.carrier()));
  }
}

}  // namespace

FiniteTopology::FiniteTopology(UniversePtr universe, ElementSet carrier, Family opens)
    : universe_(std::move(universe)), carrier_(std::move(carrier)), opens_(std::move(opens)) {
  canonicalize(opens_);
  auto report = verify_topology(*universe_, carrier_, opens_);
  if (!report.passed()) {
    const Clause* c = report.first_failure();
    throw InputError("not a topology: " + c->name + " (" + c->witness + ")");
  }
}

FiniteTopology::FiniteTopology(Trusted, UniversePtr universe, ElementSet carrier, Family opens)
    : universe_(std::move(universe)), carrier_(std::move(carrier)), opens_(std::move(opens)) {
  canonicalize(opens_);
}

FiniteTopology FiniteTopology::discrete(UniversePtr universe, const ElementSet& carrier) {
  Family singletons;
  carrier.for_each([&](Element e) { singletons.push_back(ElementSet::singleton(carrier.universe_size(), e)); });
  return generate_topology(universe, carrier, singletons);
}

FiniteTopology FiniteTopology::indiscrete(UniversePtr universe, const ElementSet& carrier) {
  return generate_topology(universe, carrier, {});
}

VerificationReport verify_topology(const Universe& universe, const ElementSet& carrier,
                                   const Family& family) {
  require_members_inside(universe, carrier, family, "verify_topology");
  const Family opens = canonical(family);
  VerificationReport r("topology on " + format_set(universe, carrier));

  const ElementSet empty(universe.size());
  if (family_contains(opens, empty)) {
    r.pass("contains the empty set");
  } else {
    r.fail("contains the empty set", "{} missing");
  }
  if (family_contains(opens, carrier)) {
    r.pass("contains the carrier");
  } else {
    r.fail("contains the carrier", format_set(universe, carrier) + " missing");
  }

  auto scan = [&](const char* clause, const char* symbol, auto combine) {
    for (std::size_t i = 0; i < opens.size(); ++i) {
      for (std::size_t j = i + 1; j < opens.size(); ++j) {
        ElementSet c = combine(opens[i], opens[j]);
        if (!family_contains(opens, c)) {
          r.fail(clause, format_set(universe, opens[i]) + " " + symbol + " " +
                             format_set(universe, opens[j]) + " = " + format_set(universe, c) +
                             " missing");
          return;
        }
      }
    }
    r.pass(clause);
  };
  scan("closed under pairwise union", "u", [](const ElementSet& a, const ElementSet& b) { return a | b; });
  scan("closed under pairwise intersection", "n",
       [](const ElementSet& a, const ElementSet& b) { return a & b; });
  r.stat("opens", static_cast<std::int64_t>(opens.size()));
  return r;
}

FiniteTopology generate_topology(const UniversePtr& universe, const ElementSet& carrier,
                                 const Family& subbasis) {
  require_members_inside(*universe, carrier, subbasis, "generate_topology");

  // Basis: for each point, the intersection of every subbasis member (and
  // the carrier) containing it. These are the minimal members of the
  // closure of the subbasis under finite intersection.
  Family basis;
  carrier.for_each([&](Element x) {
    ElementSet n = carrier;
    for (const auto& s : subbasis) {
      if (s.contains(x)) n &= s;
    }
    basis.push_back(std::move(n));
  });
  canonicalize(basis);

  // Union closure by fixpoint: after processing a basis member b, the family
  // holds every union of the members processed so far.
  Family opens{ElementSet(universe->size())};
  std::unordered_set<ElementSet, ElementSetHash> seen(opens.begin(), opens.end());
  for (const auto& b : basis) {
    const std::size_t current = opens.size();
    for (std::size_t i = 0; i < current; ++i) {
      ElementSet u = opens[i] | b;
      if (seen.insert(u).second) {
        opens.push_back(std::move(u));
        if (opens.size() > kMaxOpens) {
          throw LimitError("generated topology exceeds " + std::to_string(kMaxOpens) + " opens");
        }
      }
    }
  }
  if (seen.insert(carrier).second) opens.push_back(carrier);
  return FiniteTopology(FiniteTopology::Trusted{}, universe, carrier, std::move(opens));
}

FiniteTopology subspace_topology(const FiniteTopology& top, const ElementSet& subset) {
  require_subset(top, subset, "subspace_topology");
  Family opens;
  opens.reserve(top.opens().size());
  for (const auto& o : top.opens()) opens.push_back(o & subset);
  return FiniteTopology(FiniteTopology::Trusted{}, top.universe_ptr(), subset, std::move(opens));
}

FiniteTopology product_topology(const FiniteTopology& left, const FiniteTopology& right,
                                const Limits& limits) {
  const std::size_t points = left.carrier().count() * right.carrier().count();
  if (points > limits.universe_cap) {
    throw LimitError("product carrier of " + std::to_string(points) +
                     " points exceeds the cap of " + std::to_string(limits.universe_cap));
  }
  auto universe = product_universe(left.universe(), right.universe());
  Family rectangles;
  rectangles.reserve(left.opens().size() * right.opens().size());
  for (const auto& a : left.opens()) {
    for (const auto& b : right.opens()) rectangles.push_back(product_set(a, b));
  }
  canonicalize(rectangles);
  return generate_topology(universe, product_set(left.carrier(), right.carrier()), rectangles);
}

ProductTopologyView::ProductTopologyView(const FiniteTopology& left, const FiniteTopology& right,
                                         const Limits& limits)
    : universe_(product_universe(left.universe(), right.universe())),
      carrier_(product_set(left.carrier(), right.carrier())),
      right_size_(right.universe().size()),
      left_nbhd_(left.universe().size()),
      right_nbhd_(right.universe().size()) {
  const std::size_t points = carrier_.count();
  if (points > limits.universe_cap) {
    throw LimitError("product carrier of " + std::to_string(points) +
                     " points exceeds the cap of " + std::to_string(limits.universe_cap));
  }
  left.carrier().for_each([&](Element x) { left_nbhd_[x] = minimal_neighbourhood(left, x); });
  right.carrier().for_each([&](Element y) { right_nbhd_[y] = minimal_neighbourhood(right, y); });
}

bool ProductTopologyView::is_open(const ElementSet& s) const {
  if (s.universe_size() != universe_->size() || !s.is_subset_of(carrier_)) return false;
  bool open = true;
  s.for_each([&](Element p) {
    if (!open) return;
    const auto [x, y] = pair_components(right_size_, p);
    left_nbhd_[x].for_each([&](Element a) {
      right_nbhd_[y].for_each([&](Element b) { open = open && s.contains(pair_index(right_size_, a, b)); });
    });
  });
  return open;
}

FiniteTopology compacted(const FiniteTopology& top, const Compaction& c) {
  if (c.from_parent.size() != top.universe().size() || c.lower(top.carrier()).count() != top.carrier().count()) {
    throw InputError("compaction does not cover the topology's carrier");
  }
  Family opens;
  opens.reserve(top.opens().size());
  for (const auto& o : top.opens()) opens.push_back(c.lower(o));
  // The image of a topology under an injective relabelling is a topology.
  return generate_topology(c.universe, c.lower(top.carrier()), opens);
}

ElementSet closure(const FiniteTopology& top, const ElementSet& a) {
  require_subset(top, a, "closure");
  ElementSet out = top.carrier();
  for (const auto& o : top.opens()) {
    if (!o.intersects(a)) out -= o;
  }
  return out;
}

ElementSet interior(const FiniteTopology& top, const ElementSet& a) {
  require_subset(top, a, "interior");
  ElementSet out(a.universe_size());
  for (const auto& o : top.opens()) {
    if (o.is_subset_of(a)) out |= o;
  }
  return out;
}

ElementSet minimal_neighbourhood(const FiniteTopology& top, Element x) {
  if (!top.carrier().contains(x)) throw InputError("point outside the carrier");
  ElementSet out = top.carrier();
  for (const auto& o : top.opens()) {
    if (o.contains(x)) out &= o;
  }
  return out;
}

// ---------------------------------------------------------------------------
// FiniteMap

FiniteMap::FiniteMap(UniversePtr domain_universe, ElementSet domain, UniversePtr codomain_universe,
                     ElementSet codomain, std::vector<Element> assignment)
    : dom_u_(std::move(domain_universe)),
      domain_(std::move(domain)),
      cod_u_(std::move(codomain_universe)),
      codomain_(std::move(codomain)),
      assignment_(std::move(assignment)) {
  if (domain_.universe_size() != dom_u_->size() || codomain_.universe_size() != cod_u_->size()) {
    throw InputError("map domain or codomain ranges over the wrong universe");
  }
  assignment_.resize(dom_u_->size(), 0);
  domain_.for_each([&](Element x) {
    const Element y = assignment_[x];
    if (!codomain_.contains(y)) {
      throw InputError("image of '" + dom_u_->name(x) + "' lies outside the codomain " +
                       format_set(*cod_u_, codomain_));
    }
  });
}

FiniteMap FiniteMap::identity(UniversePtr universe, const ElementSet& carrier) {
  std::vector<Element> a(universe->size());
  for (Element i = 0; i < a.size(); ++i) a[i] = i;
  return FiniteMap(universe, carrier, universe, carrier, std::move(a));
}

ElementSet FiniteMap::image(const ElementSet& s) const {
  ElementSet out(cod_u_->size());
  (s & domain_).for_each([&](Element x) { out.insert(assignment_[x]); });
  return out;
}

ElementSet FiniteMap::preimage(const ElementSet& s) const {
  ElementSet out(dom_u_->size());
  domain_.for_each([&](Element x) {
    if (s.contains(assignment_[x])) out.insert(x);
  });
  return out;
}

bool FiniteMap::injective() const { return image(domain_).count() == domain_.count(); }

bool FiniteMap::surjective() const { return image(domain_) == codomain_; }

FiniteMap FiniteMap::inverse() const {
  if (!bijective()) throw InputError("map is not bijective and has no inverse");
  std::vector<Element> a(cod_u_->size(), 0);
  domain_.for_each([&](Element x) { a[assignment_[x]] = x; });
  return FiniteMap(cod_u_, codomain_, dom_u_, domain_, std::move(a));
}

FiniteMap FiniteMap::after(const FiniteMap& first) const {
  if (!same_universe(first.cod_u_, dom_u_) || !first.image(first.domain_).is_subset_of(domain_)) {
    throw InputError("maps are not composable");
  }
  std::vector<Element> a(first.dom_u_->size(), 0);
  first.domain_.for_each([&](Element x) { a[x] = assignment_[first(x)]; });
  return FiniteMap(first.dom_u_, first.domain_, cod_u_, codomain_, std::move(a));
}

std::string FiniteMap::describe() const {
  std::string out;
  domain_.for_each([&](Element x) {
    if (!out.empty()) out += ' ';
    out += dom_u_->name(x) + "->" + cod_u_->name(assignment_[x]);
  });
  return out;
}

bool FiniteMap::operator==(const FiniteMap& other) const {
  if (!same_universe(dom_u_, other.dom_u_) || !same_universe(cod_u_, other.cod_u_) ||
      domain_ != other.domain_ || codomain_ != other.codomain_) {
    return false;
  }
  bool equal = true;
  domain_.for_each([&](Element x) { equal = equal && assignment_[x] == other.assignment_[x]; });
  return equal;
}

Family image_family(const FiniteMap& f, const Family& family) {
  Family out;
  out.reserve(family.size());
  for (const auto& s : family) out.push_back(f.image(s));
  canonicalize(out);
  return out;
}

// ---------------------------------------------------------------------------
// Continuity

namespace {

template <typename DomainTopology>
void require_carriers(const FiniteMap& f, const DomainTopology& dom_top,
                      const FiniteTopology& cod_top) {
  if (!same_universe(f.domain_universe(), dom_top.universe_ptr()) ||
      f.domain() != dom_top.carrier()) {
    throw InputError("carrier mismatch: map domain is not the domain topology's carrier");
  }
  if (!same_universe(f.codomain_universe(), cod_top.universe_ptr()) ||
      f.codomain() != cod_top.carrier()) {
    throw InputError("carrier mismatch: map codomain is not the codomain topology's carrier");
  }
}

template <typename DomainTopology>
VerificationReport continuity(const FiniteMap& f, const DomainTopology& dom_top,
                              const FiniteTopology& cod_top) {
  require_carriers(f, dom_top, cod_top);
  VerificationReport r("continuity");
  for (const auto& o : cod_top.opens()) {
    ElementSet pre = f.preimage(o);
    if (!dom_top.is_open(pre)) {
      r.fail("preimage of every open set is open",
             "preimage of " + format_set(cod_top.universe(), o) + " is " +
                 format_set(dom_top.universe(), pre) + ", which is not open");
      return r;
    }
  }
  r.pass("preimage of every open set is open");
  r.stat("opens_checked", static_cast<std::int64_t>(cod_top.opens().size()));
  return r;
}

}  // namespace

VerificationReport is_continuous(const FiniteMap& f, const FiniteTopology& dom_top,
                                 const FiniteTopology& cod_top) {
  return continuity(f, dom_top, cod_top);
}

VerificationReport is_continuous(const FiniteMap& f, const ProductTopologyView& dom_top,
                                 const FiniteTopology& cod_top) {
  return continuity(f, dom_top, cod_top);
}

VerificationReport is_homeomorphism(const FiniteMap& f, const FiniteTopology& t1,
                                    const FiniteTopology& t2) {
  require_carriers(f, t1, t2);
  VerificationReport r("homeomorphism");
  if (!f.injective()) {
    // Name the first collision.
    std::vector<std::optional<Element>> seen(t2.universe().size());
    std::string witness;
    f.domain().for_each([&](Element x) {
      if (!witness.empty()) return;
      auto& slot = seen[f(x)];
      if (slot) {
        witness = "not bijective: " + t1.universe().name(*slot) + " and " + t1.universe().name(x) +
                  " both map to " + t2.universe().name(f(x));
      }
      slot = x;
    });
    r.fail("bijective", witness);
    return r;
  }
  if (!f.surjective()) {
    const Element missing = (f.codomain() - f.image(f.domain())).first();
    r.fail("bijective", "not bijective: " + t2.universe().name(missing) + " has no preimage");
    return r;
  }
  r.pass("bijective");
  auto forward = is_continuous(f, t1, t2);
  r.absorb(forward, "map: ");
  if (!forward.passed()) return r;
  r.absorb(is_continuous(f.inverse(), t2, t1), "inverse: ");
  return r;
}

VerificationReport verify_base(const FiniteTopology& top, const Family& candidate) {
  require_members_inside(top.universe(), top.carrier(), candidate, "verify_base");
  VerificationReport r("base");
  const Universe& u = top.universe();
  bool ok = true;
  for (const auto& b : candidate) {
    if (!top.is_open(b)) {
      r.fail("every member is open", format_set(u, b) + " is not open");
      ok = false;
      break;
    }
  }
  if (ok) r.pass("every member is open");
  for (const auto& o : top.opens()) {
    ElementSet covered(u.size());
    for (const auto& b : candidate) {
      if (b.is_subset_of(o)) covered |= b;
    }
    if (covered != o) {
      r.fail("every open set is a union of members",
             format_set(u, o) + " is not a union of members");
      return r;
    }
  }
  r.pass("every open set is a union of members");
  return r;
}

Family base_at(const Base& base, Element g) {
  if (!base.carrier.contains(g)) throw InputError("base_at: point outside the carrier");
  Family out;
  for (const auto& b : base.members) {
    if (b.contains(g)) out.push_back(b);
  }
  return out;
}

}  // namespace roughtop
