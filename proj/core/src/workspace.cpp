#include "roughtop/workspace.hpp"

#include <algorithm>
#include <sstream>

#include "roughtop/errors.hpp"

namespace roughtop {

namespace {

enum Kind : std::size_t { kUniverse, kTable, kPartition, kSubset, kFamily, kMap };

const char* kind_name(std::size_t k) {
  static const char* names[] = {"universe", "table", "partition", "subset", "family", "map"};
  return names[k];
}

const std::string& decl_name(const Workspace::Declaration& d) {
  return std::visit([](const auto& x) -> const std::string& { return x.name; }, d);
}

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](char c) {
    return c == '{' || c == '}' || c == '#' || c == ':' || c == '*' || c == '(' || c == ')' ||
           std::isspace(static_cast<unsigned char>(c));
  });
}

bool valid_element(std::string_view s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](char c) {
    return c == '{' || c == '}' || c == '#' || std::isspace(static_cast<unsigned char>(c));
  });
}

}  // namespace

void Workspace::add(Declaration d) {
  const std::string& name = decl_name(d);
  if (!valid_name(name)) throw InputError("invalid name '" + name + "'");
  if (find(d.index(), name)) {
    throw InputError(std::string("duplicate ") + kind_name(d.index()) + " name '" + name + "'");
  }
  index_.emplace(std::make_pair(d.index(), name), decls_.size());
  decls_.push_back(std::move(d));
}

std::optional<std::size_t> Workspace::find(std::size_t kind, std::string_view name) const {
  auto it = index_.find(std::make_pair(kind, std::string(name)));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Workspace::Declaration& Workspace::get(std::size_t kind, std::string_view name,
                                             const char* what) const {
  auto idx = find(kind, name);
  if (!idx) throw InputError(std::string("unknown ") + what + " '" + std::string(name) + "'");
  return decls_[*idx];
}

bool Workspace::has_universe(std::string_view name) const { return find(kUniverse, name).has_value(); }
bool Workspace::has_subset(std::string_view name) const { return find(kSubset, name).has_value(); }

const Workspace::UniverseDecl& Workspace::universe(std::string_view name) const {
  return std::get<UniverseDecl>(get(kUniverse, name, "universe"));
}
const Workspace::SubsetDecl& Workspace::subset(std::string_view name) const {
  return std::get<SubsetDecl>(get(kSubset, name, "subset"));
}
const Workspace::FamilyDecl& Workspace::family(std::string_view name) const {
  return std::get<FamilyDecl>(get(kFamily, name, "topology or family"));
}
const Workspace::MapDecl& Workspace::map(std::string_view name) const {
  return std::get<MapDecl>(get(kMap, name, "map"));
}

FiniteTopology Workspace::topology(std::string_view name) const {
  const FamilyDecl& f = family(name);
  try {
    return FiniteTopology(f.universe, f.carrier, f.members);
  } catch (const InputError& e) {
    throw InputError("'" + f.name + "' is " + e.what());
  }
}

ApproxSpacePtr Workspace::space(std::string_view universe_name, std::string_view partition,
                                std::string_view table) const {
  const UniverseDecl& u = universe(universe_name);
  const PartitionDecl* part = nullptr;
  const TableDecl* tab = nullptr;
  for (const auto& d : decls_) {
    if (const auto* p = std::get_if<PartitionDecl>(&d); p && p->universe == u.name) {
      if (!partition.empty() ? p->name == partition : true) {
        if (part && partition.empty()) {
          throw InputError("universe '" + u.name + "' has several partitions; name one");
        }
        if (!part) part = p;
      }
    }
    if (const auto* t = std::get_if<TableDecl>(&d); t && t->universe == u.name) {
      if (!table.empty() ? t->name == table : true) {
        if (tab && table.empty()) {
          throw InputError("universe '" + u.name + "' has several tables; name one");
        }
        if (!tab) tab = t;
      }
    }
  }
  if (!part) {
    throw InputError(partition.empty() ? "universe '" + u.name + "' has no partition"
                                       : "unknown partition '" + std::string(partition) + "'");
  }
  if (!table.empty() && !tab) throw InputError("unknown table '" + std::string(table) + "'");
  std::optional<CayleyTable> op;
  if (tab) op = tab->table;
  return std::make_shared<const ApproxSpace>(part->partition, std::move(op));
}

ApproxSpacePtr Workspace::space_of_subset(std::string_view subset_name) const {
  return space(subset(subset_name).universe);
}

Workspace::ResolvedSet Workspace::resolve(std::string_view ref) const {
  auto star = ref.rfind('*');
  if (star != std::string_view::npos) {
    ResolvedSet left = resolve(ref.substr(0, star));
    ResolvedSet right = resolve(ref.substr(star + 1));
    check_universe_cap(left.universe->size() * right.universe->size(), limits_);
    return {product_universe(*left.universe, *right.universe), product_set(left.set, right.set)};
  }
  auto wrapped = [&](std::string_view fn) -> std::optional<std::string_view> {
    if (ref.size() > fn.size() + 2 && ref.substr(0, fn.size()) == fn && ref[fn.size()] == '(' &&
        ref.back() == ')') {
      return ref.substr(fn.size() + 1, ref.size() - fn.size() - 2);
    }
    return std::nullopt;
  };
  auto base = [&](std::string_view name) -> std::pair<std::string, ResolvedSet> {
    if (find(kSubset, name) && find(kUniverse, name)) {
      throw InputError("ambiguous reference '" + std::string(name) + "' (a subset and a universe)");
    }
    if (auto i = find(kSubset, name)) {
      const auto& s = std::get<SubsetDecl>(decls_[*i]);
      return {s.universe, {universe(s.universe).universe, s.set}};
    }
    if (auto i = find(kUniverse, name)) {
      const auto& u = std::get<UniverseDecl>(decls_[*i]);
      return {u.name, {u.universe, u.universe->full_set()}};
    }
    throw InputError("unresolved reference '" + std::string(name) + "'");
  };
  if (auto inner = wrapped("upper")) {
    auto [uname, r] = base(*inner);
    r.set = upper_approx(*space(uname), r.set);
    return r;
  }
  if (auto inner = wrapped("lower")) {
    auto [uname, r] = base(*inner);
    r.set = lower_approx(*space(uname), r.set);
    return r;
  }
  return base(ref).second;
}

bool Workspace::operator==(const Workspace& other) const {
  if (decls_.size() != other.decls_.size()) return false;
  for (std::size_t i = 0; i < decls_.size(); ++i) {
    const auto& a = decls_[i];
    const auto& b = other.decls_[i];
    if (a.index() != b.index()) return false;
    bool same = std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          const T& y = std::get<T>(b);
          if (x.name != y.name) return false;
          if constexpr (std::is_same_v<T, UniverseDecl>) {
            return same_universe(x.universe, y.universe);
          } else if constexpr (std::is_same_v<T, TableDecl>) {
            return x.universe == y.universe && x.table == y.table;
          } else if constexpr (std::is_same_v<T, PartitionDecl>) {
            return x.universe == y.universe && x.partition == y.partition;
          } else if constexpr (std::is_same_v<T, SubsetDecl>) {
            return x.universe == y.universe && x.set == y.set;
          } else if constexpr (std::is_same_v<T, FamilyDecl>) {
            return x.topology == y.topology && x.carrier_ref == y.carrier_ref &&
                   same_universe(x.universe, y.universe) && x.carrier == y.carrier &&
                   x.members == y.members;
          } else {
            return x.from_ref == y.from_ref && x.to_ref == y.to_ref && x.map == y.map;
          }
        },
        a);
    if (!same) return false;
  }
  return true;
}

// Parsing

namespace {

struct Token {
  std::string text;
  std::size_t col;  // 1-based
};

std::vector<Token> split_tokens(std::string_view s, std::size_t first_col) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    out.push_back({std::string(s.substr(start, i - start)), first_col + start});
  }
  return out;
}

struct Line {
  std::size_t number;
  std::string text;  // comment stripped
};

class Parser {
 public:
  Parser(std::string_view text, const Limits& limits) : ws_(limits), limits_(limits) {
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto nl = text.find('\n', pos);
      std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
      ++number;
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      bool blank = std::all_of(raw.begin(), raw.end(),
                               [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
      if (!blank) lines_.push_back({number, std::string(raw)});
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
  }

  Workspace run() {
    while (next_ < lines_.size()) declaration(lines_[next_++]);
    return std::move(ws_);
  }

 private:
  [[noreturn]] void fail(const Line& l, std::size_t col, const std::string& msg) const {
    throw ParseError(l.number, col, msg);
  }

  static bool is_keyword(std::string_view w) {
    return w == "universe" || w == "table" || w == "partition" || w == "subset" ||
           w == "topology" || w == "family" || w == "map";
  }

  static bool looks_like_declaration(const Line& l) {
    auto toks = split_tokens(l.text, 1);
    return !toks.empty() && is_keyword(toks[0].text) && l.text.find(':') != std::string::npos;
  }

  // Runs f, turning a library InputError into a positioned diagnostic.
  template <typename F>
  auto at(const Line& l, std::size_t col, F&& f) const {
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(l.number, col, e.what());
    }
  }

  void declaration(const Line& l) {
    auto colon = l.text.find(':');
    auto head = split_tokens(std::string_view(l.text).substr(0, colon == std::string::npos ? l.text.size() : colon), 1);
    if (head.empty()) fail(l, colon + 1, "expected a declaration keyword before ':'");
    const std::string& kw = head[0].text;
    if (!is_keyword(kw)) {
      fail(l, head[0].col,
           "unknown declaration '" + kw +
               "' (expected universe, table, partition, subset, topology, family or map)");
    }
    if (colon == std::string::npos) {
      fail(l, l.text.size() + 1, "expected ':' after the " + kw + " header");
    }
    std::string_view body = std::string_view(l.text).substr(colon + 1);
    std::size_t body_col = colon + 2;

    auto expect_head = [&](std::size_t n, const char* shape) {
      if (head.size() != n) {
        std::size_t col = head.size() > n ? head[n].col : colon + 1;
        fail(l, col, "malformed " + kw + " header, expected '" + shape + "'");
      }
    };
    auto expect_word = [&](std::size_t i, const char* word) {
      if (head[i].text != word) {
        fail(l, head[i].col, "expected '" + std::string(word) + "', found '" + head[i].text + "'");
      }
    };

    if (kw == "universe") {
      expect_head(2, "universe NAME: ELEMENTS");
      universe(l, head[1], split_tokens(body, body_col));
    } else if (kw == "table") {
      expect_head(4, "table NAME on UNIVERSE:");
      expect_word(2, "on");
      auto rest = split_tokens(body, body_col);
      if (!rest.empty()) fail(l, rest[0].col, "table rows start on the next line");
      table(l, head[1], head[3]);
    } else if (kw == "partition") {
      expect_head(4, "partition NAME on UNIVERSE: {..} {..}");
      expect_word(2, "on");
      partition(l, head[1], head[3], body, body_col);
    } else if (kw == "subset") {
      expect_head(4, "subset NAME of UNIVERSE: ELEMENTS");
      expect_word(2, "of");
      subset(l, head[1], head[3], body, body_col);
    } else if (kw == "topology" || kw == "family") {
      expect_head(4, "topology NAME on SET: {..} {..}");
      expect_word(2, "on");
      family(l, kw == "topology", head[1], head[3], body, body_col);
    } else {
      expect_head(6, "map NAME from SET to SET: a->b ..");
      expect_word(2, "from");
      expect_word(4, "to");
      map(l, head[1], head[3], head[5], body, body_col);
    }
  }

  void add(const Line& l, const Token& name, Workspace::Declaration d) {
    at(l, name.col, [&] {
      ws_.add(std::move(d));
      return 0;
    });
  }

  const Workspace::UniverseDecl& universe_ref(const Line& l, const Token& t) const {
    try {
      return ws_.universe(t.text);
    } catch (const InputError& e) {
      throw ParseError(l.number, t.col, e.what());
    }
  }

  Element element(const Line& l, const Universe& u, const std::string& uname, const Token& t) const {
    auto e = u.find(t.text);
    if (!e) fail(l, t.col, "unknown element '" + t.text + "' in '" + uname + "'");
    return *e;
  }

  // Sequence of brace-delimited sets: {a b} {} {c}.
  std::vector<std::vector<Token>> sets(const Line& l, std::string_view body, std::size_t body_col) const {
    std::vector<std::vector<Token>> out;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    };
    for (skip(); i < body.size(); skip()) {
      if (body[i] != '{') fail(l, body_col + i, "expected '{'");
      std::size_t open = i++;
      std::vector<Token> members;
      for (;;) {
        skip();
        if (i >= body.size()) fail(l, body_col + open, "unterminated '{'");
        if (body[i] == '}') {
          ++i;
          break;
        }
        if (body[i] == '{') fail(l, body_col + i, "nested '{'");
        std::size_t start = i;
        while (i < body.size() && body[i] != '}' && body[i] != '{' &&
               !std::isspace(static_cast<unsigned char>(body[i]))) {
          ++i;
        }
        members.push_back({std::string(body.substr(start, i - start)), body_col + start});
      }
      out.push_back(std::move(members));
    }
    return out;
  }

  ElementSet set_of(const Line& l, const Universe& u, const std::string& uname,
                    const std::vector<Token>& members) const {
    ElementSet s = u.empty_set();
    for (const auto& t : members) {
      Element e = element(l, u, uname, t);
      if (s.contains(e)) fail(l, t.col, "element '" + t.text + "' repeated");
      s.insert(e);
    }
    return s;
  }

  void universe(const Line& l, const Token& name, const std::vector<Token>& elems) {
    if (elems.empty()) fail(l, name.col, "universe '" + name.text + "' is empty");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const auto& t = elems[i];
      if (!valid_element(t.text)) fail(l, t.col, "invalid element name '" + t.text + "'");
      for (std::size_t j = 0; j < i; ++j) {
        if (elems[j].text == t.text) fail(l, t.col, "duplicate element '" + t.text + "'");
      }
      names.push_back(t.text);
    }
    if (names.size() > limits_.universe_cap) {
      fail(l, name.col,
           "universe '" + name.text + "' has " + std::to_string(names.size()) +
               " elements, above the cap of " + std::to_string(limits_.universe_cap));
    }
    add(l, name, Workspace::UniverseDecl{name.text, make_universe(std::move(names))});
  }

  void table(const Line& l, const Token& name, const Token& uref) {
    const auto& ud = universe_ref(l, uref);
    const Universe& u = *ud.universe;
    const std::size_t n = u.size();
    std::vector<Element> entries;
    entries.reserve(n * n);
    for (std::size_t row = 0; row < n; ++row) {
      if (next_ >= lines_.size() || looks_like_declaration(lines_[next_])) {
        fail(l, name.col,
             "table not total: expected " + std::to_string(n) + " rows, found " + std::to_string(row));
      }
      const Line& r = lines_[next_++];
      auto cells = split_tokens(r.text, 1);
      if (cells.size() != n) {
        std::size_t col = cells.size() > n ? cells[n].col : r.text.size() + 1;
        fail(r, col,
             "table row length: row " + std::to_string(row + 1) + " has " +
                 std::to_string(cells.size()) + " entries, expected " + std::to_string(n));
      }
      for (const auto& c : cells) entries.push_back(element(r, u, ud.name, c));
    }
    add(l, name, Workspace::TableDecl{name.text, ud.name, CayleyTable(ud.universe, std::move(entries))});
  }

  void partition(const Line& l, const Token& name, const Token& uref, std::string_view body,
                 std::size_t body_col) {
    const auto& ud = universe_ref(l, uref);
    std::vector<ElementSet> blocks;
    for (const auto& members : sets(l, body, body_col)) {
      blocks.push_back(set_of(l, *ud.universe, ud.name, members));
    }
    Partition p = at(l, body_col, [&] { return Partition(ud.universe, std::move(blocks)); });
    add(l, name, Workspace::PartitionDecl{name.text, ud.name, std::move(p)});
  }

  void subset(const Line& l, const Token& name, const Token& uref, std::string_view body,
              std::size_t body_col) {
    const auto& ud = universe_ref(l, uref);
    // Optional surrounding braces.
    std::string flat(body);
    for (char& c : flat) {
      if (c == '{' || c == '}') c = ' ';
    }
    ElementSet s = set_of(l, *ud.universe, ud.name, split_tokens(flat, body_col));
    add(l, name, Workspace::SubsetDecl{name.text, ud.name, std::move(s)});
  }

  Workspace::ResolvedSet resolve(const Line& l, const Token& ref) const {
    return at(l, ref.col, [&] { return ws_.resolve(ref.text); });
  }

  void family(const Line& l, bool is_topology, const Token& name, const Token& ref,
              std::string_view body, std::size_t body_col) {
    auto carrier = resolve(l, ref);
    Family members;
    for (const auto& set_tokens : sets(l, body, body_col)) {
      ElementSet s = set_of(l, *carrier.universe, ref.text, set_tokens);
      if (!s.is_subset_of(carrier.set)) {
        std::size_t col = set_tokens.empty() ? body_col : set_tokens.front().col;
        fail(l, col, format_set(*carrier.universe, s) + " is not inside " + ref.text);
      }
      members.push_back(std::move(s));
    }
    canonicalize(members);
    add(l, name,
        Workspace::FamilyDecl{name.text, is_topology, ref.text, carrier.universe, carrier.set,
                              std::move(members)});
  }

  void map(const Line& l, const Token& name, const Token& from, const Token& to,
           std::string_view body, std::size_t body_col) {
    auto dom = resolve(l, from);
    auto cod = resolve(l, to);
    std::vector<Element> assignment(dom.universe->size(), 0);
    ElementSet seen = dom.universe->empty_set();
    for (const auto& t : split_tokens(body, body_col)) {
      auto arrow = t.text.find("->");
      if (arrow == std::string::npos) fail(l, t.col, "expected 'a->b', found '" + t.text + "'");
      Token a{t.text.substr(0, arrow), t.col};
      Token b{t.text.substr(arrow + 2), t.col + arrow + 2};
      Element x = element(l, *dom.universe, from.text, a);
      Element y = element(l, *cod.universe, to.text, b);
      if (!dom.set.contains(x)) fail(l, a.col, "'" + a.text + "' is not in " + from.text);
      if (!cod.set.contains(y)) fail(l, b.col, "'" + b.text + "' is not in " + to.text);
      if (seen.contains(x)) fail(l, a.col, "'" + a.text + "' is assigned twice");
      seen.insert(x);
      assignment[x] = y;
    }
    ElementSet missing = dom.set - seen;
    if (!missing.empty()) {
      fail(l, name.col,
           "map not total: no image for '" + dom.universe->name(missing.first()) + "'");
    }
    FiniteMap m(dom.universe, dom.set, cod.universe, cod.set, std::move(assignment));
    add(l, name, Workspace::MapDecl{name.text, from.text, to.text, std::move(m)});
  }

  Workspace ws_;
  Limits limits_;
  std::vector<Line> lines_;
  std::size_t next_ = 0;
};

std::string members_text(const Universe& u, const ElementSet& s) {
  std::string out;
  s.for_each([&](Element e) {
    if (!out.empty()) out += ' ';
    out += u.name(e);
  });
  return out;
}

std::string sets_text(const Universe& u, const std::vector<ElementSet>& sets) {
  std::string out;
  for (const auto& s : sets) {
    if (!out.empty()) out += ' ';
    out += '{' + members_text(u, s) + '}';
  }
  return out;
}

}  // namespace

Workspace parse_workspace(std::string_view text, const Limits& limits) {
  return Parser(text, limits).run();
}

std::string serialize_workspace(const Workspace& ws) {
  std::ostringstream out;
  for (const auto& d : ws.declarations()) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Workspace::UniverseDecl>) {
            out << "universe " << x.name << ':';
            for (const auto& n : x.universe->names()) out << ' ' << n;
            out << '\n';
          } else if constexpr (std::is_same_v<T, Workspace::TableDecl>) {
            out << "table " << x.name << " on " << x.universe << ":\n";
            const Universe& u = *x.table.universe();
            for (Element a = 0; a < u.size(); ++a) {
              out << ' ';
              for (Element b = 0; b < u.size(); ++b) out << ' ' << u.name(x.table(a, b));
              out << '\n';
            }
          } else if constexpr (std::is_same_v<T, Workspace::PartitionDecl>) {
            out << "partition " << x.name << " on " << x.universe << ": "
                << sets_text(*x.partition.universe(), x.partition.blocks()) << '\n';
          } else if constexpr (std::is_same_v<T, Workspace::SubsetDecl>) {
            std::string m = members_text(*ws.universe(x.universe).universe, x.set);
            out << "subset " << x.name << " of " << x.universe << ':' << (m.empty() ? "" : " ") << m
                << '\n';
          } else if constexpr (std::is_same_v<T, Workspace::FamilyDecl>) {
            out << (x.topology ? "topology " : "family ") << x.name << " on " << x.carrier_ref
                << ':';
            std::string s = sets_text(*x.universe, x.members);
            out << (s.empty() ? "" : " ") << s << '\n';
          } else {
            out << "map " << x.name << " from " << x.from_ref << " to " << x.to_ref << ':';
            const auto& m = x.map;
            m.domain().for_each([&](Element e) {
              out << ' ' << m.domain_universe()->name(e) << "->" << m.codomain_universe()->name(m(e));
            });
            out << '\n';
          }
        },
        d);
  }
  return out.str();
}

}  // namespace roughtop
