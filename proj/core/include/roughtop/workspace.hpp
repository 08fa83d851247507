#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "roughtop/approx.hpp"
#include "roughtop/limits.hpp"
#include "roughtop/topology.hpp"

namespace roughtop {

// Symbol table of parsed declarations. Text format, one declaration per
// line (tables continue over the following rows), `#` starts a comment:
//
//   universe U: 0 1 2
//   table T on U:
//     0 1 2
//     1 2 0
//     2 0 1
//   partition R on U: {0 2} {1}
//   subset G of U: 1 2
//   topology tau on upper(G): {} {1} {2} {1 2} {0 1 2}
//   family B on G: {1} {2}
//   map phi from upper(G) to upper(G): 0->0 1->2 2->1
//
// Set references are a subset or universe name, `upper(name)`,
// `lower(name)`, or a product `ref*ref` whose elements are named "(a,b)".
class Workspace {
 public:
  struct ResolvedSet {
    UniversePtr universe;
    ElementSet set;
  };

  struct UniverseDecl {
    std::string name;
    UniversePtr universe;
  };
  struct TableDecl {
    std::string name;
    std::string universe;
    CayleyTable table;
  };
  struct PartitionDecl {
    std::string name;
    std::string universe;
    Partition partition;
  };
  struct SubsetDecl {
    std::string name;
    std::string universe;
    ElementSet set;
  };
  // Topologies and plain families share a representation; topologies are
  // validated when first used as one.
  struct FamilyDecl {
    std::string name;
    bool topology = true;
    std::string carrier_ref;
    UniversePtr universe;
    ElementSet carrier;
    Family members;
  };
  struct MapDecl {
    std::string name;
    std::string from_ref;
    std::string to_ref;
    FiniteMap map;
  };
  using Declaration =
      std::variant<UniverseDecl, TableDecl, PartitionDecl, SubsetDecl, FamilyDecl, MapDecl>;

  explicit Workspace(Limits limits = {}) : limits_(limits) {}

  const std::vector<Declaration>& declarations() const { return decls_; }
  const Limits& limits() const { return limits_; }

  void add(Declaration d);

  const UniverseDecl& universe(std::string_view name) const;
  const SubsetDecl& subset(std::string_view name) const;
  const FamilyDecl& family(std::string_view name) const;
  const MapDecl& map(std::string_view name) const;
  bool has_universe(std::string_view name) const;
  bool has_subset(std::string_view name) const;

  // Throws InputError if the family is not a topology.
  FiniteTopology topology(std::string_view name) const;

  // Approximation space of a universe from its only partition and its only
  // table (if any); `partition`/`table` pick one when several are declared.
  // InputError when no partition is declared or the choice is ambiguous.
  ApproxSpacePtr space(std::string_view universe_name, std::string_view partition = {},
                       std::string_view table = {}) const;

  // Space of the universe a subset lives in.
  ApproxSpacePtr space_of_subset(std::string_view subset_name) const;

  ResolvedSet resolve(std::string_view ref) const;

  bool operator==(const Workspace& other) const;

 private:
  std::optional<std::size_t> find(std::size_t kind, std::string_view name) const;
  const Declaration& get(std::size_t kind, std::string_view name, const char* what) const;

  Limits limits_;
  std::vector<Declaration> decls_;
  std::map<std::pair<std::size_t, std::string>, std::size_t, std::less<>> index_;
};

// Throws ParseError (an InputError) with 1-based line and column.
Workspace parse_workspace(std::string_view text, const Limits& limits = {});

// Canonical text form; parse_workspace(serialize_workspace(ws)) == ws.
std::string serialize_workspace(const Workspace& ws);

}  // namespace roughtop
