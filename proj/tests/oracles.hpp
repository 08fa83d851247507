#pragma once

// Test-side reference implementations. They work on plain bitmasks and
// std::set so that they share no code with the library under test.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;
using MaskFamily = std::set<Mask>;

// Smallest family containing `sub`, the empty set and `carrier`, closed
// under pairwise union and intersection, by naive fixpoint iteration.
inline MaskFamily topology_closure(Mask carrier, const std::vector<Mask>& sub) {
  MaskFamily fam(sub.begin(), sub.end());
  fam.insert(0);
  fam.insert(carrier);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Mask> cur(fam.begin(), fam.end());
    for (Mask a : cur) {
      for (Mask b : cur) {
        grew |= fam.insert(a | b).second;
        grew |= fam.insert(a & b).second;
      }
    }
  }
  return fam;
}

inline bool is_topology(Mask carrier, const MaskFamily& fam) {
  if (!fam.count(0) || !fam.count(carrier)) return false;
  for (Mask a : fam) {
    if ((a & ~carrier) != 0) return false;
    for (Mask b : fam) {
      if (!fam.count(a | b) || !fam.count(a & b)) return false;
    }
  }
  return true;
}

// Number of topologies on n points by scanning every family of subsets.
// Feasible up to n = 4 (2^14 families).
inline std::size_t count_topologies(unsigned n) {
  const Mask carrier = (Mask{1} << n) - 1;
  const unsigned subsets = 1u << n;
  // Families are bitmasks over the 2^n subsets; empty set and carrier fixed.
  const std::uint64_t families = std::uint64_t{1} << (subsets - 2);
  std::size_t count = 0;
  for (std::uint64_t f = 0; f < families; ++f) {
    MaskFamily fam{0, carrier};
    for (unsigned s = 1; s + 1 < subsets; ++s) {
      if (f >> (s - 1) & 1) fam.insert(s);
    }
    if (is_topology(carrier, fam)) ++count;
  }
  return count;
}

// Approximations by scanning every block.
inline std::pair<Mask, Mask> approximations(const std::vector<Mask>& blocks, Mask x) {
  Mask lower = 0;
  Mask upper = 0;
  for (Mask b : blocks) {
    if ((b & x) == b) lower |= b;
    if ((b & x) != 0) upper |= b;
  }
  return {lower, upper};
}

// Permutations of {1,2,3,4} written in cycle notation, "1" for the identity.
using Perm = std::array<int, 4>;

inline Perm parse_cycles(const std::string& name) {
  Perm p{1, 2, 3, 4};
  if (name == "1") return p;
  std::vector<int> cyc;
  for (char c : name) {
    if (c == '(') {
      cyc.clear();
    } else if (c == ')') {
      for (std::size_t i = 0; i < cyc.size(); ++i) p[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
    } else {
      cyc.push_back(c - '0');
    }
  }
  return p;
}

// xy applies y first.
inline Perm compose(const Perm& x, const Perm& y) {
  Perm r{};
  for (int i = 0; i < 4; ++i) r[i] = x[y[i] - 1];
  return r;
}

inline std::string perm_name(const std::map<Perm, std::string>& names, const Perm& p) {
  return names.at(p);
}

// Direct rough group test over names, independent of the library's
// certificate: closure into `upper`, associativity on `upper`, a common
// identity in `upper`, inverses in G for the first such identity.
// `upper` must be ascending.
template <typename Mul>
bool is_rough_group(const std::vector<int>& g, const std::vector<int>& upper, Mul mul) {
  auto in = [](const std::vector<int>& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); };
  for (int x : g) {
    for (int y : g) {
      if (!in(upper, mul(x, y))) return false;
    }
  }
  for (int x : upper) {
    for (int y : upper) {
      for (int z : upper) {
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) return false;
      }
    }
  }
  for (int e : upper) {
    bool ok = std::all_of(g.begin(), g.end(), [&](int x) { return mul(x, e) == x && mul(e, x) == x; });
    if (!ok) continue;
    return std::all_of(g.begin(), g.end(), [&](int x) {
      return std::any_of(g.begin(), g.end(), [&](int y) { return mul(x, y) == e && mul(y, x) == e; });
    });
  }
  return false;
}

// Topological rough group conditions by direct preimage scans. `g` lists the
// members of G, `tau` the opens of the topology on upper(G) as masks over
// the universe, `inv(x)` the rough inverse of x in G. Pairs (g[i], g[j]) are
// encoded as bit i * |G| + j, so |G| must stay below 6.
template <typename Mul, typename Inv>
bool is_trg(const std::vector<int>& g, const MaskFamily& tau, Mul mul, Inv inv) {
  const std::size_t k = g.size();
  Mask gm = 0;
  for (int x : g) gm |= Mask{1} << x;
  MaskFamily tau_g;
  for (Mask o : tau) tau_g.insert(o & gm);
  // Local index of each member of G.
  auto local = [&](Mask m) {
    Mask r = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (m >> g[i] & 1) r |= Mask{1} << i;
    }
    return r;
  };
  std::vector<Mask> rects;
  for (Mask a : tau_g) {
    for (Mask b : tau_g) {
      Mask r = 0;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          if ((local(a) >> i & 1) && (local(b) >> j & 1)) r |= Mask{1} << (i * k + j);
        }
      }
      rects.push_back(r);
    }
  }
  // Open in the product iff it is the union of the open rectangles inside it.
  auto product_open = [&](Mask p) {
    Mask covered = 0;
    for (Mask r : rects) {
      if ((r & ~p) == 0) covered |= r;
    }
    return covered == p;
  };
  for (Mask o : tau) {
    Mask pre = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (o >> mul(g[i], g[j]) & 1) pre |= Mask{1} << (i * k + j);
      }
    }
    if (!product_open(pre)) return false;
  }
  for (Mask v : tau_g) {
    Mask pre = 0;
    for (int x : g) {
      if (v >> inv(x) & 1) pre |= Mask{1} << x;
    }
    if (!tau_g.count(pre)) return false;
  }
  return true;
}

}  // namespace oracle
