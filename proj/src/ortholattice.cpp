// Copyright 2026 The sgq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sgq/ortholattice.hpp"

#include <set>
#include <sstream>

#include "sgq/errors.hpp"

namespace sgq {
namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw DomainError(ErrorKind::kInvalidLattice, "invalid lattice: " + what);
}

}  // namespace

FiniteOrtholattice::FiniteOrtholattice(std::vector<Element> elements,
                                       std::vector<Cover> covers,
                                       std::map<Element, Element> ortho,
                                       Element bottom, Element top)
    : names_(std::move(elements)), covers_(std::move(covers)) {
  const std::size_t n = names_.size();
  if (n == 0) invalid("no elements");
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(names_[i], i).second) invalid("duplicate element '" + names_[i] + "'");
  }
  auto lookup = [&](const Element& e) {
    auto it = index_.find(e);
    if (it == index_.end()) invalid("unknown element '" + e + "'");
    return it->second;
  };
  bottom_ = lookup(bottom);
  top_ = lookup(top);

  order_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) order_[i][i] = true;
  for (const auto& [lo, hi] : covers_) order_[lookup(lo)][lookup(hi)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (order_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (order_[k][j]) order_[i][j] = true;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (order_[i][j] && order_[j][i]) invalid("cycle through '" + names_[i] + "' and '" + names_[j] + "'");
    }
    if (!order_[bottom_][i]) invalid("bottom is not below '" + names_[i] + "'");
    if (!order_[i][top_]) invalid("'" + names_[i] + "' is not below top");
  }

  meet_.assign(n, std::vector<std::size_t>(n, 0));
  join_.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      // Greatest lower bound: the lower bound above every other lower bound.
      std::optional<std::size_t> glb, lub;
      for (std::size_t c = 0; c < n; ++c) {
        if (!(order_[c][x] && order_[c][y])) continue;
        bool greatest = true;
        for (std::size_t d = 0; d < n && greatest; ++d)
          if (order_[d][x] && order_[d][y] && !order_[d][c]) greatest = false;
        if (greatest) glb = c;
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (!(order_[x][c] && order_[y][c])) continue;
        bool least = true;
        for (std::size_t d = 0; d < n && least; ++d)
          if (order_[x][d] && order_[y][d] && !order_[c][d]) least = false;
        if (least) lub = c;
      }
      if (!glb) invalid("no meet for '" + names_[x] + "', '" + names_[y] + "'");
      if (!lub) invalid("no join for '" + names_[x] + "', '" + names_[y] + "'");
      meet_[x][y] = *glb;
      join_[x][y] = *lub;
    }
  }

  ortho_.assign(n, n);
  for (const auto& [from, to] : ortho) ortho_[lookup(from)] = lookup(to);
  for (std::size_t i = 0; i < n; ++i) {
    if (ortho_[i] == n) invalid("orthocomplement missing for '" + names_[i] + "'");
  }
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t xp = ortho_[x];
    if (ortho_[xp] != x) invalid("orthocomplement is not an involution at '" + names_[x] + "'");
    if (meet_[x][xp] != bottom_ || join_[x][xp] != top_)
      invalid("'" + names_[xp] + "' is not a complement of '" + names_[x] + "'");
    for (std::size_t y = 0; y < n; ++y)
      if (order_[x][y] && !order_[ortho_[y]][xp])
        invalid("orthocomplement does not reverse order at '" + names_[x] + "' <= '" + names_[y] + "'");
  }
}

std::size_t FiniteOrtholattice::index_of(const Element& e) const {
  auto it = index_.find(e);
  if (it == index_.end())
    throw DomainError(ErrorKind::kUnknownElement, "unknown lattice element '" + e + "'");
  return it->second;
}

bool FiniteOrtholattice::leq(const Element& x, const Element& y) const {
  return order_[index_of(x)][index_of(y)];
}

const FiniteOrtholattice::Element& FiniteOrtholattice::meet(const Element& x, const Element& y) const {
  return names_[meet_[index_of(x)][index_of(y)]];
}

const FiniteOrtholattice::Element& FiniteOrtholattice::join(const Element& x, const Element& y) const {
  return names_[join_[index_of(x)][index_of(y)]];
}

const FiniteOrtholattice::Element& FiniteOrtholattice::ortho(const Element& x) const {
  return names_[ortho_[index_of(x)]];
}

std::optional<Triple> find_distributivity_violation(const FiniteOrtholattice& lat) {
  const std::size_t n = lat.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t lhs = lat.meet(x, lat.join(y, z));
        const std::size_t rhs = lat.join(lat.meet(x, y), lat.meet(x, z));
        if (lhs != rhs) {
          const auto& e = lat.elements();
          return Triple{e[x], e[y], e[z]};
        }
      }
  return std::nullopt;
}

OrthomodularCheck check_orthomodular(const FiniteOrtholattice& lat) {
  const std::size_t n = lat.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!lat.leq(x, y)) continue;
      if (lat.join(x, lat.meet(y, lat.ortho(x))) != y) {
        return {false, std::make_pair(lat.elements()[x], lat.elements()[y])};
      }
    }
  return {};
}

std::vector<LawResult> check_lattice_laws(const FiniteOrtholattice& lat) {
  const std::size_t n = lat.size();
  const auto& e = lat.elements();
  std::vector<LawResult> out;

  auto pairwise = [&](const std::string& name, auto&& law) {
    LawResult r{name, true, {}};
    for (std::size_t x = 0; x < n && r.holds; ++x)
      for (std::size_t y = 0; y < n && r.holds; ++y)
        if (!law(x, y)) r = {name, false, {e[x], e[y]}};
    out.push_back(std::move(r));
  };
  auto triplewise = [&](const std::string& name, auto&& law) {
    LawResult r{name, true, {}};
    for (std::size_t x = 0; x < n && r.holds; ++x)
      for (std::size_t y = 0; y < n && r.holds; ++y)
        for (std::size_t z = 0; z < n && r.holds; ++z)
          if (!law(x, y, z)) r = {name, false, {e[x], e[y], e[z]}};
    out.push_back(std::move(r));
  };

  pairwise("meet-commutative", [&](auto x, auto y) { return lat.meet(x, y) == lat.meet(y, x); });
  pairwise("join-commutative", [&](auto x, auto y) { return lat.join(x, y) == lat.join(y, x); });
  triplewise("meet-associative", [&](auto x, auto y, auto z) {
    return lat.meet(x, lat.meet(y, z)) == lat.meet(lat.meet(x, y), z);
  });
  triplewise("join-associative", [&](auto x, auto y, auto z) {
    return lat.join(x, lat.join(y, z)) == lat.join(lat.join(x, y), z);
  });
  pairwise("idempotent", [&](auto x, auto) { return lat.meet(x, x) == x && lat.join(x, x) == x; });
  pairwise("meet-absorption", [&](auto x, auto y) { return lat.meet(x, lat.join(x, y)) == x; });
  pairwise("join-absorption", [&](auto x, auto y) { return lat.join(x, lat.meet(x, y)) == x; });
  pairwise("de-morgan-meet", [&](auto x, auto y) {
    return lat.ortho(lat.meet(x, y)) == lat.join(lat.ortho(x), lat.ortho(y));
  });
  pairwise("de-morgan-join", [&](auto x, auto y) {
    return lat.ortho(lat.join(x, y)) == lat.meet(lat.ortho(x), lat.ortho(y));
  });
  pairwise("complement", [&](auto x, auto) {
    return lat.meet(x, lat.ortho(x)) == lat.index_of(lat.bottom()) &&
           lat.join(x, lat.ortho(x)) == lat.index_of(lat.top());
  });
  pairwise("involution", [&](auto x, auto) { return lat.ortho(lat.ortho(x)) == x; });
  pairwise("order-reversing", [&](auto x, auto y) {
    return !lat.leq(x, y) || lat.leq(lat.ortho(y), lat.ortho(x));
  });
  pairwise("bounds", [&](auto x, auto) {
    return lat.leq(lat.index_of(lat.bottom()), x) && lat.leq(x, lat.index_of(lat.top()));
  });
  return out;
}

FiniteOrtholattice firefly_lattice() {
  std::vector<std::string> elements{"bot", "l", "r", "u", "d", "top"};
  std::vector<FiniteOrtholattice::Cover> covers;
  for (const char* atom : {"l", "r", "u", "d"}) {
    covers.emplace_back("bot", atom);
    covers.emplace_back(atom, "top");
  }
  std::map<std::string, std::string> ortho{
      {"bot", "top"}, {"top", "bot"}, {"l", "r"}, {"r", "l"}, {"u", "d"}, {"d", "u"}};
  return {std::move(elements), std::move(covers), std::move(ortho), "bot", "top"};
}

std::string subset_name(const std::vector<int>& quadrants) {
  std::set<int> sorted(quadrants.begin(), quadrants.end());
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int q : sorted) {
    if (!first) os << ',';
    os << q;
    first = false;
  }
  os << '}';
  return os.str();
}

FiniteOrtholattice boolean_lattice(int atoms) {
  if (atoms < 0 || atoms > 4)
    throw DomainError(ErrorKind::kInvalidLattice, "boolean lattice supports 0..4 atoms");
  const unsigned full = (1u << atoms) - 1u;
  auto name = [&](unsigned mask) {
    std::vector<int> q;
    for (int i = 0; i < atoms; ++i)
      if (mask & (1u << i)) q.push_back(i + 1);
    return subset_name(q);
  };
  std::vector<std::string> elements;
  std::vector<FiniteOrtholattice::Cover> covers;
  std::map<std::string, std::string> ortho;
  for (unsigned mask = 0; mask <= full; ++mask) {
    elements.push_back(name(mask));
    ortho[name(mask)] = name(full & ~mask);
    for (int i = 0; i < atoms; ++i)
      if (!(mask & (1u << i))) covers.emplace_back(name(mask), name(mask | (1u << i)));
  }
  return {std::move(elements), std::move(covers), std::move(ortho), name(0), name(full)};
}

FiniteOrtholattice two_element_lattice() {
  return {{"bot", "top"}, {{"bot", "top"}}, {{"bot", "top"}, {"top", "bot"}}, "bot", "top"};
}

FiniteOrtholattice hexagon_lattice() {
  return {{"0", "a", "b", "b'", "a'", "1"},
          {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "b'"}, {"b'", "a'"}, {"a'", "1"}},
          {{"0", "1"}, {"1", "0"}, {"a", "a'"}, {"a'", "a"}, {"b", "b'"}, {"b'", "b"}},
          "0",
          "1"};
}

std::map<std::string, std::string> boolean_embedding(const FiniteOrtholattice& source) {
  std::map<std::string, std::string> image{
      {"bot", subset_name({})},   {"l", subset_name({1, 2})}, {"r", subset_name({3, 4})},
      {"d", subset_name({1, 3})}, {"u", subset_name({2, 4})}, {"top", subset_name({1, 2, 3, 4})}};
  for (const auto& [from, to] : image) {
    if (!source.contains(from))
      throw DomainError(ErrorKind::kUnknownElement, "source lattice has no element '" + from + "'");
  }
  return image;
}

EmbeddingCheck check_embedding(const FiniteOrtholattice& source,
                               const FiniteOrtholattice& target,
                               const std::map<std::string, std::string>& map) {
  EmbeddingCheck check;
  std::set<std::string> seen;
  for (const auto& [x, fx] : map) {
    if (!seen.insert(fx).second) check.injective = false;
    auto it = map.find(source.ortho(x));
    if (it == map.end() || it->second != target.ortho(fx)) check.ortho_preserving = false;
    for (const auto& [y, fy] : map) {
      if (source.leq(x, y) != target.leq(fx, fy)) check.order_preserving = false;
    }
  }
  return check;
}

}  // namespace sgq
