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

#ifndef SGQ_ORTHOLATTICE_HPP_
#define SGQ_ORTHOLATTICE_HPP_

// Finite orthocomplemented lattices given by an explicit Hasse diagram.
//
// Element ids are opaque strings. The order relation is the reflexive
// transitive closure of the cover pairs; meet and join are found by scanning
// the order for greatest lower / least upper bounds and cached at
// construction. Instances are immutable, so every query is thread-safe.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sgq {

class FiniteOrtholattice {
 public:
  using Element = std::string;
  using Cover = std::pair<Element, Element>;  // (lower, upper)

  // Validates the partial order, the existence of all meets and joins, and
  // the orthocomplement laws; throws DomainError(kInvalidLattice) otherwise.
  FiniteOrtholattice(std::vector<Element> elements, std::vector<Cover> covers,
                     std::map<Element, Element> ortho, Element bottom,
                     Element top);

  std::size_t size() const { return names_.size(); }
  const std::vector<Element>& elements() const { return names_; }
  const std::vector<Cover>& covers() const { return covers_; }
  const Element& bottom() const { return names_[bottom_]; }
  const Element& top() const { return names_[top_]; }
  bool contains(const Element& e) const { return index_.count(e) != 0; }

  // All of these throw DomainError(kUnknownElement) for ids not in the lattice.
  bool leq(const Element& x, const Element& y) const;
  const Element& meet(const Element& x, const Element& y) const;
  const Element& join(const Element& x, const Element& y) const;
  const Element& ortho(const Element& x) const;

  // Index-based access for exhaustive law checks.
  std::size_t index_of(const Element& e) const;
  bool leq(std::size_t x, std::size_t y) const { return order_[x][y]; }
  std::size_t meet(std::size_t x, std::size_t y) const { return meet_[x][y]; }
  std::size_t join(std::size_t x, std::size_t y) const { return join_[x][y]; }
  std::size_t ortho(std::size_t x) const { return ortho_[x]; }

 private:
  std::vector<Element> names_;
  std::map<Element, std::size_t> index_;
  std::vector<Cover> covers_;
  std::vector<std::vector<bool>> order_;
  std::vector<std::vector<std::size_t>> meet_;
  std::vector<std::vector<std::size_t>> join_;
  std::vector<std::size_t> ortho_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

inline const FiniteOrtholattice::Element& meet(const FiniteOrtholattice& lat,
                                               const std::string& x,
                                               const std::string& y) {
  return lat.meet(x, y);
}

inline const FiniteOrtholattice::Element& join(const FiniteOrtholattice& lat,
                                               const std::string& x,
                                               const std::string& y) {
  return lat.join(x, y);
}

using Triple = std::array<std::string, 3>;

// Exhaustive search for (x, y, z) with x ∧ (y ∨ z) != (x ∧ y) ∨ (x ∧ z).
// Returns the first violation in element order, or nullopt.
std::optional<Triple> find_distributivity_violation(const FiniteOrtholattice& lat);

struct OrthomodularCheck {
  bool holds = true;
  // (x, y) with x <= y and y != x ∨ (y ∧ x').
  std::optional<std::pair<std::string, std::string>> counterexample;
};

OrthomodularCheck check_orthomodular(const FiniteOrtholattice& lat);

struct LawResult {
  std::string name;
  bool holds = true;
  std::vector<std::string> counterexample;
};

// Commutativity, associativity, idempotence, absorption, De Morgan,
// complement, involution and order reversal, each checked over all tuples.
std::vector<LawResult> check_lattice_laws(const FiniteOrtholattice& lat);

// Builtin fixtures.
//
// The firefly lattice has atoms "l", "r", "u", "d" with l' = r, u' = d, plus
// "bot" and "top". The Boolean lattice over quadrants 1..4 names each subset
// "{i,j,...}" in increasing order, "{}" being the bottom. Quadrants are
// numbered 1 lower-left, 2 upper-left, 3 lower-right, 4 upper-right.
FiniteOrtholattice firefly_lattice();
FiniteOrtholattice boolean_lattice(int atoms = 4);
FiniteOrtholattice two_element_lattice();
// Benzene ring O6: 0 < a < b < 1, 0 < b' < a' < 1. Ortho but not orthomodular.
FiniteOrtholattice hexagon_lattice();

// Name of the Boolean-lattice element for a set of quadrants (1-based).
std::string subset_name(const std::vector<int>& quadrants);

// Quadrant-set images of the firefly elements: l -> {1,2}, r -> {3,4},
// d -> {1,3}, u -> {2,4}, bot -> {}, top -> {1,2,3,4}.
// Throws DomainError(kUnknownElement) if `source` lacks a firefly element.
std::map<std::string, std::string> boolean_embedding(const FiniteOrtholattice& source);

struct EmbeddingCheck {
  bool injective = true;
  bool order_preserving = true;  // x <= y  <=>  f(x) <= f(y)
  bool ortho_preserving = true;  // f(x') = f(x)'
  bool ok() const { return injective && order_preserving && ortho_preserving; }
};

EmbeddingCheck check_embedding(const FiniteOrtholattice& source,
                               const FiniteOrtholattice& target,
                               const std::map<std::string, std::string>& map);

}  // namespace sgq

#endif  // SGQ_ORTHOLATTICE_HPP_
