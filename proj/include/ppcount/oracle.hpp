#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ppcount/enumeration.hpp"
#include "ppcount/groups.hpp"

namespace ppcount {

/// All elements of a group with integer indices, in the deterministic element
/// order, plus left/right multiplication by each generator.
class IndexedGroup {
 public:
  explicit IndexedGroup(GroupDescriptor g, const Limits& limits = {});

  const GroupDescriptor& group() const { return group_; }
  std::size_t size() const { return elements_.size(); }
  const Element& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t index_of(const Element& e) const;
  int sign(std::size_t i) const { return sign_[i]; }
  std::size_t identity_index() const { return identity_; }
  int rank() const { return static_cast<int>(left_.size()); }
  /// Index of s_j * element(i) and element(i) * s_j (1-based j).
  std::size_t left_generator(int j, std::size_t i) const { return left_[j - 1][i]; }
  std::size_t right_generator(int j, std::size_t i) const { return right_[j - 1][i]; }
  /// Breadth-first order from the identity with (parent, generator) links:
  /// element(i) = s_gen * element(parent).
  const std::vector<std::size_t>& bfs_order() const { return bfs_; }
  std::size_t bfs_parent(std::size_t i) const { return parent_[i]; }
  int bfs_generator(std::size_t i) const { return parent_gen_[i]; }

 private:
  GroupDescriptor group_;
  std::vector<Element> elements_;
  std::unordered_map<std::vector<int>, std::size_t, EncodingHash> index_;
  std::vector<int> sign_;
  std::size_t identity_ = 0;
  std::vector<std::vector<std::size_t>> left_, right_;
  std::vector<std::size_t> bfs_, parent_;
  std::vector<int> parent_gen_;
};

/// Left cosets wW_I with the left action of W.
struct CosetSpace {
  IndexSet subset;
  std::vector<std::size_t> representatives;  // minimal element index per coset
  std::vector<std::size_t> coset_of;          // element index -> coset index
  /// action[w][x] = coset index of element(w) * representative(x).
  std::vector<std::vector<std::uint32_t>> action;

  std::size_t size() const { return representatives.size(); }
};

CosetSpace coset_space(const IndexedGroup& w, const IndexSet& subset);

/// Endpoints are numbered 0..points-1; a strut is an unordered pair a < b.
struct Strut {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  friend bool operator==(const Strut&, const Strut&) = default;
};

/// The struts of an orbit type with the action of the acting group (W, or W*
/// for ∅ types under the Lang convention, where ∅ endpoints are limited to
/// the W*-orbit of the identity coset).
class StrutSpace {
 public:
  StrutSpace(const IndexedGroup& w, const OrbitType& ot, Convention conv);

  const IndexedGroup& group() const { return *w_; }
  const OrbitType& orbit_type() const { return ot_; }
  std::size_t points() const { return point_kind_.size(); }
  /// 0 for an I-type endpoint, 1 for a J-type endpoint (always 0 if homoorbital).
  int point_kind(std::uint32_t p) const { return point_kind_[p]; }
  const std::vector<Strut>& struts() const { return struts_; }
  std::size_t strut_index(Strut s) const;
  /// Elements of the acting group (indices into the IndexedGroup).
  const std::vector<std::size_t>& acting() const { return acting_; }
  /// Generators of the acting group, as element indices.
  const std::vector<std::size_t>& acting_generators() const { return acting_gens_; }
  std::uint32_t act_point(std::size_t element, std::uint32_t p) const;
  Strut act(std::size_t element, Strut s) const;

 private:
  const IndexedGroup* w_;
  OrbitType ot_;
  std::vector<int> point_kind_;
  std::vector<std::vector<std::uint32_t>> point_action_;  // [element][point], UINT32_MAX off the acting group
  std::vector<Strut> struts_;
  std::unordered_map<std::uint64_t, std::size_t> strut_index_;
  std::vector<std::size_t> acting_, acting_gens_;
};

std::vector<Strut> enumerate_struts(const StrutSpace& space);

/// Orbits of the acting group on struts, each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> orbit_partition(const StrutSpace& space);

/// Number of struts mapped to themselves by `element`.
std::uint64_t brute_fixed_count(const StrutSpace& space, std::size_t element);

/// Burnside average over the acting group; throws IntegralityError on a remainder.
std::uint64_t brute_burnside(const StrutSpace& space);

/// Elements fixing the coset of the identity.
std::vector<std::size_t> stabilizer_of_facet(const IndexedGroup& w, const CosetSpace& cosets);

/// Generate the polypolyhedron from `seed` under W*; return the number of its
/// struts incident to each endpoint of the seed.
std::pair<std::uint64_t, std::uint64_t> valency(const StrutSpace& space, const Strut& seed);

/// All struts generated from `seed` under W*.
std::vector<Strut> generate_polypolyhedron(const StrutSpace& space, const Strut& seed);

struct OracleCounts {
  std::uint64_t strut_orbits = 0;
  std::uint64_t univalent = 0;
  std::uint64_t struts = 0;
};

/// Orbit count from the explicit partition; univalent count from valencies.
OracleCounts oracle_counts(const StrutSpace& space);
OracleCounts oracle_counts(const GroupDescriptor& g, const OrbitType& ot, Convention conv,
                           const Limits& limits = {});

/// |{w : wu = uw}| by direct search.
std::uint64_t brute_centralizer_size(const IndexedGroup& w, const Element& u);

/// Conjugacy classes by direct orbit computation: each class as sorted element indices.
std::vector<std::vector<std::size_t>> brute_conjugacy_classes(const IndexedGroup& w);

}  // namespace ppcount
