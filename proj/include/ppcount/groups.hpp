#pragma once

#include <cstdint>
#include <vector>

#include "ppcount/element.hpp"
#include "ppcount/group_spec.hpp"
#include "ppcount/quadratic.hpp"

namespace ppcount {

/// Resource limits for exhaustive work. The oracle is exponential in rank.
struct Limits {
  std::uint64_t group_order_cap = 10000;

  /// Default limits, overridden by the PPCOUNT_CAP environment variable when set.
  static Limits from_environment();
};

/// Throws ShapeMismatch unless `u` has one well-formed part per factor of `g`.
void check_shape(const GroupDescriptor& g, const Element& u);

Element identity(const GroupDescriptor& g);
Element multiply(const GroupDescriptor& g, const Element& u, const Element& v);
Element inverse(const GroupDescriptor& g, const Element& u);
Element power(const GroupDescriptor& g, const Element& u, std::uint64_t k);
std::uint64_t element_order(const GroupDescriptor& g, const Element& u);
bool is_identity(const GroupDescriptor& g, const Element& u);

/// Determinant of the reflection representation, equivalently (-1)^length.
int element_sign(const GroupDescriptor& g, const Element& w);

/// All elements in deterministic order. Throws CapExceeded above the cap.
std::vector<Element> enumerate_elements(const GroupDescriptor& g, const Limits& limits = {});

/// The index-2 rotation subgroup W*: elements of sign +1, in enumeration order.
std::vector<Element> rotation_subgroup(const GroupDescriptor& g, const Limits& limits = {});

struct GeneratorSet {
  std::vector<Element> simple_reflections;  // s_1 .. s_rank
};

GeneratorSet generators(const GroupDescriptor& g);

/// Order of s_i s_j read from the Coxeter graph (1-based indices).
int coxeter_m(const GroupDescriptor& g, int i, int j);

/// A word in the 1-based generators whose product is `w`. Not necessarily reduced.
std::vector<int> word_for(const GroupDescriptor& g, const Element& w);

Element evaluate_word(const GroupDescriptor& g, const std::vector<int>& word);

/// Standard parabolic subgroup W_I with its inclusion into the parent.
class ParabolicEmbedding {
 public:
  ParabolicEmbedding(GroupDescriptor parent, GroupDescriptor subgroup, IndexSet generator_subset,
                     std::vector<std::vector<int>> local_to_parent);

  const GroupDescriptor& parent() const { return parent_; }
  const GroupDescriptor& subgroup() const { return subgroup_; }
  const IndexSet& generator_subset() const { return subset_; }
  /// Parent generator index of local generator j (1-based) of subgroup factor f.
  int parent_generator(std::size_t factor, int local) const;

  Element include(const Element& sub) const;

 private:
  GroupDescriptor parent_;
  GroupDescriptor subgroup_;
  IndexSet subset_;
  std::vector<std::vector<int>> local_to_parent_;
  std::vector<Element> parent_generators_;
};

/// Factors are read off the subgraph of the Coxeter graph induced on I.
ParabolicEmbedding parabolic(const GroupDescriptor& g, const IndexSet& subset);

/// Centre triviality of one irreducible factor: true for A(n>=2) and I2(odd).
bool centre_is_trivial(const Factor& f);
bool centre_is_trivial(const GroupDescriptor& g);

/// Dual relabelling s_i -> s_{n-i+1}. Irreducible groups only.
int dual_index(const GroupDescriptor& g, int i);
IndexSet dual_subset(const GroupDescriptor& g, const IndexSet& subset);
bool is_self_dual(const GroupDescriptor& g);
/// The automorphism induced by the dual relabelling. Requires a self-dual
/// irreducible group; throws std::invalid_argument otherwise.
Element dual_map(const GroupDescriptor& g, const Element& w);

/// Image of I under conjugation by the longest element, factor by factor:
/// the identity on factors with non-trivial centre, the dual relabelling on
/// the others.
IndexSet opposition_subset(const GroupDescriptor& g, const IndexSet& subset);

/// Faithful orthogonal representation. A(n): (n+1)x(n+1) permutation matrices;
/// B(n): signed permutation matrices; H3: 3x3 over Q(sqrt 5). Products are
/// block diagonal. Throws UnsupportedFactor for I2(d).
ExactMatrix matrix_rep(const GroupDescriptor& g, const Element& w);

/// Simple roots of a factor in the coordinates used by matrix_rep;
/// generator i is the reflection in root i.
std::vector<ExactVector> simple_roots(const Factor& f);

}  // namespace ppcount
