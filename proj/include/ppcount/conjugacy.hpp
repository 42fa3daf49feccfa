#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ppcount/element.hpp"
#include "ppcount/group_spec.hpp"
#include "ppcount/groups.hpp"

namespace ppcount {

/// counts[j-1] = number of j-cycles, fixed points included.
struct CycleType {
  std::vector<int> counts;
  int letters() const;
  friend bool operator==(const CycleType&, const CycleType&) = default;
};

/// Per cycle length j (index j-1): total j-cycles and j-cycles of positive flip parity.
struct SignedCycleType {
  std::vector<int> total;
  std::vector<int> positive;
  int letters() const;
  friend bool operator==(const SignedCycleType&, const SignedCycleType&) = default;
};

CycleType cycle_type(const Perm& p);
CycleType cycle_type(const std::vector<int>& image);

/// prod_j j^{a_j} a_j!. Throws std::invalid_argument unless sum_j j a_j = n.
std::uint64_t sym_centralizer(int n, const CycleType& t);
std::uint64_t sym_class_size(int n, const CycleType& t);

/// Product of the signs over `cycle`, which must be one orbit of the underlying permutation.
int flip_parity(const SignedPerm& w, const std::vector<int>& cycle);
SignedCycleType signed_cycle_type(const SignedPerm& w);

/// 2^n prod_j B_j! (A_j - B_j)! (j / 2^{j-1})^{A_j}, evaluated exactly.
/// Throws IntegralityError if the value is not an integer.
std::uint64_t beta_centralizer(int n, const SignedCycleType& t);

/// Canonical, totally ordered class invariant. `code` is compared; `label` is for display.
struct ClassInvariant {
  std::vector<int> code;
  std::string label;
  friend bool operator==(const ClassInvariant& x, const ClassInvariant& y) { return x.code == y.code; }
  friend bool operator<(const ClassInvariant& x, const ClassInvariant& y) { return x.code < y.code; }
};

struct ClassDatum {
  Element representative;
  std::uint64_t class_size = 0;
  std::uint64_t centralizer_size = 0;
  ClassInvariant invariant;
};

ClassInvariant class_invariant(const GroupDescriptor& g, const Element& u);

std::vector<ClassDatum> sym_classes(int n);
std::vector<ClassDatum> beta_classes(int n);
std::vector<ClassDatum> dihedral_classes(int d);
std::vector<ClassDatum> h3_classes();

/// Cartesian product of per-factor class lists; sizes and centralizers multiply.
std::vector<ClassDatum> product_classes(const std::vector<std::vector<ClassDatum>>& parts);

/// All classes of `g`, sorted by invariant.
std::vector<ClassDatum> conjugacy_classes(const GroupDescriptor& g);

/// Every supported family has a complete invariant, so this compares invariants.
bool is_conjugate(const GroupDescriptor& g, const Element& u, const Element& v);

/// Classes of a group indexed by invariant code.
class ConjugacyTable {
 public:
  explicit ConjugacyTable(GroupDescriptor g);

  const GroupDescriptor& group() const { return group_; }
  const std::vector<ClassDatum>& classes() const { return classes_; }
  std::size_t index_of(const Element& u) const;
  std::size_t index_of(const ClassInvariant& inv) const;

 private:
  GroupDescriptor group_;
  std::vector<ClassDatum> classes_;
  std::map<std::vector<int>, std::size_t> index_;
};

/// |Conj_G(rep) ∩ W_I|, by iterating over the subgroup.
std::uint64_t class_fusion_count(const GroupDescriptor& g, const ParabolicEmbedding& emb, const ClassDatum& c,
                                 const Limits& limits = {});

/// Fusion counts of every class of `table` at once (one pass over the subgroup).
std::vector<std::uint64_t> fusion_profile(const ConjugacyTable& table, const ParabolicEmbedding& emb,
                                          const Limits& limits = {});

}  // namespace ppcount
