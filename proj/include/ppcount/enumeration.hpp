#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ppcount/conjugacy.hpp"
#include "ppcount/groups.hpp"
#include "ppcount/quadratic.hpp"

namespace ppcount {

/// How orbits of ∅-type endpoints are counted.
///  Full: W acts on all of W/W_I for every endpoint type.
///  Lang: ∅ endpoints are restricted to one W*-orbit and orbits are taken under W*
///        (the convention of Lang's rank-3 tables). Types without ∅ are unaffected.
enum class Convention { Full, Lang };

std::string to_string(Convention c);
/// Accepts "full" and "lang"; throws std::invalid_argument otherwise.
Convention parse_convention(const std::string& text);

struct OrbitType {
  GroupDescriptor group;
  IndexSet I;
  IndexSet J;

  bool homoorbital() const { return I == J; }
  /// Exactly one of I, J is empty.
  bool mixed_empty() const { return I.empty() != J.empty(); }
  std::string name() const;
};

/// Validates |I|, |J| ∈ {rank-1, 0} and normalises both subsets.
OrbitType make_orbit_type(const GroupDescriptor& g, IndexSet I, IndexSet J);

struct CountReport {
  OrbitType orbit_type;
  Convention convention = Convention::Full;
  std::uint64_t strut_orbits = 0;
  std::uint64_t univalent = 0;
  std::uint64_t p_count = 0;
  /// Homoorbital types only: strut_orbits + 1.
  std::optional<std::uint64_t> quasi_homoorbital;
  /// Machine-readable reason, e.g. "empty-endpoint-univalent" for I=∅≠J.
  std::string reason;
  std::vector<std::string> discrepancies;
};

/// One term C_W(u) / (c_J(u) c_I(u)) (heteroorbital) or of either homoorbital sum,
/// where c_I(u) = |W_I| / |Conj_W(u) ∩ W_I| is the effective centraliser in W_I.
struct MainResultTerm {
  std::string class_label;
  std::uint64_t numerator = 0;
  std::vector<Rational> denominators;
  Rational value;
};

struct MainResultBreakdown {
  OrbitType orbit_type;
  std::vector<MainResultTerm> first_sum;   // heteroorbital: the only sum
  std::vector<MainResultTerm> second_sum;  // homoorbital: the square-root sum
  Rational strut_orbits;                    // value of the bracketed expression (after -1 if homoorbital)
  std::uint64_t univalent = 0;
  Rational p;
};

/// Cached class data for one group: classes, squares, signs and per-subset fusion.
/// Not thread-safe; use one context per thread.
class CountingContext {
 public:
  explicit CountingContext(GroupDescriptor g, Limits limits = {});

  const GroupDescriptor& group() const { return group_; }
  const ConjugacyTable& table() const { return table_; }
  const std::vector<ClassDatum>& classes() const { return table_.classes(); }
  const Limits& limits() const { return limits_; }

  std::size_t square_class(std::size_t c) const { return square_[c]; }
  int class_sign(std::size_t c) const { return sign_[c]; }
  std::uint64_t class_order(std::size_t c) const { return order_[c]; }
  std::size_t identity_class() const { return identity_; }

  std::uint64_t subgroup_order(const IndexSet& I);
  /// |Conj_W(u) ∩ W_I| for u in class c.
  std::uint64_t fusion(const IndexSet& I, std::size_t c);
  /// |W_I| / fusion, or nullopt when the class misses W_I.
  std::optional<Rational> effective_centralizer(const IndexSet& I, std::size_t c);

  /// Number of facets of type I fixed by any u in class c. Under the Lang
  /// convention with I=∅ the facets are one W*-orbit, on which W* acts regularly.
  std::uint64_t fixed_endpoints(const IndexSet& I, std::size_t c, Convention conv = Convention::Full);
  std::uint64_t fixed_struts(const OrbitType& ot, std::size_t c, Convention conv = Convention::Full);

  /// Classes that can fix a strut: meeting W_I and W_J (heteroorbital), or
  /// squaring into a conjugate of W_I (homoorbital).
  std::vector<std::size_t> relevant_classes(const OrbitType& ot);

  /// Whether the acting group for `ot` under `conv` is W* rather than W.
  bool acts_by_rotations(const OrbitType& ot, Convention conv) const;

  std::uint64_t strut_orbit_count(const OrbitType& ot, Convention conv = Convention::Full);
  std::uint64_t univalent_count(const OrbitType& ot, Convention conv = Convention::Full);
  CountReport count(const OrbitType& ot, Convention conv = Convention::Full);

  // Decomposition of the full-convention count into the ∅∅ terms.
  MainResultBreakdown main_result(const OrbitType& ot);

  /// Number of elements of order exactly 2, restricted to sign +1 / -1.
  std::uint64_t involutions(int sign);

  /// Fault-injection hook for harness self-tests: the formulas use `value` as
  /// the centraliser of class c from now on.
  void override_centralizer(std::size_t c, std::uint64_t value) { overrides_[c] = value; }
  std::uint64_t centralizer(std::size_t c) const;

 private:
  const std::vector<std::uint64_t>& profile(const IndexSet& I);

  GroupDescriptor group_;
  Limits limits_;
  ConjugacyTable table_;
  std::vector<std::size_t> square_;
  std::vector<int> sign_;
  std::vector<std::uint64_t> order_;
  std::size_t identity_ = 0;
  std::map<IndexSet, std::vector<std::uint64_t>> fusion_;
  std::map<IndexSet, std::uint64_t> subgroup_order_;
  std::map<std::size_t, std::uint64_t> overrides_;
};

// Free-function forms of the pipeline, each building a fresh context.

std::uint64_t fixed_endpoints(const GroupDescriptor& g, const ParabolicEmbedding& emb, const ClassDatum& c);
std::uint64_t fixed_struts(const GroupDescriptor& g, const OrbitType& ot, const ClassDatum& c);
std::vector<ClassDatum> relevant_classes(const GroupDescriptor& g, const OrbitType& ot);
std::uint64_t strut_orbit_count(const GroupDescriptor& g, const OrbitType& ot, Convention conv = Convention::Full);
std::uint64_t univalent_count(const GroupDescriptor& g, const OrbitType& ot, Convention conv = Convention::Full);
CountReport polypolyhedron_count(const GroupDescriptor& g, const OrbitType& ot, Convention conv = Convention::Full);
/// Raw homoorbital count plus one (the degenerate "non-polypolyhedron").
std::uint64_t quasi_homoorbital_count(const GroupDescriptor& g, const IndexSet& I);

/// The orbit types of one rank-3 column, in table row order.
enum class RowKind { Orbit, Quasi };
struct TableRow {
  RowKind kind = RowKind::Orbit;
  IndexSet I;
  IndexSet J;
  std::string label() const;
};
std::vector<TableRow> rank3_rows();

struct Rank3Column {
  GroupDescriptor group;
  std::vector<std::uint64_t> raw;          // one per rank3_rows() entry
  std::vector<std::uint64_t> univalent;    // quasi rows carry 0
  std::vector<std::uint64_t> non_univalent;
  std::uint64_t raw_total = 0;
  std::uint64_t univalent_total = 0;
  std::uint64_t non_univalent_total = 0;
};

struct Rank3Tables {
  std::vector<TableRow> rows;
  std::vector<Rank3Column> columns;
  Convention convention = Convention::Lang;
  std::uint64_t raw_total() const;
  std::uint64_t univalent_total() const;
  std::uint64_t non_univalent_total() const;
};

/// A1 x I2(6) (the rank-3 Dih_6), A3, B3, H3.
std::vector<GroupDescriptor> default_rank3_groups();

/// Throws std::invalid_argument for a group that is not of rank 3.
Rank3Tables rank3_tables(const std::vector<GroupDescriptor>& groups, Convention conv = Convention::Lang,
                         const Limits& limits = {});

}  // namespace ppcount
