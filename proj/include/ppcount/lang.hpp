#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ppcount/enumeration.hpp"
#include "ppcount/groups.hpp"
#include "ppcount/quadratic.hpp"

namespace ppcount {

/// Point fixed by every simple reflection except s_k: solves alpha_i . w = delta_ik.
/// For A(n) this is the coordinate-sum vector e_k + ... + e_{n+1}.
ExactVector fundamental_weight(const GroupDescriptor& g, int k);

/// Canonical facet point of type I: the fundamental weight of the missing generator
/// when |I| = rank-1; for I = ∅ a generic combination (coefficients 1, 3, 11, ...)
/// of all fundamental weights, so that its stabiliser is trivial.
ExactVector facet_point(const GroupDescriptor& g, const IndexSet& I);

/// Distinct images of facet_point(g, I) under W (or W* when `rotations_only`).
std::vector<ExactVector> facet_orbit(const GroupDescriptor& g, const IndexSet& I, bool rotations_only,
                                     const Limits& limits = {});

/// Number of distinct non-zero squared lengths |p - q|^2 with p the facet point
/// of type I and q in the type-J orbit (the W*-orbit for ∅ under the Lang
/// convention). Throws UnsupportedFactor for I2(d).
std::uint64_t lang_length_classes(const OrbitType& ot, Convention conv = Convention::Lang, const Limits& limits = {});

struct LangCounterexample {
  ExactVector a, b, c;
  QSqrt5 ab_squared;
  QSqrt5 ac_squared;
  bool equal_lengths = false;
  /// No element of B4 maps {a,b} onto {a,c}; established by exhaustive search.
  bool distinct_orbits = false;
  std::uint64_t elements_checked = 0;
  std::string support_note;
  std::uint64_t length_classes = 0;  // for (B4, {1,3,4}, {1,3,4})
  std::uint64_t true_orbits = 0;
};

/// Checks the B4 strut pair {a,b}, {a,c}. Throws std::logic_error if either
/// the equal-length or the distinct-orbit fact fails.
LangCounterexample lang_counterexample_check(const Limits& limits = {});

}  // namespace ppcount
