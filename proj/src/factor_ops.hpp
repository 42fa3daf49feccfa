#pragma once

// Per-factor element arithmetic shared by the group, conjugacy and matrix code.

#include <array>
#include <vector>

#include "ppcount/element.hpp"
#include "ppcount/group_spec.hpp"

namespace ppcount::detail {

/// Involutions x, y, z of A_5 with xy of order 5, yz of order 3, xz of order 2.
/// H3's simple reflections are (x,-1), (y,-1), (z,-1).
inline constexpr std::array<std::array<int, 5>, 3> kH3Involutions{{
    {0, 2, 1, 4, 3},
    {1, 0, 3, 2, 4},
    {0, 4, 3, 2, 1},
}};

void check_factor_element(const Factor& f, const FactorElement& e);

FactorElement factor_identity(const Factor& f);
FactorElement factor_multiply(const Factor& f, const FactorElement& a, const FactorElement& b);
FactorElement factor_inverse(const Factor& f, const FactorElement& a);
int factor_sign(const Factor& f, const FactorElement& a);
/// Simple reflection s_j (1-based) of the factor.
FactorElement factor_generator(const Factor& f, int j);
/// All elements sorted by encoding.
std::vector<FactorElement> factor_elements(const Factor& f);
/// Word in 1-based local generators whose product is `a`.
std::vector<int> factor_word(const Factor& f, const FactorElement& a);
int factor_m(const Factor& f, int i, int j);

int permutation_parity(const std::vector<int>& image);

template <typename Array>
int permutation_parity_of(const Array& image) {
  return permutation_parity(std::vector<int>(image.begin(), image.end()));
}

}  // namespace ppcount::detail
