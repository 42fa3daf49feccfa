#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace ppcount {

/// Permutation of {0..m-1}: letter x goes to image[x].
struct Perm {
  std::vector<int> image;
  friend bool operator==(const Perm&, const Perm&) = default;
};

/// Signed permutation of the coordinates of R^n: e_i goes to sign[i] * e_{image[i]}.
/// Composition follows the wreath rule ((b),v)((a),u) = ((a_i b_{u(i)}), vu).
struct SignedPerm {
  std::vector<int> image;
  std::vector<int> sign;  // entries +1 / -1
  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
};

/// r^rotation * s^reflection in Dih_d, where s = s_1 and r = s_2 s_1.
struct DihedralElem {
  int rotation = 0;
  int reflection = 0;
  friend bool operator==(const DihedralElem&, const DihedralElem&) = default;
};

/// (even permutation of five letters, central sign) in A_5 x {+1,-1}.
struct H3Elem {
  std::array<int, 5> perm{0, 1, 2, 3, 4};
  int sign = 1;
  friend bool operator==(const H3Elem&, const H3Elem&) = default;
};

using FactorElement = std::variant<Perm, SignedPerm, DihedralElem, H3Elem>;

/// Group element of a product group: one part per factor.
struct Element {
  std::vector<FactorElement> parts;
  friend bool operator==(const Element&, const Element&) = default;
};

/// Canonical integer encoding; lexicographic order on encodings is the
/// deterministic element order used everywhere.
std::vector<int> encode(const Element& e);
bool element_less(const Element& x, const Element& y);

std::string to_string(const FactorElement& e);
std::string to_string(const Element& e);

/// Cycle notation with 1-based letters, e.g. "(12)(345)"; "id" for the identity.
std::string cycle_notation(const std::vector<int>& image);

struct EncodingHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e37)) * 1099511628211ull;
    return h;
  }
};

}  // namespace ppcount
