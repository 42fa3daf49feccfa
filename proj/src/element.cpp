#include "ppcount/element.hpp"

#include <algorithm>

namespace ppcount {

namespace {

struct Encoder {
  std::vector<int>& out;
  void operator()(const Perm& p) const { out.insert(out.end(), p.image.begin(), p.image.end()); }
  void operator()(const SignedPerm& p) const {
    out.insert(out.end(), p.image.begin(), p.image.end());
    for (int s : p.sign) out.push_back(s < 0 ? 1 : 0);
  }
  void operator()(const DihedralElem& d) const {
    out.push_back(d.reflection);
    out.push_back(d.rotation);
  }
  void operator()(const H3Elem& h) const {
    out.insert(out.end(), h.perm.begin(), h.perm.end());
    out.push_back(h.sign < 0 ? 1 : 0);
  }
};

}  // namespace

std::vector<int> encode(const Element& e) {
  std::vector<int> out;
  for (const auto& part : e.parts) std::visit(Encoder{out}, part);
  return out;
}

bool element_less(const Element& x, const Element& y) { return encode(x) < encode(y); }

std::string cycle_notation(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  const bool wide = n > 9;
  std::vector<bool> seen(n, false);
  std::string s;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || image[i] == i) continue;
    s += '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (wide && !first) s += ',';
      s += std::to_string(j + 1);
      first = false;
      j = image[j];
    }
    s += ')';
  }
  return s.empty() ? "id" : s;
}

std::string to_string(const FactorElement& e) {
  struct Printer {
    std::string operator()(const Perm& p) const { return cycle_notation(p.image); }
    std::string operator()(const SignedPerm& p) const {
      std::string bits;
      for (int s : p.sign) bits += s < 0 ? '1' : '0';
      return "(" + bits + "," + cycle_notation(p.image) + ")";
    }
    std::string operator()(const DihedralElem& d) const {
      std::string s = d.rotation == 0 ? std::string() : "r^" + std::to_string(d.rotation);
      if (d.reflection) s += s.empty() ? "s" : " s";
      return s.empty() ? "id" : s;
    }
    std::string operator()(const H3Elem& h) const {
      std::vector<int> img(h.perm.begin(), h.perm.end());
      return cycle_notation(img) + (h.sign < 0 ? "-" : "+");
    }
  };
  return std::visit(Printer{}, e);
}

std::string to_string(const Element& e) {
  if (e.parts.empty()) return "id";
  std::string s;
  for (std::size_t i = 0; i < e.parts.size(); ++i) {
    if (i) s += " x ";
    s += to_string(e.parts[i]);
  }
  return s;
}

}  // namespace ppcount
