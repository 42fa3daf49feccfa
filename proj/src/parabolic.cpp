#include <algorithm>

#include "ppcount/errors.hpp"
#include "ppcount/groups.hpp"

namespace ppcount {

ParabolicEmbedding::ParabolicEmbedding(GroupDescriptor parent, GroupDescriptor subgroup, IndexSet generator_subset,
                                       std::vector<std::vector<int>> local_to_parent)
    : parent_(std::move(parent)),
      subgroup_(std::move(subgroup)),
      subset_(std::move(generator_subset)),
      local_to_parent_(std::move(local_to_parent)) {
  if (local_to_parent_.size() != subgroup_.factors.size())
    throw std::invalid_argument("parabolic embedding: one generator map per subgroup factor required");
  const auto gens = generators(parent_).simple_reflections;
  for (std::size_t f = 0; f < subgroup_.factors.size(); ++f) {
    if (static_cast<int>(local_to_parent_[f].size()) != subgroup_.factors[f].rank())
      throw std::invalid_argument("parabolic embedding: generator map has the wrong length");
    for (int p : local_to_parent_[f]) parent_generators_.push_back(gens.at(p - 1));
  }
}

int ParabolicEmbedding::parent_generator(std::size_t factor, int local) const {
  if (factor >= local_to_parent_.size() || local < 1 || local > static_cast<int>(local_to_parent_[factor].size()))
    throw RangeError("parabolic embedding: generator index out of range");
  return local_to_parent_[factor][local - 1];
}

Element ParabolicEmbedding::include(const Element& sub) const {
  Element e = identity(parent_);
  for (int j : word_for(subgroup_, sub)) e = multiply(parent_, e, parent_generators_[j - 1]);
  return e;
}

ParabolicEmbedding parabolic(const GroupDescriptor& g, const IndexSet& subset) {
  const IndexSet I = normalize_subset(g, subset);
  GroupDescriptor sub;
  std::vector<std::vector<int>> maps;

  for (std::size_t f = 0; f < g.factors.size(); ++f) {
    const Factor& fac = g.factors[f];
    const int off = g.offset(f);
    std::vector<int> local;
    for (int i : I)
      if (i > off && i <= off + fac.rank()) local.push_back(i - off);

    // Split into runs of consecutive indices; generators in different runs commute
    // in every supported graph (all are paths, with H3's 1-3 pair non-adjacent).
    std::size_t start = 0;
    while (start < local.size()) {
      std::size_t end = start + 1;
      while (end < local.size() && local[end] == local[end - 1] + 1) ++end;
      const int first = local[start];
      const int len = static_cast<int>(end - start);
      Factor piece = Factor::A(len);
      if (len >= 2) {
        switch (fac.family) {
          case Family::A:
            break;
          case Family::B:
            if (first + len - 1 == fac.param) piece = Factor::B(len);
            break;
          case Family::I2:
            piece = fac;
            break;
          case Family::H3:
            if (len == 3) piece = fac;
            else if (first == 1) piece = Factor::I2(5);
            break;
        }
      }
      sub.factors.push_back(piece);
      std::vector<int> map;
      for (int j = 0; j < len; ++j) map.push_back(off + first + j);
      maps.push_back(std::move(map));
      start = end;
    }
  }
  return ParabolicEmbedding(g, std::move(sub), I, std::move(maps));
}

}  // namespace ppcount
