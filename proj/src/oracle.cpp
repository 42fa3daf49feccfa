#include "ppcount/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ppcount/errors.hpp"

namespace ppcount {

namespace {

constexpr std::uint32_t kOff = std::numeric_limits<std::uint32_t>::max();
/// Largest element-by-point action table the oracle will build.
constexpr std::uint64_t kActionTableCap = 50'000'000;

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

IndexedGroup::IndexedGroup(GroupDescriptor g, const Limits& limits)
    : group_(std::move(g)), elements_(enumerate_elements(group_, limits)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(encode(elements_[i]), i);
    sign_.push_back(element_sign(group_, elements_[i]));
  }
  identity_ = index_of(identity(group_));
  const auto gens = generators(group_).simple_reflections;
  for (const auto& s : gens) {
    std::vector<std::size_t> l(elements_.size()), r(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      l[i] = index_of(multiply(group_, s, elements_[i]));
      r[i] = index_of(multiply(group_, elements_[i], s));
    }
    left_.push_back(std::move(l));
    right_.push_back(std::move(r));
  }
  const std::size_t none = elements_.size();
  parent_.assign(elements_.size(), none);
  parent_gen_.assign(elements_.size(), 0);
  std::vector<bool> seen(elements_.size(), false);
  seen[identity_] = true;
  std::deque<std::size_t> queue{identity_};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    bfs_.push_back(i);
    for (int j = 1; j <= rank(); ++j) {
      const std::size_t k = left_[j - 1][i];
      if (seen[k]) continue;
      seen[k] = true;
      parent_[k] = i;
      parent_gen_[k] = j;
      queue.push_back(k);
    }
  }
  if (bfs_.size() != elements_.size()) throw std::logic_error("generators do not generate the group");
}

std::size_t IndexedGroup::index_of(const Element& e) const {
  auto it = index_.find(encode(e));
  if (it == index_.end()) throw ShapeMismatch("element not in " + group_.name());
  return it->second;
}

CosetSpace coset_space(const IndexedGroup& w, const IndexSet& subset) {
  CosetSpace cs;
  cs.subset = normalize_subset(w.group(), subset);
  const std::size_t n = w.size();
  UnionFind uf(n);
  for (int j : cs.subset)
    for (std::size_t i = 0; i < n; ++i) uf.unite(i, w.right_generator(j, i));
  cs.coset_of.assign(n, 0);
  std::vector<std::size_t> root_to_coset(n, n);
  for (std::size_t i = 0; i < n; ++i) {  // indices ascend, so the first member is the minimum
    const std::size_t r = uf.find(i);
    if (root_to_coset[r] == n) {
      root_to_coset[r] = cs.representatives.size();
      cs.representatives.push_back(i);
    }
    cs.coset_of[i] = root_to_coset[r];
  }
  const std::size_t m = cs.size();
  if (static_cast<std::uint64_t>(n) * m > kActionTableCap)
    throw CapExceeded(static_cast<std::uint64_t>(n) * m, kActionTableCap, "coset action table");
  std::vector<std::vector<std::uint32_t>> gen_action(w.rank(), std::vector<std::uint32_t>(m));
  for (int j = 1; j <= w.rank(); ++j)
    for (std::size_t x = 0; x < m; ++x)
      gen_action[j - 1][x] = static_cast<std::uint32_t>(cs.coset_of[w.left_generator(j, cs.representatives[x])]);
  cs.action.assign(n, {});
  for (std::size_t i : w.bfs_order()) {
    if (i == w.identity_index()) {
      cs.action[i].resize(m);
      std::iota(cs.action[i].begin(), cs.action[i].end(), 0u);
      continue;
    }
    const auto& prev = cs.action[w.bfs_parent(i)];
    const auto& gen = gen_action[w.bfs_generator(i) - 1];
    auto& cur = cs.action[i];
    cur.resize(m);
    for (std::size_t x = 0; x < m; ++x) cur[x] = gen[prev[x]];
  }
  return cs;
}

StrutSpace::StrutSpace(const IndexedGroup& w, const OrbitType& ot, Convention conv) : w_(&w), ot_(ot) {
  const bool rotations = conv == Convention::Lang && (ot.I.empty() || ot.J.empty());
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!rotations || w.sign(i) == 1) acting_.push_back(i);

  // Points of one endpoint type: all cosets, or the W*-orbit of the identity for
  // ∅ under the Lang convention. Returns coset -> local point index (kOff if excluded).
  auto points_of = [&](const CosetSpace& cs, bool restrict_to_rotations) {
    std::vector<std::uint32_t> local(cs.size(), kOff);
    std::uint32_t next = 0;
    for (std::size_t x = 0; x < cs.size(); ++x)
      if (!restrict_to_rotations || w.sign(cs.representatives[x]) == 1) local[x] = next++;
    return std::make_pair(local, next);
  };

  std::vector<const CosetSpace*> spaces;
  const CosetSpace cs_i = coset_space(w, ot.I);
  const CosetSpace cs_j = ot.homoorbital() ? CosetSpace{} : coset_space(w, ot.J);
  spaces.push_back(&cs_i);
  if (!ot.homoorbital()) spaces.push_back(&cs_j);
  const IndexSet* subsets[2] = {&ot.I, &ot.J};

  std::vector<std::vector<std::uint32_t>> local(spaces.size());
  std::vector<std::uint32_t> offset(spaces.size(), 0);
  std::uint32_t total = 0;
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    auto [map, count] = points_of(*spaces[k], rotations && subsets[k]->empty());
    local[k] = std::move(map);
    offset[k] = total;
    total += count;
    point_kind_.insert(point_kind_.end(), count, static_cast<int>(k));
  }

  point_action_.assign(w.size(), {});
  for (std::size_t e : acting_) {
    auto& row = point_action_[e];
    row.resize(total);
    for (std::size_t k = 0; k < spaces.size(); ++k) {
      const auto& act = spaces[k]->action[e];
      for (std::size_t x = 0; x < spaces[k]->size(); ++x) {
        if (local[k][x] == kOff) continue;
        const std::uint32_t image = local[k][act[x]];
        if (image == kOff) throw std::logic_error("acting group leaves the endpoint set");
        row[offset[k] + local[k][x]] = offset[k] + image;
      }
    }
  }

  if (ot.homoorbital()) {
    for (std::uint32_t a = 0; a < total; ++a)
      for (std::uint32_t b = a + 1; b < total; ++b) struts_.push_back({a, b});
  } else {
    for (std::uint32_t a = 0; a < offset[1]; ++a)
      for (std::uint32_t b = offset[1]; b < total; ++b) struts_.push_back({a, b});
  }
  for (std::size_t i = 0; i < struts_.size(); ++i)
    strut_index_.emplace(static_cast<std::uint64_t>(struts_[i].a) * total + struts_[i].b, i);

  if (rotations) {
    // W* is generated by s_1 s_j.
    const std::size_t s1 = w.left_generator(1, w.identity_index());
    for (int j = 2; j <= w.rank(); ++j) acting_gens_.push_back(w.right_generator(j, s1));
  } else {
    for (int j = 1; j <= w.rank(); ++j) acting_gens_.push_back(w.left_generator(j, w.identity_index()));
  }
}

std::size_t StrutSpace::strut_index(Strut s) const {
  if (s.a > s.b) std::swap(s.a, s.b);
  auto it = strut_index_.find(static_cast<std::uint64_t>(s.a) * points() + s.b);
  if (it == strut_index_.end()) throw std::out_of_range("not a strut of this space");
  return it->second;
}

std::uint32_t StrutSpace::act_point(std::size_t element, std::uint32_t p) const {
  const auto& row = point_action_.at(element);
  if (row.empty()) throw std::invalid_argument("element is not in the acting group");
  return row[p];
}

Strut StrutSpace::act(std::size_t element, Strut s) const {
  std::uint32_t a = act_point(element, s.a), b = act_point(element, s.b);
  if (a > b) std::swap(a, b);
  return {a, b};
}

std::vector<Strut> enumerate_struts(const StrutSpace& space) { return space.struts(); }

std::vector<std::vector<std::size_t>> orbit_partition(const StrutSpace& space) {
  const auto& struts = space.struts();
  UnionFind uf(struts.size());
  for (std::size_t g : space.acting_generators())
    for (std::size_t i = 0; i < struts.size(); ++i) uf.unite(i, space.strut_index(space.act(g, struts[i])));
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> slot(struts.size(), struts.size());
  for (std::size_t i = 0; i < struts.size(); ++i) {
    const std::size_t r = uf.find(i);
    if (slot[r] == struts.size()) {
      slot[r] = orbits.size();
      orbits.emplace_back();
    }
    orbits[slot[r]].push_back(i);
  }
  return orbits;
}

std::uint64_t brute_fixed_count(const StrutSpace& space, std::size_t element) {
  std::uint64_t n = 0;
  for (const auto& s : space.struts())
    if (space.act(element, s) == s) ++n;
  return n;
}

std::uint64_t brute_burnside(const StrutSpace& space) {
  std::uint64_t sum = 0;
  for (std::size_t e : space.acting()) sum += brute_fixed_count(space, e);
  const std::uint64_t order = space.acting().size();
  if (sum % order != 0) throw IntegralityError("brute Burnside sum is not divisible by the acting group order");
  return sum / order;
}

std::vector<std::size_t> stabilizer_of_facet(const IndexedGroup& w, const CosetSpace& cosets) {
  const std::size_t base = cosets.coset_of[w.identity_index()];
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (cosets.action[i][base] == base) out.push_back(i);
  return out;
}

std::vector<Strut> generate_polypolyhedron(const StrutSpace& space, const Strut& seed) {
  std::vector<Strut> out;
  const auto& w = space.group();
  for (std::size_t e = 0; e < w.size(); ++e)
    if (w.sign(e) == 1) out.push_back(space.act(e, seed));
  std::sort(out.begin(), out.end(), [](const Strut& x, const Strut& y) {
    return std::make_pair(x.a, x.b) < std::make_pair(y.a, y.b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<std::uint64_t, std::uint64_t> valency(const StrutSpace& space, const Strut& seed) {
  std::uint64_t va = 0, vb = 0;
  for (const auto& s : generate_polypolyhedron(space, seed)) {
    if (s.a == seed.a || s.b == seed.a) ++va;
    if (s.a == seed.b || s.b == seed.b) ++vb;
  }
  return {va, vb};
}

OracleCounts oracle_counts(const StrutSpace& space) {
  OracleCounts c;
  c.struts = space.struts().size();
  for (const auto& orbit : orbit_partition(space)) {
    ++c.strut_orbits;
    const auto [va, vb] = valency(space, space.struts()[orbit.front()]);
    if (va == 1 || vb == 1) ++c.univalent;
  }
  return c;
}

OracleCounts oracle_counts(const GroupDescriptor& g, const OrbitType& ot, Convention conv, const Limits& limits) {
  IndexedGroup w(g, limits);
  return oracle_counts(StrutSpace(w, ot, conv));
}

std::uint64_t brute_centralizer_size(const IndexedGroup& w, const Element& u) {
  const auto& g = w.group();
  std::uint64_t n = 0;
  for (const auto& x : w.elements())
    if (multiply(g, x, u) == multiply(g, u, x)) ++n;
  return n;
}

std::vector<std::vector<std::size_t>> brute_conjugacy_classes(const IndexedGroup& w) {
  const auto& g = w.group();
  std::vector<Element> inverses;
  for (const auto& x : w.elements()) inverses.push_back(inverse(g, x));
  std::vector<bool> done(w.size(), false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t k = 0; k < w.size(); ++k) {
      const std::size_t j = w.index_of(multiply(g, multiply(g, w.element(k), w.element(i)), inverses[k]));
      if (!done[j]) {
        done[j] = true;
        cls.push_back(j);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace ppcount
