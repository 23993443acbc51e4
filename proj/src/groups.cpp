#include "spancat/groups.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace spancat {

Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

bool is_permutation(const Perm& p, int degree) {
  if (static_cast<int>(p.size()) != degree) return false;
  std::vector<char> hit(degree, 0);
  for (int v : p) {
    if (v < 0 || v >= degree || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

PermGroup::PermGroup() : PermGroup(1, {}) {}

PermGroup::PermGroup(int degree, std::vector<Perm> generators, int order_cap) {
  if (degree < 0) throw ValidationError("negative permutation degree");
  for (const Perm& g : generators)
    if (!is_permutation(g, degree))
      throw ValidationError("generator is not a permutation of degree " + std::to_string(degree));
  auto d = std::make_shared<Data>();
  d->degree = degree;
  d->generators = std::move(generators);
  d->cap = order_cap;
  d_ = std::move(d);
}

void PermGroup::ensure_elements() const {
  const Data& d = data();
  std::call_once(d.elements_once, [&d] {
    // Breadth-first closure from the identity under left multiplication.
    std::set<Perm> seen;
    std::vector<Perm> queue{identity_perm(d.degree)};
    seen.insert(queue[0]);
    for (size_t head = 0; head < queue.size(); ++head) {
      const Perm cur = queue[head];
      for (const Perm& g : d.generators) {
        Perm next = perm_mul(g, cur);
        if (seen.insert(next).second) {
          if (static_cast<int>(seen.size()) > d.cap)
            throw GroupTooLarge("group order exceeds the cap of " + std::to_string(d.cap));
          queue.push_back(std::move(next));
        }
      }
    }
    d.elements.assign(seen.begin(), seen.end());  // std::set iterates in lex order
    const int n = static_cast<int>(d.elements.size());
    std::map<Perm, int> index;
    for (int i = 0; i < n; ++i) index[d.elements[i]] = i;
    d.id_index = index.at(identity_perm(d.degree));
    d.mul_table.assign(static_cast<size_t>(n) * n, 0);
    d.inv_table.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j)
        d.mul_table[static_cast<size_t>(i) * n + j] = index.at(perm_mul(d.elements[i], d.elements[j]));
      d.inv_table[i] = index.at(perm_inverse(d.elements[i]));
    }
  });
}

const std::vector<Perm>& PermGroup::elements() const {
  ensure_elements();
  return data().elements;
}

int PermGroup::element_index(const Perm& p) const {
  const auto& els = elements();
  auto it = std::lower_bound(els.begin(), els.end(), p);
  if (it == els.end() || *it != p) return -1;
  return static_cast<int>(it - els.begin());
}

int PermGroup::identity_index() const {
  ensure_elements();
  return data().id_index;
}

int PermGroup::mul(int i, int j) const {
  ensure_elements();
  return data().mul_table[static_cast<size_t>(i) * order() + j];
}

int PermGroup::inv(int i) const {
  ensure_elements();
  return data().inv_table[i];
}

namespace {

// Closure of a set of element indices under multiplication.
std::vector<int> subgroup_closure(const PermGroup& g, std::vector<int> seed) {
  std::set<int> have(seed.begin(), seed.end());
  have.insert(g.identity_index());
  std::vector<int> queue(have.begin(), have.end());
  for (size_t head = 0; head < queue.size(); ++head)
    for (size_t j = 0; j < queue.size(); ++j) {
      // products both ways; queue grows while new elements appear
      for (int p : {g.mul(queue[head], queue[j]), g.mul(queue[j], queue[head])})
        if (have.insert(p).second) queue.push_back(p);
    }
  return {have.begin(), have.end()};
}

std::vector<int> canonical_conjugate(const PermGroup& g, const std::vector<int>& sub) {
  std::vector<int> best = sub;
  for (int c = 0; c < g.order(); ++c) {
    std::vector<int> conj = g.conjugate_subgroup(sub, c);
    if (conj < best) best = conj;
  }
  return best;
}

}  // namespace

std::vector<int> PermGroup::conjugate_subgroup(const std::vector<int>& subgroup, int g) const {
  std::vector<int> r;
  r.reserve(subgroup.size());
  const int gi = inv(g);
  for (int h : subgroup) r.push_back(mul(mul(g, h), gi));
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<int> PermGroup::normalizer(const std::vector<int>& subgroup) const {
  std::vector<int> r;
  for (int c = 0; c < order(); ++c)
    if (conjugate_subgroup(subgroup, c) == subgroup) r.push_back(c);
  return r;
}

const std::vector<SubgroupClass>& PermGroup::subgroup_classes() const {
  ensure_elements();
  const Data& d = data();
  std::call_once(d.classes_once, [this, &d] {
    // All subgroups by closure of extended element sets (cyclic extension).
    std::set<std::vector<int>> all;
    std::vector<std::vector<int>> queue{{identity_index()}};
    all.insert(queue[0]);
    for (size_t head = 0; head < queue.size(); ++head) {
      const std::vector<int> h = queue[head];
      for (int e = 0; e < order(); ++e) {
        if (std::binary_search(h.begin(), h.end(), e)) continue;
        std::vector<int> seed = h;
        seed.push_back(e);
        std::vector<int> s = subgroup_closure(*this, std::move(seed));
        if (all.insert(s).second) queue.push_back(std::move(s));
      }
    }
    // Group them by conjugacy; keep the lexicographically least representative.
    std::set<std::vector<int>> reps;
    for (const auto& s : all) reps.insert(canonical_conjugate(*this, s));
    std::vector<SubgroupClass> classes;
    for (const auto& r : reps)
      classes.push_back(SubgroupClass{r, static_cast<int>(r.size()), 0});
    std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
      if (a.order != b.order) return a.order < b.order;
      return a.representative < b.representative;
    });
    for (size_t i = 0; i < classes.size(); ++i) classes[i].index = static_cast<int>(i);
    d.classes = std::move(classes);
  });
  return d.classes;
}

int PermGroup::classify_subgroup(const std::vector<int>& subgroup) const {
  const std::vector<int> canon = canonical_conjugate(*this, subgroup);
  const auto& classes = subgroup_classes();
  for (const auto& c : classes)
    if (c.representative == canon) return c.index;
  throw ValidationError("element set is not a subgroup of this group");
}

namespace {

bool subgroup_is_cyclic(const PermGroup& g, const std::vector<int>& sub) {
  for (int e : sub) {
    int k = 1, cur = e;
    while (cur != g.identity_index()) {
      cur = g.mul(cur, e);
      ++k;
    }
    if (k == static_cast<int>(sub.size())) return true;
  }
  return false;
}

bool subgroup_is_abelian(const PermGroup& g, const std::vector<int>& sub) {
  for (int a : sub)
    for (int b : sub)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

}  // namespace

std::vector<std::string> subgroup_class_names(const PermGroup& g, const std::string& group_name) {
  const auto& classes = g.subgroup_classes();
  std::vector<std::string> names;
  for (const auto& c : classes) {
    std::string base;
    if (c.order == 1)
      base = "e";
    else if (c.order == g.order())
      base = group_name;
    else if (subgroup_is_cyclic(g, c.representative))
      base = "C" + std::to_string(c.order);
    else if (c.order == 4)
      base = "V4";
    else if (c.order == 6 && !subgroup_is_abelian(g, c.representative))
      base = "S3";
    else
      base = "H" + std::to_string(c.order);
    names.push_back(base);
  }
  // Prime-mark repeats so names stay unique.
  for (size_t i = 0; i < names.size(); ++i) {
    int seen = 0;
    for (size_t j = 0; j < i; ++j)
      if (names[j].substr(0, names[j].find('\'')) == names[i]) ++seen;
    names[i] += std::string(seen, '\'');
  }
  return names;
}

PermGroup builtin_group(const std::string& name) {
  if (name == "C1" || name == "e") return PermGroup(1, {});
  if (name == "C2") return PermGroup(2, {{1, 0}});
  if (name == "C3") return PermGroup(3, {{1, 2, 0}});
  if (name == "C4") return PermGroup(4, {{1, 2, 3, 0}});
  if (name == "V4") return PermGroup(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
  if (name == "C6") return PermGroup(6, {{1, 2, 3, 4, 5, 0}});
  if (name == "S3") return PermGroup(3, {{1, 0, 2}, {1, 2, 0}});
  if (name == "D4") return PermGroup(4, {{1, 2, 3, 0}, {0, 3, 2, 1}});
  throw ValidationError("unknown group name: " + name);
}

const std::vector<std::string>& builtin_group_names() {
  static const std::vector<std::string> names{"C2", "C3", "C4", "V4", "C6", "S3", "D4"};
  return names;
}

GSet make_gset(const PermGroup& g, int points, std::vector<Perm> gen_action) {
  if (points < 0) throw ValidationError("negative point count");
  if (gen_action.size() != g.generators().size())
    throw ValidationError("need one action permutation per generator");
  for (const Perm& p : gen_action)
    if (!is_permutation(p, points))
      throw ValidationError("action entry is not a permutation of the points");

  // Extend the generator assignment over the whole element list, verifying
  // well-definedness: two words reaching the same element must act equally.
  const int n = g.order();
  std::vector<Perm> elem_action(n);
  std::vector<char> known(n, 0);
  std::vector<int> gen_index;
  for (const Perm& gen : g.generators()) gen_index.push_back(g.element_index(gen));
  elem_action[g.identity_index()] = identity_perm(points);
  known[g.identity_index()] = 1;
  std::vector<int> queue{g.identity_index()};
  for (size_t head = 0; head < queue.size(); ++head) {
    const int cur = queue[head];
    for (size_t j = 0; j < gen_index.size(); ++j) {
      const int tgt = g.mul(gen_index[j], cur);
      Perm act = perm_mul(gen_action[j], elem_action[cur]);
      if (!known[tgt]) {
        elem_action[tgt] = std::move(act);
        known[tgt] = 1;
        queue.push_back(tgt);
      } else if (elem_action[tgt] != act) {
        throw ValidationError("generator action does not extend to a group homomorphism");
      }
    }
  }
  return GSet{g, points, std::move(gen_action), std::move(elem_action)};
}

GSet trivial_gset(const PermGroup& g, int points) {
  std::vector<Perm> act(g.generators().size(), identity_perm(points));
  return make_gset(g, points, std::move(act));
}

GMap make_gmap(const GSet& dom, const GSet& cod, SetMap map) {
  if (!(dom.group == cod.group))
    throw CompositionMismatch("equivariant map between G-sets over different groups");
  if (map.dom != dom.points || map.cod != cod.points)
    throw ValidationError("map endpoints do not match the G-sets");
  validate_map(map);
  for (size_t j = 0; j < dom.gen_action.size(); ++j)
    for (int x = 0; x < dom.points; ++x)
      if (map.table[dom.gen_action[j][x]] != cod.gen_action[j][map.table[x]])
        throw ValidationError("map is not equivariant on generator " + std::to_string(j));
  return GMap{dom, cod, std::move(map)};
}

GMap identity_gmap(const GSet& x) { return GMap{x, x, identity_map(x.points)}; }

GMap compose_gmaps(const GMap& g, const GMap& f) {
  if (!(f.cod == g.dom)) throw CompositionMismatch("G-map composition mismatch");
  return GMap{f.dom, g.cod, compose_maps(g.map, f.map)};
}

std::vector<std::vector<int>> orbits(const GSet& x) {
  std::vector<char> seen(x.points, 0);
  std::vector<std::vector<int>> result;
  for (int p = 0; p < x.points; ++p) {
    if (seen[p]) continue;
    std::vector<int> orbit{p};
    seen[p] = 1;
    for (size_t head = 0; head < orbit.size(); ++head)
      for (const Perm& a : x.gen_action) {
        const int q = a[orbit[head]];
        if (!seen[q]) {
          seen[q] = 1;
          orbit.push_back(q);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

std::vector<int> stabilizer(const GSet& x, int point) {
  std::vector<int> r;
  for (int i = 0; i < x.group.order(); ++i)
    if (x.elem_action[i][point] == point) r.push_back(i);
  return r;
}

std::vector<int> fixed_points(const GSet& x, const std::vector<int>& subgroup) {
  std::vector<int> r;
  for (int p = 0; p < x.points; ++p) {
    bool fixed = true;
    for (int h : subgroup)
      if (x.elem_action[h][p] != p) {
        fixed = false;
        break;
      }
    if (fixed) r.push_back(p);
  }
  return r;
}

std::vector<int> gset_canonical(const GSet& x) {
  std::vector<int> r;
  for (const auto& orbit : orbits(x)) r.push_back(x.group.classify_subgroup(stabilizer(x, orbit[0])));
  std::sort(r.begin(), r.end());
  return r;
}

GSetPullback pullback_gsets(const GMap& f, const GMap& g) {
  if (!(f.dom.group == g.dom.group))
    throw CompositionMismatch("pullback of G-maps over different groups");
  if (!(f.cod == g.cod)) throw CompositionMismatch("pullback of G-maps with different codomains");
  const Pullback pb = pullback(f.map, g.map);
  // Index of each pair (a, b) inside the lexicographic enumeration.
  std::vector<int> pair_index(static_cast<size_t>(f.dom.points) * g.dom.points, -1);
  for (int i = 0; i < pb.object.size; ++i)
    pair_index[static_cast<size_t>(pb.p1.table[i]) * g.dom.points + pb.p2.table[i]] = i;
  std::vector<Perm> action;
  for (size_t j = 0; j < f.dom.gen_action.size(); ++j) {
    Perm act(pb.object.size);
    for (int i = 0; i < pb.object.size; ++i) {
      const int a = f.dom.gen_action[j][pb.p1.table[i]];
      const int b = g.dom.gen_action[j][pb.p2.table[i]];
      act[i] = pair_index[static_cast<size_t>(a) * g.dom.points + b];
    }
    action.push_back(std::move(act));
  }
  GSet object = make_gset(f.dom.group, pb.object.size, std::move(action));
  GSetPullback r{object, make_gmap(object, f.dom, pb.p1), make_gmap(object, g.dom, pb.p2)};
  return r;
}

GSet gset_coproduct(const GSet& x, const GSet& y) {
  if (!(x.group == y.group)) throw CompositionMismatch("coproduct over different groups");
  std::vector<Perm> action;
  for (size_t j = 0; j < x.gen_action.size(); ++j) {
    Perm a(x.points + y.points);
    for (int p = 0; p < x.points; ++p) a[p] = x.gen_action[j][p];
    for (int p = 0; p < y.points; ++p) a[x.points + p] = x.points + y.gen_action[j][p];
    action.push_back(std::move(a));
  }
  return make_gset(x.group, x.points + y.points, std::move(action));
}

GSet gset_product(const GSet& x, const GSet& y) {
  if (!(x.group == y.group)) throw CompositionMismatch("product over different groups");
  std::vector<Perm> action;
  for (size_t j = 0; j < x.gen_action.size(); ++j) {
    Perm a(static_cast<size_t>(x.points) * y.points);
    for (int p = 0; p < x.points; ++p)
      for (int q = 0; q < y.points; ++q)
        a[static_cast<size_t>(p) * y.points + q] =
            x.gen_action[j][p] * y.points + y.gen_action[j][q];
    action.push_back(std::move(a));
  }
  return make_gset(x.group, x.points * y.points, std::move(action));
}

TransitiveGSet make_transitive(const PermGroup& g, const std::vector<int>& subgroup) {
  // Left cosets, each represented by its least element index.
  const int n = g.order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int e = 0; e < n; ++e) {
    if (coset_of[e] >= 0) continue;
    int least = e;
    std::vector<int> members;
    for (int h : subgroup) members.push_back(g.mul(e, h));
    for (int m : members) least = std::min(least, m);
    const int point = static_cast<int>(reps.size());
    reps.push_back(least);
    for (int m : members) coset_of[m] = point;
  }
  std::vector<Perm> action;
  for (const Perm& gen : g.generators()) {
    const int gi = g.element_index(gen);
    Perm a(reps.size());
    for (size_t p = 0; p < reps.size(); ++p) a[p] = coset_of[g.mul(gi, reps[p])];
    action.push_back(std::move(a));
  }
  TransitiveGSet r{make_gset(g, static_cast<int>(reps.size()), std::move(action)), reps};
  return r;
}

std::optional<Perm> find_equivariant_bijection(const GSet& x, const GSet& y) {
  if (!(x.group == y.group) || x.points != y.points) return std::nullopt;
  Perm p = identity_perm(x.points);
  do {
    bool ok = true;
    for (size_t j = 0; j < x.gen_action.size() && ok; ++j)
      for (int a = 0; a < x.points && ok; ++a)
        if (p[x.gen_action[j][a]] != y.gen_action[j][p[a]]) ok = false;
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

bool equivariant_bijection_exists(const GSet& x, const GSet& y) {
  return find_equivariant_bijection(x, y).has_value();
}

}  // namespace spancat
