#include "spancat/gspan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace spancat {

GSpan identity_gspan(const GSet& x) { return GSpan{identity_gmap(x), identity_gmap(x)}; }

GSpan empty_gspan(const GSet& x, const GSet& y) {
  GSet apex = make_gset(x.group, 0, std::vector<Perm>(x.group.generators().size()));
  return GSpan{make_gmap(apex, x, SetMap{0, x.points, {}}),
               make_gmap(apex, y, SetMap{0, y.points, {}})};
}

void validate_gspan(const GSpan& s) {
  if (!(s.left.dom == s.right.dom))
    throw ValidationError("equivariant span legs disagree on the apex");
  if (!(s.left.dom.group == s.left.cod.group) || !(s.left.cod.group == s.right.cod.group))
    throw CompositionMismatch("equivariant span mixes groups");
}

namespace {

// Least pair in the orbit of (x, y) under the given elements acting diagonally.
std::pair<int, int> orbit_min_pair(const GSet& xs, const GSet& ys,
                                   const std::vector<int>& movers, int x, int y) {
  std::pair<int, int> best{x, y};
  for (int n : movers)
    best = std::min(best, {xs.elem_action[n][x], ys.elem_action[n][y]});
  return best;
}

}  // namespace

std::vector<GBurnBasisElem> gburn_basis(const GSet& x, const GSet& y) {
  if (!(x.group == y.group)) throw CompositionMismatch("hom basis over different groups");
  const PermGroup& g = x.group;
  std::vector<GBurnBasisElem> basis;
  for (const SubgroupClass& cls : g.subgroup_classes()) {
    const std::vector<int> fx = fixed_points(x, cls.representative);
    const std::vector<int> fy = fixed_points(y, cls.representative);
    const std::vector<int> nr = g.normalizer(cls.representative);
    std::set<std::pair<int, int>> seen;
    for (int a : fx)
      for (int b : fy) seen.insert(orbit_min_pair(x, y, nr, a, b));
    for (const auto& [a, b] : seen) basis.push_back(GBurnBasisElem{cls.index, a, b});
  }
  return basis;  // already sorted: classes ascending, pairs ascending per class
}

namespace {

int basis_index(const std::vector<GBurnBasisElem>& basis, const GBurnBasisElem& e) {
  const auto it = std::lower_bound(basis.begin(), basis.end(), e);
  if (it == basis.end() || !(*it == e))
    throw ValidationError("span orbit does not match the hom basis");
  return static_cast<int>(it - basis.begin());
}

}  // namespace

GBurnHom gspan_canonical(const GSpan& s) {
  validate_gspan(s);
  const GSet& x = s.src();
  const GSet& y = s.dst();
  const PermGroup& g = x.group;
  GBurnHom hom{gburn_basis(x, y), {}};
  hom.coeffs.assign(hom.basis.size(), 0);
  for (const auto& orbit : orbits(s.apex())) {
    const int a = orbit[0];
    const std::vector<int> stab = stabilizer(s.apex(), a);
    const int cls = g.classify_subgroup(stab);
    // Move the concrete stabilizer onto the class representative.
    const auto& rep = g.subgroup_classes()[cls].representative;
    int mover = -1;
    for (int c = 0; c < g.order(); ++c)
      if (g.conjugate_subgroup(stab, c) == rep) {
        mover = c;
        break;
      }
    const int px = x.elem_action[mover][s.left.map.table[a]];
    const int py = y.elem_action[mover][s.right.map.table[a]];
    const auto [mx, my] = orbit_min_pair(x, y, g.normalizer(rep), px, py);
    ++hom.coeffs[basis_index(hom.basis, GBurnBasisElem{cls, mx, my})];
  }
  return hom;
}

GSpan gspan_compose(const GSpan& s2, const GSpan& s1) {
  if (!(s1.dst() == s2.src()))
    throw CompositionMismatch("equivariant span composition: middle G-sets differ");
  const GSetPullback pb = pullback_gsets(s1.right, s2.left);
  return GSpan{compose_gmaps(s1.left, pb.p1), compose_gmaps(s2.right, pb.p2)};
}

GSpan realize_basis_elem(const GSet& x, const GSet& y, const GBurnBasisElem& e) {
  const PermGroup& g = x.group;
  const auto& rep = g.subgroup_classes()[e.subgroup_class].representative;
  const TransitiveGSet t = make_transitive(g, rep);
  SetMap lmap{t.gset.points, x.points, std::vector<int>(t.gset.points)};
  SetMap rmap{t.gset.points, y.points, std::vector<int>(t.gset.points)};
  for (int p = 0; p < t.gset.points; ++p) {
    lmap.table[p] = x.elem_action[t.coset_rep[p]][e.x];
    rmap.table[p] = y.elem_action[t.coset_rep[p]][e.y];
  }
  return GSpan{make_gmap(t.gset, x, std::move(lmap)), make_gmap(t.gset, y, std::move(rmap))};
}

GBurnHom compose_hom_vectors(const GSet& x, const GSet& y, const GSet& z,
                             const GBurnHom& v1_xy, const GBurnHom& v2_yz) {
  GBurnHom out{gburn_basis(x, z), {}};
  out.coeffs.assign(out.basis.size(), 0);
  for (size_t i = 0; i < v1_xy.coeffs.size(); ++i) {
    if (v1_xy.coeffs[i] == 0) continue;
    const GSpan s1 = realize_basis_elem(x, y, v1_xy.basis[i]);
    for (size_t j = 0; j < v2_yz.coeffs.size(); ++j) {
      if (v2_yz.coeffs[j] == 0) continue;
      const GSpan s2 = realize_basis_elem(y, z, v2_yz.basis[j]);
      const GBurnHom piece = gspan_canonical(gspan_compose(s2, s1));
      for (size_t k = 0; k < piece.coeffs.size(); ++k)
        out.coeffs[k] += v1_xy.coeffs[i] * v2_yz.coeffs[j] * piece.coeffs[k];
    }
  }
  return out;
}

Span forget_gspan(const GSpan& s) { return Span{s.left.map, s.right.map}; }

BurnsideRingElement BurnsideRing::basis_element(int h) const {
  BurnsideRingElement e(classes(), 0);
  e[h] = 1;
  return e;
}

BurnsideRingElement BurnsideRing::one() const { return basis_element(classes() - 1); }

BurnsideRingElement BurnsideRing::add(const BurnsideRingElement& a,
                                      const BurnsideRingElement& b) const {
  BurnsideRingElement r = a;
  for (int i = 0; i < classes(); ++i) r[i] += b[i];
  return r;
}

BurnsideRingElement BurnsideRing::mul(const BurnsideRingElement& a,
                                      const BurnsideRingElement& b) const {
  BurnsideRingElement r(classes(), 0);
  for (int h = 0; h < classes(); ++h)
    for (int k = 0; k < classes(); ++k) {
      if (a[h] == 0 || b[k] == 0) continue;
      for (int l = 0; l < classes(); ++l) r[l] += a[h] * b[k] * structure[h][k][l];
    }
  return r;
}

BurnsideRing burnside_ring(const PermGroup& g, const std::string& group_name) {
  BurnsideRing ring{g, group_name, subgroup_class_names(g, group_name), {}};
  const auto& classes = g.subgroup_classes();
  const int n = static_cast<int>(classes.size());
  std::vector<GSet> transitive;
  for (const auto& cls : classes) transitive.push_back(make_transitive(g, cls.representative).gset);
  ring.structure.assign(n, std::vector<BurnsideRingElement>(n, BurnsideRingElement(n, 0)));
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) {
      const GSet prod = gset_product(transitive[h], transitive[k]);
      for (int cls : gset_canonical(prod)) ++ring.structure[h][k][cls];
    }
  return ring;
}

TableOfMarks table_of_marks(const PermGroup& g, const std::string& group_name) {
  const auto& classes = g.subgroup_classes();
  const int n = static_cast<int>(classes.size());
  TableOfMarks t{group_name, subgroup_class_names(g, group_name), IntMatrix(n, n)};
  for (int k = 0; k < n; ++k) {
    const GSet gk = make_transitive(g, classes[k].representative).gset;
    for (int h = 0; h < n; ++h)
      t.matrix.at(k, h) =
          static_cast<long long>(fixed_points(gk, classes[h].representative).size());
  }
  return t;
}

std::vector<long long> mark_hom(const BurnsideRingElement& x, const TableOfMarks& marks) {
  const int n = marks.matrix.rows;
  if (static_cast<int>(x.size()) != n)
    throw ShapeMismatch("ring element length does not match the class count");
  std::vector<long long> phi(n, 0);
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) phi[h] += x[k] * marks.matrix.at(k, h);
  return phi;
}

GDistributivityWitness check_distributivity(const GSet& x, const GSet& y, const GSet& z) {
  GDistributivityWitness w;
  const DistributivityWitness plain =
      check_distributivity(FinSet{x.points}, FinSet{y.points}, FinSet{z.points});
  w.bijection = plain.bijection;
  if (!plain.ok) {
    w.detail = plain.detail;
    return w;
  }
  const GSet lhs = gset_product(x, gset_coproduct(y, z));
  const GSet rhs = gset_coproduct(gset_product(x, y), gset_product(x, z));
  try {
    make_gmap(lhs, rhs, plain.bijection);
  } catch (const ValidationError& e) {
    w.detail = e.what();
    return w;
  }
  w.ok = true;
  return w;
}

}  // namespace spancat
