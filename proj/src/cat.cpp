#include "spancat/cat.hpp"

#include <algorithm>

#include "spancat/errors.hpp"

namespace spancat {

FinCatBuilder::FinCatBuilder(int objects) {
  if (objects < 0) throw ValidationError("negative object count");
  c_.objects = objects;
  c_.hom.assign(objects, std::vector<std::vector<int>>(objects));
  c_.ids.assign(objects, -1);
}

int FinCatBuilder::add_morphism(std::string name, int src, int dst) {
  if (src < 0 || src >= c_.objects || dst < 0 || dst >= c_.objects)
    throw ValidationError("morphism endpoints out of range");
  if (name.empty() || name.find('.') != std::string::npos)
    throw ValidationError("morphism names must be nonempty and must not contain '.'");
  for (const Morphism& m : c_.mors)
    if (m.name == name) throw ValidationError("duplicate morphism name: " + name);
  const int id = static_cast<int>(c_.mors.size());
  c_.mors.push_back(Morphism{std::move(name), src, dst});
  c_.hom[src][dst].push_back(id);
  return id;
}

void FinCatBuilder::set_identity(int obj, int mor) {
  if (c_.mors[mor].src != obj || c_.mors[mor].dst != obj)
    throw ValidationError("identity of object " + std::to_string(obj) + " is not an endomorphism");
  c_.ids[obj] = mor;
}

void FinCatBuilder::set_compose(int g, int f, int gf) {
  if (c_.mors[f].dst != c_.mors[g].src)
    throw CompositionMismatch("set_compose on a non-composable pair");
  if (c_.mors[gf].src != c_.mors[f].src || c_.mors[gf].dst != c_.mors[g].dst)
    throw ValidationError("composite has the wrong endpoints");
  pending_[{g, f}] = gf;
}

FinCat FinCatBuilder::build() {
  const int m = c_.mor_count();
  for (int o = 0; o < c_.objects; ++o)
    if (c_.ids[o] < 0) throw ValidationError("object " + std::to_string(o) + " has no identity");
  c_.comp.assign(static_cast<size_t>(m) * m, -1);
  for (const auto& [pair, gf] : pending_) c_.comp[static_cast<size_t>(pair.first) * m + pair.second] = gf;
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      if (c_.mors[f].dst == c_.mors[g].src && c_.compose(g, f) < 0)
        throw ValidationError("composition undefined for composable pair " + c_.mors[g].name +
                              " . " + c_.mors[f].name);
  return c_;
}

Report check_category(const FinCat& c) {
  const int m = c.mor_count();
  for (int o = 0; o < c.objects; ++o) {
    if (c.ids[o] < 0 || c.ids[o] >= m) return Report::fail("missing identity");
    if (c.src(c.ids[o]) != o || c.dst(c.ids[o]) != o)
      return Report::fail("identity of object " + std::to_string(o) + " mistyped");
  }
  for (int f = 0; f < m; ++f) {
    if (c.compose(f, c.ids[c.src(f)]) != f || c.compose(c.ids[c.dst(f)], f) != f)
      return Report::fail("identity law fails at " + c.mors[f].name);
  }
  for (int f = 0; f < m; ++f) {
    const int b = c.dst(f);
    for (int cobj = 0; cobj < c.objects; ++cobj)
      for (int g : c.hom[b][cobj]) {
        const int gf = c.compose(g, f);
        if (gf < 0 || c.src(gf) != c.src(f) || c.dst(gf) != cobj)
          return Report::fail("mistyped composite " + c.mors[g].name + " . " + c.mors[f].name);
        for (int dobj = 0; dobj < c.objects; ++dobj)
          for (int h : c.hom[cobj][dobj])
            if (c.compose(h, gf) != c.compose(c.compose(h, g), f))
              return Report::fail("associativity fails at (" + c.mors[h].name + ", " +
                                  c.mors[g].name + ", " + c.mors[f].name + ")");
      }
  }
  return Report::pass();
}

std::optional<int> find_terminal(const FinCat& c) {
  for (int t = 0; t < c.objects; ++t) {
    bool ok = true;
    for (int a = 0; a < c.objects && ok; ++a)
      if (c.hom[a][t].size() != 1) ok = false;
    if (ok) return t;
  }
  return std::nullopt;
}

std::optional<int> find_initial(const FinCat& c) {
  for (int i = 0; i < c.objects; ++i) {
    bool ok = true;
    for (int a = 0; a < c.objects && ok; ++a)
      if (c.hom[i][a].size() != 1) ok = false;
    if (ok) return i;
  }
  return std::nullopt;
}

std::optional<int> find_zero_object(const FinCat& c) {
  for (int z = 0; z < c.objects; ++z) {
    bool ok = true;
    for (int a = 0; a < c.objects && ok; ++a)
      if (c.hom[a][z].size() != 1 || c.hom[z][a].size() != 1) ok = false;
    if (ok) return z;
  }
  return std::nullopt;
}

namespace {

// Does (apex, leg1: apex->a, leg2: apex->b) satisfy the product property?
bool product_cone_valid(const FinCat& c, int a, int b, const Cone& cone) {
  for (int t = 0; t < c.objects; ++t)
    for (int f : c.hom[t][a])
      for (int g : c.hom[t][b]) {
        int count = 0;
        for (int h : c.hom[t][cone.apex])
          if (c.compose(cone.leg1, h) == f && c.compose(cone.leg2, h) == g) ++count;
        if (count != 1) return false;
      }
  return true;
}

// Does (apex, leg1: a->apex, leg2: b->apex) satisfy the coproduct property?
bool coproduct_cone_valid(const FinCat& c, int a, int b, const Cone& cone) {
  for (int t = 0; t < c.objects; ++t)
    for (int f : c.hom[a][t])
      for (int g : c.hom[b][t]) {
        int count = 0;
        for (int h : c.hom[cone.apex][t])
          if (c.compose(h, cone.leg1) == f && c.compose(h, cone.leg2) == g) ++count;
        if (count != 1) return false;
      }
  return true;
}

}  // namespace

std::optional<Cone> find_product(const FinCat& c, int a, int b) {
  for (int apex = 0; apex < c.objects; ++apex)
    for (int l1 : c.hom[apex][a])
      for (int l2 : c.hom[apex][b]) {
        const Cone cone{apex, l1, l2};
        if (product_cone_valid(c, a, b, cone)) return cone;
      }
  return std::nullopt;
}

std::optional<Cone> find_coproduct(const FinCat& c, int a, int b) {
  for (int apex = 0; apex < c.objects; ++apex)
    for (int l1 : c.hom[a][apex])
      for (int l2 : c.hom[b][apex]) {
        const Cone cone{apex, l1, l2};
        if (coproduct_cone_valid(c, a, b, cone)) return cone;
      }
  return std::nullopt;
}

std::vector<Cone> all_products(const FinCat& c, int a, int b) {
  std::vector<Cone> cones;
  for (int apex = 0; apex < c.objects; ++apex)
    for (int l1 : c.hom[apex][a])
      for (int l2 : c.hom[apex][b]) {
        const Cone cone{apex, l1, l2};
        if (product_cone_valid(c, a, b, cone)) cones.push_back(cone);
      }
  return cones;
}

std::vector<Cone> all_coproducts(const FinCat& c, int a, int b) {
  std::vector<Cone> cones;
  for (int apex = 0; apex < c.objects; ++apex)
    for (int l1 : c.hom[a][apex])
      for (int l2 : c.hom[b][apex]) {
        const Cone cone{apex, l1, l2};
        if (coproduct_cone_valid(c, a, b, cone)) cones.push_back(cone);
      }
  return cones;
}

SemiadditiveInfo is_semiadditive(const FinCat& c) {
  SemiadditiveInfo info;
  info.pairs.assign(static_cast<size_t>(c.objects) * c.objects, PairBiproduct{});
  const auto zero = find_zero_object(c);
  if (!zero) {
    info.detail = "no zero object";
    return info;
  }
  info.zero = *zero;
  info.zero_map.assign(static_cast<size_t>(c.objects) * c.objects, -1);
  for (int a = 0; a < c.objects; ++a)
    for (int b = 0; b < c.objects; ++b)
      info.zero_map[static_cast<size_t>(a) * c.objects + b] =
          c.compose(c.hom[info.zero][b][0], c.hom[a][info.zero][0]);

  for (int a = 0; a < c.objects; ++a)
    for (int b = 0; b < c.objects; ++b) {
      PairBiproduct& pd = info.pairs[static_cast<size_t>(a) * c.objects + b];
      const auto prod = find_product(c, a, b);
      const auto coprod = find_coproduct(c, a, b);
      if (!prod && !coprod) {
        ++info.skipped_pairs;
        continue;  // truncation boundary
      }
      if (!prod || !coprod) {
        info.detail = "pair (" + std::to_string(a) + ", " + std::to_string(b) +
                      ") has a " + (prod ? "product but no coproduct" : "coproduct but no product");
        return info;
      }
      pd.skipped = false;
      pd.product = *prod;
      pd.coproduct = *coprod;
      // Canonical comparison: diagonal identities, off-diagonal zero maps.
      const int za_b = info.zero_map[static_cast<size_t>(a) * c.objects + b];
      const int zb_a = info.zero_map[static_cast<size_t>(b) * c.objects + a];
      int found = 0;
      for (int chi : c.hom[pd.coproduct.apex][pd.product.apex]) {
        const int via_a = c.compose(chi, pd.coproduct.leg1);
        const int via_b = c.compose(chi, pd.coproduct.leg2);
        if (c.compose(pd.product.leg1, via_a) == c.ids[a] &&
            c.compose(pd.product.leg2, via_a) == za_b &&
            c.compose(pd.product.leg1, via_b) == zb_a &&
            c.compose(pd.product.leg2, via_b) == c.ids[b]) {
          pd.comparison = chi;
          ++found;
        }
      }
      if (found != 1) {
        info.detail = "pair (" + std::to_string(a) + ", " + std::to_string(b) + ") has " +
                      std::to_string(found) + " comparison maps";
        return info;
      }
      for (int xi : c.hom[pd.product.apex][pd.coproduct.apex])
        if (c.compose(xi, pd.comparison) == c.ids[pd.coproduct.apex] &&
            c.compose(pd.comparison, xi) == c.ids[pd.product.apex]) {
          pd.comparison_inverse = xi;
          break;
        }
      if (pd.comparison_inverse < 0) {
        info.detail = "comparison map for pair (" + std::to_string(a) + ", " +
                      std::to_string(b) + ") is not an isomorphism";
        return info;
      }
    }
  info.ok = true;
  if (info.skipped_pairs > 0)
    info.detail = std::to_string(info.skipped_pairs) + " pair(s) skipped at the truncation boundary";
  return info;
}

namespace {

int unique_product_mediator(const FinCat& c, const Cone& prod, int t, int to_a, int to_b) {
  int found = -1, count = 0;
  for (int h : c.hom[t][prod.apex])
    if (c.compose(prod.leg1, h) == to_a && c.compose(prod.leg2, h) == to_b) {
      found = h;
      ++count;
    }
  if (count != 1) throw NotSemiadditive("product mediator not unique");
  return found;
}

int unique_coproduct_mediator(const FinCat& c, const Cone& coprod, int t, int from_a, int from_b) {
  int found = -1, count = 0;
  for (int h : c.hom[coprod.apex][t])
    if (c.compose(h, coprod.leg1) == from_a && c.compose(h, coprod.leg2) == from_b) {
      found = h;
      ++count;
    }
  if (count != 1) throw NotSemiadditive("coproduct mediator not unique");
  return found;
}

}  // namespace

CommMonoidTable hom_cmon(const FinCat& c, const SemiadditiveInfo& info, int a, int b) {
  if (!info.ok) throw NotSemiadditive("category is not semiadditive: " + info.detail);
  const PairBiproduct& pd = info.pair(a, b, c.objects);
  if (pd.skipped)
    throw NotSemiadditive("biproduct of (" + std::to_string(a) + ", " + std::to_string(b) +
                          ") falls outside the truncation");
  const auto& homs = c.hom[a][b];
  const int n = static_cast<int>(homs.size());
  std::vector<int> pos(c.mor_count(), -1);
  for (int i = 0; i < n; ++i) pos[homs[i]] = i;
  const int zero = info.zero_map[static_cast<size_t>(a) * c.objects + b];

  CommMonoidTable table{n, pos[zero], std::vector<int>(static_cast<size_t>(n) * n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // f + g = [f, id_b] . comparison^-1 . <id_a, g>
      const int phi = unique_product_mediator(c, pd.product, a, c.ids[a], homs[j]);
      const int psi = unique_coproduct_mediator(c, pd.coproduct, b, homs[i], c.ids[b]);
      const int sum = c.compose(psi, c.compose(pd.comparison_inverse, phi));
      if (pos[sum] < 0) throw NotSemiadditive("hom addition leaves the hom-set");
      table.table[static_cast<size_t>(i) * n + j] = pos[sum];
    }
  const Report r = check_axioms(table);
  if (!r) throw NotSemiadditive("hom-monoid laws fail on Hom(" + std::to_string(a) + ", " +
                                std::to_string(b) + "): " + r.detail);
  return table;
}

bool is_additive(const FinCat& c) {
  const SemiadditiveInfo info = is_semiadditive(c);
  if (!info.ok) return false;
  for (int a = 0; a < c.objects; ++a)
    for (int b = 0; b < c.objects; ++b) {
      if (info.pair(a, b, c.objects).skipped) continue;
      if (!is_grouplike(hom_cmon(c, info, a, b))) return false;
    }
  return true;
}

FinCat group_complete_cat(const FinCat& c, std::vector<int>* kept_objects,
                          std::vector<std::vector<std::vector<int>>>* eta) {
  const SemiadditiveInfo info = is_semiadditive(c);
  if (!info.ok) throw NotSemiadditive(info.detail);

  // Largest biproduct-closed window, grown in object order.
  std::vector<int> w;
  for (int obj = 0; obj < c.objects; ++obj) {
    bool fits = !info.pair(obj, obj, c.objects).skipped;
    for (int other : w)
      if (info.pair(obj, other, c.objects).skipped || info.pair(other, obj, c.objects).skipped)
        fits = false;
    if (fits) w.push_back(obj);
  }
  const int nw = static_cast<int>(w.size());

  std::vector<std::vector<CommMonoidTable>> homs(nw, std::vector<CommMonoidTable>(nw));
  for (int i = 0; i < nw; ++i)
    for (int j = 0; j < nw; ++j) homs[i][j] = hom_cmon(c, info, w[i], w[j]);

  // Composition must be bilinear before it can descend to the completion.
  const auto hom_pos = [&c](int a, int b) {
    std::vector<int> pos(c.mor_count(), -1);
    const auto& v = c.hom[a][b];
    for (size_t i = 0; i < v.size(); ++i) pos[v[i]] = static_cast<int>(i);
    return pos;
  };
  for (int i = 0; i < nw; ++i)
    for (int j = 0; j < nw; ++j)
      for (int k = 0; k < nw; ++k) {
        const auto& hab = c.hom[w[i]][w[j]];
        const auto& hbc = c.hom[w[j]][w[k]];
        const auto pos_ab = hom_pos(w[i], w[j]);
        const auto pos_bc = hom_pos(w[j], w[k]);
        const auto pos_ac = hom_pos(w[i], w[k]);
        const CommMonoidTable& mab = homs[i][j];
        const CommMonoidTable& mbc = homs[j][k];
        const CommMonoidTable& mac = homs[i][k];
        for (size_t fi = 0; fi < hab.size(); ++fi)
          for (size_t fj = 0; fj < hab.size(); ++fj)
            for (int g : hbc) {
              const int lhs = c.compose(g, c.hom[w[i]][w[j]][mab.add(static_cast<int>(fi),
                                                                     static_cast<int>(fj))]);
              const int rhs = c.hom[w[i]][w[k]][mac.add(pos_ac[c.compose(g, hab[fi])],
                                                        pos_ac[c.compose(g, hab[fj])])];
              if (lhs != rhs)
                throw CompositionNotBilinear("postcomposition is not additive over Hom(" +
                                             std::to_string(w[i]) + ", " + std::to_string(w[j]) + ")");
            }
        for (int f : hab)
          for (size_t gi = 0; gi < hbc.size(); ++gi)
            for (size_t gj = 0; gj < hbc.size(); ++gj) {
              const int lhs = c.compose(c.hom[w[j]][w[k]][mbc.add(static_cast<int>(gi),
                                                                  static_cast<int>(gj))], f);
              const int rhs = c.hom[w[i]][w[k]][mac.add(pos_ac[c.compose(hbc[gi], f)],
                                                        pos_ac[c.compose(hbc[gj], f)])];
              if (lhs != rhs)
                throw CompositionNotBilinear("precomposition is not additive over Hom(" +
                                             std::to_string(w[j]) + ", " + std::to_string(w[k]) + ")");
            }
      }

  std::vector<std::vector<GrothendieckResult>> completed(nw);
  for (int i = 0; i < nw; ++i)
    for (int j = 0; j < nw; ++j) completed[i].push_back(grothendieck_group(homs[i][j]));

  FinCatBuilder builder(nw);
  std::vector<std::vector<std::vector<int>>> mor_of;  // [i][j][class] -> morphism id
  mor_of.assign(nw, {});
  for (int i = 0; i < nw; ++i)
    for (int j = 0; j < nw; ++j) {
      std::vector<int> ids;
      for (int cls = 0; cls < completed[i][j].group.size(); ++cls)
        ids.push_back(builder.add_morphism(
            "k" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(cls), i, j));
      mor_of[i].push_back(std::move(ids));
    }
  for (int i = 0; i < nw; ++i) {
    const auto pos = hom_pos(w[i], w[i]);
    builder.set_identity(i, mor_of[i][i][completed[i][i].canonical.table[pos[c.ids[w[i]]]]]);
  }
  for (int i = 0; i < nw; ++i)
    for (int j = 0; j < nw; ++j)
      for (int k = 0; k < nw; ++k) {
        const auto pos_ac = hom_pos(w[i], w[k]);
        const GrothendieckResult& kab = completed[i][j];
        const GrothendieckResult& kbc = completed[j][k];
        const GrothendieckResult& kac = completed[i][k];
        const CommMonoidTable& mac = homs[i][k];
        for (int c1 = 0; c1 < kab.group.size(); ++c1)
          for (int c2 = 0; c2 < kbc.group.size(); ++c2) {
            const auto [p1i, q1i] = kab.class_reps[c1];
            const auto [p2i, q2i] = kbc.class_reps[c2];
            const int p1 = c.hom[w[i]][w[j]][p1i], q1 = c.hom[w[i]][w[j]][q1i];
            const int p2 = c.hom[w[j]][w[k]][p2i], q2 = c.hom[w[j]][w[k]][q2i];
            // (p2 - q2) . (p1 - q1) = (p2 p1 + q2 q1) - (p2 q1 + q2 p1)
            const int plus = mac.add(pos_ac[c.compose(p2, p1)], pos_ac[c.compose(q2, q1)]);
            const int minus = mac.add(pos_ac[c.compose(p2, q1)], pos_ac[c.compose(q2, p1)]);
            const int cls = kac.group.monoid.add(
                kac.canonical.table[plus], kac.group.neg(kac.canonical.table[minus]));
            builder.set_compose(mor_of[j][k][c2], mor_of[i][j][c1], mor_of[i][k][cls]);
          }
      }
  if (kept_objects) *kept_objects = w;
  if (eta) {
    eta->assign(nw, {});
    for (int i = 0; i < nw; ++i)
      for (int j = 0; j < nw; ++j) (*eta)[i].push_back(completed[i][j].canonical.table);
  }
  return builder.build();
}

Report check_obj_monoid(const ObjMonoid& m, int objects) {
  if (m.unit < 0 || m.unit >= objects) return Report::fail("unit object out of range");
  if (static_cast<int>(m.oplus.size()) != objects * objects)
    return Report::fail("oplus table has wrong shape");
  for (int v : m.oplus)
    if (v < 0 || v >= objects) return Report::fail("oplus entry out of range");
  for (int a = 0; a < objects; ++a)
    if (m.sum(m.unit, a, objects) != a || m.sum(a, m.unit, objects) != a)
      return Report::fail("oplus unit law fails");
  for (int a = 0; a < objects; ++a)
    for (int b = 0; b < objects; ++b) {
      if (m.sum(a, b, objects) != m.sum(b, a, objects))
        return Report::fail("oplus not commutative");
      for (int c = 0; c < objects; ++c)
        if (m.sum(m.sum(a, b, objects), c, objects) != m.sum(a, m.sum(b, c, objects), objects))
          return Report::fail("oplus not associative");
    }
  return Report::pass();
}

std::vector<int> skeleton_objects(const ObjMonoid& act, int objects, int x) {
  std::vector<char> in(objects, 0);
  in[act.unit] = 1;
  if (x >= 0 && x < objects) in[x] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < objects; ++a)
      for (int b = 0; b < objects; ++b)
        if (in[a] && in[b] && !in[act.sum(a, b, objects)]) {
          in[act.sum(a, b, objects)] = 1;
          grew = true;
        }
  }
  std::vector<int> kept;
  for (int a = 0; a < objects; ++a)
    if (in[a]) kept.push_back(a);
  return kept;
}

FinCat full_subcategory(const FinCat& c, const std::vector<int>& objects) {
  std::vector<int> kept = objects;
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  std::vector<int> new_obj(c.objects, -1);
  for (size_t i = 0; i < kept.size(); ++i) new_obj[kept[i]] = static_cast<int>(i);
  FinCatBuilder builder(static_cast<int>(kept.size()));
  std::vector<int> new_mor(c.mor_count(), -1);
  for (int m = 0; m < c.mor_count(); ++m)
    if (new_obj[c.src(m)] >= 0 && new_obj[c.dst(m)] >= 0)
      new_mor[m] = builder.add_morphism(c.mors[m].name, new_obj[c.src(m)], new_obj[c.dst(m)]);
  for (int o : kept) builder.set_identity(new_obj[o], new_mor[c.ids[o]]);
  for (int f = 0; f < c.mor_count(); ++f) {
    if (new_mor[f] < 0) continue;
    for (int g = 0; g < c.mor_count(); ++g) {
      if (new_mor[g] < 0 || c.dst(f) != c.src(g)) continue;
      builder.set_compose(new_mor[g], new_mor[f], new_mor[c.compose(g, f)]);
    }
  }
  return builder.build();
}

FinCat cyclic_skeleton(const FinCat& c, const ObjMonoid& act, int x, std::vector<int>* kept) {
  const Report r = check_obj_monoid(act, c.objects);
  if (!r) throw ValidationError("invalid object monoid: " + r.detail);
  if (x < 0 || x >= c.objects) throw ValidationError("base object out of range");
  const std::vector<int> objs = skeleton_objects(act, c.objects, x);
  if (kept) *kept = objs;
  return full_subcategory(c, objs);
}

// --- matrix categories ------------------------------------------------------

Report check_semiring(const FiniteSemiring& r) {
  const int n = r.size;
  if (n <= 0) return Report::fail("empty semiring");
  if (static_cast<int>(r.add.size()) != n * n || static_cast<int>(r.mul.size()) != n * n)
    return Report::fail("semiring tables have wrong shape");
  for (int a = 0; a < n; ++a) {
    if (r.plus(r.zero, a) != a || r.plus(a, r.zero) != a) return Report::fail("additive unit fails");
    if (r.times(r.one, a) != a || r.times(a, r.one) != a)
      return Report::fail("multiplicative unit fails");
    if (r.times(r.zero, a) != r.zero || r.times(a, r.zero) != r.zero)
      return Report::fail("zero is not absorbing");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (r.plus(a, b) != r.plus(b, a)) return Report::fail("addition not commutative");
      if (r.times(a, b) != r.times(b, a)) return Report::fail("multiplication not commutative");
      for (int c = 0; c < n; ++c) {
        if (r.plus(r.plus(a, b), c) != r.plus(a, r.plus(b, c)))
          return Report::fail("addition not associative");
        if (r.times(r.times(a, b), c) != r.times(a, r.times(b, c)))
          return Report::fail("multiplication not associative");
        if (r.times(a, r.plus(b, c)) != r.plus(r.times(a, b), r.times(a, c)))
          return Report::fail("distributivity fails");
      }
    }
  return Report::pass();
}

FiniteSemiring saturating_nat_semiring(int cap) {
  if (cap < 1) throw ValidationError("saturation cap must be at least 1");
  const int n = cap + 1;
  FiniteSemiring r{"nat<=" + std::to_string(cap), n, 0, 1,
                   std::vector<int>(static_cast<size_t>(n) * n),
                   std::vector<int>(static_cast<size_t>(n) * n)};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      r.add[static_cast<size_t>(a) * n + b] = std::min(a + b, cap);
      r.mul[static_cast<size_t>(a) * n + b] = std::min(a * b, cap);
    }
  return r;
}

FiniteSemiring boolean_semiring() {
  FiniteSemiring r = saturating_nat_semiring(1);
  r.name = "boolean";
  return r;
}

FiniteSemiring zmod_semiring(int k) {
  if (k < 1) throw ValidationError("modulus must be positive");
  FiniteSemiring r{"Z/" + std::to_string(k), k, 0, k == 1 ? 0 : 1,
                   std::vector<int>(static_cast<size_t>(k) * k),
                   std::vector<int>(static_cast<size_t>(k) * k)};
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      r.add[static_cast<size_t>(a) * k + b] = (a + b) % k;
      r.mul[static_cast<size_t>(a) * k + b] = (a * b) % k;
    }
  return r;
}

namespace {

std::string entry_name(int a, int b, const std::vector<int>& entries) {
  std::string s = "m" + std::to_string(a) + "x" + std::to_string(b) + "_";
  for (int e : entries) s += static_cast<char>('0' + e);
  return s;
}

}  // namespace

MatCategory make_mat_category(const FiniteSemiring& r, int objects) {
  {
    const Report rep = check_semiring(r);
    if (!rep) throw ValidationError("invalid semiring: " + rep.detail);
  }
  MatCategory mc{FinCat{}, r, {}};
  FinCatBuilder builder(objects);
  std::map<std::tuple<int, int, std::vector<int>>, int> id_of;
  for (int a = 0; a < objects; ++a)
    for (int b = 0; b < objects; ++b) {
      std::vector<int> entries(static_cast<size_t>(a) * b, 0);
      while (true) {
        const int id = builder.add_morphism(entry_name(a, b, entries), a, b);
        id_of[{a, b, entries}] = id;
        mc.entries.push_back(entries);
        size_t i = 0;
        for (; i < entries.size(); ++i) {
          if (++entries[i] < r.size) break;
          entries[i] = 0;
        }
        if (i == entries.size()) break;
      }
    }
  for (int a = 0; a < objects; ++a) {
    std::vector<int> identity(static_cast<size_t>(a) * a, r.zero);
    for (int i = 0; i < a; ++i) identity[static_cast<size_t>(i) * a + i] = r.one;
    builder.set_identity(a, id_of.at({a, a, identity}));
  }
  // comp(g: b->c, f: a->b) is the matrix product contracting b.
  for (const auto& [key_f, f] : id_of) {
    const auto& [a, b, fe] = key_f;
    for (const auto& [key_g, g] : id_of) {
      const auto& [b2, cc, ge] = key_g;
      if (b2 != b) continue;
      std::vector<int> prod(static_cast<size_t>(a) * cc, r.zero);
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
          const int fij = fe[static_cast<size_t>(i) * b + j];
          for (int k = 0; k < cc; ++k)
            prod[static_cast<size_t>(i) * cc + k] =
                r.plus(prod[static_cast<size_t>(i) * cc + k],
                       r.times(fij, ge[static_cast<size_t>(j) * cc + k]));
        }
      builder.set_compose(g, f, id_of.at({a, cc, prod}));
    }
  }
  mc.cat = builder.build();
  return mc;
}

FinCat make_exact_nat_mat_category(int bound, int objects) {
  if (bound < 0) throw ValidationError("negative entry bound");
  FinCatBuilder builder(objects);
  std::map<std::tuple<int, int, std::vector<int>>, int> id_of;
  for (int a = 0; a < objects; ++a)
    for (int b = 0; b < objects; ++b) {
      std::vector<int> entries(static_cast<size_t>(a) * b, 0);
      while (true) {
        id_of[{a, b, entries}] = builder.add_morphism(entry_name(a, b, entries), a, b);
        size_t i = 0;
        for (; i < entries.size(); ++i) {
          if (++entries[i] <= bound) break;
          entries[i] = 0;
        }
        if (i == entries.size()) break;
      }
    }
  for (int a = 0; a < objects; ++a) {
    std::vector<int> identity(static_cast<size_t>(a) * a, 0);
    for (int i = 0; i < a; ++i) identity[static_cast<size_t>(i) * a + i] = 1;
    if (1 > bound && a > 0)
      throw TruncationNotClosed("identity matrix needs entries above the bound");
    builder.set_identity(a, id_of.at({a, a, identity}));
  }
  for (const auto& [key_f, f] : id_of) {
    const auto& [a, b, fe] = key_f;
    for (const auto& [key_g, g] : id_of) {
      const auto& [b2, cc, ge] = key_g;
      if (b2 != b) continue;
      std::vector<int> prod(static_cast<size_t>(a) * cc, 0);
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
          for (int k = 0; k < cc; ++k) {
            int& cell = prod[static_cast<size_t>(i) * cc + k];
            cell += fe[static_cast<size_t>(i) * b + j] * ge[static_cast<size_t>(j) * cc + k];
            if (cell > bound)
              throw TruncationNotClosed(
                  "exact matrices with entries <= " + std::to_string(bound) +
                  " are not closed under composition: " + entry_name(a, b, fe) + " then " +
                  entry_name(b, cc, ge));
          }
      builder.set_compose(g, f, id_of.at({a, cc, prod}));
    }
  }
  return builder.build();
}

ObjMonoid mat_obj_monoid(int objects) {
  ObjMonoid m{0, std::vector<int>(static_cast<size_t>(objects) * objects)};
  for (int a = 0; a < objects; ++a)
    for (int b = 0; b < objects; ++b)
      m.oplus[static_cast<size_t>(a) * objects + b] = std::min(a + b, objects - 1);
  return m;
}

FinCat arrow_category() {
  FinCatBuilder b(2);
  const int id0 = b.add_morphism("id0", 0, 0);
  const int id1 = b.add_morphism("id1", 1, 1);
  const int a = b.add_morphism("a", 0, 1);
  b.set_identity(0, id0);
  b.set_identity(1, id1);
  b.set_compose(id0, id0, id0);
  b.set_compose(id1, id1, id1);
  b.set_compose(a, id0, a);
  b.set_compose(id1, a, a);
  return b.build();
}

FinCat one_object_category(const CommMonoidTable& m) {
  FinCatBuilder b(1);
  std::vector<int> ids;
  for (int i = 0; i < m.size; ++i) ids.push_back(b.add_morphism("x" + std::to_string(i), 0, 0));
  b.set_identity(0, ids[m.unit]);
  for (int i = 0; i < m.size; ++i)
    for (int j = 0; j < m.size; ++j) b.set_compose(ids[i], ids[j], ids[m.add(i, j)]);
  return b.build();
}

FinCat discrete_category(int n) {
  FinCatBuilder b(n);
  std::vector<int> ids;
  for (int i = 0; i < n; ++i) ids.push_back(b.add_morphism("id" + std::to_string(i), i, i));
  for (int i = 0; i < n; ++i) {
    b.set_identity(i, ids[i]);
    b.set_compose(ids[i], ids[i], ids[i]);
  }
  return b.build();
}

CatProperties category_properties(const FinCat& c) {
  CatProperties p;
  const auto initial = find_initial(c);
  const auto terminal = find_terminal(c);
  bool all_coproducts = initial.has_value();
  bool all_products = terminal.has_value();
  for (int a = 0; a < c.objects && (all_coproducts || all_products); ++a)
    for (int b = a; b < c.objects; ++b) {
      if (all_coproducts && !find_coproduct(c, a, b)) all_coproducts = false;
      if (all_products && !find_product(c, a, b)) all_products = false;
    }
  p.cocartesian = initial.has_value() && all_coproducts;
  p.cartesian = terminal.has_value() && all_products;
  const SemiadditiveInfo info = is_semiadditive(c);
  p.semiadditive = info.ok;
  p.skipped_pairs = info.skipped_pairs;
  p.additive = info.ok && is_additive(c);
  return p;
}

}  // namespace spancat
