#include "spancat/theories.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "spancat/errors.hpp"

namespace spancat {

TheoryPreset sets_theory() { return TheoryPreset{TheoryTag::Sets, std::nullopt, ""}; }
TheoryPreset ptdsets_theory() { return TheoryPreset{TheoryTag::PtdSets, std::nullopt, ""}; }
TheoryPreset cmon_theory() { return TheoryPreset{TheoryTag::CMon, std::nullopt, ""}; }
TheoryPreset ab_theory() { return TheoryPreset{TheoryTag::Ab, std::nullopt, ""}; }
TheoryPreset gsets_theory(const PermGroup& g, const std::string& name) {
  return TheoryPreset{TheoryTag::GSets, g, name};
}

std::string theory_name(const TheoryPreset& p) {
  switch (p.tag) {
    case TheoryTag::Sets: return "sets";
    case TheoryTag::PtdSets: return "ptdsets";
    case TheoryTag::CMon: return "cmon";
    case TheoryTag::Ab: return "ab";
    case TheoryTag::GSets: return "gsets(" + p.group_name + ")";
  }
  return "?";
}

TheoryPreset theory_by_name(const std::string& name, const std::string& group) {
  if (name == "sets") return sets_theory();
  if (name == "ptdsets") return ptdsets_theory();
  if (name == "cmon") return cmon_theory();
  if (name == "ab") return ab_theory();
  if (name == "gsets") {
    if (group.empty()) throw ValidationError("the gsets theory needs --group");
    return gsets_theory(builtin_group(group), group);
  }
  throw ValidationError("unknown theory: " + name);
}

TheoryMorphism theory_identity(const TheoryPreset& p, int m) {
  TheoryMorphism phi;
  phi.dom = phi.cod = m;
  switch (p.tag) {
    case TheoryTag::Sets:
      phi.reindex = identity_map(m);
      break;
    case TheoryTag::PtdSets:
      phi.reindex = SetMap{m, m + 1, {}};
      for (int i = 0; i < m; ++i) phi.reindex.table.push_back(i);
      break;
    case TheoryTag::CMon:
    case TheoryTag::Ab:
      phi.matrix = IntMatrix::identity(m);
      break;
    case TheoryTag::GSets: {
      const int e = p.group->identity_index();
      phi.slots.assign(m, GSlot{0, e});
      for (int i = 0; i < m; ++i) phi.slots[i].source = i;
      break;
    }
  }
  return phi;
}

TheoryMorphism compose_theory(const TheoryPreset& p, const TheoryMorphism& psi,
                              const TheoryMorphism& phi) {
  if (phi.cod != psi.dom)
    throw CompositionMismatch("theory morphisms not composable: " + std::to_string(phi.cod) +
                              " vs " + std::to_string(psi.dom));
  TheoryMorphism r;
  r.dom = phi.dom;
  r.cod = psi.cod;
  switch (p.tag) {
    case TheoryTag::Sets:
      // reindex maps run contravariantly: r.reindex = phi.reindex . psi.reindex
      r.reindex = compose_maps(phi.reindex, psi.reindex);
      break;
    case TheoryTag::PtdSets: {
      r.reindex = SetMap{psi.cod, phi.dom + 1, std::vector<int>(psi.cod)};
      for (int j = 0; j < psi.cod; ++j) {
        const int mid = psi.reindex.table[j];
        r.reindex.table[j] = (mid == psi.dom) ? phi.dom : phi.reindex.table[mid];
      }
      break;
    }
    case TheoryTag::CMon:
    case TheoryTag::Ab:
      r.matrix = mat_mul(phi.matrix, psi.matrix);
      break;
    case TheoryTag::GSets: {
      r.slots.resize(psi.cod);
      for (int j = 0; j < psi.cod; ++j) {
        const GSlot& s2 = psi.slots[j];
        const GSlot& s1 = phi.slots[s2.source];
        r.slots[j] = GSlot{s1.source, p.group->mul(s2.element, s1.element)};
      }
      break;
    }
  }
  return r;
}

namespace {

bool odometer(std::vector<int>& digits, int base) {
  for (int& d : digits) {
    if (++d < base) return true;
    d = 0;
  }
  return false;
}

}  // namespace

std::vector<TheoryMorphism> enumerate_theory_homs(const TheoryPreset& p, int m, int n, int bound) {
  std::vector<TheoryMorphism> homs;
  switch (p.tag) {
    case TheoryTag::Sets: {
      if (m == 0 && n > 0) return homs;
      std::vector<int> u(n, 0);
      do {
        TheoryMorphism phi;
        phi.dom = m;
        phi.cod = n;
        phi.reindex = SetMap{n, m, u};
        homs.push_back(std::move(phi));
      } while (n > 0 && odometer(u, m));
      break;
    }
    case TheoryTag::PtdSets: {
      std::vector<int> u(n, 0);
      do {
        TheoryMorphism phi;
        phi.dom = m;
        phi.cod = n;
        phi.reindex = SetMap{n, m + 1, u};
        homs.push_back(std::move(phi));
      } while (n > 0 && odometer(u, m + 1));
      break;
    }
    case TheoryTag::CMon: {
      std::vector<int> e(static_cast<size_t>(m) * n, 0);
      do {
        TheoryMorphism phi;
        phi.dom = m;
        phi.cod = n;
        phi.matrix = IntMatrix(m, n);
        for (size_t i = 0; i < e.size(); ++i) phi.matrix.entries[i] = e[i];
        homs.push_back(std::move(phi));
      } while (!e.empty() && odometer(e, bound + 1));
      break;
    }
    case TheoryTag::Ab: {
      std::vector<int> e(static_cast<size_t>(m) * n, 0);
      do {
        TheoryMorphism phi;
        phi.dom = m;
        phi.cod = n;
        phi.matrix = IntMatrix(m, n);
        for (size_t i = 0; i < e.size(); ++i) phi.matrix.entries[i] = e[i] - bound;
        homs.push_back(std::move(phi));
      } while (!e.empty() && odometer(e, 2 * bound + 1));
      break;
    }
    case TheoryTag::GSets: {
      const int g = p.group->order();
      if (m == 0 && n > 0) return homs;
      std::vector<int> u(n, 0);
      do {
        TheoryMorphism phi;
        phi.dom = m;
        phi.cod = n;
        for (int j = 0; j < n; ++j) phi.slots.push_back(GSlot{u[j] / g, u[j] % g});
        homs.push_back(std::move(phi));
      } while (n > 0 && odometer(u, m * g));
      break;
    }
  }
  return homs;
}

TheoryMorphism morphism_from_matrix(const TheoryPreset& p, IntMatrix m) {
  if (p.tag != TheoryTag::CMon && p.tag != TheoryTag::Ab)
    throw ValidationError("matrix morphisms belong to the cmon and ab theories");
  if (p.tag == TheoryTag::CMon)
    for (long long e : m.entries)
      if (e < 0) throw ValidationError("cmon theory morphisms need nonnegative entries");
  TheoryMorphism phi;
  phi.dom = m.rows;
  phi.cod = m.cols;
  phi.matrix = std::move(m);
  return phi;
}

TheoryMorphism morphism_from_reindex(const TheoryPreset& p, SetMap reindex) {
  if (p.tag != TheoryTag::Sets && p.tag != TheoryTag::PtdSets)
    throw ValidationError("reindex morphisms belong to the sets and ptdsets theories");
  validate_map(reindex);
  TheoryMorphism phi;
  phi.cod = reindex.dom;
  phi.dom = (p.tag == TheoryTag::Sets) ? reindex.cod : reindex.cod - 1;
  phi.reindex = std::move(reindex);
  return phi;
}

TheoryMorphism projection_morphism(const TheoryPreset& p, int m, int slot) {
  if (slot < 0 || slot >= m) throw ValidationError("projection slot out of range");
  TheoryMorphism phi;
  phi.dom = m;
  phi.cod = 1;
  switch (p.tag) {
    case TheoryTag::Sets:
      phi.reindex = SetMap{1, m, {slot}};
      break;
    case TheoryTag::PtdSets:
      phi.reindex = SetMap{1, m + 1, {slot}};
      break;
    case TheoryTag::CMon:
    case TheoryTag::Ab:
      phi.matrix = IntMatrix(m, 1);
      phi.matrix.at(slot, 0) = 1;
      break;
    case TheoryTag::GSets:
      phi.slots = {GSlot{slot, p.group->identity_index()}};
      break;
  }
  return phi;
}

ModelTable sets_model(int n) { return ModelTable{TheoryTag::Sets, n, -1, {}, std::nullopt}; }

ModelTable ptd_model(int n, int basepoint) {
  return ModelTable{TheoryTag::PtdSets, n, basepoint, {}, std::nullopt};
}

ModelTable cmon_model(CommMonoidTable m) {
  ModelTable t{TheoryTag::CMon, m.size, -1, std::move(m), std::nullopt};
  return t;
}

ModelTable ab_model(CommMonoidTable m) {
  ModelTable t{TheoryTag::Ab, m.size, -1, std::move(m), std::nullopt};
  return t;
}

ModelTable gset_model(GSet x) {
  ModelTable t{TheoryTag::GSets, x.points, -1, {}, std::move(x)};
  return t;
}

Report check_model(const TheoryPreset& p, const ModelTable& m) {
  if (m.tag != p.tag) return Report::fail("model belongs to a different theory");
  switch (p.tag) {
    case TheoryTag::Sets:
      return m.size >= 0 ? Report::pass() : Report::fail("negative carrier");
    case TheoryTag::PtdSets:
      if (m.basepoint < 0 || m.basepoint >= m.size) return Report::fail("basepoint out of range");
      return Report::pass();
    case TheoryTag::CMon:
      if (m.monoid.size != m.size) return Report::fail("carrier size mismatch");
      return check_axioms(m.monoid);
    case TheoryTag::Ab: {
      if (m.monoid.size != m.size) return Report::fail("carrier size mismatch");
      const Report r = check_axioms(m.monoid);
      if (!r) return r;
      if (!is_grouplike(m.monoid)) return Report::fail("model is not grouplike");
      return Report::pass();
    }
    case TheoryTag::GSets:
      if (!m.gset) return Report::fail("missing G-set");
      if (!(m.gset->group == *p.group)) return Report::fail("model over the wrong group");
      if (m.gset->points != m.size) return Report::fail("carrier size mismatch");
      return Report::pass();
  }
  return Report::fail("unknown theory");
}

long long tuple_count(int carrier, int arity) {
  long long c = 1;
  for (int i = 0; i < arity; ++i) {
    c *= carrier;
    if (c > 100000000LL) throw SizeTooLarge("tuple space too large");
  }
  return c;
}

long long tuple_code(const std::vector<int>& tuple, int carrier) {
  long long code = 0;
  for (auto it = tuple.rbegin(); it != tuple.rend(); ++it) code = code * carrier + *it;
  return code;
}

std::vector<int> tuple_decode(long long code, int carrier, int arity) {
  std::vector<int> t(arity);
  for (int i = 0; i < arity; ++i) {
    t[i] = static_cast<int>(code % carrier);
    code /= carrier;
  }
  return t;
}

TupleMap eval_morphism(const TheoryPreset& p, const ModelTable& model, const TheoryMorphism& phi) {
  {
    const Report r = check_model(p, model);
    if (!r) throw ValidationError("invalid model: " + r.detail);
  }
  const int k = model.size;
  TupleMap out;
  out.dom_arity = phi.dom;
  out.cod_arity = phi.cod;
  out.carrier = k;
  const long long dom_size = tuple_count(k, phi.dom);
  out.table.resize(dom_size);
  // Inverse search per element; carriers are small.
  const auto negate = [&model](int a) {
    for (int b = 0; b < model.monoid.size; ++b)
      if (model.monoid.add(a, b) == model.monoid.unit) return b;
    throw ValidationError("eval needs inverses but the model is not grouplike");
  };
  for (long long code = 0; code < dom_size; ++code) {
    const std::vector<int> v = tuple_decode(code, k, phi.dom);
    std::vector<int> w(phi.cod, 0);
    switch (p.tag) {
      case TheoryTag::Sets:
        if (static_cast<int>(phi.reindex.table.size()) != phi.cod || phi.reindex.cod != phi.dom)
          throw ArityMismatch("reindex data does not match the morphism arities");
        for (int j = 0; j < phi.cod; ++j) w[j] = v[phi.reindex.table[j]];
        break;
      case TheoryTag::PtdSets:
        if (static_cast<int>(phi.reindex.table.size()) != phi.cod ||
            phi.reindex.cod != phi.dom + 1)
          throw ArityMismatch("based reindex data does not match the morphism arities");
        for (int j = 0; j < phi.cod; ++j) {
          const int u = phi.reindex.table[j];
          w[j] = (u == phi.dom) ? model.basepoint : v[u];
        }
        break;
      case TheoryTag::CMon:
      case TheoryTag::Ab: {
        if (phi.matrix.rows != phi.dom || phi.matrix.cols != phi.cod)
          throw ArityMismatch("matrix shape does not match the morphism arities");
        for (int j = 0; j < phi.cod; ++j) {
          int acc = model.monoid.unit;
          for (int i = 0; i < phi.dom; ++i) {
            long long mult = phi.matrix.at(i, j);
            int term = v[i];
            if (mult < 0) {
              if (p.tag == TheoryTag::CMon)
                throw ValidationError("negative entry in a cmon theory morphism");
              term = negate(term);
              mult = -mult;
            }
            for (long long t = 0; t < mult; ++t) acc = model.monoid.add(acc, term);
          }
          w[j] = acc;
        }
        break;
      }
      case TheoryTag::GSets:
        if (static_cast<int>(phi.slots.size()) != phi.cod)
          throw ArityMismatch("slot data does not match the morphism arities");
        for (int j = 0; j < phi.cod; ++j) {
          const GSlot& s = phi.slots[j];
          if (s.source < 0 || s.source >= phi.dom) throw ArityMismatch("slot source out of range");
          w[j] = model.gset->elem_action[s.element][v[s.source]];
        }
        break;
    }
    out.table[code] = static_cast<int>(tuple_code(w, k));
  }
  return out;
}

TupleMap compose_tuple_maps(const TupleMap& g, const TupleMap& f) {
  if (f.cod_arity != g.dom_arity || f.carrier != g.carrier)
    throw ArityMismatch("tuple maps not composable");
  TupleMap r;
  r.dom_arity = f.dom_arity;
  r.cod_arity = g.cod_arity;
  r.carrier = f.carrier;
  r.table.resize(f.table.size());
  for (size_t i = 0; i < f.table.size(); ++i) r.table[i] = g.table[f.table[i]];
  return r;
}

bool functoriality_check(const TheoryPreset& p, const ModelTable& model,
                         const TheoryMorphism& phi, const TheoryMorphism& psi) {
  const TheoryMorphism comp = compose_theory(p, psi, phi);
  return eval_morphism(p, model, comp) ==
         compose_tuple_maps(eval_morphism(p, model, psi), eval_morphism(p, model, phi));
}

std::vector<ModelTable> enumerate_models(const TheoryPreset& p, int size) {
  if (size < 1) throw SizeTooLarge("model carriers start at size 1");
  std::vector<ModelTable> out;
  switch (p.tag) {
    case TheoryTag::Sets:
      if (size > 16) throw SizeTooLarge("sets models capped at size 16");
      out.push_back(sets_model(size));
      break;
    case TheoryTag::PtdSets:
      if (size > 16) throw SizeTooLarge("pointed models capped at size 16");
      out.push_back(ptd_model(size, 0));
      break;
    case TheoryTag::CMon: {
      // Direct interpretation search over unit and upper-triangle tables,
      // independent of enumerate_cmon's backtracking path.
      if (size > 5) throw SizeTooLarge("cmon model search capped at size 5");
      if (size == 5) {
        for (const auto& m : enumerate_cmon(5)) out.push_back(cmon_model(m));
        break;
      }
      const int n = size;
      std::set<std::vector<int>> canon;
      std::vector<std::pair<int, int>> cells;
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) cells.emplace_back(a, b);
      for (int unit = 0; unit < n; ++unit) {
        std::vector<int> tri(cells.size(), 0);
        do {
          CommMonoidTable m{n, unit, std::vector<int>(static_cast<size_t>(n) * n)};
          for (size_t i = 0; i < cells.size(); ++i) {
            m.table[static_cast<size_t>(cells[i].first) * n + cells[i].second] = tri[i];
            m.table[static_cast<size_t>(cells[i].second) * n + cells[i].first] = tri[i];
          }
          if (check_axioms(m)) canon.insert(canonical_cmon_form(m).table);
        } while (odometer(tri, n));
      }
      for (const auto& t : canon) out.push_back(cmon_model(CommMonoidTable{n, 0, t}));
      break;
    }
    case TheoryTag::Ab:
      for (const auto& g : enumerate_ab(size)) out.push_back(ab_model(g.monoid));
      break;
    case TheoryTag::GSets: {
      if (size > 5) throw SizeTooLarge("G-set model search capped at size 5");
      const PermGroup& g = *p.group;
      const int ngens = static_cast<int>(g.generators().size());
      // All generator assignments, filtered to homomorphisms, up to iso.
      std::vector<Perm> perms;
      Perm q = identity_perm(size);
      do {
        perms.push_back(q);
      } while (std::next_permutation(q.begin(), q.end()));
      std::map<std::vector<int>, GSet> seen;  // canonical multiset -> witness
      std::vector<size_t> pick(ngens, 0);
      while (true) {
        std::vector<Perm> action;
        for (int i = 0; i < ngens; ++i) action.push_back(perms[pick[i]]);
        try {
          GSet x = make_gset(g, size, action);
          seen.try_emplace(gset_canonical(x), x);
        } catch (const ValidationError&) {
        }
        int i = 0;
        for (; i < ngens; ++i) {
          if (++pick[i] < perms.size()) break;
          pick[i] = 0;
        }
        if (i == ngens) break;
      }
      for (const auto& [canon, x] : seen) out.push_back(gset_model(x));
      break;
    }
  }
  return out;
}

std::optional<std::vector<int>> model_iso(const TheoryPreset& p, const ModelTable& a,
                                          const ModelTable& b) {
  if (a.tag != p.tag || b.tag != p.tag) return std::nullopt;
  if (a.size != b.size) return std::nullopt;
  switch (p.tag) {
    case TheoryTag::Sets: {
      std::vector<int> id(a.size);
      for (int i = 0; i < a.size; ++i) id[i] = i;
      return id;
    }
    case TheoryTag::PtdSets: {
      // Any bijection sending basepoint to basepoint.
      std::vector<int> result(a.size);
      std::vector<char> used(a.size, 0);
      result[a.basepoint] = b.basepoint;
      used[b.basepoint] = 1;
      int next = 0;
      for (int i = 0; i < a.size; ++i) {
        if (i == a.basepoint) continue;
        while (used[next]) ++next;
        result[i] = next;
        used[next] = 1;
      }
      return result;
    }
    case TheoryTag::CMon:
    case TheoryTag::Ab:
      return cmon_iso(a.monoid, b.monoid);
    case TheoryTag::GSets: {
      const auto perm = find_equivariant_bijection(*a.gset, *b.gset);
      if (!perm) return std::nullopt;
      return std::vector<int>(perm->begin(), perm->end());
    }
  }
  return std::nullopt;
}

OrbitPresheaf fixed_point_model(const GSet& x) {
  const PermGroup& g = x.group;
  const auto& classes = g.subgroup_classes();
  const int nc = static_cast<int>(classes.size());
  OrbitPresheaf pre;
  pre.values.resize(nc);
  for (int k = 0; k < nc; ++k) pre.values[k] = fixed_points(x, classes[k].representative);
  std::vector<std::map<int, int>> position(nc);
  for (int k = 0; k < nc; ++k)
    for (size_t i = 0; i < pre.values[k].size(); ++i)
      position[k][pre.values[k][i]] = static_cast<int>(i);

  pre.morphisms.assign(nc, std::vector<std::vector<OrbitMorphism>>(nc));
  for (int k = 0; k < nc; ++k)
    for (int h = 0; h < nc; ++h) {
      const auto& krep = classes[k].representative;
      const auto& hrep = classes[h].representative;
      for (int r : make_transitive(g, hrep).coset_rep) {
        bool maps_in = true;
        for (int kappa : krep)
          if (!std::binary_search(hrep.begin(), hrep.end(), g.mul(g.mul(g.inv(r), kappa), r))) {
            maps_in = false;
            break;
          }
        if (!maps_in) continue;
        OrbitMorphism om;
        om.coset_rep = r;
        om.value_map = SetMap{static_cast<int>(pre.values[h].size()),
                              static_cast<int>(pre.values[k].size()), {}};
        for (int y : pre.values[h]) {
          const int image = x.elem_action[r][y];
          const auto it = position[k].find(image);
          if (it == position[k].end()) {
            pre.functoriality = Report::fail("translated fixed point escapes the target");
            return pre;
          }
          om.value_map.table.push_back(it->second);
        }
        pre.morphisms[k][h].push_back(std::move(om));
      }
    }

  // Contravariant functoriality over all composable pairs.
  for (int k = 0; k < nc; ++k)
    for (int h = 0; h < nc; ++h)
      for (int l = 0; l < nc; ++l)
        for (const OrbitMorphism& u1 : pre.morphisms[k][h])
          for (const OrbitMorphism& u2 : pre.morphisms[h][l]) {
            const int r = g.mul(u1.coset_rep, u2.coset_rep);
            int canonical = r;
            for (int lam : classes[l].representative)
              canonical = std::min(canonical, g.mul(r, lam));
            const OrbitMorphism* composite = nullptr;
            for (const OrbitMorphism& cand : pre.morphisms[k][l])
              if (cand.coset_rep == canonical) composite = &cand;
            if (!composite) {
              pre.functoriality = Report::fail("composite coset missing from the orbit category");
              return pre;
            }
            if (compose_maps(u1.value_map, u2.value_map).table != composite->value_map.table) {
              pre.functoriality = Report::fail("value maps do not compose functorially");
              return pre;
            }
          }
  pre.functoriality = Report::pass();
  return pre;
}

TheoryShape builtin_theory_shape(int max_arity) {
  TheoryShape s;
  s.max_arity = max_arity;
  for (int i = 0; i <= max_arity; ++i) s.object_powers.push_back(i);
  return s;
}

bool theory_is_cyclic(const TheoryShape& shape) {
  for (const auto& power : shape.object_powers)
    if (!power.has_value()) return false;
  return true;
}

}  // namespace spancat
