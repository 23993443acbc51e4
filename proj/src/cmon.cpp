#include "spancat/cmon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "spancat/errors.hpp"

namespace spancat {

Report check_axioms(const CommMonoidTable& m) {
  const int n = m.size;
  if (n <= 0) return Report::fail("empty carrier");
  if (m.unit < 0 || m.unit >= n) return Report::fail("unit index out of range");
  if (static_cast<int>(m.table.size()) != n * n) return Report::fail("table has wrong shape");
  for (int v : m.table)
    if (v < 0 || v >= n) return Report::fail("table entry out of range");
  for (int a = 0; a < n; ++a)
    if (m.add(m.unit, a) != a || m.add(a, m.unit) != a)
      return Report::fail("unit law fails at element " + std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (m.add(a, b) != m.add(b, a))
        return Report::fail("commutativity fails at (" + std::to_string(a) + ", " +
                            std::to_string(b) + ")");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (m.add(m.add(a, b), c) != m.add(a, m.add(b, c)))
          return Report::fail("associativity fails at (" + std::to_string(a) + ", " +
                              std::to_string(b) + ", " + std::to_string(c) + ")");
  return Report::pass();
}

CommMonoidTable make_comm_monoid(int size, int unit, std::vector<int> table) {
  CommMonoidTable m{size, unit, std::move(table)};
  const Report r = check_axioms(m);
  if (!r) throw ValidationError("not a commutative monoid: " + r.detail);
  return m;
}

CommMonoidTable trivial_monoid() { return CommMonoidTable{1, 0, {0}}; }

CommMonoidTable cyclic_monoid(int n) {
  CommMonoidTable m{n, 0, std::vector<int>(static_cast<size_t>(n) * n)};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.table[static_cast<size_t>(a) * n + b] = (a + b) % n;
  return m;
}

CommMonoidTable join_semilattice2() { return CommMonoidTable{2, 0, {0, 1, 1, 1}}; }

CommMonoidTable direct_product(const CommMonoidTable& a, const CommMonoidTable& b) {
  const int n = a.size * b.size;
  CommMonoidTable m{n, a.unit * b.size + b.unit, std::vector<int>(static_cast<size_t>(n) * n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      m.table[static_cast<size_t>(x) * n + y] =
          a.add(x / b.size, y / b.size) * b.size + b.add(x % b.size, y % b.size);
  return m;
}

CommMonoidTable direct_product_of_cyclics(const std::vector<long long>& orders) {
  CommMonoidTable m = trivial_monoid();
  for (long long d : orders) m = direct_product(m, cyclic_monoid(static_cast<int>(d)));
  return m;
}

bool is_grouplike(const CommMonoidTable& m) {
  for (int a = 0; a < m.size; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < m.size && !has_inverse; ++b)
      if (m.add(a, b) == m.unit) has_inverse = true;
    if (!has_inverse) return false;
  }
  return true;
}

int AbGroupTable::neg(int a) const {
  for (int b = 0; b < monoid.size; ++b)
    if (monoid.add(a, b) == monoid.unit) return b;
  throw ValidationError("element without inverse in a group table");
}

AbGroupTable make_ab_group(CommMonoidTable m) {
  const Report r = check_axioms(m);
  if (!r) throw ValidationError("not a commutative monoid: " + r.detail);
  if (!is_grouplike(m)) throw ValidationError("monoid is not grouplike");
  return AbGroupTable{std::move(m)};
}

GrothendieckResult grothendieck_group(const CommMonoidTable& m) {
  const int n = m.size;
  const auto related = [&m, n](int a, int b, int c, int d) {
    for (int k = 0; k < n; ++k)
      if (m.add(m.add(a, d), k) == m.add(m.add(c, b), k)) return true;
    return false;
  };
  // Union-find over pairs (a, b) indexed a*n + b, with least-index roots.
  std::vector<int> parent(static_cast<size_t>(n) * n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&parent](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int i = 0; i < n * n; ++i)
    for (int j = i + 1; j < n * n; ++j) {
      const int ri = find(i), rj = find(j);
      if (ri == rj) continue;
      if (related(i / n, i % n, j / n, j % n)) parent[std::max(ri, rj)] = std::min(ri, rj);
    }
  // Roots are least pairs; iterate in index (= lexicographic pair) order.
  std::vector<int> cls(static_cast<size_t>(n) * n, -1);
  std::vector<std::pair<int, int>> reps;
  for (int i = 0; i < n * n; ++i) {
    const int root = find(i);
    if (cls[root] < 0) {
      cls[root] = static_cast<int>(reps.size());
      reps.emplace_back(root / n, root % n);
    }
    cls[i] = cls[root];
  }
  const int k = static_cast<int>(reps.size());
  CommMonoidTable q{k, cls[m.unit * n + m.unit], std::vector<int>(static_cast<size_t>(k) * k)};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int a = m.add(reps[i].first, reps[j].first);
      const int b = m.add(reps[i].second, reps[j].second);
      q.table[static_cast<size_t>(i) * k + j] = cls[a * n + b];
    }
  GrothendieckResult r{make_ab_group(std::move(q)), SetMap{n, k, std::vector<int>(n)}, reps};
  for (int a = 0; a < n; ++a) r.canonical.table[a] = cls[a * n + m.unit];
  return r;
}

// --- presentation quotients ---------------------------------------------

namespace {

long long reduce_coeff(long long c, const ReductionRule& r) {
  if (c < r.p) return c;
  return r.q + (c - r.q) % (r.p - r.q);
}

void reduce_vector(std::vector<long long>& v, const MonoidPresentation& pres) {
  for (int g = 0; g < pres.generators; ++g) v[g] = reduce_coeff(v[g], pres.reduction[g]);
}

bool contains(const std::vector<long long>& v, const std::vector<long long>& part) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] < part[i]) return false;
  return true;
}

}  // namespace

CommMonoidTable quotient_monoid(const MonoidPresentation& pres, long long budget,
                                std::vector<int>* class_of_vector,
                                std::vector<std::vector<long long>>* class_reps_out) {
  const int k = pres.generators;
  if (static_cast<int>(pres.reduction.size()) != k)
    throw ValidationError("presentation needs one reduction rule per generator");
  for (const auto& r : pres.reduction)
    if (r.p <= r.q || r.q < 0) throw ValidationError("reduction rule must have p > q >= 0");

  // The torsion-reduced coefficient box, in mixed-radix indexing.
  std::vector<long long> caps(k), strides(k);
  long long box = 1;
  for (int g = 0; g < k; ++g) {
    caps[g] = pres.reduction[g].p;
    strides[g] = box;
    box *= caps[g];
    if (box > budget)
      throw ClosureBudgetExceeded("presentation box of " + std::to_string(box) +
                                  " vectors exceeds the budget");
  }
  const auto index_of = [&](const std::vector<long long>& v) {
    long long idx = 0;
    for (int g = 0; g < k; ++g) idx += v[g] * strides[g];
    return idx;
  };
  const auto vector_of = [&](long long idx) {
    std::vector<long long> v(k);
    for (int g = 0; g < k; ++g) {
      v[g] = idx % caps[g];
      idx /= caps[g];
    }
    return v;
  };

  // Union-find with least-index roots, so class representatives and their
  // order are reproducible.
  std::vector<int> parent(box);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&parent](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  const auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  std::vector<std::pair<std::vector<long long>, std::vector<long long>>> rels;
  for (auto rel : pres.relations) {
    if (static_cast<int>(rel.first.size()) != k || static_cast<int>(rel.second.size()) != k)
      throw ValidationError("relation vector of wrong length");
    reduce_vector(rel.first, pres);
    reduce_vector(rel.second, pres);
    if (rel.first != rel.second) rels.push_back(std::move(rel));
  }

  // Every relation instance available inside the box, in both directions.
  for (long long idx = 0; idx < box; ++idx) {
    const std::vector<long long> v = vector_of(idx);
    for (const auto& [l, r] : rels) {
      if (contains(v, l)) {
        std::vector<long long> w = v;
        for (int g = 0; g < k; ++g) w[g] = w[g] - l[g] + r[g];
        reduce_vector(w, pres);
        unite(static_cast<int>(idx), static_cast<int>(index_of(w)));
      }
      if (contains(v, r)) {
        std::vector<long long> w = v;
        for (int g = 0; g < k; ++g) w[g] = w[g] - r[g] + l[g];
        reduce_vector(w, pres);
        unite(static_cast<int>(idx), static_cast<int>(index_of(w)));
      }
    }
  }

  // Saturate to a congruence: all members of a class must step to a single
  // class when any one generator is added.
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, int> successor;
    for (long long idx = 0; idx < box; ++idx) {
      const int c = find(static_cast<int>(idx));
      std::vector<long long> v = vector_of(idx);
      for (int g = 0; g < k; ++g) {
        ++v[g];
        std::vector<long long> w = v;
        reduce_vector(w, pres);
        --v[g];
        const int s = find(static_cast<int>(index_of(w)));
        const auto [it, fresh] = successor.try_emplace({c, g}, s);
        if (!fresh && find(it->second) != find(s)) {
          unite(it->second, s);
          changed = true;
        }
      }
    }
  }

  std::vector<int> class_index(box, -1);
  std::vector<long long> rep_of_class;
  for (long long idx = 0; idx < box; ++idx) {
    const int root = find(static_cast<int>(idx));
    if (class_index[root] < 0) {
      class_index[root] = static_cast<int>(rep_of_class.size());
      rep_of_class.push_back(root);
    }
    class_index[idx] = class_index[root];
  }
  const int n = static_cast<int>(rep_of_class.size());
  CommMonoidTable result{n, class_index[0], std::vector<int>(static_cast<size_t>(n) * n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<long long> s = vector_of(rep_of_class[i]);
      const std::vector<long long> t = vector_of(rep_of_class[j]);
      for (int g = 0; g < k; ++g) s[g] += t[g];
      reduce_vector(s, pres);
      result.table[static_cast<size_t>(i) * n + j] = class_index[index_of(s)];
    }
  if (class_of_vector) class_of_vector->assign(class_index.begin(), class_index.end());
  if (class_reps_out) {
    class_reps_out->clear();
    for (long long rep : rep_of_class) class_reps_out->push_back(vector_of(rep));
  }
  return result;
}

// --- tensor product -------------------------------------------------------

std::vector<int> generating_set(const CommMonoidTable& m) {
  std::vector<int> gens;
  std::vector<char> generated(m.size, 0);
  const auto close = [&m, &generated, &gens] {
    std::fill(generated.begin(), generated.end(), 0);
    generated[m.unit] = 1;
    std::vector<int> queue{m.unit};
    for (size_t head = 0; head < queue.size(); ++head)
      for (int g : gens) {
        const int s = m.add(queue[head], g);
        if (!generated[s]) {
          generated[s] = 1;
          queue.push_back(s);
        }
      }
  };
  close();
  for (int x = 0; x < m.size; ++x)
    if (!generated[x]) {
      gens.push_back(x);
      close();
    }
  return gens;
}

namespace {

// Canonical expression of each element as a sum of generators (BFS order).
std::vector<std::vector<long long>> canonical_words(const CommMonoidTable& m,
                                                    const std::vector<int>& gens) {
  std::vector<std::vector<long long>> words(m.size);
  std::vector<char> known(m.size, 0);
  words[m.unit] = std::vector<long long>(gens.size(), 0);
  known[m.unit] = 1;
  std::vector<int> queue{m.unit};
  for (size_t head = 0; head < queue.size(); ++head)
    for (size_t g = 0; g < gens.size(); ++g) {
      const int s = m.add(queue[head], gens[g]);
      if (!known[s]) {
        words[s] = words[queue[head]];
        ++words[s][g];
        known[s] = 1;
        queue.push_back(s);
      }
    }
  return words;
}

// First repeat in the sequence unit, x, 2x, ...: yields p*x = q*x with p > q.
ReductionRule torsion_rule(const CommMonoidTable& m, int x) {
  std::vector<int> seen_at(m.size, -1);
  int cur = m.unit;
  for (long long t = 0;; ++t) {
    if (seen_at[cur] >= 0) return ReductionRule{t, seen_at[cur]};
    seen_at[cur] = static_cast<int>(t);
    cur = m.add(cur, x);
  }
}

}  // namespace

CommMonoidTable tensor(const CommMonoidTable& m, const CommMonoidTable& n,
                       std::vector<int>* pairing, long long budget) {
  {
    const Report rm = check_axioms(m), rn = check_axioms(n);
    if (!rm) throw ValidationError("left tensor factor: " + rm.detail);
    if (!rn) throw ValidationError("right tensor factor: " + rn.detail);
  }
  const std::vector<int> gm = generating_set(m);
  const std::vector<int> gn = generating_set(n);
  const auto wm = canonical_words(m, gm);
  const auto wn = canonical_words(n, gn);
  const int k = static_cast<int>(gm.size() * gn.size());

  MonoidPresentation pres;
  pres.generators = k;
  // E(a, b): expansion of the pure tensor a (x) b over the pair generators.
  const auto expand = [&](int a, int b) {
    std::vector<long long> v(k, 0);
    for (size_t i = 0; i < gm.size(); ++i)
      for (size_t j = 0; j < gn.size(); ++j)
        v[i * gn.size() + j] = wm[a][i] * wn[b][j];
    return v;
  };
  const auto vec_sum = [k](const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> r(k);
    for (int i = 0; i < k; ++i) r[i] = a[i] + b[i];
    return r;
  };

  // One torsion rewrite per pair generator; the other factor's torsion joins
  // the relation list.
  const auto rule_less = [](const ReductionRule& a, const ReductionRule& b) {
    return a.p != b.p ? a.p < b.p : a.q < b.q;
  };
  for (size_t i = 0; i < gm.size(); ++i) {
    const ReductionRule rule_m = torsion_rule(m, gm[i]);
    for (size_t j = 0; j < gn.size(); ++j) {
      const ReductionRule rule_n = torsion_rule(n, gn[j]);
      const ReductionRule primary = std::min(rule_m, rule_n, rule_less);
      const ReductionRule secondary = rule_less(rule_m, rule_n) ? rule_n : rule_m;
      pres.reduction.push_back(primary);
      if (secondary.p != primary.p || secondary.q != primary.q) {
        std::vector<long long> l(k, 0), r(k, 0);
        l[i * gn.size() + j] = secondary.p;
        r[i * gn.size() + j] = secondary.q;
        pres.relations.emplace_back(std::move(l), std::move(r));
      }
    }
  }

  // Bilinearity, expanded over the pair generators.
  std::set<std::pair<std::vector<long long>, std::vector<long long>>> rels;
  for (int a = 0; a < m.size; ++a)
    for (int a2 = a; a2 < m.size; ++a2)
      for (int b = 0; b < n.size; ++b)
        rels.insert({expand(m.add(a, a2), b), vec_sum(expand(a, b), expand(a2, b))});
  for (int a = 0; a < m.size; ++a)
    for (int b = 0; b < n.size; ++b)
      for (int b2 = b; b2 < n.size; ++b2)
        rels.insert({expand(a, n.add(b, b2)), vec_sum(expand(a, b), expand(a, b2))});
  for (const auto& rel : rels) pres.relations.push_back(rel);

  std::vector<int> class_of_vector;
  CommMonoidTable q = quotient_monoid(pres, budget, &class_of_vector, nullptr);

  // Certificate: beta(a, b) = [E(a, b)] is bilinear and generates q, and every
  // merge above was sound, so q is the tensor product on the nose.
  std::vector<long long> strides(k);
  long long box = 1;
  for (int g = 0; g < k; ++g) {
    strides[g] = box;
    box *= pres.reduction[g].p;
  }
  const auto class_of = [&](std::vector<long long> v) {
    reduce_vector(v, pres);
    long long idx = 0;
    for (int g = 0; g < k; ++g) idx += v[g] * strides[g];
    return class_of_vector[idx];
  };
  std::vector<int> beta(static_cast<size_t>(m.size) * n.size);
  for (int a = 0; a < m.size; ++a)
    for (int b = 0; b < n.size; ++b)
      beta[static_cast<size_t>(a) * n.size + b] = class_of(expand(a, b));
  for (int a = 0; a < m.size; ++a)
    for (int a2 = 0; a2 < m.size; ++a2)
      for (int b = 0; b < n.size; ++b)
        if (beta[static_cast<size_t>(m.add(a, a2)) * n.size + b] !=
            q.add(beta[static_cast<size_t>(a) * n.size + b],
                  beta[static_cast<size_t>(a2) * n.size + b]))
          throw Error("tensor certificate failed: pairing not left-linear");
  for (int a = 0; a < m.size; ++a)
    for (int b = 0; b < n.size; ++b)
      for (int b2 = 0; b2 < n.size; ++b2)
        if (beta[static_cast<size_t>(a) * n.size + n.add(b, b2)] !=
            q.add(beta[static_cast<size_t>(a) * n.size + b],
                  beta[static_cast<size_t>(a) * n.size + b2]))
          throw Error("tensor certificate failed: pairing not right-linear");
  {
    const Report rq = check_axioms(q);
    if (!rq) throw Error("tensor certificate failed: " + rq.detail);
  }
  if (pairing) *pairing = std::move(beta);
  return q;
}

// --- canonical forms and isomorphism ---------------------------------------

CommMonoidTable canonical_cmon_form(const CommMonoidTable& m) {
  const int n = m.size;
  if (n > 8) throw SizeTooLarge("canonical form capped at size 8");
  std::vector<int> others;
  for (int i = 0; i < n; ++i)
    if (i != m.unit) others.push_back(i);
  std::vector<int> best;
  do {
    std::vector<int> perm(n);  // old index -> new index; unit goes to 0
    perm[m.unit] = 0;
    for (int i = 0; i < n - 1; ++i) perm[others[i]] = i + 1;
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        table[static_cast<size_t>(a) * n + b] = perm[m.add(inv[a], inv[b])];
    if (best.empty() || table < best) best = std::move(table);
  } while (std::next_permutation(others.begin(), others.end()));
  return CommMonoidTable{n, 0, std::move(best)};
}

namespace {

bool iso_extend(const CommMonoidTable& a, const CommMonoidTable& b, std::vector<int>& img,
                std::vector<char>& used, int next) {
  while (next < a.size && img[next] >= 0) ++next;
  if (next == a.size) {
    for (int x = 0; x < a.size; ++x)
      for (int y = 0; y < a.size; ++y)
        if (img[a.add(x, y)] != b.add(img[x], img[y])) return false;
    return true;
  }
  for (int cand = 0; cand < b.size; ++cand) {
    if (used[cand]) continue;
    img[next] = cand;
    used[cand] = 1;
    bool consistent = true;
    for (int x = 0; x < a.size && consistent; ++x) {
      if (img[x] < 0) continue;
      const int sx = a.add(next, x);
      if (img[sx] >= 0 && img[sx] != b.add(cand, img[x])) consistent = false;
    }
    if (consistent && iso_extend(a, b, img, used, next + 1)) return true;
    img[next] = -1;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> cmon_iso(const CommMonoidTable& a, const CommMonoidTable& b) {
  if (a.size != b.size) return std::nullopt;
  std::vector<int> img(a.size, -1);
  std::vector<char> used(b.size, 0);
  img[a.unit] = b.unit;
  used[b.unit] = 1;
  if (iso_extend(a, b, img, used, 0)) return img;
  return std::nullopt;
}

// --- enumeration ------------------------------------------------------------

namespace {

struct CmonSearch {
  int n = 0;
  std::vector<int> table;  // -1 where unset; unit fixed at index 0
  std::vector<std::pair<int, int>> cells;
  std::set<std::vector<int>>* found = nullptr;

  int get(int a, int b) const { return table[static_cast<size_t>(a) * n + b]; }
  void set(int a, int b, int v) {
    table[static_cast<size_t>(a) * n + b] = v;
    table[static_cast<size_t>(b) * n + a] = v;
  }

  bool still_associative() const {
    for (int a = 1; a < n; ++a)
      for (int b = a; b < n; ++b)
        for (int c = b; c < n; ++c) {
          const int ab = get(a, b), bc = get(b, c);
          if (ab >= 0 && bc >= 0) {
            const int l = get(ab, c), r = get(a, bc);
            if (l >= 0 && r >= 0 && l != r) return false;
          }
          const int ac = get(a, c);
          if (ab >= 0 && ac >= 0) {
            const int l = get(ab, c), mid = get(ac, b);
            if (l >= 0 && mid >= 0 && l != mid) return false;
          }
        }
    return true;
  }

  void run(size_t cell) {
    if (!still_associative()) return;
    if (cell == cells.size()) {
      found->insert(canonical_cmon_form(CommMonoidTable{n, 0, table}).table);
      return;
    }
    const auto [a, b] = cells[cell];
    for (int v = 0; v < n; ++v) {
      set(a, b, v);
      run(cell + 1);
    }
    table[static_cast<size_t>(a) * n + b] = -1;
    table[static_cast<size_t>(b) * n + a] = -1;
  }
};

}  // namespace

std::vector<CommMonoidTable> enumerate_cmon(int n) {
  if (n < 1 || n > 5) throw SizeTooLarge("enumerate_cmon supports sizes 1..5");
  std::set<std::vector<int>> found;
  CmonSearch s;
  s.n = n;
  s.table.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) s.set(0, a, a);
  for (int a = 1; a < n; ++a)
    for (int b = a; b < n; ++b) s.cells.emplace_back(a, b);
  s.found = &found;
  s.run(0);
  std::vector<CommMonoidTable> result;
  for (const auto& t : found) result.push_back(CommMonoidTable{n, 0, t});
  return result;
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(n - part, part, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<std::pair<long long, int>> prime_factorization(long long n) {
  std::vector<std::pair<long long, int>> f;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      f.emplace_back(p, e);
    }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

}  // namespace

std::vector<AbGroupTable> enumerate_ab(int n) {
  if (n < 1 || n > 16) throw SizeTooLarge("enumerate_ab supports orders 1..16");
  const auto factors = prime_factorization(n);
  std::vector<std::vector<std::vector<long long>>> per_prime;
  for (const auto& [p, e] : factors) {
    std::vector<std::vector<long long>> choices;
    for (const auto& part : partitions(e)) {
      std::vector<long long> orders;
      for (int a : part) {
        long long q = 1;
        for (int i = 0; i < a; ++i) q *= p;
        orders.push_back(q);
      }
      choices.push_back(std::move(orders));
    }
    per_prime.push_back(std::move(choices));
  }
  std::vector<AbGroupTable> result;
  std::vector<size_t> pick(per_prime.size(), 0);
  while (true) {
    std::vector<long long> orders;
    for (size_t i = 0; i < per_prime.size(); ++i)
      for (long long d : per_prime[i][pick[i]]) orders.push_back(d);
    result.push_back(make_ab_group(direct_product_of_cyclics(orders)));
    size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < per_prime[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return result;
}

long long abelian_group_count(int n) {
  const auto partition_count = [](int e) {
    std::vector<long long> p(e + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= e; ++part)
      for (int total = part; total <= e; ++total) p[total] += p[total - part];
    return p[e];
  };
  long long count = 1;
  for (const auto& [p, e] : prime_factorization(n)) count *= partition_count(e);
  return count;
}

// --- Smith normal form oracle ------------------------------------------------

namespace {

void snf_reduce(std::vector<std::vector<long long>>& a) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  size_t t = 0;
  while (t < rows && t < cols) {
    size_t pr = t, pc = t;
    long long best = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (best == 0 || std::abs(a[i][j]) < std::abs(best))) {
          best = a[i][j];
          pr = i;
          pc = j;
        }
    if (best == 0) break;
    std::swap(a[t], a[pr]);
    for (size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);

    bool remainder = false;
    for (size_t i = t + 1; i < rows; ++i)
      if (a[i][t] != 0) {
        const long long f = a[i][t] / a[t][t];
        for (size_t j = t; j < cols; ++j) a[i][j] -= f * a[t][j];
        if (a[i][t] != 0) remainder = true;
      }
    for (size_t j = t + 1; j < cols; ++j)
      if (a[t][j] != 0) {
        const long long f = a[t][j] / a[t][t];
        for (size_t i = t; i < rows; ++i) a[i][j] -= f * a[i][t];
        if (a[t][j] != 0) remainder = true;
      }
    if (remainder) continue;  // a smaller pivot appeared; restart this step

    bool divides_all = true;
    for (size_t i = t + 1; i < rows && divides_all; ++i)
      for (size_t j = t + 1; j < cols && divides_all; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
          divides_all = false;
        }
    if (!divides_all) continue;
    ++t;
  }
}

}  // namespace

std::vector<long long> invariant_factors(const AbGroupTable& g) {
  const CommMonoidTable& m = g.monoid;
  const int n = m.size;
  std::vector<std::vector<long long>> rel;
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      std::vector<long long> row(n, 0);
      row[x] += 1;
      row[y] += 1;
      row[m.add(x, y)] -= 1;
      rel.push_back(std::move(row));
    }
  {
    std::vector<long long> row(n, 0);
    row[m.unit] = 1;
    rel.push_back(std::move(row));
  }
  snf_reduce(rel);
  std::vector<long long> factors;
  long long product = 1;
  for (size_t t = 0; t < rel.size() && t < static_cast<size_t>(n); ++t) {
    const long long d = std::abs(rel[t][t]);
    product *= (d == 0 ? 0 : d);
    if (d > 1) factors.push_back(d);
  }
  if (product != n) throw Error("Smith normal form does not recover the group order");
  return factors;
}

AbGroupTable tensor_by_invariant_factors(const AbGroupTable& a, const AbGroupTable& b) {
  std::vector<long long> orders;
  for (long long da : invariant_factors(a))
    for (long long db : invariant_factors(b)) {
      const long long g = std::gcd(da, db);
      if (g > 1) orders.push_back(g);
    }
  return make_ab_group(direct_product_of_cyclics(orders));
}

std::vector<long long> primary_decomposition(const std::vector<long long>& orders) {
  std::vector<long long> out;
  for (long long d : orders)
    for (const auto& [p, e] : prime_factorization(d)) {
      long long q = 1;
      for (int i = 0; i < e; ++i) q *= p;
      out.push_back(q);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetMap> monoid_homs(const CommMonoidTable& m, const CommMonoidTable& a) {
  std::vector<SetMap> homs;
  std::vector<int> f(m.size, 0);
  while (true) {
    bool ok = f[m.unit] == a.unit;
    for (int x = 0; x < m.size && ok; ++x)
      for (int y = x; y < m.size && ok; ++y)
        if (f[m.add(x, y)] != a.add(f[x], f[y])) ok = false;
    if (ok) homs.push_back(SetMap{m.size, a.size, f});
    int i = 0;
    for (; i < m.size; ++i) {
      if (++f[i] < a.size) break;
      f[i] = 0;
    }
    if (i == m.size) break;
  }
  return homs;
}

}  // namespace spancat
