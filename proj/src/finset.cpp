#include "spancat/finset.hpp"

#include <string>

namespace spancat {

SetMap identity_map(int n) {
  SetMap f{n, n, std::vector<int>(n)};
  for (int i = 0; i < n; ++i) f.table[i] = i;
  return f;
}

SetMap constant_map(int dom, int cod, int value) {
  return SetMap{dom, cod, std::vector<int>(dom, value)};
}

void validate_map(const SetMap& f) {
  if (f.dom < 0 || f.cod < 0)
    throw ValidationError("set map with negative domain or codomain size");
  if (static_cast<int>(f.table.size()) != f.dom)
    throw ValidationError("set map table length " + std::to_string(f.table.size()) +
                          " does not match domain size " + std::to_string(f.dom));
  for (int v : f.table)
    if (v < 0 || v >= f.cod)
      throw ValidationError("set map entry " + std::to_string(v) +
                            " outside codomain of size " + std::to_string(f.cod));
}

SetMap compose_maps(const SetMap& g, const SetMap& f) {
  if (f.cod != g.dom)
    throw CompositionMismatch("cannot compose: codomain " + std::to_string(f.cod) +
                              " != domain " + std::to_string(g.dom));
  SetMap r{f.dom, g.cod, std::vector<int>(f.dom)};
  for (int i = 0; i < f.dom; ++i) r.table[i] = g.table[f.table[i]];
  return r;
}

Product product(FinSet x, FinSet y) {
  const int n = x.size * y.size;
  Product r{FinSet{n}, SetMap{n, x.size, {}}, SetMap{n, y.size, {}}};
  r.p1.table.reserve(n);
  r.p2.table.reserve(n);
  for (int a = 0; a < x.size; ++a)
    for (int b = 0; b < y.size; ++b) {
      r.p1.table.push_back(a);
      r.p2.table.push_back(b);
    }
  return r;
}

Coproduct coproduct(FinSet x, FinSet y) {
  const int n = x.size + y.size;
  Coproduct r{FinSet{n}, SetMap{x.size, n, {}}, SetMap{y.size, n, {}}};
  for (int a = 0; a < x.size; ++a) r.i1.table.push_back(a);
  for (int b = 0; b < y.size; ++b) r.i2.table.push_back(x.size + b);
  return r;
}

Pullback pullback(const SetMap& f, const SetMap& g) {
  if (f.cod != g.cod)
    throw CompositionMismatch("pullback needs equal codomains, got " +
                              std::to_string(f.cod) + " and " + std::to_string(g.cod));
  Pullback r;
  r.p1 = SetMap{0, f.dom, {}};
  r.p2 = SetMap{0, g.dom, {}};
  for (int a = 0; a < f.dom; ++a)
    for (int b = 0; b < g.dom; ++b)
      if (f.table[a] == g.table[b]) {
        r.p1.table.push_back(a);
        r.p2.table.push_back(b);
      }
  r.object.size = static_cast<int>(r.p1.table.size());
  r.p1.dom = r.p2.dom = r.object.size;
  return r;
}

}  // namespace spancat
