#pragma once

#include <vector>

#include "spancat/errors.hpp"

namespace spancat {

// A finite set: elements are 0..size-1.
struct FinSet {
  int size = 0;

  friend bool operator==(const FinSet&, const FinSet&) = default;
};

// A function between finite sets, as a lookup table.
struct SetMap {
  int dom = 0;
  int cod = 0;
  std::vector<int> table;  // length dom, entries in 0..cod-1

  int operator()(int x) const { return table[x]; }

  friend bool operator==(const SetMap&, const SetMap&) = default;
};

SetMap identity_map(int n);
SetMap constant_map(int dom, int cod, int value);

// Throws ValidationError if the table is out of range or has the wrong length.
void validate_map(const SetMap& f);

// g after f.  Throws CompositionMismatch unless f.cod == g.dom.
SetMap compose_maps(const SetMap& g, const SetMap& f);

struct Product {
  FinSet object;
  SetMap p1, p2;  // projections
};

struct Coproduct {
  FinSet object;
  SetMap i1, i2;  // injections
};

struct Pullback {
  FinSet object;
  SetMap p1, p2;  // legs to dom(f) and dom(g)
};

// Cartesian product; pairing order is lexicographic, (x, y) |-> x*|Y| + y.
Product product(FinSet x, FinSet y);

// Disjoint union; X occupies indices 0..|X|-1.
Coproduct coproduct(FinSet x, FinSet y);

// { (a, b) : f(a) = g(b) } enumerated lexicographically in (a, b).
// The square commutes: f . p1 == g . p2.
Pullback pullback(const SetMap& f, const SetMap& g);

}  // namespace spancat
