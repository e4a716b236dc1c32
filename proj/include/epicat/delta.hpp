#pragma once

#include <compare>
#include <vector>

#include "epicat/numeric.hpp"

namespace epicat {

// Morphism [n] -> [m] of the simplicial category: a non-decreasing map,
// stored by its value list v[0..n] with 0 <= v[i] <= m.
struct DeltaMap {
    int dom = 0;
    int cod = 0;
    std::vector<int> values;

    auto operator<=>(const DeltaMap&) const = default;
};

DeltaMap delta_map(int dom, int cod, std::vector<int> values);
DeltaMap delta_identity(int n);
// compose(g, f) applies f first (shared convention across the project).
DeltaMap compose(const DeltaMap& g, const DeltaMap& f);
// All of Hom([n],[m]) in lexicographic order of value lists.
std::vector<DeltaMap> delta_homs(int n, int m);
// delta_coface(n, i): the injection [n-1] -> [n] skipping i.
DeltaMap delta_coface(int n, int i);
// delta_codegeneracy(n, j): the surjection [n+1] -> [n] repeating j.
DeltaMap delta_codegeneracy(int n, int j);
// Order-k subdivision of f: [k(n+1)-1] -> [k(m+1)-1],
// (i + a(n+1)) |-> f(i) + a(m+1).
DeltaMap subdivide(const DeltaMap& f, int k);

// Morphism n* -> m* of the category of finite intervals (the opposite of
// the simplicial category): w[0..n+1] non-decreasing with w[0] = 0 and
// w[n+1] = m+1.
struct IntervalMap {
    int dom = 0;
    int cod = 0;
    std::vector<int> values;

    auto operator<=>(const IntervalMap&) const = default;
};

IntervalMap interval_map(int dom, int cod, std::vector<int> values);
IntervalMap interval_identity(int n);
IntervalMap compose(const IntervalMap& g, const IntervalMap& f);
std::vector<IntervalMap> interval_homs(int n, int m);

// The duality Hom([n],[m]) ~ Hom(m*, n*): f*(j) = min{x | f(x) >= j},
// read off the preimages of hereditary subsets; empty preimage gives n+1.
IntervalMap dualize(const DeltaMap& f);
DeltaMap dualize(const IntervalMap& w);

// Interval-side faces and degeneracies.
// face(n, i) = d_i^n : n* -> (n-1)*,  j |-> j (j <= i), j-1 (j > i).
IntervalMap face(int n, int i);
// degeneracy(n, j) = s_j^n : n* -> (n+1)*, i |-> i (i <= j), i+1 (i > j);
// the image omits j+1.
IntervalMap degeneracy(int n, int j);

// Interval-side subdivision Sd*_k, kept in the normal form
// Sd*_k(n*) = (k(n+1)-1)* with the index bijection (a, i) |-> i + a(n+1).
IntervalMap subdivide_interval(const IntervalMap& g, int k);

// Canonical factorization of phi : n* -> Sd*_k(m*) as Sd*_k(alpha) . beta
// where alpha : r* -> m* restricts to the increasing injection onto the
// interior points hit by phi and pi_r . beta is surjective.
struct SubdivisionFactorization {
    int r = 0;
    IntervalMap alpha;  // r* -> m*
    IntervalMap beta;   // n* -> (k(r+1)-1)*
};
SubdivisionFactorization factor_through_subdivision(const IntervalMap& phi, int k);

// Epi-mono factorization of an interval map into face/degeneracy
// generators; tokens are listed outermost first, so
// w = gen(tok[0]) . gen(tok[1]) . ... . gen(tok.back()).
struct IntervalGenerator {
    bool is_degeneracy = false;
    int level = 0;  // the n of d_i^n or s_j^n
    int index = 0;
};
std::vector<IntervalGenerator> generator_factorization(const IntervalMap& w);
IntervalMap generator_map(const IntervalGenerator& g);

}  // namespace epicat
