#pragma once

#include <compare>
#include <string>
#include <vector>

#include "epicat/delta.hpp"

namespace epicat {

// Morphism of the epicyclic category, represented by the unique normalized
// value list of a non-decreasing map Z -> Z with f(x + n+1) = f(x) + k(m+1).
// Normalization: f[0] lies in [0, m]; morphisms of the cyclic category are
// exactly the module-1 maps.
struct EpicyclicMap {
    int dom = 0;     // object n
    int cod = 0;     // object m
    int module = 1;  // k >= 1
    std::vector<int> values;  // f[0..n]

    auto operator<=>(const EpicyclicMap&) const = default;

    // Periodic evaluation at any integer.
    long long operator()(long long x) const {
        long long q = floor_div(x, dom + 1);
        return values[(size_t)(x - q * (dom + 1))] + q * (long long)module * (cod + 1);
    }
};

// Validates and normalizes; throws std::invalid_argument on bad data.
EpicyclicMap epicyclic_map(int dom, int cod, int module, std::vector<int> values);
EpicyclicMap epicyclic_identity(int n);
EpicyclicMap compose(const EpicyclicMap& g, const EpicyclicMap& f);

// Cyclic generator x |-> x+1 of Aut(n).
EpicyclicMap tau(int n);
// Its inverse x |-> x-1 (= tau^n); the generator for which the printed
// tau-sigma/tau-delta relations of the presentation hold verbatim.
EpicyclicMap tau_inverse(int n);
EpicyclicMap power(const EpicyclicMap& f, int e);
// All n+1 module-1 automorphisms of the object n.
std::vector<EpicyclicMap> cyclic_automorphisms(int n);

// Id_n^k : (k(n+1)-1) -> n, the identity map of Z with module k.
EpicyclicMap id_n_k(int n, int k);
// iota_n(k) : n -> n, x |-> kx, the module-k section endomorphism.
EpicyclicMap iota(int n, int k);
// B_0 : n -> n+1, i + a(n+1) |-> 1 + i + a(n+2).
EpicyclicMap b0_map(int n);
// j_n : 0 -> n, x |-> (n+1)x, the unique interval map 0* -> n* embedded.
EpicyclicMap j_map(int n);

// Faithful embeddings of the interval category (module 1; satisfies
// g~ . j_n = j_m) and of the simplicial category (covariant lift).
EpicyclicMap embed(const IntervalMap& g);
EpicyclicMap embed(const DeltaMap& f);

// Underlying map of pointed sets {0..n} -> {0..m}: residues mod m+1.
std::vector<int> finstar(const EpicyclicMap& f);

// Hom(n, m) at fixed module k, lexicographic in normalized values.
std::vector<EpicyclicMap> epicyclic_homs(int n, int m, int k);

// Morphism pi_m^k . alpha of the crossed product of the interval category
// by the subdivisions; alpha's codomain is the normal form of Sd*_k(m*).
struct CrossedMorphism {
    int module = 1;
    int cod_base = 0;       // m
    IntervalMap alpha;      // dom* -> (k(m+1)-1)*

    auto operator<=>(const CrossedMorphism&) const = default;
};

CrossedMorphism crossed_identity(int n);
CrossedMorphism crossed_morphism(int module, int cod_base, IntervalMap alpha);
// (pi_m^k . beta) . (pi_n^l . alpha) = pi_m^{kl} . (Sd*_l(beta) . alpha)
CrossedMorphism compose(const CrossedMorphism& b, const CrossedMorphism& a);
EpicyclicMap to_epicyclic(const CrossedMorphism& c);

// psi_{k,j} : 1 -> 1 of module k, 2l |-> 2kl, 2l+1 |-> 2j+1 + 2kl.
EpicyclicMap psi_kj(int k, int j);

// JSON round-trip: {"dom":n,"cod":m,"mod":k,"values":[...]}.
std::string epicyclic_to_json(const EpicyclicMap& f);
EpicyclicMap epicyclic_from_json(const std::string& text);

// One instance of a presentation relation, checked exactly.
struct RelationCheck {
    std::string relation;
    int n = -1, k = -1, j = -1;
    bool ok = false;
};

// All relation instances of the presentation within the given bounds:
// (1) Id_n^1 = id and Id_n^l . Id_{l(n+1)-1}^k = Id_n^{kl},
// (2) a . Id_m^k = Id_n^k . Sd_k(a) for a in Hom([m],[n]),
// (3) tau_n . Id_n^k = Id_n^k . tau_{k(n+1)-1},
// the tau-sigma/tau-delta relations, tau_n^{n+1} = id, and the simplicial
// identities among cofaces and codegeneracies.
std::vector<RelationCheck> presentation_checks(int n_max, int k_max);

}  // namespace epicat
