#pragma once

#include <map>
#include <vector>

#include "epicat/epicyclic.hpp"

namespace epicat {

// Element of the convolution ring of integer combinations of epicyclic
// morphisms. The product extends composition bilinearly; incomposable
// pairs contribute zero. Keys are normalized, so cancellation is exact.
struct FormalSum {
    std::map<EpicyclicMap, long long> terms;

    static FormalSum zero() { return {}; }
    static FormalSum of(const EpicyclicMap& f, long long c = 1);

    bool is_zero() const { return terms.empty(); }
    size_t term_count() const { return terms.size(); }

    FormalSum& add(const EpicyclicMap& f, long long c);
    FormalSum operator+(const FormalSum& o) const;
    FormalSum operator-(const FormalSum& o) const;
    FormalSum operator*(long long c) const;
    FormalSum operator*(const FormalSum& o) const;  // convolution product
    bool operator==(const FormalSum& o) const = default;
};

// Element of Sigma_n^k: an interval map n* -> Sd*_k(n*) whose residue map
// is a permutation, together with its parametrizing label
// f : {1..n} -> {0..k-1} (range = {j + (n+1)f(j)} plus endpoints).
struct SigmaElement {
    int n = 0;
    int k = 1;
    IntervalMap map;
    std::vector<int> label;  // label[j-1] = f(j)
};

// All k^n elements, enumerated by label in lexicographic order.
std::vector<SigmaElement> sigma_set(int n, int k);

// The residue permutation of {1..n} (1-based value list); throws if the
// residues fail to be a permutation.
std::vector<int> perm_of(const SigmaElement& a);

// Number of descents of sigma: positions j < n with sigma(j+1) < sigma(j).
int descent_number(const std::vector<int>& sigma);

// Number of lifts of sigma to Sigma_n^k: C(n+v, n) with v = k-1-d,
// and 0 when d >= k.
Int descent_count(const std::vector<int>& sigma, int n, int k);

// Lambda_n^k = sum of eps(Perm(alpha)) Id_n^k . alpha over Sigma_n^k.
FormalSum lambda_element(int n, int k);

// Hochschild boundary b_n = sum (-1)^i d_i^n, embedded.
FormalSum hochschild_b(int n);

// A = sum of signed cyclic automorphisms of n; B(n) = B_0 . A.
FormalSum connes_A(int n);
FormalSum connes_B(int n);

// The unique alpha' in Delta_n^k with alpha . B_0 = Sd_k(B_0) . alpha',
// for alpha in Sigma_{n+1}^k.
DeltaMap b0_conjugate(const SigmaElement& a);

// Exhaustive enumerations of Gamma_n^k (module-1 maps n -> Psi_k(n) whose
// composite with Id_n^k has bijective residues) and Delta_n^k (same filter
// inside Hom_Delta([n], Sd_k([n]))).
struct GammaDeltaSets {
    std::vector<EpicyclicMap> gamma;
    std::vector<DeltaMap> delta;
};
GammaDeltaSets gamma_delta_sets(int n, int k);

}  // namespace epicat
