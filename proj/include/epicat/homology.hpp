#pragma once

#include <map>
#include <string>
#include <vector>

#include "epicat/epicyclic.hpp"
#include "epicat/matrix.hpp"

namespace epicat {

enum class Coeff { Z, Q };

// Commutative ring data: rank, unit vector and structure tensor
// e_i e_j = sum_l mult[i][j][l] e_l. Commutativity, associativity and the
// unit law are checked at construction.
struct CommRing {
    int rank = 1;
    Coeff coeff = Coeff::Z;
    std::vector<Rat> unit;
    std::vector<std::vector<std::vector<Rat>>> mult;
};

CommRing comm_ring(int rank, Coeff coeff, std::vector<Rat> unit,
                   std::vector<std::vector<std::vector<Rat>>> mult);
CommRing ring_ground(Coeff c);         // the base ring itself (rank 1)
CommRing ring_dual_numbers(Coeff c);   // k[e]/(e^2)
CommRing ring_split_pair();            // Q x Q

std::string ring_to_json(const CommRing& R);
CommRing ring_from_json(const std::string& text);

// Finite-rank module over the epicyclic category up to a degree cap:
// ranks plus generator matrices (faces, degeneracies, cyclic operators and
// the epicyclic table), stored sparsely since top degrees can be large.
struct CyclicModulePresentation {
    Coeff coeff = Coeff::Z;
    int cap = 0;                                   // N
    std::vector<int> rank;                         // rank[0..N]
    std::vector<std::vector<SpMat>> face;          // face[n][i] : E(n) -> E(n-1)
    std::vector<std::vector<SpMat>> degeneracy;    // degeneracy[n][j] : E(n-1) -> E(n)
    std::vector<SpMat> cyclic;                     // cyclic[n] : E(n) -> E(n)
    std::map<std::pair<int, int>, SpMat> epi;      // (n, k) -> E(k(n+1)-1) -> E(n)

    const SpMat& epi_at(int n, int k) const;
    bool has_epi(int n, int k) const { return epi.count({n, k}) > 0; }
};

// The module R^# of a commutative ring: E(n) = R^{(n+1)-fold tensor}, all
// generator matrices induced by the underlying maps of finite sets (empty
// fibers receive the unit). The epi table is filled for every k with
// k(n+1)-1 <= N. Throws capacity_error when rank(N) would exceed the cap.
CyclicModulePresentation ring_module(const CommRing& R, int N, long long rank_cap = 4096);

// E(f) for an arbitrary epicyclic morphism, through the canonical
// factorization f = Id^k . tau^a . (interval part) into stored generators.
SpMat evaluate(const CyclicModulePresentation& P, const EpicyclicMap& f);

// Exact matrix check of the presentation relations up to the cap
// (simplicial identities, the cyclic tau-delta/tau-sigma relations, the
// epicyclic relations), plus generator-pair functoriality against the
// canonical evaluator. Throws std::runtime_error on the first failure.
void validate(const CyclicModulePresentation& P, int n_limit = -1, int k_limit = 3);

// Tensor with the rank-one representation k |-> k^j of the module functor;
// scales epi[n][k] by k^j. Negative j needs rational coefficients.
CyclicModulePresentation twist(const CyclicModulePresentation& P, int j);

// Normalized chain groups C_n = E(n)/sum Im(s_j) with an explicit
// projection/section pair per degree, and the induced differentials.
struct NormalizedComplex {
    int top = 0;
    std::vector<int> dim;    // dim C_n
    std::vector<QMat> proj;  // C_n <- E(n)
    std::vector<QMat> sect;  // E(n) <- C_n
    std::vector<QMat> bbar;  // C_n -> C_{n-1} (index n >= 1)
    std::vector<QMat> Bbar;  // C_n -> C_{n+1} (index n < top)
};
NormalizedComplex normalized_complex(const CyclicModulePresentation& P, int top);

// Components m = n, n-2, ... of the total degree -n part of the bicomplex.
std::vector<int> total_components(int n);
// Total differential T_{-n} -> T_{-n+1} (b on each component, B where the
// target column exists).
QMat total_differential(const NormalizedComplex& nc, int n);

struct HomologyResult {
    int degree = 0;
    Coeff coeff = Coeff::Z;
    long long free_rank = 0;       // free rank over Z, dimension over Q
    std::vector<Int> torsion;      // invariant factors > 1, divisibility order
    QMat cycles;                   // representing cycles (columns) over Q
};
// Cyclic homology in degree n; requires n+1 <= cap.
HomologyResult hc(const CyclicModulePresentation& P, int n);

// theta(k) on the component C_m of total degree -n_total:
// k^{(n_total-m)/2} times the induced action of Lambda_m^k.
QMat theta_matrix(const CyclicModulePresentation& P, const NormalizedComplex& nc, int k,
                  int n_total, int m);
// Block-diagonal theta(k) on the whole of T_{-n}; asserts the chain-map
// property against the total differential.
QMat theta_total(const CyclicModulePresentation& P, const NormalizedComplex& nc, int k, int n);

struct WeightReport {
    std::vector<int> weights;  // exponent multiset, ascending
    bool complete = false;     // eigenspaces exhaust HC_n (x) Q
    std::string note;
};
// Eigenvalue analysis of theta(k) on HC_n over the rationals; integral
// weights are sought in [0, n] first, then in an extended window, and a
// characteristic-polynomial report covers anything left.
WeightReport lambda_weights(const CyclicModulePresentation& P, int k, int n);

// Verifies S theta(k) = k theta(k) S in every total degree <= n_max, where
// S is the shift dropping the top column.
bool s_operator_check(const CyclicModulePresentation& P, int k, int n_max);

}  // namespace epicat
