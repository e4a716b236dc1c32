#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epicat/epicyclic.hpp"
#include "epicat/numeric.hpp"

namespace epicat {

// Element (source, shift) of the oriented groupoid (Z/(m+1)Z) x| Z;
// positive exactly when the shift is non-negative.  The composite shift is
// written additively (the group H = Z is additive).
struct GroupoidElement {
    int m = 0;
    int source = 0;  // in [0, m]
    long long shift = 0;

    int range() const {
        long long r = (source + shift) % (m + 1);
        return (int)(r < 0 ? r + (m + 1) : r);
    }
    bool positive() const { return shift >= 0; }
    bool unit() const { return shift == 0; }

    auto operator<=>(const GroupoidElement&) const = default;
};

GroupoidElement g_unit(int m, int x);
GroupoidElement g_element(int m, int source, long long shift);
// compose(a, b) with a.source = b.range(): (b.source, a.shift + b.shift).
GroupoidElement compose(const GroupoidElement& a, const GroupoidElement& b);
GroupoidElement inverse(const GroupoidElement& a);

// A rank-one ordered group H = step * Z acting by translation on the set
// X = { orbit rep + step * Z }, with finitely many orbit representatives
// inside one fundamental domain [orbits[0], orbits[0] + step).
// Desk-scale model of a point: H = (1/N)Z corresponds to step = 1/N.
struct RationalArchSet {
    Rat step;                 // generator of H_+
    std::vector<Rat> orbits;  // strictly increasing, span < step

    int orbit_count() const { return (int)orbits.size(); }
};

RationalArchSet arch_set(Rat step, std::vector<Rat> orbits);
RationalArchSet arch_from_denominator(long long N, std::vector<Rat> orbits);
// The standard object g(m): X = Z acted on by (m+1)Z.
RationalArchSet gm_model(int m);
// All points of X inside [lo, hi], sorted.
std::vector<Rat> points_in(const RationalArchSet& X, const Rat& lo, const Rat& hi);
// Orbit index of a point of X; throws if the value is not in X.
int orbit_of(const RationalArchSet& X, const Rat& x);
bool in_set(const RationalArchSet& X, const Rat& x);

std::string arch_to_json(const RationalArchSet& X);
RationalArchSet arch_from_json(const std::string& text);

// Element of F(0): an orbit with a positive height.
struct ArchPoint {
    int orbit_index = 0;
    Rat height;
};
std::string point_to_json(const ArchPoint& p);
ArchPoint point_from_json(const std::string& text);

// Morphism g(n) -> G(X, H) as a normalized tuple x_0 <= ... <= x_{n+1}
// with x_{n+1} = x_0 + h, h in H_+ nonzero, x_0 a stored orbit
// representative.
struct GroupoidHom {
    int n = 0;
    std::vector<Rat> tuple;  // length n+2

    Rat height() const { return tuple.back() - tuple.front(); }
    bool operator==(const GroupoidHom&) const = default;
};

GroupoidHom groupoid_hom(const RationalArchSet& X, std::vector<Rat> tuple);
// Module of the hom: height / step.
Int hom_module(const RationalArchSet& X, const GroupoidHom& phi);
// The generator images phi(alpha(n, i)) as elements of G(X, H), encoded in
// g(m)-coordinates when X is the gm model.
GroupoidElement generator_image(const GroupoidHom& phi, int m, int i);

// Contravariant action: for gamma : n -> m and z in F(m), the element
// F(gamma) z in F(n) obtained by precomposition of the defining map Z -> X.
GroupoidHom act(const RationalArchSet& X, const GroupoidHom& z, const EpicyclicMap& gamma);

// All homs of height <= bound, ordered by (height, base orbit, chain).
std::vector<GroupoidHom> enum_homs(const RationalArchSet& X, int n, const Rat& bound);

// Tuple homs into the gm model <-> epicyclic morphisms n -> m.
EpicyclicMap tuple_to_epicyclic(const GroupoidHom& phi, int m);
GroupoidHom epicyclic_to_tuple(const EpicyclicMap& f);

// Factorization phi = G(f) . g with f an injective arc morphism r -> X
// listing r+1 points of one period window and g a tuple hom into g(r).
// Canonical representative: f(0) is the smallest image representative in
// the fundamental domain.
struct Factorization {
    int r = 0;
    std::vector<Rat> arc;  // f(0..r), strictly increasing, window < step
    GroupoidHom g;         // into g(r), integral entries
};
Factorization factorize(const RationalArchSet& X, const GroupoidHom& phi);
// G(f) . g for an arc morphism given by its point list.
GroupoidHom apply_arc(const RationalArchSet& X, const std::vector<Rat>& arc,
                      const GroupoidHom& g);

// F_x(n*): all chains x_0 <= x_1 <= ... <= x_{n+1} = x_0 + h in X.
std::vector<GroupoidHom> interval_chains(const RationalArchSet& X, const ArchPoint& x, int n);

// The canonical surjection pi : F(0) -> H_+ and its equivariance.
struct ModPointReport {
    Rat pi_value;
    bool equivariance_ok = false;
    bool surjective_ok = false;
};
ModPointReport mod_point(const RationalArchSet& X, const ArchPoint& x, int k_max);
// A witness z in F(1) with F(delta_0) z = x and F(delta_1) z = x' for two
// points of equal height.
std::optional<GroupoidHom> equivalence_witness(const RationalArchSet& X, const ArchPoint& x,
                                               const ArchPoint& xp);

// Elementwise comparison of Sd*_k(F_x) (concatenation model) with
// F_{F(iota(k)) x}, including the defining formula
// omega_k(z, rho) = F(Id_m^k . rho) z on every chain at level n.
struct OmegaReport {
    bool point_iso_ok = false;
    bool chains_match = false;
    bool formula_ok = false;
    long long chain_count = 0;
    bool ok() const { return point_iso_ok && chains_match && formula_ok; }
};
OmegaReport omega_k_check(const RationalArchSet& X, const ArchPoint& x, int k, int n);

// Truncated reconstruction of the ordered set J and of the graph of the
// height translation from the intervals I_{F(iota(k)) x}, k | L.
struct Reconstruction {
    std::vector<Rat> J;
    std::vector<std::pair<Rat, Rat>> h_graph;
    bool matches_ground_truth = false;
    bool nesting_ok = false;
};
Reconstruction reconstruct(const RationalArchSet& X, const ArchPoint& x, int level);

// The arch set of H = (1/N)Z acting through x |-> x + m h on itself,
// rescaled to denominator mN: orbits i/(mN), i = 0..m-1.
RationalArchSet extension_of_scalars(long long N, int m);

}  // namespace epicat
