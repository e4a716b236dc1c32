#pragma once

#include <vector>

#include "epicat/lambda_ring.hpp"
#include "epicat/numeric.hpp"

namespace epicat {

// Point of the standard simplex {0 <= x_1 <= ... <= x_n <= 1}, exact.
struct SimplexPoint {
    int n = 0;
    std::vector<Rat> coords;  // x_1..x_n

    bool operator==(const SimplexPoint&) const = default;
};

// Cell of the order-k triangulation attached to a Sigma element:
// the image of the standard simplex under x |-> Sd*_k(x) . alpha.
struct AffineCell {
    SigmaElement alpha;
    std::vector<SimplexPoint> vertices;  // images of the standard vertices
    int sign = 1;                        // orientation, det sign of the map
    Rat volume;                          // exact volume
};

AffineCell cell_of(const SigmaElement& alpha);

// Face data of a cell: the composed map beta = Sd*_k(d_i^n) . alpha with
// its exact barycenter (which determines beta when non-degenerate), the
// boundary test, and the induced orientation sign(alpha) * (-1)^i.
struct CellFace {
    IntervalMap map;  // n* -> Sd*_k((n-1)*)
    std::vector<Rat> barycenter;
    bool degenerate = false;
    bool boundary = false;
    int sign = 1;
};

CellFace face_of_cell(const SigmaElement& alpha, int i);

struct TriangulationReport {
    int n = 0, k = 0;
    bool volume_ok = false;            // exact volume sum = 1/n!
    bool orientation_ok = false;       // cell sign = signature of the permutation
    bool interior_pairing_ok = false;  // interior faces paired with opposite signs
    long long boundary_count = 0;      // expected (n+1) k^{n-1}
    bool boundary_count_ok = false;
    long long degenerate_count = 0;
    bool term_accounting_ok = false;   // signed faces = b/Lambda commutator terms
    bool barycenters_distinct_ok = false;
    bool ok() const {
        return volume_ok && orientation_ok && interior_pairing_ok && boundary_count_ok &&
               term_accounting_ok && barycenters_distinct_ok;
    }
};

TriangulationReport verify_triangulation(int n, int k);

}  // namespace epicat
