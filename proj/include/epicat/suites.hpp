#pragma once

#include "epicat/report.hpp"

namespace epicat {

// Ring identities of the convolution ring (Sigma counts, descent formula,
// Lambda multiplicativity, b and B commutations, the product bijection of
// Sigma sets, the B_0 conjugation bijection, Gamma/Delta factorizations).
Report run_identity_suite(int n_max, int k_max, int l_max, int jobs);

// Presentation relations of the epicyclic category plus the module functor
// and crossed-product cross-checks.
Report run_presentation_suite(int n_max, int k_max, int jobs);

// Exact geometry of the order-k triangulations.
Report run_triangulation_suite(int n_max, int k_max, int jobs);

// Oriented groupoids and the point machinery over rational data.
Report run_groupoid_suite(int n_max, int k_max, int jobs);

}  // namespace epicat
