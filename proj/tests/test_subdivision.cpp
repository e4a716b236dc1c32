#include <doctest.h>

#include <set>

#include "epicat/subdivision.hpp"
#include "oracles.hpp"

using namespace epicat;

TEST_CASE("cells of the order-k triangulation") {
    {
        // k = 1: the single cell is the standard simplex
        auto s = sigma_set(2, 1);
        REQUIRE(s.size() == 1);
        AffineCell c = cell_of(s[0]);
        CHECK(c.sign == 1);
        CHECK(c.volume == Rat(1, 2));
        CHECK(c.vertices[0].coords == std::vector<Rat>{Rat(1), Rat(1)});
        CHECK(c.vertices[1].coords == std::vector<Rat>{Rat(0), Rat(1)});
        CHECK(c.vertices[2].coords == std::vector<Rat>{Rat(0), Rat(0)});
    }
    {
        // n = 1, k = 2: the two segments [0, 1/2] and [1/2, 1]
        auto s = sigma_set(1, 2);
        REQUIRE(s.size() == 2);
        AffineCell left = cell_of(s[0]);
        AffineCell right = cell_of(s[1]);
        std::set<Rat> lset = {left.vertices[0].coords[0], left.vertices[1].coords[0]};
        std::set<Rat> rset = {right.vertices[0].coords[0], right.vertices[1].coords[0]};
        CHECK(lset == std::set<Rat>{Rat(0), Rat(1, 2)});
        CHECK(rset == std::set<Rat>{Rat(1, 2), Rat(1)});
    }
    // volume k^{-n}/n! and orientation = signature
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            Rat kn = 1;
            for (int i = 0; i < n; ++i) kn *= Rat(1, k);
            for (const auto& a : sigma_set(n, k)) {
                AffineCell c = cell_of(a);
                CHECK(c.volume == kn / Rat(oracle::factorial(n)));
                CHECK(c.sign == signature(perm_of(a)));
            }
        }
}

TEST_CASE("faces of cells") {
    // n = 1, k = 2, left cell: the faces are the endpoints 1/2 and 0
    auto s = sigma_set(1, 2);
    CellFace f0 = face_of_cell(s[0], 0);
    CellFace f1 = face_of_cell(s[0], 1);
    std::set<Rat> endpoints = {f0.barycenter[0], f1.barycenter[0]};
    CHECK(endpoints == std::set<Rat>{Rat(0), Rat(1, 2)});
    CHECK(!f0.degenerate);
    CHECK(!f1.degenerate);

    // each cell has n+1 faces with distinct barycenters; non-degenerate
    // faces are determined by their barycenters
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            std::map<std::vector<Rat>, std::set<IntervalMap>> seen;
            for (const auto& a : sigma_set(n, k)) {
                std::set<std::vector<Rat>> cell_faces;
                for (int i = 0; i <= n; ++i) {
                    CellFace f = face_of_cell(a, i);
                    cell_faces.insert(f.barycenter);
                    if (!f.degenerate) seen[f.barycenter].insert(f.map);
                }
                CHECK(cell_faces.size() == (size_t)n + 1);
            }
            for (const auto& [bary, maps] : seen) CHECK(maps.size() == 1);
        }
}

TEST_CASE("cells have pairwise distinct interior samples") {
    // the cells cover the simplex with equal volumes; distinct cells are
    // separated by their exact barycenters
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            std::set<std::vector<Rat>> centers;
            for (const auto& a : sigma_set(n, k)) {
                AffineCell c = cell_of(a);
                std::vector<Rat> bary(n, Rat(0));
                for (const auto& v : c.vertices)
                    for (int j = 0; j < n; ++j) bary[(size_t)j] += v.coords[(size_t)j];
                for (int j = 0; j < n; ++j) bary[(size_t)j] /= Rat(n + 1);
                centers.insert(bary);
            }
            long long kn = 1;
            for (int i = 0; i < n; ++i) kn *= k;
            CHECK((long long)centers.size() == kn);
        }
}

TEST_CASE("triangulation reports") {
    {
        TriangulationReport t = verify_triangulation(1, 2);
        CHECK(t.volume_ok);
        CHECK(t.interior_pairing_ok);
        CHECK(t.boundary_count == 2);
        CHECK(t.boundary_count_ok);
        CHECK(t.term_accounting_ok);
        CHECK(t.ok());
    }
    {
        TriangulationReport t = verify_triangulation(2, 2);
        CHECK(t.boundary_count == 6);
        CHECK(t.ok());
    }
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            TriangulationReport t = verify_triangulation(n, k);
            INFO("n=", n, " k=", k);
            CHECK(t.ok());
            CHECK(t.degenerate_count == 0);
        }
}
