#include <doctest.h>

#include <random>

#include "epicat/matrix.hpp"
#include "oracles.hpp"

using namespace epicat;

namespace {

IMat make(int r, int c, std::initializer_list<long long> vals) {
    IMat m(r, c);
    auto it = vals.begin();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = *it++;
    return m;
}

}  // namespace

TEST_CASE("smith normal form on pinned cases") {
    {
        IMat z(3, 2);
        SmithForm s = smith_normal_form(z);
        CHECK(s.rank == 0);
        CHECK(is_zero(s.D));
        CHECK(s.U == IMat::identity(3));
        CHECK(s.V == IMat::identity(2));
    }
    {
        IMat a = make(2, 2, {2, 4, 6, 8});
        SmithForm s = smith_normal_form(a);
        REQUIRE(s.invariants.size() == 2);
        CHECK(s.invariants[0] == 2);
        CHECK(s.invariants[1] == 4);
        CHECK(mul(mul(s.U, a), s.V) == s.D);
    }
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937 rng(20240911);
    std::uniform_int_distribution<int> dim(1, 5), val(-9, 9);
    for (int trial = 0; trial < 60; ++trial) {
        IMat a(dim(rng), dim(rng));
        for (auto& x : a.a) x = val(rng);
        SmithForm s = smith_normal_form(a);
        CHECK(mul(mul(s.U, a), s.V) == s.D);
        CHECK(mul(s.U, s.Uinv) == IMat::identity(a.rows));
        CHECK(mul(s.V, s.Vinv) == IMat::identity(a.cols));
        Int du = determinant(s.U);
        Int dv = determinant(s.V);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        for (size_t i = 0; i + 1 < s.invariants.size(); ++i)
            CHECK(s.invariants[i + 1] % s.invariants[i] == 0);
        for (int i = 0; i < std::min(a.rows, a.cols); ++i)
            for (int j = 0; j < std::min(a.rows, a.cols); ++j)
                if (i != j) CHECK(s.D.at(i, j) == 0);
        // against the minor-gcd oracle
        auto inv = oracle::minor_invariants(a);
        REQUIRE(inv.size() == s.invariants.size());
        for (size_t i = 0; i < inv.size(); ++i) CHECK(abs(inv[i]) == s.invariants[i]);
    }
}

TEST_CASE("kernel lattice and integral solve") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 4), val(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        IMat a(dim(rng), dim(rng));
        for (auto& x : a.a) x = val(rng);
        IMat k = kernel_lattice(a);
        CHECK(is_zero(mul(a, k)));
        IMat k2 = oracle::hnf_kernel(a);
        CHECK(k2.cols == k.cols);
        if (k.cols > 0) {
            // each oracle kernel vector is an integral combination of ours
            IMat x = solve_integral(k, k2);
            CHECK(mul(k, x) == k2);
        }
    }
}

TEST_CASE("rational elimination") {
    QMat a(2, 3);
    a.at(0, 0) = 1;
    a.at(0, 1) = 2;
    a.at(0, 2) = 3;
    a.at(1, 0) = 2;
    a.at(1, 1) = 4;
    a.at(1, 2) = 6;
    CHECK(rank_of(a) == 1);
    QMat k = kernel_of(a);
    CHECK(k.cols == 2);
    CHECK(is_zero(mul(a, k)));
    QMat b(2, 1);
    b.at(0, 0) = 5;
    b.at(1, 0) = 10;
    QMat x;
    CHECK(solve_linear(a, b, x));
    CHECK(mul(a, x) == b);
    b.at(1, 0) = 11;
    CHECK(!solve_linear(a, b, x));
}

TEST_CASE("sparse matrices agree with dense") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> dim(1, 6), val(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        QMat a(dim(rng), dim(rng));
        QMat b(a.cols, dim(rng));
        for (auto& x : a.a) x = val(rng);
        for (auto& x : b.a) x = val(rng);
        CHECK(sp_to_dense(sp_mul(sp_from_dense(a), sp_from_dense(b))) == mul(a, b));
        CHECK(sp_to_dense(sp_add(sp_from_dense(a), sp_from_dense(a))) == add(a, a));
    }
}
