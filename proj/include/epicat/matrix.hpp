#pragma once

#include <utility>
#include <vector>

#include "epicat/numeric.hpp"

namespace epicat {

// Dense matrix acting on column vectors; entries exact.
template <class T>
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}

    T& at(int i, int j) { return a[(size_t)i * cols + j]; }
    const T& at(int i, int j) const { return a[(size_t)i * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const Mat& o) const = default;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

template <class T>
Mat<T> mul(const Mat<T>& A, const Mat<T>& B);
template <class T>
Mat<T> add(const Mat<T>& A, const Mat<T>& B);
template <class T>
Mat<T> sub(const Mat<T>& A, const Mat<T>& B);
template <class T>
Mat<T> scale(const Mat<T>& A, const T& c);
template <class T>
bool is_zero(const Mat<T>& A);
template <class T>
Mat<T> hcat(const Mat<T>& A, const Mat<T>& B);

QMat to_rational(const IMat& A);
// Throws if any entry has a denominator.
IMat to_integer(const QMat& A);

// Smith normal form U A V = D with U, V unimodular and the diagonal
// entries forming a divisibility chain.
struct SmithForm {
    IMat D, U, Uinv, V, Vinv;
    int rank = 0;
    std::vector<Int> invariants;  // the nonzero diagonal, positive
};
SmithForm smith_normal_form(IMat A);

// Basis of the integer kernel lattice (columns); saturated by construction.
IMat kernel_lattice(const IMat& A);
// The unique integral solution X of K X = B (K of full column rank);
// throws if no integral solution exists.
IMat solve_integral(const IMat& K, const IMat& B);
Int determinant(const IMat& A);

// Rational elimination utilities.
int rank_of(QMat A);
QMat kernel_of(const QMat& A);
// Column indices that form a basis of the column space, scanning left to right.
std::vector<int> independent_columns(const QMat& A);
// Solves A x = b; returns false if inconsistent.
bool solve_linear(const QMat& A, const QMat& b, QMat& x);

// Column-major sparse matrix over the rationals, used for the generator
// tables of module presentations whose top degrees are far too large for
// dense storage.
struct SpMat {
    int rows = 0;
    int cols = 0;
    // per column: sorted (row, value) pairs, values nonzero
    std::vector<std::vector<std::pair<int, Rat>>> col;

    SpMat() = default;
    SpMat(int r, int c) : rows(r), cols(c), col(c) {}

    static SpMat identity(int n);
    bool operator==(const SpMat& o) const = default;
};

SpMat sp_mul(const SpMat& A, const SpMat& B);
SpMat sp_scale(const SpMat& A, const Rat& c);
SpMat sp_add(const SpMat& A, const SpMat& B);
QMat sp_to_dense(const SpMat& A);
SpMat sp_from_dense(const QMat& A);
size_t sp_nnz(const SpMat& A);

}  // namespace epicat
