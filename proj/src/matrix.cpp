#include "epicat/matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace epicat {

std::string rat_str(const Rat& q) {
    std::ostringstream os;
    os << rat_num(q);
    if (rat_den(q) != 1) os << "/" << rat_den(q);
    return os.str();
}

Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rat_parse: zero denominator");
    return Rat(num, den);
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

int signature(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

template <class T>
Mat<T> mul(const Mat<T>& A, const Mat<T>& B) {
    if (A.cols != B.rows) throw std::invalid_argument("mul: shape mismatch");
    Mat<T> C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const T& a = A.at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < B.cols; ++j) {
                const T& b = B.at(k, j);
                if (b == 0) continue;
                C.at(i, j) += a * b;
            }
        }
    return C;
}

template <class T>
Mat<T> add(const Mat<T>& A, const Mat<T>& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("add: shape mismatch");
    Mat<T> C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] + B.a[i];
    return C;
}

template <class T>
Mat<T> sub(const Mat<T>& A, const Mat<T>& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("sub: shape mismatch");
    Mat<T> C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] - B.a[i];
    return C;
}

template <class T>
Mat<T> scale(const Mat<T>& A, const T& c) {
    Mat<T> C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] * c;
    return C;
}

template <class T>
bool is_zero(const Mat<T>& A) {
    for (const auto& x : A.a)
        if (x != 0) return false;
    return true;
}

template <class T>
Mat<T> hcat(const Mat<T>& A, const Mat<T>& B) {
    if (A.rows != B.rows) throw std::invalid_argument("hcat: row mismatch");
    Mat<T> C(A.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
    }
    return C;
}

template Mat<Int> mul(const Mat<Int>&, const Mat<Int>&);
template Mat<Rat> mul(const Mat<Rat>&, const Mat<Rat>&);
template Mat<Int> add(const Mat<Int>&, const Mat<Int>&);
template Mat<Rat> add(const Mat<Rat>&, const Mat<Rat>&);
template Mat<Int> sub(const Mat<Int>&, const Mat<Int>&);
template Mat<Rat> sub(const Mat<Rat>&, const Mat<Rat>&);
template Mat<Int> scale(const Mat<Int>&, const Int&);
template Mat<Rat> scale(const Mat<Rat>&, const Rat&);
template bool is_zero(const Mat<Int>&);
template bool is_zero(const Mat<Rat>&);
template Mat<Int> hcat(const Mat<Int>&, const Mat<Int>&);
template Mat<Rat> hcat(const Mat<Rat>&, const Mat<Rat>&);

QMat to_rational(const IMat& A) {
    QMat B(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) B.a[i] = Rat(A.a[i]);
    return B;
}

IMat to_integer(const QMat& A) {
    IMat B(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) {
        if (!is_integral(A.a[i])) throw std::invalid_argument("to_integer: non-integral entry");
        B.a[i] = rat_num(A.a[i]);
    }
    return B;
}

namespace {

struct OpsTracker {
    IMat M, Minv;  // M accumulates the ops, Minv their inverses
    explicit OpsTracker(int n) : M(IMat::identity(n)), Minv(IMat::identity(n)) {}
};

// row ops on A with U tracking: A <- L A, U <- L U, Uinv <- Uinv L^{-1}
void row_swap(IMat& A, OpsTracker& t, int i, int j) {
    for (int c = 0; c < A.cols; ++c) std::swap(A.at(i, c), A.at(j, c));
    for (int c = 0; c < t.M.cols; ++c) std::swap(t.M.at(i, c), t.M.at(j, c));
    for (int r = 0; r < t.Minv.rows; ++r) std::swap(t.Minv.at(r, i), t.Minv.at(r, j));
}

void row_addmul(IMat& A, OpsTracker& t, int dst, int src, const Int& c) {
    for (int k = 0; k < A.cols; ++k) A.at(dst, k) += c * A.at(src, k);
    for (int k = 0; k < t.M.cols; ++k) t.M.at(dst, k) += c * t.M.at(src, k);
    for (int r = 0; r < t.Minv.rows; ++r) t.Minv.at(r, src) -= c * t.Minv.at(r, dst);
}

void row_negate(IMat& A, OpsTracker& t, int i) {
    for (int c = 0; c < A.cols; ++c) A.at(i, c) = -A.at(i, c);
    for (int c = 0; c < t.M.cols; ++c) t.M.at(i, c) = -t.M.at(i, c);
    for (int r = 0; r < t.Minv.rows; ++r) t.Minv.at(r, i) = -t.Minv.at(r, i);
}

// column ops on A with V tracking: A <- A R, V <- V R, Vinv <- R^{-1} Vinv
void col_swap(IMat& A, OpsTracker& t, int i, int j) {
    for (int r = 0; r < A.rows; ++r) std::swap(A.at(r, i), A.at(r, j));
    for (int r = 0; r < t.M.rows; ++r) std::swap(t.M.at(r, i), t.M.at(r, j));
    for (int c = 0; c < t.Minv.cols; ++c) std::swap(t.Minv.at(i, c), t.Minv.at(j, c));
}

void col_addmul(IMat& A, OpsTracker& t, int dst, int src, const Int& c) {
    for (int r = 0; r < A.rows; ++r) A.at(r, dst) += c * A.at(r, src);
    for (int r = 0; r < t.M.rows; ++r) t.M.at(r, dst) += c * t.M.at(r, src);
    for (int k = 0; k < t.Minv.cols; ++k) t.Minv.at(src, k) -= c * t.Minv.at(dst, k);
}

}  // namespace

SmithForm smith_normal_form(IMat A) {
    const int m = A.rows, n = A.cols;
    OpsTracker U(m), V(n);
    int t = 0;
    const int steps = std::min(m, n);
    while (t < steps) {
        // pivot: nonzero entry of least absolute value in the trailing block
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                if (A.at(i, j) == 0) continue;
                Int v = abs(A.at(i, j));
                if (pi < 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        if (pi != t) row_swap(A, U, t, pi);
        if (pj != t) col_swap(A, V, t, pj);
        if (A.at(t, t) < 0) row_negate(A, U, t);

        bool dirty = false;
        for (int i = t + 1; i < m; ++i) {
            if (A.at(i, t) == 0) continue;
            Int q = A.at(i, t) / A.at(t, t);
            row_addmul(A, U, i, t, -q);
            if (A.at(i, t) != 0) dirty = true;
        }
        for (int j = t + 1; j < n; ++j) {
            if (A.at(t, j) == 0) continue;
            Int q = A.at(t, j) / A.at(t, t);
            col_addmul(A, V, j, t, -q);
            if (A.at(t, j) != 0) dirty = true;
        }
        if (dirty) continue;  // smaller remainders exist, pick a new pivot

        // enforce divisibility of the trailing block by the pivot
        bool fixed = true;
        for (int i = t + 1; i < m && fixed; ++i)
            for (int j = t + 1; j < n && fixed; ++j)
                if (A.at(i, j) % A.at(t, t) != 0) {
                    row_addmul(A, U, t, i, 1);
                    fixed = false;
                }
        if (!fixed) continue;
        ++t;
    }
    SmithForm out{std::move(A), std::move(U.M), std::move(U.Minv),
                  std::move(V.M), std::move(V.Minv), t, {}};
    for (int i = 0; i < t; ++i) out.invariants.push_back(out.D.at(i, i));
    return out;
}

IMat kernel_lattice(const IMat& A) {
    SmithForm s = smith_normal_form(A);
    int n = A.cols, r = s.rank;
    IMat K(n, n - r);
    for (int j = r; j < n; ++j)
        for (int i = 0; i < n; ++i) K.at(i, j - r) = s.V.at(i, j);
    return K;
}

IMat solve_integral(const IMat& K, const IMat& B) {
    if (K.rows != B.rows) throw std::invalid_argument("solve_integral: shape mismatch");
    SmithForm s = smith_normal_form(K);
    if (s.rank != K.cols) throw std::invalid_argument("solve_integral: K not of full column rank");
    IMat UB = mul(s.U, B);
    IMat Y(K.cols, B.cols);
    for (int i = 0; i < s.rank; ++i)
        for (int j = 0; j < B.cols; ++j) {
            if (UB.at(i, j) % s.D.at(i, i) != 0)
                throw std::invalid_argument("solve_integral: no integral solution");
            Y.at(i, j) = UB.at(i, j) / s.D.at(i, i);
        }
    for (int i = s.rank; i < K.rows; ++i)
        for (int j = 0; j < B.cols; ++j)
            if (UB.at(i, j) != 0) throw std::invalid_argument("solve_integral: inconsistent system");
    return mul(s.V, Y);
}

Int determinant(const IMat& A) {
    if (A.rows != A.cols) throw std::invalid_argument("determinant: not square");
    // Bareiss fraction-free elimination
    IMat M = A;
    int n = M.rows;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (M.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(M.at(k, c), M.at(piv, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                M.at(i, j) = (M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j)) / prev;
        prev = M.at(k, k);
    }
    return sign > 0 ? M.at(n - 1, n - 1) : -M.at(n - 1, n - 1);
}

namespace {

// Gauss-Jordan; returns pivot (row, col) pairs.
std::vector<std::pair<int, int>> reduce(QMat& A) {
    std::vector<std::pair<int, int>> pivots;
    int row = 0;
    for (int col = 0; col < A.cols && row < A.rows; ++col) {
        int p = -1;
        for (int i = row; i < A.rows; ++i)
            if (A.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < A.cols; ++j) std::swap(A.at(p, j), A.at(row, j));
        Rat inv = Rat(1) / A.at(row, col);
        for (int j = 0; j < A.cols; ++j) A.at(row, j) *= inv;
        for (int i = 0; i < A.rows; ++i) {
            if (i == row || A.at(i, col) == 0) continue;
            Rat f = A.at(i, col);
            for (int j = 0; j < A.cols; ++j) A.at(i, j) -= f * A.at(row, j);
        }
        pivots.emplace_back(row, col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank_of(QMat A) { return (int)reduce(A).size(); }

QMat kernel_of(const QMat& A) {
    QMat R = A;
    auto pivots = reduce(R);
    std::vector<bool> is_pivot(A.cols, false);
    for (auto& [r, c] : pivots) is_pivot[c] = true;
    int free_count = A.cols - (int)pivots.size();
    QMat K(A.cols, free_count);
    int idx = 0;
    for (int c = 0; c < A.cols; ++c) {
        if (is_pivot[c]) continue;
        K.at(c, idx) = 1;
        for (auto& [pr, pc] : pivots) K.at(pc, idx) = -R.at(pr, c);
        ++idx;
    }
    return K;
}

std::vector<int> independent_columns(const QMat& A) {
    QMat R = A;
    auto pivots = reduce(R);
    std::vector<int> out;
    for (auto& [r, c] : pivots) out.push_back(c);
    return out;
}

bool solve_linear(const QMat& A, const QMat& b, QMat& x) {
    QMat Ab = hcat(A, b);
    auto pivots = reduce(Ab);
    x = QMat(A.cols, b.cols);
    for (auto& [r, c] : pivots)
        if (c >= A.cols) return false;  // pivot in the augmented block
    for (auto& [r, c] : pivots)
        for (int j = 0; j < b.cols; ++j) x.at(c, j) = Ab.at(r, A.cols + j);
    return true;
}

SpMat SpMat::identity(int n) {
    SpMat m(n, n);
    for (int i = 0; i < n; ++i) m.col[i].emplace_back(i, Rat(1));
    return m;
}

SpMat sp_mul(const SpMat& A, const SpMat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("sp_mul: shape mismatch");
    SpMat C(A.rows, B.cols);
    std::map<int, Rat> acc;
    for (int j = 0; j < B.cols; ++j) {
        acc.clear();
        for (const auto& [k, bv] : B.col[j])
            for (const auto& [i, av] : A.col[k]) acc[i] += av * bv;
        auto& out = C.col[j];
        for (const auto& [i, v] : acc)
            if (v != 0) out.emplace_back(i, v);
    }
    return C;
}

SpMat sp_scale(const SpMat& A, const Rat& c) {
    if (c == 0) return SpMat(A.rows, A.cols);
    SpMat C = A;
    for (auto& column : C.col)
        for (auto& [i, v] : column) v *= c;
    return C;
}

SpMat sp_add(const SpMat& A, const SpMat& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("sp_add: shape mismatch");
    SpMat C(A.rows, A.cols);
    std::map<int, Rat> acc;
    for (int j = 0; j < A.cols; ++j) {
        acc.clear();
        for (const auto& [i, v] : A.col[j]) acc[i] += v;
        for (const auto& [i, v] : B.col[j]) acc[i] += v;
        for (const auto& [i, v] : acc)
            if (v != 0) C.col[j].emplace_back(i, v);
    }
    return C;
}

QMat sp_to_dense(const SpMat& A) {
    QMat B(A.rows, A.cols);
    for (int j = 0; j < A.cols; ++j)
        for (const auto& [i, v] : A.col[j]) B.at(i, j) = v;
    return B;
}

SpMat sp_from_dense(const QMat& A) {
    SpMat B(A.rows, A.cols);
    for (int j = 0; j < A.cols; ++j)
        for (int i = 0; i < A.rows; ++i)
            if (A.at(i, j) != 0) B.col[j].emplace_back(i, A.at(i, j));
    return B;
}

size_t sp_nnz(const SpMat& A) {
    size_t n = 0;
    for (const auto& c : A.col) n += c.size();
    return n;
}

}  // namespace epicat
