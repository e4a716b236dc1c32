#include "epicat/subdivision.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace epicat {

namespace {

// Sd*_k(x)(t) = a/k + x(s)/k for t = s + a(n+1), evaluated on an interval
// map x : n* -> [0,1] given by its coordinate list (with x(0)=0, x(n+1)=1).
Rat subdivided_value(const std::vector<Rat>& x, int n, int k, int t) {
    int a = std::min(t / (n + 1), k - 1);
    int s = t - a * (n + 1);
    Rat xs = s == 0 ? Rat(0) : (s == n + 1 ? Rat(1) : x[(size_t)s - 1]);
    return Rat(a, k) + xs / Rat(k);
}

Rat det_rational(std::vector<std::vector<Rat>> m) {
    int n = (int)m.size();
    Rat det = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Rat inv = Rat(1) / m[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] * inv;
            for (int cc = c; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
        }
    }
    return det;
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

AffineCell cell_of(const SigmaElement& alpha) {
    int n = alpha.n, k = alpha.k;
    AffineCell cell;
    cell.alpha = alpha;

    // standard vertices: v_b(j) = 1 for j > b, else 0
    for (int b = 0; b <= n; ++b) {
        std::vector<Rat> coords(n);
        for (int j = 1; j <= n; ++j) coords[(size_t)j - 1] = j > b ? Rat(1) : Rat(0);
        std::vector<Rat> img(n);
        for (int j = 1; j <= n; ++j)
            img[(size_t)j - 1] = subdivided_value(coords, n, k, alpha.map.values[j]);
        cell.vertices.push_back(SimplexPoint{n, std::move(img)});
    }

    if (n == 0) {
        cell.sign = 1;
        cell.volume = 1;
        return cell;
    }
    std::vector<std::vector<Rat>> diff(n, std::vector<Rat>(n));
    for (int b = 1; b <= n; ++b)
        for (int j = 0; j < n; ++j)
            diff[(size_t)j][(size_t)b - 1] =
                cell.vertices[(size_t)b].coords[(size_t)j] - cell.vertices[0].coords[(size_t)j];
    Rat det = det_rational(diff);
    // the standard vertex frame itself has determinant (-1)^n
    if (n % 2 == 1) det = -det;
    cell.sign = det > 0 ? 1 : (det < 0 ? -1 : 0);
    cell.volume = (det >= 0 ? det : -det) / Rat(factorial(n));
    return cell;
}

CellFace face_of_cell(const SigmaElement& alpha, int i) {
    int n = alpha.n, k = alpha.k;
    if (n < 1 || i < 0 || i > n) throw std::invalid_argument("face_of_cell: bad index");
    CellFace f;
    f.map = compose(subdivide_interval(face(n, i), k), alpha.map);
    f.barycenter.resize(n);
    for (int j = 1; j <= n; ++j) f.barycenter[(size_t)j - 1] = Rat(f.map.values[j], n * k);

    std::set<int> hit;
    for (int j = 1; j <= n; ++j) {
        int s = f.map.values[j] % n;
        if (s >= 1 && s <= n - 1) hit.insert(s);
    }
    f.degenerate = (int)hit.size() < n - 1;

    const auto& c = f.barycenter;
    f.boundary = c[0] == 0 || c[(size_t)n - 1] == 1;
    for (int j = 0; j + 1 < n && !f.boundary; ++j)
        if (c[(size_t)j] == c[(size_t)j + 1]) f.boundary = true;

    f.sign = signature(perm_of(alpha)) * (i % 2 == 0 ? 1 : -1);
    return f;
}

TriangulationReport verify_triangulation(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("verify_triangulation: bad parameters");
    TriangulationReport rep;
    rep.n = n;
    rep.k = k;

    auto sigmas = sigma_set(n, k);
    Rat vol_sum = 0;
    rep.orientation_ok = true;
    for (const auto& a : sigmas) {
        AffineCell cell = cell_of(a);
        vol_sum += cell.volume;
        if (cell.sign != signature(perm_of(a))) rep.orientation_ok = false;
    }
    rep.volume_ok = vol_sum == Rat(1) / Rat(factorial(n));

    struct FaceBucket {
        std::vector<int> signs;
        bool boundary = false;
        bool degenerate = false;
        std::vector<Rat> barycenter;
    };
    std::map<IntervalMap, FaceBucket> buckets;
    for (const auto& a : sigmas)
        for (int i = 0; i <= n; ++i) {
            CellFace f = face_of_cell(a, i);
            auto& b = buckets[f.map];
            b.signs.push_back(f.sign);
            b.boundary = f.boundary;
            b.degenerate = f.degenerate;
            b.barycenter = f.barycenter;
            if (f.degenerate) ++rep.degenerate_count;
        }

    rep.interior_pairing_ok = true;
    rep.boundary_count = 0;
    std::map<std::vector<Rat>, std::set<IntervalMap>> by_barycenter;
    for (const auto& [m, b] : buckets) {
        if (!b.degenerate) by_barycenter[b.barycenter].insert(m);
        if (b.boundary) {
            rep.boundary_count += (long long)b.signs.size();
            continue;
        }
        if (b.degenerate) continue;
        if (b.signs.size() != 2 || b.signs[0] + b.signs[1] != 0) rep.interior_pairing_ok = false;
    }
    long long kpow = 1;
    for (int i = 0; i < n - 1; ++i) kpow *= k;
    rep.boundary_count_ok = rep.boundary_count == (long long)(n + 1) * kpow;
    rep.barycenters_distinct_ok = true;
    for (const auto& [c, ms] : by_barycenter)
        if (ms.size() > 1) rep.barycenters_distinct_ok = false;

    // term accounting: the signed face multiset equals the expansion of
    // Lambda_{n-1}^k b_n, and interior faces cancel in b_n Lambda_n^k
    std::map<IntervalMap, long long> rhs;
    for (const auto& [m, b] : buckets) {
        long long c = 0;
        for (int s : b.signs) c += s;
        if (c != 0) rhs[m] = c;
    }
    std::map<IntervalMap, long long> lhs;
    for (const auto& d : sigma_set(n - 1, k)) {
        int eps = signature(perm_of(d));
        for (int j = 0; j <= n; ++j) {
            IntervalMap t = compose(d.map, face(n, j));
            long long c = (long long)eps * (j % 2 == 0 ? 1 : -1);
            auto it = lhs.find(t);
            if (it == lhs.end())
                lhs.emplace(t, c);
            else {
                it->second += c;
                if (it->second == 0) lhs.erase(it);
            }
        }
    }
    rep.term_accounting_ok = rhs == lhs;
    for (const auto& [m, b] : buckets) {
        bool cancelled = rhs.find(m) == rhs.end();
        if (!b.boundary && !b.degenerate && !cancelled) rep.term_accounting_ok = false;
    }
    // cross-check against the convolution ring
    FormalSum ring_lhs = lambda_element(n - 1, k) * hochschild_b(n);
    FormalSum ring_rhs = hochschild_b(n) * lambda_element(n, k);
    FormalSum geom;
    for (const auto& [m, c] : rhs) geom.add(compose(id_n_k(n - 1, k), embed(m)), c);
    if (!(ring_lhs == ring_rhs && ring_lhs == geom)) rep.term_accounting_ok = false;
    return rep;
}

}  // namespace epicat
