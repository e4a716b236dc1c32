#include "epicat/delta.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace epicat {

namespace {

void check(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

DeltaMap delta_map(int dom, int cod, std::vector<int> values) {
    check(dom >= 0 && cod >= 0, "delta_map: negative object");
    check((int)values.size() == dom + 1, "delta_map: value list size");
    for (int i = 0; i <= dom; ++i) {
        check(values[i] >= 0 && values[i] <= cod, "delta_map: value out of range");
        if (i > 0) check(values[i - 1] <= values[i], "delta_map: not non-decreasing");
    }
    return DeltaMap{dom, cod, std::move(values)};
}

DeltaMap delta_identity(int n) {
    std::vector<int> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = i;
    return DeltaMap{n, n, std::move(v)};
}

DeltaMap compose(const DeltaMap& g, const DeltaMap& f) {
    check(f.cod == g.dom, "compose: domain mismatch");
    std::vector<int> v(f.dom + 1);
    for (int i = 0; i <= f.dom; ++i) v[i] = g.values[f.values[i]];
    return DeltaMap{f.dom, g.cod, std::move(v)};
}

std::vector<DeltaMap> delta_homs(int n, int m) {
    std::vector<DeltaMap> out;
    std::vector<int> v(n + 1, 0);
    while (true) {
        out.push_back(DeltaMap{n, m, v});
        int i = n;
        while (i >= 0 && v[i] == m) --i;
        if (i < 0) break;
        ++v[i];
        for (int j = i + 1; j <= n; ++j) v[j] = v[i];
    }
    return out;
}

DeltaMap delta_coface(int n, int i) {
    check(n >= 1 && i >= 0 && i <= n, "delta_coface: index out of range");
    std::vector<int> v(n);
    for (int x = 0; x < n; ++x) v[x] = x < i ? x : x + 1;
    return DeltaMap{n - 1, n, std::move(v)};
}

DeltaMap delta_codegeneracy(int n, int j) {
    check(n >= 0 && j >= 0 && j <= n, "delta_codegeneracy: index out of range");
    std::vector<int> v(n + 2);
    for (int x = 0; x <= n + 1; ++x) v[x] = x <= j ? x : x - 1;
    return DeltaMap{n + 1, n, std::move(v)};
}

DeltaMap subdivide(const DeltaMap& f, int k) {
    check(k >= 1, "subdivide: k must be positive");
    int n = f.dom, m = f.cod;
    std::vector<int> v(k * (n + 1));
    for (int a = 0; a < k; ++a)
        for (int i = 0; i <= n; ++i) v[i + a * (n + 1)] = f.values[i] + a * (m + 1);
    return DeltaMap{k * (n + 1) - 1, k * (m + 1) - 1, std::move(v)};
}

IntervalMap interval_map(int dom, int cod, std::vector<int> values) {
    check(dom >= 0 && cod >= 0, "interval_map: negative object");
    check((int)values.size() == dom + 2, "interval_map: value list size");
    check(values.front() == 0 && values.back() == cod + 1, "interval_map: endpoints not preserved");
    for (int j = 0; j <= dom; ++j)
        check(values[j] <= values[j + 1], "interval_map: not non-decreasing");
    return IntervalMap{dom, cod, std::move(values)};
}

IntervalMap interval_identity(int n) {
    std::vector<int> v(n + 2);
    for (int j = 0; j <= n + 1; ++j) v[j] = j;
    return IntervalMap{n, n, std::move(v)};
}

IntervalMap compose(const IntervalMap& g, const IntervalMap& f) {
    check(f.cod == g.dom, "compose: domain mismatch");
    std::vector<int> v(f.dom + 2);
    for (int j = 0; j <= f.dom + 1; ++j) v[j] = g.values[f.values[j]];
    return IntervalMap{f.dom, g.cod, std::move(v)};
}

std::vector<IntervalMap> interval_homs(int n, int m) {
    std::vector<IntervalMap> out;
    std::vector<int> v(n + 2);
    v[0] = 0;
    v[n + 1] = m + 1;
    // enumerate the interior values lexicographically
    for (int j = 1; j <= n; ++j) v[j] = 0;
    while (true) {
        out.push_back(IntervalMap{n, m, v});
        int i = n;
        while (i >= 1 && v[i] == m + 1) --i;
        if (i < 1) break;
        ++v[i];
        for (int j = i + 1; j <= n; ++j) v[j] = v[i];
    }
    return out;
}

IntervalMap dualize(const DeltaMap& f) {
    int n = f.dom, m = f.cod;
    std::vector<int> w(m + 2);
    for (int j = 0; j <= m + 1; ++j) {
        int x = 0;
        while (x <= n && f.values[x] < j) ++x;
        w[j] = x;  // n+1 when the preimage of [j, m] is empty
    }
    return IntervalMap{m, n, std::move(w)};
}

DeltaMap dualize(const IntervalMap& w) {
    int m = w.dom, n = w.cod;  // w : m* -> n*, recover f : [n] -> [m]
    std::vector<int> v(n + 1);
    for (int x = 0; x <= n; ++x) {
        int j = 0;
        while (j + 1 <= m && w.values[j + 1] <= x) ++j;
        v[x] = j;
    }
    return DeltaMap{n, m, std::move(v)};
}

IntervalMap face(int n, int i) {
    check(n >= 1 && i >= 0 && i <= n, "face: index out of range");
    std::vector<int> w(n + 2);
    for (int j = 0; j <= n + 1; ++j) w[j] = j <= i ? j : j - 1;
    return IntervalMap{n, n - 1, std::move(w)};
}

IntervalMap degeneracy(int n, int j) {
    check(n >= 0 && j >= 0 && j <= n, "degeneracy: index out of range");
    std::vector<int> w(n + 2);
    for (int i = 0; i <= n + 1; ++i) w[i] = i <= j ? i : i + 1;
    return IntervalMap{n, n + 1, std::move(w)};
}

IntervalMap subdivide_interval(const IntervalMap& g, int k) {
    check(k >= 1, "subdivide_interval: k must be positive");
    int n = g.dom, m = g.cod;
    std::vector<int> v(k * (n + 1) + 1);
    for (int a = 0; a < k; ++a)
        for (int i = 0; i <= n + 1; ++i) v[i + a * (n + 1)] = g.values[i] + a * (m + 1);
    return IntervalMap{k * (n + 1) - 1, k * (m + 1) - 1, std::move(v)};
}

SubdivisionFactorization factor_through_subdivision(const IntervalMap& phi, int k) {
    check(k >= 1, "factor_through_subdivision: k must be positive");
    int n = phi.dom;
    check((phi.cod + 1) % k == 0, "factor_through_subdivision: codomain is not Sd*_k(m*)");
    int m = (phi.cod + 1) / k - 1;

    // Interior points of m* hit by pi . phi, i.e. nonzero residues mod m+1.
    std::set<int> interior;
    for (int v : phi.values) {
        int b = v % (m + 1);
        if (b != 0) interior.insert(b);
    }
    std::vector<int> Z(interior.begin(), interior.end());
    int r = (int)Z.size();

    std::vector<int> av(r + 2);
    av[0] = 0;
    for (int i = 0; i < r; ++i) av[i + 1] = Z[i];
    av[r + 1] = m + 1;
    IntervalMap alpha{r, m, std::move(av)};

    std::vector<int> bv(n + 2);
    for (int s = 0; s <= n + 1; ++s) {
        int v = phi.values[s];
        int a = v / (m + 1);
        int b = v % (m + 1);
        if (b == 0) {
            bv[s] = a * (r + 1);  // glue point, same index under both readings
        } else {
            int pos = int(std::lower_bound(Z.begin(), Z.end(), b) - Z.begin()) + 1;
            bv[s] = pos + a * (r + 1);
        }
    }
    IntervalMap beta{n, k * (r + 1) - 1, std::move(bv)};

    if (compose(subdivide_interval(alpha, k), beta) != phi)
        throw std::logic_error("factor_through_subdivision: reconstruction failed");
    return SubdivisionFactorization{r, std::move(alpha), std::move(beta)};
}

IntervalMap generator_map(const IntervalGenerator& g) {
    return g.is_degeneracy ? degeneracy(g.level, g.index) : face(g.level, g.index);
}

std::vector<IntervalGenerator> generator_factorization(const IntervalMap& w) {
    // Surjective part first (faces), then the injective part (degeneracies).
    std::vector<IntervalGenerator> inner;  // applied first
    IntervalMap cur = w;
    while (true) {
        int rep = -1;
        for (int j = 0; j <= cur.dom; ++j)
            if (cur.values[j] == cur.values[j + 1]) {
                rep = j;
                break;
            }
        if (rep < 0) break;
        // cur = cur' . d_rep with cur' dropping slot rep+1
        std::vector<int> v(cur.dom + 1);
        for (int j = 0; j <= cur.dom; ++j) v[j] = cur.values[j <= rep ? j : j + 1];
        inner.push_back(IntervalGenerator{false, cur.dom, rep});
        cur = IntervalMap{cur.dom - 1, cur.cod, std::move(v)};
    }
    std::vector<IntervalGenerator> outer;  // applied last
    while (cur.dom != cur.cod) {
        // cur is injective; find a missed interior value
        int miss = -1;
        std::set<int> range(cur.values.begin(), cur.values.end());
        for (int v = 1; v <= cur.cod; ++v)
            if (!range.count(v)) {
                miss = v;
                break;
            }
        if (miss < 0) throw std::logic_error("generator_factorization: no missed value");
        outer.push_back(IntervalGenerator{true, cur.cod - 1, miss - 1});
        std::vector<int> v(cur.dom + 2);
        for (int j = 0; j <= cur.dom + 1; ++j)
            v[j] = cur.values[j] < miss ? cur.values[j] : cur.values[j] - 1;
        cur = IntervalMap{cur.dom, cur.cod - 1, std::move(v)};
    }
    std::vector<IntervalGenerator> out;
    out.reserve(outer.size() + inner.size());
    for (auto it = outer.begin(); it != outer.end(); ++it) out.push_back(*it);
    for (auto it = inner.rbegin(); it != inner.rend(); ++it) out.push_back(*it);
    return out;
}

}  // namespace epicat
