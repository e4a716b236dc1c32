#include "epicat/lambda_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace epicat {

FormalSum FormalSum::of(const EpicyclicMap& f, long long c) {
    FormalSum s;
    if (c != 0) s.terms.emplace(f, c);
    return s;
}

FormalSum& FormalSum::add(const EpicyclicMap& f, long long c) {
    if (c == 0) return *this;
    auto it = terms.find(f);
    if (it == terms.end()) {
        terms.emplace(f, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
    return *this;
}

FormalSum FormalSum::operator+(const FormalSum& o) const {
    FormalSum r = *this;
    for (const auto& [f, c] : o.terms) r.add(f, c);
    return r;
}

FormalSum FormalSum::operator-(const FormalSum& o) const {
    FormalSum r = *this;
    for (const auto& [f, c] : o.terms) r.add(f, -c);
    return r;
}

FormalSum FormalSum::operator*(long long c) const {
    FormalSum r;
    if (c == 0) return r;
    for (const auto& [f, a] : terms) r.terms.emplace(f, a * c);
    return r;
}

FormalSum FormalSum::operator*(const FormalSum& o) const {
    FormalSum r;
    for (const auto& [g, cg] : terms)
        for (const auto& [f, cf] : o.terms) {
            if (f.cod != g.dom) continue;  // incomposable pairs contribute 0
            r.add(compose(g, f), cg * cf);
        }
    return r;
}

std::vector<SigmaElement> sigma_set(int n, int k) {
    if (n < 0 || k < 1) throw std::invalid_argument("sigma_set: bad parameters");
    std::vector<SigmaElement> out;
    std::vector<int> label(n, 0);
    while (true) {
        std::vector<int> range;
        range.reserve(n);
        for (int j = 1; j <= n; ++j) range.push_back(j + (n + 1) * label[j - 1]);
        std::sort(range.begin(), range.end());
        std::vector<int> v(n + 2);
        v[0] = 0;
        for (int i = 0; i < n; ++i) v[i + 1] = range[i];
        v[n + 1] = k * (n + 1);
        out.push_back(SigmaElement{n, k, IntervalMap{n, k * (n + 1) - 1, std::move(v)}, label});
        int i = n - 1;
        while (i >= 0 && label[i] == k - 1) --i;
        if (i < 0) break;
        ++label[i];
        for (int j = i + 1; j < n; ++j) label[j] = 0;
    }
    return out;
}

std::vector<int> perm_of(const SigmaElement& a) {
    std::vector<int> sigma(a.n);
    std::vector<bool> seen(a.n + 1, false);
    for (int v = 1; v <= a.n; ++v) {
        int res = a.map.values[v] % (a.n + 1);
        if (res < 1 || res > a.n || seen[res])
            throw std::invalid_argument("perm_of: residues are not a permutation");
        seen[res] = true;
        sigma[v - 1] = res;
    }
    return sigma;
}

int descent_number(const std::vector<int>& sigma) {
    int d = 0;
    for (size_t j = 0; j + 1 < sigma.size(); ++j)
        if (sigma[j + 1] < sigma[j]) ++d;
    return d;
}

Int descent_count(const std::vector<int>& sigma, int n, int k) {
    int d = descent_number(sigma);
    int v = k - 1 - d;
    if (v < 0) return 0;
    return binomial(n + v, n);
}

FormalSum lambda_element(int n, int k) {
    FormalSum s;
    for (const auto& a : sigma_set(n, k))
        s.add(compose(id_n_k(n, k), embed(a.map)), signature(perm_of(a)));
    return s;
}

FormalSum hochschild_b(int n) {
    if (n < 1) throw std::invalid_argument("hochschild_b: n must be >= 1");
    FormalSum s;
    for (int i = 0; i <= n; ++i) s.add(embed(face(n, i)), i % 2 == 0 ? 1 : -1);
    return s;
}

FormalSum connes_A(int n) {
    FormalSum s;
    for (const auto& t : cyclic_automorphisms(n)) s.add(t, signature(finstar(t)));
    return s;
}

FormalSum connes_B(int n) {
    return FormalSum::of(b0_map(n)) * connes_A(n);
}

DeltaMap b0_conjugate(const SigmaElement& a) {
    // solve alpha . B_0 = Sd_k(B_0) . alpha' on periodic extensions
    int n = a.n - 1, k = a.k;
    if (n < 0) throw std::invalid_argument("b0_conjugate: need an element of Sigma_{n+1}^k");
    EpicyclicMap phi = compose(embed(a.map), b0_map(n));
    std::vector<int> v(n + 1);
    for (int x = 0; x <= n; ++x) {
        long long val = phi.values[x];
        // Sd_k(B_0)(i + a(n+1)) = 1 + i + a(n+2)
        long long q = floor_div(val - 1, n + 2);
        long long i = val - 1 - q * (n + 2);
        if (i > n)
            throw std::logic_error("b0_conjugate: value outside the range of Sd_k(B_0)");
        v[x] = (int)(i + q * (n + 1));
    }
    DeltaMap ap = delta_map(n, k * (n + 1) - 1, std::move(v));
    DeltaMap b0_delta = delta_map(n, n + 1, b0_map(n).values);
    if (phi != compose(embed(subdivide(b0_delta, k)), embed(ap)))
        throw std::logic_error("b0_conjugate: defining equation failed");
    return ap;
}

GammaDeltaSets gamma_delta_sets(int n, int k) {
    GammaDeltaSets out;
    auto bijective = [&](const EpicyclicMap& m) {
        auto r = finstar(m);
        std::vector<bool> seen(m.cod + 1, false);
        for (int x : r) {
            if (seen[x]) return false;
            seen[x] = true;
        }
        return true;
    };
    const EpicyclicMap idk = id_n_k(n, k);
    for (const auto& f : epicyclic_homs(n, k * (n + 1) - 1, 1))
        if (bijective(compose(idk, f))) out.gamma.push_back(f);
    for (const auto& a : delta_homs(n, k * (n + 1) - 1))
        if (bijective(compose(idk, embed(a)))) out.delta.push_back(a);
    return out;
}

}  // namespace epicat
