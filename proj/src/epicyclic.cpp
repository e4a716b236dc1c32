#include "epicat/epicyclic.hpp"

#include <json.hpp>
#include <stdexcept>

namespace epicat {

namespace {

void check(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

EpicyclicMap epicyclic_map(int dom, int cod, int module, std::vector<int> values) {
    check(dom >= 0 && cod >= 0, "epicyclic_map: negative object");
    check(module >= 1, "epicyclic_map: module must be positive");
    check((int)values.size() == dom + 1, "epicyclic_map: value list size");
    for (int i = 0; i < dom; ++i)
        check(values[i] <= values[i + 1], "epicyclic_map: not non-decreasing");
    check(values[dom] <= values[0] + module * (cod + 1),
          "epicyclic_map: periodic extension not non-decreasing");
    // normalize: shift by the multiple of cod+1 that puts f[0] into [0, cod]
    long long t = floor_div(values[0], cod + 1);
    if (t != 0)
        for (auto& v : values) v -= (int)t * (cod + 1);
    return EpicyclicMap{dom, cod, module, std::move(values)};
}

EpicyclicMap epicyclic_identity(int n) {
    std::vector<int> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = i;
    return EpicyclicMap{n, n, 1, std::move(v)};
}

EpicyclicMap compose(const EpicyclicMap& g, const EpicyclicMap& f) {
    check(f.cod == g.dom, "compose: domain mismatch");
    std::vector<int> v(f.dom + 1);
    for (int i = 0; i <= f.dom; ++i) v[i] = (int)g(f.values[i]);
    return epicyclic_map(f.dom, g.cod, g.module * f.module, std::move(v));
}

EpicyclicMap tau(int n) {
    std::vector<int> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = i + 1;
    return epicyclic_map(n, n, 1, std::move(v));
}

EpicyclicMap tau_inverse(int n) {
    std::vector<int> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = i - 1;
    return epicyclic_map(n, n, 1, std::move(v));
}

EpicyclicMap power(const EpicyclicMap& f, int e) {
    check(f.dom == f.cod && f.module == 1, "power: not a cyclic automorphism");
    EpicyclicMap r = epicyclic_identity(f.dom);
    for (int i = 0; i < e; ++i) r = compose(f, r);
    return r;
}

std::vector<EpicyclicMap> cyclic_automorphisms(int n) {
    std::vector<EpicyclicMap> out;
    EpicyclicMap t = tau(n), cur = epicyclic_identity(n);
    for (int i = 0; i <= n; ++i) {
        out.push_back(cur);
        cur = compose(t, cur);
    }
    return out;
}

EpicyclicMap id_n_k(int n, int k) {
    check(n >= 0 && k >= 1, "id_n_k: bad parameters");
    std::vector<int> v(k * (n + 1));
    for (int i = 0; i < k * (n + 1); ++i) v[i] = i;
    return EpicyclicMap{k * (n + 1) - 1, n, k, std::move(v)};
}

EpicyclicMap iota(int n, int k) {
    check(n >= 0 && k >= 1, "iota: bad parameters");
    std::vector<int> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = k * i;
    return epicyclic_map(n, n, k, std::move(v));
}

EpicyclicMap b0_map(int n) {
    std::vector<int> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = i + 1;
    return EpicyclicMap{n, n + 1, 1, std::move(v)};
}

EpicyclicMap j_map(int n) { return EpicyclicMap{0, n, 1, {0}}; }

EpicyclicMap embed(const IntervalMap& g) {
    std::vector<int> v(g.values.begin(), g.values.begin() + g.dom + 1);
    return epicyclic_map(g.dom, g.cod, 1, std::move(v));
}

EpicyclicMap embed(const DeltaMap& f) {
    return epicyclic_map(f.dom, f.cod, 1, f.values);
}

std::vector<int> finstar(const EpicyclicMap& f) {
    std::vector<int> r(f.dom + 1);
    for (int i = 0; i <= f.dom; ++i) r[i] = f.values[i] % (f.cod + 1);
    return r;
}

std::vector<EpicyclicMap> epicyclic_homs(int n, int m, int k) {
    std::vector<EpicyclicMap> out;
    std::vector<int> v(n + 1);
    for (int f0 = 0; f0 <= m; ++f0) {
        v[0] = f0;
        int hi = f0 + k * (m + 1);
        for (int i = 1; i <= n; ++i) v[i] = f0;
        while (true) {
            out.push_back(EpicyclicMap{n, m, k, v});
            int i = n;
            while (i >= 1 && v[i] == hi) --i;
            if (i < 1) break;
            ++v[i];
            for (int j = i + 1; j <= n; ++j) v[j] = v[i];
        }
    }
    return out;
}

CrossedMorphism crossed_morphism(int module, int cod_base, IntervalMap alpha) {
    check(module >= 1, "crossed_morphism: module must be positive");
    check(alpha.cod == module * (cod_base + 1) - 1,
          "crossed_morphism: alpha codomain is not the subdivision normal form");
    return CrossedMorphism{module, cod_base, std::move(alpha)};
}

CrossedMorphism crossed_identity(int n) {
    return CrossedMorphism{1, n, interval_identity(n)};
}

CrossedMorphism compose(const CrossedMorphism& b, const CrossedMorphism& a) {
    check(a.cod_base == b.alpha.dom, "compose: domain mismatch");
    IntervalMap alpha = compose(subdivide_interval(b.alpha, a.module), a.alpha);
    return CrossedMorphism{b.module * a.module, b.cod_base, std::move(alpha)};
}

EpicyclicMap to_epicyclic(const CrossedMorphism& c) {
    return compose(id_n_k(c.cod_base, c.module), embed(c.alpha));
}

EpicyclicMap psi_kj(int k, int j) {
    check(k >= 1 && j >= 0 && j < k, "psi_kj: j out of range");
    return epicyclic_map(1, 1, k, {0, 2 * j + 1});
}

std::string epicyclic_to_json(const EpicyclicMap& f) {
    nlohmann::ordered_json j;
    j["dom"] = f.dom;
    j["cod"] = f.cod;
    j["mod"] = f.module;
    j["values"] = f.values;
    return j.dump();
}

EpicyclicMap epicyclic_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    return epicyclic_map(j.at("dom").get<int>(), j.at("cod").get<int>(),
                         j.at("mod").get<int>(), j.at("values").get<std::vector<int>>());
}

std::vector<RelationCheck> presentation_checks(int n_max, int k_max) {
    std::vector<RelationCheck> out;
    auto add = [&](const std::string& rel, int n, int k, int j, bool ok) {
        out.push_back(RelationCheck{rel, n, k, j, ok});
    };

    for (int n = 0; n <= n_max; ++n) {
        add("Id_n^1 = id", n, 1, -1, id_n_k(n, 1) == epicyclic_identity(n));
        for (int k = 1; k <= k_max; ++k) {
            for (int l = 1; l <= k_max; ++l) {
                auto lhs = compose(id_n_k(n, l), id_n_k(l * (n + 1) - 1, k));
                add("Id_n^l Id_{l(n+1)-1}^k = Id_n^{kl}", n, k, l, lhs == id_n_k(n, k * l));
            }
            auto lhs = compose(tau(n), id_n_k(n, k));
            auto rhs = compose(id_n_k(n, k), tau(k * (n + 1) - 1));
            add("tau_n Id_n^k = Id_n^k tau_{k(n+1)-1}", n, k, -1, lhs == rhs);
        }
        add("tau_n^{n+1} = id", n, -1, -1, power(tau(n), n + 1) == epicyclic_identity(n));
    }

    // relation (2), exhaustively over Hom([m],[n]) within the bounds
    for (int m = 0; m <= n_max; ++m)
        for (int n = 0; n <= n_max; ++n)
            for (int k = 1; k <= k_max; ++k) {
                bool ok = true;
                for (const auto& a : delta_homs(m, n)) {
                    auto lhs = compose(embed(a), id_n_k(m, k));
                    auto rhs = compose(id_n_k(n, k), embed(subdivide(a, k)));
                    if (lhs != rhs) ok = false;
                }
                add("alpha Id_m^k = Id_n^k Sd_k(alpha)", n, k, m, ok);
            }

    // tau-delta and tau-sigma relations; they hold verbatim for the inverse
    // generator rho = tau^{-1} (with tau = x+1 the index-shifted forms hold).
    for (int n = 1; n <= n_max; ++n) {
        auto rho_n = tau_inverse(n);
        auto delta = [&](int j) { return embed(delta_coface(n, j)); };
        add("tau delta_0 = delta_n", n, -1, 0, compose(rho_n, delta(0)) == delta(n));
        for (int j = 1; j <= n; ++j) {
            auto lhs = compose(rho_n, delta(j));
            auto rhs = compose(delta(j - 1), tau_inverse(n - 1));
            add("tau delta_j = delta_{j-1} tau", n, -1, j, lhs == rhs);
        }
    }
    for (int n = 0; n <= n_max; ++n) {
        auto rho_n = tau_inverse(n);
        auto sigma = [&](int j) { return embed(delta_codegeneracy(n, j)); };
        auto rho2 = power(tau_inverse(n + 1), 2);
        add("tau sigma_0 = sigma_n tau^2", n, -1, 0,
            compose(rho_n, sigma(0)) == compose(sigma(n), rho2));
        for (int j = 1; j <= n; ++j) {
            auto lhs = compose(rho_n, sigma(j));
            auto rhs = compose(sigma(j - 1), tau_inverse(n + 1));
            add("tau sigma_j = sigma_{j-1} tau", n, -1, j, lhs == rhs);
        }
    }

    // simplicial identities among the cofaces/codegeneracies
    for (int n = 1; n <= n_max; ++n) {
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n + 1; ++j) {
                auto lhs = compose(embed(delta_coface(n + 1, j)), embed(delta_coface(n, i)));
                auto rhs = compose(embed(delta_coface(n + 1, i)), embed(delta_coface(n, j - 1)));
                add("delta_j delta_i = delta_i delta_{j-1}", n, i, j, lhs == rhs);
            }
    }
    for (int n = 0; n <= n_max; ++n) {
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i) {
                auto lhs = compose(embed(delta_codegeneracy(n, j)),
                                   embed(delta_codegeneracy(n + 1, i)));
                auto rhs = compose(embed(delta_codegeneracy(n, i)),
                                   embed(delta_codegeneracy(n + 1, j + 1)));
                add("sigma_j sigma_i = sigma_i sigma_{j+1}", n, i, j, lhs == rhs);
            }
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                auto lhs = compose(embed(delta_codegeneracy(n, j)),
                                   embed(delta_coface(n + 1, i)));
                EpicyclicMap rhs;
                if (i == j || i == j + 1)
                    rhs = epicyclic_identity(n);
                else if (i < j)
                    rhs = compose(embed(delta_coface(n, i)),
                                  embed(delta_codegeneracy(n - 1, j - 1)));
                else
                    rhs = compose(embed(delta_coface(n, i - 1)),
                                  embed(delta_codegeneracy(n - 1, j)));
                add("sigma_j delta_i mixed identity", n, i, j, lhs == rhs);
            }
    }
    return out;
}

}  // namespace epicat
