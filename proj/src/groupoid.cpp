#include "epicat/groupoid.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace epicat {

namespace {

void check(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// largest t with q + t*step <= hi
Int step_floor(const Rat& value, const Rat& step) { return rat_floor(value / step); }

}  // namespace

GroupoidElement g_element(int m, int source, long long shift) {
    check(m >= 0 && source >= 0 && source <= m, "g_element: bad source");
    return GroupoidElement{m, source, shift};
}

GroupoidElement g_unit(int m, int x) { return g_element(m, x, 0); }

GroupoidElement compose(const GroupoidElement& a, const GroupoidElement& b) {
    check(a.m == b.m, "compose: different groupoids");
    check(a.source == b.range(), "compose: non-composable pair");
    return GroupoidElement{a.m, b.source, a.shift + b.shift};
}

GroupoidElement inverse(const GroupoidElement& a) {
    return GroupoidElement{a.m, a.range(), -a.shift};
}

RationalArchSet arch_set(Rat step, std::vector<Rat> orbits) {
    check(step > 0, "arch_set: step must be positive");
    check(!orbits.empty(), "arch_set: need at least one orbit");
    for (size_t i = 0; i + 1 < orbits.size(); ++i)
        check(orbits[i] < orbits[i + 1], "arch_set: representatives must be strictly increasing");
    check(orbits.back() - orbits.front() < step,
          "arch_set: representatives must lie in one fundamental domain");
    return RationalArchSet{std::move(step), std::move(orbits)};
}

RationalArchSet arch_from_denominator(long long N, std::vector<Rat> orbits) {
    check(N >= 1, "arch_from_denominator: N must be positive");
    return arch_set(Rat(1, N), std::move(orbits));
}

RationalArchSet gm_model(int m) {
    std::vector<Rat> orbits;
    for (int i = 0; i <= m; ++i) orbits.emplace_back(i);
    return arch_set(Rat(m + 1), std::move(orbits));
}

std::vector<Rat> points_in(const RationalArchSet& X, const Rat& lo, const Rat& hi) {
    std::vector<Rat> out;
    for (const Rat& q : X.orbits) {
        Int t0 = rat_ceil((lo - q) / X.step);
        Int t1 = rat_floor((hi - q) / X.step);
        for (Int t = t0; t <= t1; ++t) out.push_back(q + Rat(t) * X.step);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool in_set(const RationalArchSet& X, const Rat& x) {
    for (const Rat& q : X.orbits)
        if (is_integral((x - q) / X.step)) return true;
    return false;
}

int orbit_of(const RationalArchSet& X, const Rat& x) {
    for (int i = 0; i < X.orbit_count(); ++i)
        if (is_integral((x - X.orbits[i]) / X.step)) return i;
    throw std::invalid_argument("orbit_of: point is not in the set");
}

std::string arch_to_json(const RationalArchSet& X) {
    nlohmann::ordered_json j;
    Rat inv = Rat(1) / X.step;
    if (!is_integral(inv))
        throw std::invalid_argument("arch_to_json: step is not of the form 1/N");
    j["den"] = (long long)rat_num(inv);
    auto& arr = j["orbits"] = nlohmann::ordered_json::array();
    for (const Rat& q : X.orbits) arr.push_back(rat_str(q));
    return j.dump();
}

RationalArchSet arch_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    long long N = j.at("den").get<long long>();
    std::vector<Rat> orbits;
    for (const auto& e : j.at("orbits")) orbits.push_back(rat_parse(e.get<std::string>()));
    return arch_from_denominator(N, std::move(orbits));
}

std::string point_to_json(const ArchPoint& p) {
    nlohmann::ordered_json j;
    j["orbit"] = p.orbit_index;
    j["height"] = rat_str(p.height);
    return j.dump();
}

ArchPoint point_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    return ArchPoint{j.at("orbit").get<int>(), rat_parse(j.at("height").get<std::string>())};
}

GroupoidHom groupoid_hom(const RationalArchSet& X, std::vector<Rat> tuple) {
    check(tuple.size() >= 2, "groupoid_hom: tuple too short");
    int n = (int)tuple.size() - 2;
    for (int i = 0; i <= n; ++i) check(tuple[i] <= tuple[i + 1], "groupoid_hom: not a chain");
    Rat h = tuple.back() - tuple.front();
    check(h > 0, "groupoid_hom: height must be nonzero");
    check(is_integral(h / X.step), "groupoid_hom: height not in H_+");
    for (const Rat& v : tuple) check(in_set(X, v), "groupoid_hom: point not in X");
    // normalize: translate so that the base point is a stored representative
    int oi = orbit_of(X, tuple.front());
    Rat shift = tuple.front() - X.orbits[oi];
    if (shift != 0)
        for (Rat& v : tuple) v -= shift;
    return GroupoidHom{n, std::move(tuple)};
}

Int hom_module(const RationalArchSet& X, const GroupoidHom& phi) {
    return rat_num(phi.height() / X.step);
}

GroupoidElement generator_image(const GroupoidHom& phi, int m, int i) {
    check(i >= 0 && i <= phi.n, "generator_image: index out of range");
    const Rat& xi = phi.tuple[i];
    const Rat& xj = phi.tuple[i + 1];
    check(is_integral(xi) && is_integral(xj), "generator_image: tuple is not integral");
    long long a = (long long)rat_num(xi), b = (long long)rat_num(xj);
    long long src = ((a % (m + 1)) + (m + 1)) % (m + 1);
    return GroupoidElement{m, (int)src, b - a};
}

GroupoidHom act(const RationalArchSet& X, const GroupoidHom& z, const EpicyclicMap& gamma) {
    check(gamma.cod == z.n, "act: object mismatch");
    Rat h = z.height();
    auto eval = [&](long long t) {
        long long q = floor_div(t, z.n + 1);
        return z.tuple[(size_t)(t - q * (z.n + 1))] + Rat(q) * h;
    };
    std::vector<Rat> tuple(gamma.dom + 2);
    for (int i = 0; i <= gamma.dom; ++i) tuple[i] = eval(gamma.values[i]);
    tuple[gamma.dom + 1] = tuple[0] + Rat(gamma.module) * h;
    return groupoid_hom(X, std::move(tuple));
}

std::vector<GroupoidHom> enum_homs(const RationalArchSet& X, int n, const Rat& bound) {
    check(bound > 0 && is_integral(bound / X.step), "enum_homs: bound must be a positive multiple of the step");
    std::vector<GroupoidHom> out;
    Int kmax = rat_num(bound / X.step);
    for (Int k = 1; k <= kmax; ++k) {
        Rat h = Rat(k) * X.step;
        for (int oi = 0; oi < X.orbit_count(); ++oi) {
            Rat x0 = X.orbits[oi];
            std::vector<Rat> pts = points_in(X, x0, x0 + h);
            // non-decreasing interior chains, lexicographic
            std::vector<int> idx(n, 0);
            while (true) {
                std::vector<Rat> tuple(n + 2);
                tuple[0] = x0;
                for (int i = 0; i < n; ++i) tuple[i + 1] = pts[idx[i]];
                tuple[n + 1] = x0 + h;
                out.push_back(GroupoidHom{n, std::move(tuple)});
                int i = n - 1;
                while (i >= 0 && idx[i] == (int)pts.size() - 1) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < n; ++j) idx[j] = idx[i];
            }
        }
    }
    return out;
}

EpicyclicMap tuple_to_epicyclic(const GroupoidHom& phi, int m) {
    std::vector<int> v(phi.n + 1);
    for (int i = 0; i <= phi.n; ++i) {
        check(is_integral(phi.tuple[i]), "tuple_to_epicyclic: non-integral tuple");
        v[i] = (int)(long long)rat_num(phi.tuple[i]);
    }
    Rat k = phi.height() / Rat(m + 1);
    check(is_integral(k), "tuple_to_epicyclic: height is not a multiple of m+1");
    return epicyclic_map(phi.n, m, (int)(long long)rat_num(k), std::move(v));
}

GroupoidHom epicyclic_to_tuple(const EpicyclicMap& f) {
    std::vector<Rat> tuple(f.dom + 2);
    for (int i = 0; i <= f.dom; ++i) tuple[i] = Rat(f.values[i]);
    tuple[f.dom + 1] = Rat(f.values[0] + f.module * (f.cod + 1));
    return groupoid_hom(gm_model(f.cod), std::move(tuple));
}

GroupoidHom apply_arc(const RationalArchSet& X, const std::vector<Rat>& arc,
                      const GroupoidHom& g) {
    int r = (int)arc.size() - 1;
    auto eval = [&](const Rat& t) {
        check(is_integral(t), "apply_arc: non-integral index");
        long long v = (long long)rat_num(t);
        long long q = floor_div(v, r + 1);
        return arc[(size_t)(v - q * (r + 1))] + Rat(q) * X.step;
    };
    std::vector<Rat> tuple(g.n + 2);
    for (int i = 0; i <= g.n + 1; ++i) tuple[i] = eval(g.tuple[i]);
    return groupoid_hom(X, std::move(tuple));
}

Factorization factorize(const RationalArchSet& X, const GroupoidHom& phi) {
    const Rat x0 = phi.tuple.front();
    const Rat h = phi.height();
    Int k = rat_num(h / X.step);

    // split each point as y + a*step with y in [x0, x0+step], a in [0, k-1]
    int n = phi.n;
    std::vector<Int> copy_index(n + 2);
    std::vector<Rat> base_point(n + 2);
    std::set<Rat> interior;
    for (int j = 0; j <= n + 1; ++j) {
        Int a = step_floor(phi.tuple[j] - x0, X.step);
        if (a > k - 1) a = k - 1;  // top endpoint
        copy_index[j] = a;
        base_point[j] = phi.tuple[j] - Rat(a) * X.step;
        if (base_point[j] != x0 && base_point[j] != x0 + X.step) interior.insert(base_point[j]);
    }
    std::vector<Rat> Z(interior.begin(), interior.end());
    int r = (int)Z.size();

    std::vector<Rat> arc(r + 1);
    arc[0] = x0;
    for (int i = 0; i < r; ++i) arc[i + 1] = Z[i];

    std::vector<Rat> gt(n + 2);
    for (int j = 0; j <= n + 1; ++j) {
        Int pos;
        if (base_point[j] == x0)
            pos = 0;
        else if (base_point[j] == x0 + X.step)
            pos = r + 1;
        else
            pos = Int(std::lower_bound(Z.begin(), Z.end(), base_point[j]) - Z.begin()) + 1;
        gt[j] = Rat(pos + copy_index[j] * (r + 1));
    }
    GroupoidHom g = groupoid_hom(gm_model(r), std::move(gt));

    // canonical representative: rotate so that f(0) has the smallest
    // fundamental-domain representative among the image orbits
    int i0 = 0;
    Rat best = X.orbits[orbit_of(X, arc[0])];
    for (int i = 1; i <= r; ++i) {
        Rat rep = X.orbits[orbit_of(X, arc[i])];
        if (rep < best) {
            best = rep;
            i0 = i;
        }
    }
    if (i0 != 0) {
        std::vector<Rat> rot(r + 1);
        for (int i = 0; i <= r; ++i) {
            int s = i + i0;
            rot[i] = s <= r ? arc[s] : arc[s - (r + 1)] + X.step;
        }
        Rat shift = rot[0] - X.orbits[orbit_of(X, rot[0])];
        for (Rat& v : rot) v -= shift;
        arc = std::move(rot);
        std::vector<Rat> gshift(g.n + 2);
        for (int j = 0; j <= g.n + 1; ++j) gshift[j] = g.tuple[j] - i0;
        g = groupoid_hom(gm_model(r), std::move(gshift));
    }

    Factorization out{r, std::move(arc), std::move(g)};
    if (apply_arc(X, out.arc, out.g) != phi)
        throw std::logic_error("factorize: reconstruction failed");
    return out;
}

std::vector<GroupoidHom> interval_chains(const RationalArchSet& X, const ArchPoint& x, int n) {
    check(x.orbit_index >= 0 && x.orbit_index < X.orbit_count(), "interval_chains: bad orbit");
    check(x.height > 0 && is_integral(x.height / X.step), "interval_chains: bad height");
    Rat x0 = X.orbits[x.orbit_index];
    std::vector<Rat> pts = points_in(X, x0, x0 + x.height);
    std::vector<GroupoidHom> out;
    std::vector<int> idx(n, 0);
    while (true) {
        std::vector<Rat> tuple(n + 2);
        tuple[0] = x0;
        for (int i = 0; i < n; ++i) tuple[i + 1] = pts[idx[i]];
        tuple[n + 1] = x0 + x.height;
        out.push_back(GroupoidHom{n, std::move(tuple)});
        int i = n - 1;
        while (i >= 0 && idx[i] == (int)pts.size() - 1) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < n; ++j) idx[j] = idx[i];
    }
    return out;
}

ModPointReport mod_point(const RationalArchSet& X, const ArchPoint& x, int k_max) {
    ModPointReport rep;
    rep.pi_value = x.height;
    Rat x0 = X.orbits[x.orbit_index];
    GroupoidHom z{0, {x0, x0 + x.height}};
    rep.equivariance_ok = true;
    for (int k = 1; k <= k_max; ++k) {
        GroupoidHom y = act(X, z, iota(0, k));
        if (y.height() != Rat(k) * x.height) rep.equivariance_ok = false;
        if (orbit_of(X, y.tuple.front()) != x.orbit_index) rep.equivariance_ok = false;
    }
    // every positive multiple of the step is a height, hence pi is onto
    rep.surjective_ok = true;
    for (int j = 1; j <= k_max; ++j) {
        GroupoidHom w{0, {X.orbits[0], X.orbits[0] + Rat(j) * X.step}};
        if (w.height() != Rat(j) * X.step) rep.surjective_ok = false;
    }
    return rep;
}

std::optional<GroupoidHom> equivalence_witness(const RationalArchSet& X, const ArchPoint& x,
                                               const ArchPoint& xp) {
    if (x.height != xp.height) return std::nullopt;
    Rat base = X.orbits[xp.orbit_index];
    for (const Rat& p : points_in(X, base, base + x.height)) {
        if (orbit_of(X, p) != x.orbit_index) continue;
        GroupoidHom z{1, {base, p, base + x.height}};
        // F(delta_0) z has base p, F(delta_1) z has base x'
        GroupoidHom a = act(X, z, embed(delta_coface(1, 0)));
        GroupoidHom b = act(X, z, embed(delta_coface(1, 1)));
        if (orbit_of(X, a.tuple.front()) == x.orbit_index && a.height() == x.height &&
            orbit_of(X, b.tuple.front()) == xp.orbit_index && b.height() == xp.height)
            return z;
    }
    return std::nullopt;
}

OmegaReport omega_k_check(const RationalArchSet& X, const ArchPoint& x, int k, int n) {
    OmegaReport rep;
    Rat x0 = X.orbits[x.orbit_index];
    Rat h = x.height;
    std::vector<Rat> I = points_in(X, x0, x0 + h);
    int p = (int)I.size() - 2;
    std::vector<Rat> Ik = points_in(X, x0, x0 + Rat(k) * h);

    // the concatenation of k copies of I, glued top-to-bottom
    int total = k * (p + 1) + 1;
    auto omega_point = [&](int t) {
        int a = std::min(t / (p + 1), k - 1);
        int s = t - a * (p + 1);
        return I[s] + Rat(a) * h;
    };
    rep.point_iso_ok = (int)Ik.size() == total;
    if (rep.point_iso_ok)
        for (int t = 0; t < total; ++t)
            if (omega_point(t) != Ik[(size_t)t]) rep.point_iso_ok = false;

    // chains at level n, mapped elementwise and compared with F at height kh
    std::vector<std::vector<Rat>> mapped;
    std::vector<IntervalMap> lhs = interval_homs(n, k * (p + 1) - 1);
    for (const auto& c : lhs) {
        std::vector<Rat> t(n + 2);
        for (int j = 0; j <= n + 1; ++j) t[j] = omega_point(c.values[j]);
        mapped.push_back(std::move(t));
    }
    std::vector<std::vector<Rat>> rhs;
    for (const auto& z : interval_chains(X, ArchPoint{x.orbit_index, Rat(k) * h}, n))
        rhs.push_back(z.tuple);
    rep.chain_count = (long long)rhs.size();
    rep.chains_match = mapped == rhs;

    // the defining formula omega_k(z, rho) = F(Id_m^k . rho) z, with (z, rho)
    // the canonical factorization of each chain
    rep.formula_ok = true;
    for (size_t ci = 0; ci < lhs.size(); ++ci) {
        auto fac = factor_through_subdivision(lhs[ci], k);
        std::vector<Rat> zt(fac.r + 2);
        for (int j = 0; j <= fac.r + 1; ++j) zt[j] = I[fac.alpha.values[j]];
        GroupoidHom z{fac.r, std::move(zt)};
        EpicyclicMap gamma = compose(id_n_k(fac.r, k), embed(fac.beta));
        GroupoidHom res = act(X, z, gamma);
        if (res.tuple != mapped[ci]) rep.formula_ok = false;
    }
    return rep;
}

Reconstruction reconstruct(const RationalArchSet& X, const ArchPoint& x, int level) {
    check(level >= 1, "reconstruct: level must be >= 1");
    Reconstruction out;
    Rat x0 = X.orbits[x.orbit_index];
    Rat h = x.height;

    // J as the union of the interval towers I_{F(iota(k)) x}, k | level,
    // included at the top level through the first-copy sections
    std::set<Rat> J;
    out.nesting_ok = true;
    for (int k = 1; k <= level; ++k) {
        if (level % k != 0) continue;
        int q = level / k;
        std::set<Rat> image;
        for (const auto& z : interval_chains(X, ArchPoint{x.orbit_index, Rat(k) * h}, 1)) {
            GroupoidHom w = q == 1 ? z : act(X, z, psi_kj(q, 0));
            image.insert(w.tuple[1]);
        }
        for (const Rat& v : image)
            if (v < x0 || v > x0 + Rat(k) * h) out.nesting_ok = false;
        J.insert(image.begin(), image.end());
    }
    out.J.assign(J.begin(), J.end());

    // graph of the height translation via the psi maps at the top level
    std::set<std::pair<Rat, Rat>> graph;
    if (level >= 2)
        for (int j = 0; j + 1 < level; ++j)
            for (const auto& z : interval_chains(X, x, 1)) {
                GroupoidHom a = act(X, z, psi_kj(level, j));
                GroupoidHom b = act(X, z, psi_kj(level, j + 1));
                graph.emplace(a.tuple[1], b.tuple[1]);
            }
    out.h_graph.assign(graph.begin(), graph.end());

    // ground truth
    std::vector<Rat> gtJ = points_in(X, x0, x0 + Rat(level) * h);
    std::vector<std::pair<Rat, Rat>> gtG;
    if (level >= 2)
        for (const Rat& y : points_in(X, x0, x0 + Rat(level - 1) * h)) gtG.emplace_back(y, y + h);
    out.matches_ground_truth = (out.J == gtJ) && (out.h_graph == gtG);
    return out;
}

RationalArchSet extension_of_scalars(long long N, int m) {
    check(N >= 1 && m >= 1, "extension_of_scalars: bad parameters");
    std::vector<Rat> orbits;
    for (int i = 0; i < m; ++i) orbits.emplace_back(Rat(i, (long long)m * N));
    return arch_set(Rat(1, N), std::move(orbits));
}

}  // namespace epicat
