#include "epicat/homology.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "epicat/lambda_ring.hpp"

namespace epicat {

namespace {

void check(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void require(bool cond, const char* msg) {
    if (!cond) throw std::runtime_error(msg);
}

Rat int_pow(int base, int e) {
    Rat r = 1;
    Rat b(base);
    if (e < 0) {
        b = Rat(1) / b;
        e = -e;
    }
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

SpMat sp_pow(const SpMat& A, int e) {
    SpMat r = SpMat::identity(A.rows);
    for (int i = 0; i < e; ++i) r = sp_mul(A, r);
    return r;
}

bool sp_pow_check(const SpMat& A, int e) { return sp_pow(A, e) == SpMat::identity(A.rows); }

}  // namespace

CommRing comm_ring(int rank, Coeff coeff, std::vector<Rat> unit,
                   std::vector<std::vector<std::vector<Rat>>> mult) {
    check(rank >= 1, "comm_ring: rank must be positive");
    check((int)unit.size() == rank, "comm_ring: unit vector size");
    check((int)mult.size() == rank, "comm_ring: tensor size");
    for (const auto& mi : mult) {
        check((int)mi.size() == rank, "comm_ring: tensor size");
        for (const auto& mij : mi) check((int)mij.size() == rank, "comm_ring: tensor size");
    }
    if (coeff == Coeff::Z) {
        for (const auto& u : unit) check(is_integral(u), "comm_ring: non-integral unit over Z");
        for (const auto& mi : mult)
            for (const auto& mij : mi)
                for (const auto& c : mij)
                    check(is_integral(c), "comm_ring: non-integral structure constant over Z");
    }
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            for (int l = 0; l < rank; ++l)
                check(mult[i][j][l] == mult[j][i][l], "comm_ring: not commutative");
    // associativity
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            for (int l = 0; l < rank; ++l)
                for (int b = 0; b < rank; ++b) {
                    Rat lhs = 0, rhs = 0;
                    for (int a = 0; a < rank; ++a) {
                        lhs += mult[i][j][a] * mult[a][l][b];
                        rhs += mult[j][l][a] * mult[i][a][b];
                    }
                    check(lhs == rhs, "comm_ring: not associative");
                }
    // two-sided unit
    for (int i = 0; i < rank; ++i)
        for (int l = 0; l < rank; ++l) {
            Rat s = 0;
            for (int a = 0; a < rank; ++a) s += unit[a] * mult[a][i][l];
            check(s == (i == l ? Rat(1) : Rat(0)), "comm_ring: unit law fails");
        }
    return CommRing{rank, coeff, std::move(unit), std::move(mult)};
}

CommRing ring_ground(Coeff c) {
    return comm_ring(1, c, {Rat(1)}, {{{Rat(1)}}});
}

CommRing ring_dual_numbers(Coeff c) {
    std::vector<std::vector<std::vector<Rat>>> m(2,
        std::vector<std::vector<Rat>>(2, std::vector<Rat>(2, Rat(0))));
    m[0][0][0] = 1;
    m[0][1][1] = 1;
    m[1][0][1] = 1;
    return comm_ring(2, c, {Rat(1), Rat(0)}, std::move(m));
}

CommRing ring_split_pair() {
    std::vector<std::vector<std::vector<Rat>>> m(2,
        std::vector<std::vector<Rat>>(2, std::vector<Rat>(2, Rat(0))));
    m[0][0][0] = 1;
    m[1][1][1] = 1;
    return comm_ring(2, Coeff::Q, {Rat(1), Rat(1)}, std::move(m));
}

std::string ring_to_json(const CommRing& R) {
    nlohmann::ordered_json j;
    j["rank"] = R.rank;
    auto& u = j["unit"] = nlohmann::ordered_json::array();
    for (const auto& x : R.unit) u.push_back(rat_str(x));
    auto& m = j["mult"] = nlohmann::ordered_json::array();
    for (const auto& mi : R.mult) {
        nlohmann::ordered_json ji = nlohmann::ordered_json::array();
        for (const auto& mij : mi) {
            nlohmann::ordered_json jij = nlohmann::ordered_json::array();
            for (const auto& c : mij) jij.push_back(rat_str(c));
            ji.push_back(jij);
        }
        m.push_back(ji);
    }
    j["coeff"] = R.coeff == Coeff::Z ? "Z" : "Q";
    return j.dump();
}

namespace {
Rat json_rat(const nlohmann::json& v) {
    if (v.is_string()) return rat_parse(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long long>());
    throw std::invalid_argument("ring_from_json: entries must be integers or rational strings");
}
}  // namespace

CommRing ring_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    int rank = j.at("rank").get<int>();
    std::string cs = j.at("coeff").get<std::string>();
    check(cs == "Z" || cs == "Q", "ring_from_json: coeff must be Z or Q");
    std::vector<Rat> unit;
    for (const auto& v : j.at("unit")) unit.push_back(json_rat(v));
    std::vector<std::vector<std::vector<Rat>>> mult;
    for (const auto& mi : j.at("mult")) {
        std::vector<std::vector<Rat>> a;
        for (const auto& mij : mi) {
            std::vector<Rat> b;
            for (const auto& v : mij) b.push_back(json_rat(v));
            a.push_back(std::move(b));
        }
        mult.push_back(std::move(a));
    }
    return comm_ring(rank, cs == "Z" ? Coeff::Z : Coeff::Q, std::move(unit), std::move(mult));
}

const SpMat& CyclicModulePresentation::epi_at(int n, int k) const {
    auto it = epi.find({n, k});
    if (it == epi.end())
        throw std::invalid_argument("presentation: missing epicyclic table entry");
    return it->second;
}

namespace {

using SparseElem = std::map<int, Rat>;  // element of R as basis expansion

SparseElem ring_mul(const CommRing& R, const SparseElem& a, const SparseElem& b) {
    SparseElem out;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b)
            for (int l = 0; l < R.rank; ++l) {
                const Rat& c = R.mult[i][j][l];
                if (c != 0) out[l] += ci * cj * c;
            }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// Matrix of the tensor operation induced by a set map u : [0..n] -> [0..m];
// tensor factors landing in the same slot multiply, empty slots get the unit.
SpMat induced_matrix(const CommRing& R, const std::vector<int>& u, int m) {
    int n = (int)u.size() - 1;
    int d = R.rank;
    long long cols = 1, rows = 1;
    for (int i = 0; i <= n; ++i) cols *= d;
    for (int i = 0; i <= m; ++i) rows *= d;
    SpMat M((int)rows, (int)cols);

    SparseElem unit_elem;
    for (int l = 0; l < d; ++l)
        if (R.unit[l] != 0) unit_elem[l] = R.unit[l];

    std::vector<int> digits(n + 1);
    for (long long ci = 0; ci < cols; ++ci) {
        long long rest = ci;
        for (int t = n; t >= 0; --t) {
            digits[t] = (int)(rest % d);
            rest /= d;
        }
        std::vector<SparseElem> slot(m + 1);
        bool zero = false;
        for (int t = 0; t <= m && !zero; ++t) {
            SparseElem e;
            bool first = true;
            for (int x = 0; x <= n; ++x) {
                if (u[x] != t) continue;
                if (first) {
                    e[digits[x]] = 1;
                    first = false;
                } else {
                    SparseElem f;
                    f[digits[x]] = 1;
                    e = ring_mul(R, e, f);
                }
            }
            if (first) e = unit_elem;
            if (e.empty()) zero = true;
            slot[t] = std::move(e);
        }
        if (zero) continue;
        // tensor-combine the slots, big-endian index
        std::vector<std::pair<long long, Rat>> acc = {{0, Rat(1)}};
        for (int t = 0; t <= m; ++t) {
            std::vector<std::pair<long long, Rat>> next;
            next.reserve(acc.size() * slot[t].size());
            for (const auto& [idx, c] : acc)
                for (const auto& [l, cl] : slot[t]) next.emplace_back(idx * d + l, c * cl);
            acc = std::move(next);
        }
        std::map<long long, Rat> merged;
        for (const auto& [idx, c] : acc) merged[idx] += c;
        auto& out = M.col[(size_t)ci];
        for (const auto& [idx, c] : merged)
            if (c != 0) out.emplace_back((int)idx, c);
    }
    return M;
}

}  // namespace

CyclicModulePresentation ring_module(const CommRing& R, int N, long long rank_cap) {
    check(N >= 1, "ring_module: cap must be >= 1");
    Int top_rank = 1;
    for (int i = 0; i <= N; ++i) top_rank *= R.rank;
    if (top_rank > rank_cap)
        throw capacity_error("ring_module: rank at the degree cap exceeds the size cap");

    CyclicModulePresentation P;
    P.coeff = R.coeff;
    P.cap = N;
    P.rank.resize(N + 1);
    {
        long long r = R.rank;
        for (int n = 0; n <= N; ++n) {
            P.rank[n] = (int)r;
            if (n < N) r *= R.rank;
        }
    }
    P.face.resize(N + 1);
    P.degeneracy.resize(N + 1);
    P.cyclic.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
        P.cyclic[n] = induced_matrix(R, finstar(tau(n)), n);
        if (n >= 1) {
            for (int i = 0; i <= n; ++i)
                P.face[n].push_back(induced_matrix(R, finstar(embed(face(n, i))), n - 1));
            for (int j = 0; j <= n - 1; ++j)
                P.degeneracy[n].push_back(
                    induced_matrix(R, finstar(embed(degeneracy(n - 1, j))), n));
        }
    }
    for (int n = 0; n <= N; ++n)
        for (int k = 1; k * (n + 1) - 1 <= N; ++k)
            P.epi[{n, k}] = induced_matrix(R, finstar(id_n_k(n, k)), n);
    return P;
}

SpMat evaluate(const CyclicModulePresentation& P, const EpicyclicMap& f) {
    int n = f.dom, m = f.cod, k = f.module;
    int K = k * (m + 1) - 1;
    check(n <= P.cap && K <= P.cap, "evaluate: degree cap exceeded");

    int a = f.values[0];
    std::vector<int> w(n + 2);
    for (int i = 0; i <= n; ++i) w[i] = f.values[i] - a;
    w[n + 1] = K + 1;
    IntervalMap ival = interval_map(n, K, std::move(w));

    SpMat M = SpMat::identity(P.rank[n]);
    auto tokens = generator_factorization(ival);
    for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
        const SpMat& G = it->is_degeneracy ? P.degeneracy[it->level + 1][it->index]
                                           : P.face[it->level][it->index];
        M = sp_mul(G, M);
    }
    if (a > 0) M = sp_mul(sp_pow(P.cyclic[K], a), M);
    if (k > 1) M = sp_mul(P.epi_at(m, k), M);
    return M;
}

void validate(const CyclicModulePresentation& P, int n_limit, int k_limit) {
    if (n_limit < 0 || n_limit > P.cap) n_limit = P.cap;

    // generators with stored matrices up to the limit
    struct Gen {
        EpicyclicMap f;
        const SpMat* M;
    };
    std::vector<Gen> gens;
    for (int n = 0; n <= n_limit; ++n) {
        gens.push_back({tau(n), &P.cyclic[n]});
        if (n >= 1)
            for (int i = 0; i <= n; ++i) gens.push_back({embed(face(n, i)), &P.face[n][i]});
        if (n >= 1)
            for (int j = 0; j <= n - 1; ++j)
                gens.push_back({embed(degeneracy(n - 1, j)), &P.degeneracy[n][j]});
        for (int k = 2; k <= k_limit && k * (n + 1) - 1 <= n_limit; ++k)
            if (P.has_epi(n, k)) gens.push_back({id_n_k(n, k), &P.epi.at({n, k})});
    }
    // pairwise functoriality against the canonical evaluator; this subsumes
    // the simplicial, cyclic and epicyclic relation instances as exact
    // matrix identities (both orderings reduce to the same evaluation)
    for (const auto& g2 : gens)
        for (const auto& g1 : gens) {
            if (g1.f.cod != g2.f.dom) continue;
            EpicyclicMap c = compose(g2.f, g1.f);
            if (c.module * (c.cod + 1) - 1 > n_limit) continue;  // tables end here
            SpMat lhs = sp_mul(*g2.M, *g1.M);
            SpMat rhs = evaluate(P, c);
            require(lhs == rhs, "validate: generator pair fails functoriality");
        }
    // named instances directly between stored matrices
    for (int n = 2; n <= n_limit; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                require(sp_mul(P.face[n - 1][i], P.face[n][j]) ==
                            sp_mul(P.face[n - 1][j - 1], P.face[n][i]),
                        "validate: face identity fails");
    for (int n = 0; n <= n_limit; ++n)
        require(sp_pow_check(P.cyclic[n], n + 1), "validate: tau^{n+1} != id");
    for (int n = 0; n <= n_limit; ++n)
        for (int k = 1; k * (n + 1) - 1 <= n_limit; ++k) {
            if (!P.has_epi(n, k)) continue;
            int K = k * (n + 1) - 1;
            require(sp_mul(P.cyclic[n], P.epi_at(n, k)) ==
                        sp_mul(P.epi_at(n, k), P.cyclic[K]),
                    "validate: tau Id^k relation fails");
            for (int l = 1; l * (K + 1) - 1 <= n_limit; ++l) {
                if (!P.has_epi(K, l) || !P.has_epi(n, k * l)) continue;
                require(sp_mul(P.epi_at(n, k), P.epi_at(K, l)) == P.epi_at(n, k * l),
                        "validate: Id^k Id^l relation fails");
            }
        }
}

CyclicModulePresentation twist(const CyclicModulePresentation& P, int j) {
    if (j < 0) check(P.coeff == Coeff::Q, "twist: negative twist needs rational coefficients");
    CyclicModulePresentation Q = P;
    for (auto& [key, mat] : Q.epi) mat = sp_scale(mat, int_pow(key.second, j));
    return Q;
}

NormalizedComplex normalized_complex(const CyclicModulePresentation& P, int top) {
    check(top <= P.cap, "normalized_complex: degree cap exceeded");
    NormalizedComplex nc;
    nc.top = top;
    nc.dim.resize(top + 1);
    nc.proj.resize(top + 1);
    nc.sect.resize(top + 1);
    nc.bbar.resize(top + 1);
    nc.Bbar.resize(top + 1);

    for (int n = 0; n <= top; ++n) {
        int r = P.rank[n];
        if (n == 0) {
            nc.dim[0] = r;
            nc.proj[0] = QMat::identity(r);
            nc.sect[0] = QMat::identity(r);
            continue;
        }
        QMat span(r, n * P.rank[n - 1]);
        for (int j = 0; j <= n - 1; ++j) {
            QMat D = sp_to_dense(P.degeneracy[n][j]);
            for (int c = 0; c < D.cols; ++c)
                for (int i = 0; i < r; ++i) span.at(i, j * D.cols + c) = D.at(i, c);
        }
        // scale columns to integers; over Q this keeps the span
        IMat spani(span.rows, span.cols);
        for (int c = 0; c < span.cols; ++c) {
            Int l = 1;
            for (int i = 0; i < span.rows; ++i) l = lcm(l, rat_den(span.at(i, c)));
            for (int i = 0; i < span.rows; ++i)
                spani.at(i, c) = rat_num(span.at(i, c) * Rat(l));
        }
        SmithForm s = smith_normal_form(spani);
        if (P.coeff == Coeff::Z)
            for (const Int& d : s.invariants)
                require(d == 1, "normalized_complex: degeneracy image is not a direct summand");
        int q = r - s.rank;
        nc.dim[n] = q;
        nc.proj[n] = QMat(q, r);
        nc.sect[n] = QMat(r, q);
        for (int i = 0; i < q; ++i)
            for (int c = 0; c < r; ++c) nc.proj[n].at(i, c) = Rat(s.U.at(s.rank + i, c));
        for (int i = 0; i < r; ++i)
            for (int c = 0; c < q; ++c) nc.sect[n].at(i, c) = Rat(s.Uinv.at(i, s.rank + c));
    }

    // induced differentials; both must kill the degenerate part
    for (int n = 1; n <= top; ++n) {
        QMat bE(P.rank[n - 1], P.rank[n]);
        for (int i = 0; i <= n; ++i) {
            QMat F = sp_to_dense(P.face[n][i]);
            bE = i % 2 == 0 ? add(bE, F) : sub(bE, F);
        }
        for (int j = 0; j <= n - 1; ++j)
            require(is_zero(mul(nc.proj[n - 1], mul(bE, sp_to_dense(P.degeneracy[n][j])))),
                    "normalized_complex: b does not preserve the degenerate part");
        nc.bbar[n] = mul(nc.proj[n - 1], mul(bE, nc.sect[n]));
    }
    for (int n = 0; n < top; ++n) {
        QMat A(P.rank[n], P.rank[n]);
        QMat cyc = sp_to_dense(P.cyclic[n]);
        QMat power = QMat::identity(P.rank[n]);
        EpicyclicMap t = tau(n), cur = epicyclic_identity(n);
        for (int i = 0; i <= n; ++i) {
            int sign = signature(finstar(cur));
            A = sign > 0 ? add(A, power) : sub(A, power);
            power = mul(cyc, power);
            cur = compose(t, cur);
        }
        QMat B0 = mul(sp_to_dense(P.cyclic[n + 1]), sp_to_dense(P.degeneracy[n + 1][n]));
        QMat BE = mul(B0, A);
        for (int j = 0; n >= 1 && j <= n - 1; ++j)
            require(is_zero(mul(nc.proj[n + 1], mul(BE, sp_to_dense(P.degeneracy[n][j])))),
                    "normalized_complex: B does not preserve the degenerate part");
        nc.Bbar[n] = mul(nc.proj[n + 1], mul(BE, nc.sect[n]));
    }

    // b^2 = B^2 = bB + Bb = 0 on the normalized complex
    for (int n = 2; n <= top; ++n)
        require(is_zero(mul(nc.bbar[n - 1], nc.bbar[n])), "normalized_complex: b^2 != 0");
    for (int n = 0; n + 1 < top; ++n)
        require(is_zero(mul(nc.Bbar[n + 1], nc.Bbar[n])), "normalized_complex: B^2 != 0");
    for (int n = 1; n < top; ++n)
        require(is_zero(add(mul(nc.bbar[n + 1], nc.Bbar[n]), mul(nc.Bbar[n - 1], nc.bbar[n]))),
                "normalized_complex: bB + Bb != 0");
    if (top >= 1)
        require(is_zero(mul(nc.bbar[1], nc.Bbar[0])), "normalized_complex: bB != 0 in degree 0");
    return nc;
}

std::vector<int> total_components(int n) {
    std::vector<int> out;
    for (int m = n % 2; m <= n; m += 2) out.push_back(m);
    return out;
}

namespace {

int total_dim(const NormalizedComplex& nc, int n) {
    int d = 0;
    for (int m : total_components(n)) d += nc.dim[m];
    return d;
}

std::vector<int> offsets_of(const NormalizedComplex& nc, int n) {
    std::vector<int> off;
    int cur = 0;
    for (int m : total_components(n)) {
        off.push_back(cur);
        cur += nc.dim[m];
    }
    return off;
}

void place_block(QMat& M, const QMat& B, int row0, int col0) {
    for (int i = 0; i < B.rows; ++i)
        for (int j = 0; j < B.cols; ++j) M.at(row0 + i, col0 + j) = B.at(i, j);
}

}  // namespace

QMat total_differential(const NormalizedComplex& nc, int n) {
    if (n == 0) return QMat(0, total_dim(nc, 0));
    auto src = total_components(n);
    auto dst = total_components(n - 1);
    auto src_off = offsets_of(nc, n);
    auto dst_off = offsets_of(nc, n - 1);
    auto dst_pos = [&](int m) {
        for (size_t i = 0; i < dst.size(); ++i)
            if (dst[i] == m) return (int)i;
        return -1;
    };
    QMat D(total_dim(nc, n - 1), total_dim(nc, n));
    for (size_t s = 0; s < src.size(); ++s) {
        int m = src[s];
        if (m >= 1) place_block(D, nc.bbar[m], dst_off[(size_t)dst_pos(m - 1)], src_off[s]);
        int t = dst_pos(m + 1);
        if (t >= 0) place_block(D, nc.Bbar[m], dst_off[(size_t)t], src_off[s]);
    }
    return D;
}

HomologyResult hc(const CyclicModulePresentation& P, int n) {
    check(n >= 0, "hc: negative degree");
    check(n + 1 <= P.cap, "hc: degree cap exceeded");
    NormalizedComplex nc = normalized_complex(P, n + 1);
    QMat A = total_differential(nc, n);
    QMat B = total_differential(nc, n + 1);

    HomologyResult out;
    out.degree = n;
    out.coeff = P.coeff;
    if (P.coeff == Coeff::Q) {
        QMat K = kernel_of(A);
        int rb = rank_of(B);
        out.free_rank = K.cols - rb;
        // cycle representatives: kernel columns extending a basis of the image
        QMat comb = hcat(B, K);
        auto piv = independent_columns(comb);
        QMat reps((int)K.rows, (int)out.free_rank);
        int c = 0;
        for (int p : piv)
            if (p >= B.cols) {
                for (int i = 0; i < K.rows; ++i) reps.at(i, c) = K.at(i, p - B.cols);
                ++c;
            }
        out.cycles = std::move(reps);
    } else {
        IMat Ai = to_integer(A), Bi = to_integer(B);
        IMat K = kernel_lattice(Ai);
        IMat X = solve_integral(K, Bi);
        SmithForm s = smith_normal_form(X);
        out.free_rank = K.cols - s.rank;
        for (const Int& d : s.invariants)
            if (d > 1) out.torsion.push_back(d);
    }
    return out;
}

namespace {

QMat theta_component(const CyclicModulePresentation& P, const NormalizedComplex& nc, int k,
                     int n_total, int m) {
    check(m >= 0 && m <= n_total && (n_total - m) % 2 == 0, "theta: bad bidegree");
    check(m <= nc.top, "theta: component beyond the computed range");
    // E(Lambda_m^k) = sum of signs epi . E(embedded sigma element)
    SpMat acc(P.rank[m], P.rank[m]);
    const SpMat& epi = P.epi_at(m, k);
    for (const auto& a : sigma_set(m, k)) {
        SpMat E = evaluate(P, embed(a.map));
        SpMat term = sp_mul(epi, E);
        int sign = signature(perm_of(a));
        acc = sp_add(acc, sign > 0 ? term : sp_scale(term, Rat(-1)));
    }
    QMat lam = sp_to_dense(acc);
    // Lambda preserves the degenerate part, so it induces a quotient map
    for (int j = 0; m >= 1 && j <= m - 1; ++j)
        require(is_zero(mul(nc.proj[m], mul(lam, sp_to_dense(P.degeneracy[m][j])))),
                "theta: Lambda does not preserve the degenerate part");
    QMat induced = mul(nc.proj[m], mul(lam, nc.sect[m]));
    return scale(induced, int_pow(k, (n_total - m) / 2));
}

QMat theta_block(const CyclicModulePresentation& P, const NormalizedComplex& nc, int k, int n) {
    auto comps = total_components(n);
    auto off = offsets_of(nc, n);
    QMat T(total_dim(nc, n), total_dim(nc, n));
    for (size_t s = 0; s < comps.size(); ++s)
        place_block(T, theta_component(P, nc, k, n, comps[s]), off[s], off[s]);
    return T;
}

}  // namespace

QMat theta_matrix(const CyclicModulePresentation& P, const NormalizedComplex& nc, int k,
                  int n_total, int m) {
    return theta_component(P, nc, k, n_total, m);
}

QMat theta_total(const CyclicModulePresentation& P, const NormalizedComplex& nc, int k, int n) {
    QMat T = theta_block(P, nc, k, n);
    if (n >= 1) {
        QMat D = total_differential(nc, n);
        QMat Tprev = theta_block(P, nc, k, n - 1);
        require(mul(Tprev, D) == mul(D, T), "theta: not a chain map for b + B");
    }
    return T;
}

WeightReport lambda_weights(const CyclicModulePresentation& P, int k, int n) {
    check(k >= 1, "lambda_weights: k must be positive");
    NormalizedComplex nc = normalized_complex(P, n + 1);
    QMat A = total_differential(nc, n);
    QMat Bm = total_differential(nc, n + 1);
    QMat K = kernel_of(A);

    // independent image columns inside the cycle space
    auto piv_b = independent_columns(Bm);
    QMat J((int)A.cols, (int)piv_b.size());
    for (size_t c = 0; c < piv_b.size(); ++c)
        for (int i = 0; i < A.cols; ++i) J.at(i, (int)c) = Bm.at(i, piv_b[c]);
    // homology representatives: kernel columns completing the image
    QMat comb = hcat(J, K);
    auto piv = independent_columns(comb);
    std::vector<int> rep_cols;
    for (int p : piv)
        if (p >= J.cols) rep_cols.push_back(p - J.cols);
    int dimH = (int)rep_cols.size();
    QMat H((int)A.cols, dimH);
    for (int c = 0; c < dimH; ++c)
        for (int i = 0; i < A.cols; ++i) H.at(i, c) = K.at(i, rep_cols[(size_t)c]);

    QMat T = theta_total(P, nc, k, n);
    QMat W = hcat(H, J);
    QMat Y;
    require(solve_linear(W, mul(T, H), Y), "lambda_weights: theta does not preserve cycles");
    QMat M(dimH, dimH);
    for (int i = 0; i < dimH; ++i)
        for (int j = 0; j < dimH; ++j) M.at(i, j) = Y.at(i, j);

    WeightReport rep;
    auto scan = [&](int lo, int hi) {
        rep.weights.clear();
        int found = 0;
        for (int j = lo; j <= hi && found < dimH; ++j) {
            QMat S = M;
            Rat lam = int_pow(k, j);
            for (int i = 0; i < dimH; ++i) S.at(i, i) -= lam;
            int mult = dimH - rank_of(S);
            for (int t = 0; t < mult; ++t) rep.weights.push_back(j);
            found += mult;
        }
        return found == dimH;
    };
    rep.complete = scan(0, n);
    if (!rep.complete && k >= 2) {
        rep.complete = scan(-16, n + 16);
        if (rep.complete) rep.note = "weights found outside [0, n]";
    }
    if (!rep.complete) {
        // characteristic polynomial by the Faddeev-LeVerrier recursion
        std::vector<Rat> coeff(dimH + 1);
        coeff[0] = 1;
        QMat Mk = QMat::identity(dimH);
        for (int i = 1; i <= dimH; ++i) {
            Mk = mul(M, Mk);
            Rat tr = 0;
            for (int t = 0; t < dimH; ++t) tr += Mk.at(t, t);
            coeff[i] = -tr / Rat(i);
            for (int t = 0; t < dimH; ++t) Mk.at(t, t) += coeff[i];
        }
        std::ostringstream os;
        os << "eigenvalues are not all powers of k; charpoly coefficients:";
        for (const auto& c : coeff) os << " " << rat_str(c);
        rep.note = os.str();
    }
    return rep;
}

bool s_operator_check(const CyclicModulePresentation& P, int k, int n_max) {
    NormalizedComplex nc = normalized_complex(P, n_max);
    for (int n = 2; n <= n_max; ++n) {
        auto src = total_components(n);
        auto dst = total_components(n - 2);
        auto src_off = offsets_of(nc, n);
        auto dst_off = offsets_of(nc, n - 2);
        QMat S(total_dim(nc, n - 2), total_dim(nc, n));
        for (size_t i = 0; i < dst.size(); ++i)
            place_block(S, QMat::identity(nc.dim[dst[i]]), dst_off[i], src_off[i]);
        QMat lhs = mul(S, theta_block(P, nc, k, n));
        QMat rhs = scale(mul(theta_block(P, nc, k, n - 2), S), Rat(k));
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace epicat
