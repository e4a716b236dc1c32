// epicat: batch interface for the simplicial/cyclic/epicyclic engine.
// Subcommands: verify (identity suites), sigma (Sigma_n^k enumeration),
// hc (cyclic homology of a ring module), point (interval/reconstruction
// reports over rational archimedean data).
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or
// input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "epicat/groupoid.hpp"
#include "epicat/homology.hpp"
#include "epicat/lambda_ring.hpp"
#include "epicat/report.hpp"
#include "epicat/suites.hpp"

using namespace epicat;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

long long default_cap() {
    if (const char* env = std::getenv("EPICAT_CAP")) {
        try {
            return std::stoll(env);
        } catch (...) {
            throw std::invalid_argument("EPICAT_CAP is not an integer");
        }
    }
    return 4096;
}

int emit_report(const Report& rep, const std::string& command, const std::string& format) {
    if (format == "csv")
        std::cout << report_to_csv(rep);
    else
        std::cout << report_to_json(rep, command) << "\n";
    return rep.all_ok() ? 0 : 1;
}

int cmd_verify(const std::string& suite, int n_max, int k_max, int l_max, int jobs,
               const std::string& format) {
    Report rep;
    bool any = false;
    if (suite == "identities" || suite == "all") {
        rep.append(run_identity_suite(n_max, k_max, l_max, jobs));
        any = true;
    }
    if (suite == "presentation" || suite == "all") {
        rep.append(run_presentation_suite(n_max, k_max, jobs));
        any = true;
    }
    if (suite == "triangulation" || suite == "all") {
        rep.append(run_triangulation_suite(n_max, k_max, jobs));
        any = true;
    }
    if (suite == "groupoid" || suite == "all") {
        rep.append(run_groupoid_suite(n_max, k_max, jobs));
        any = true;
    }
    if (!any) throw std::invalid_argument("unknown suite: " + suite);
    rep.sort_rows();
    return emit_report(rep, "verify --suite " + suite, format);
}

int cmd_sigma(int n, int k, long long cap, const std::string& format) {
    double size = 1;
    for (int i = 0; i < n; ++i) size *= k;
    if (size > (double)cap) throw capacity_error("sigma: k^n exceeds the size cap");

    auto elements = sigma_set(n, k);
    std::map<std::vector<int>, long long> per_perm;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& a : elements) {
        auto perm = perm_of(a);
        ++per_perm[perm];
        nlohmann::ordered_json o;
        o["label"] = a.label;
        o["values"] = a.map.values;
        o["morphism"] =
            nlohmann::ordered_json::parse(epicyclic_to_json(compose(id_n_k(n, k), embed(a.map))));
        o["perm"] = perm;
        o["descents"] = descent_number(perm);
        o["sign"] = signature(perm);
        rows.push_back(o);
    }
    bool counts_ok = (long long)elements.size() == (long long)size;
    for (const auto& [perm, c] : per_perm)
        if (Int(c) != descent_count(perm, n, k)) counts_ok = false;

    if (format == "csv") {
        std::cout << "label,values,perm,descents,sign\n";
        for (const auto& o : rows) {
            auto join = [](const nlohmann::ordered_json& arr) {
                std::string s;
                for (const auto& v : arr) {
                    if (!s.empty()) s += " ";
                    s += std::to_string(v.get<long long>());
                }
                return s;
            };
            std::cout << join(o["label"]) << "," << join(o["values"]) << "," << join(o["perm"])
                      << "," << o["descents"] << "," << o["sign"] << "\n";
        }
    } else {
        nlohmann::ordered_json j;
        j["command"] = "sigma";
        j["n"] = n;
        j["k"] = k;
        j["count"] = elements.size();
        j["rows"] = rows;
        j["descent_formula_ok"] = counts_ok;
        std::cout << j.dump(2) << "\n";
    }
    return counts_ok ? 0 : 1;
}

int cmd_hc(const std::string& module_path, int n_max, std::vector<int> ks, int twist_j,
           long long cap, const std::string& format) {
    CommRing R = ring_from_json(slurp(module_path));
    if (ks.empty()) ks = {2, 3};
    int need = n_max + 1;
    for (int k : ks) need = std::max(need, k * (n_max + 1) - 1);
    CyclicModulePresentation P = ring_module(R, need, cap);
    validate(P, std::min(need, 3));
    if (twist_j != 0) P = twist(P, twist_j);

    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    bool ok = true;
    for (int n = 0; n <= n_max; ++n) {
        HomologyResult h = hc(P, n);
        nlohmann::ordered_json o;
        o["n"] = n;
        o["free"] = h.free_rank;
        auto& tor = o["torsion"] = nlohmann::ordered_json::array();
        for (const auto& t : h.torsion) tor.push_back(t.str());
        auto& w = o["weights"] = nlohmann::ordered_json::object();
        for (int k : ks) {
            WeightReport wr = lambda_weights(P, k, n);
            w[std::to_string(k)] = wr.weights;
            if (!wr.complete) {
                o["weight_note"] = wr.note;
                ok = false;
            }
        }
        rows.push_back(o);
    }
    if (format == "csv") {
        std::cout << "n,free,torsion,weights\n";
        for (const auto& o : rows) {
            std::cout << o["n"] << "," << o["free"] << ",";
            std::string t;
            for (const auto& v : o["torsion"]) t += v.get<std::string>() + " ";
            std::cout << t << ",";
            std::cout << o["weights"].dump() << "\n";
        }
    } else {
        nlohmann::ordered_json j;
        j["command"] = "hc";
        j["module"] = module_path;
        j["coeff"] = R.coeff == Coeff::Z ? "Z" : "Q";
        if (twist_j != 0) j["twist"] = twist_j;
        j["rows"] = rows;
        std::cout << j.dump(2) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_point(const std::string& arch_path, const std::string& point_str, int level, int k_max,
              const std::string& format) {
    RationalArchSet X = arch_from_json(slurp(arch_path));
    auto comma = point_str.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--point expects <orbit>,<height>");
    ArchPoint x;
    x.orbit_index = std::stoi(point_str.substr(0, comma));
    x.height = rat_parse(point_str.substr(comma + 1));
    if (x.orbit_index < 0 || x.orbit_index >= X.orbit_count())
        throw std::invalid_argument("point: orbit index out of range");
    if (!(x.height > 0) || !is_integral(x.height / X.step))
        throw std::invalid_argument("point: height must be a positive multiple of 1/N");

    bool ok = true;
    nlohmann::ordered_json j;
    j["command"] = "point";
    j["archset"] = nlohmann::ordered_json::parse(arch_to_json(X));
    j["point"] = nlohmann::ordered_json::parse(point_to_json(x));

    ModPointReport mp = mod_point(X, x, std::max(4, k_max));
    j["pi"] = rat_str(mp.pi_value);
    j["pi_surjective"] = mp.surjective_ok;
    ok = ok && mp.equivariance_ok && mp.surjective_ok;
    auto& eq = j["equivariance"] = nlohmann::ordered_json::array();
    for (int k = 1; k <= std::max(4, k_max); ++k) {
        ModPointReport mk = mod_point(X, x, k);
        nlohmann::ordered_json o;
        o["k"] = k;
        o["status"] = mk.equivariance_ok ? "pass" : "fail";
        eq.push_back(o);
        ok = ok && mk.equivariance_ok;
    }

    auto& sizes = j["interval_sizes"] = nlohmann::ordered_json::array();
    for (int n = 0; n <= 2; ++n) {
        auto chains = interval_chains(X, x, n);
        nlohmann::ordered_json o;
        o["n"] = n;
        o["size"] = chains.size();
        sizes.push_back(o);
    }

    auto& omega = j["omega"] = nlohmann::ordered_json::array();
    for (int k = 1; k <= k_max; ++k)
        for (int n = 0; n <= 2; ++n) {
            auto w = omega_k_check(X, x, k, n);
            nlohmann::ordered_json o;
            o["k"] = k;
            o["n"] = n;
            o["chains"] = w.chain_count;
            o["status"] = w.ok() ? "pass" : "fail";
            omega.push_back(o);
            ok = ok && w.ok();
        }

    Reconstruction rec = reconstruct(X, x, level);
    auto& jj = j["J"] = nlohmann::ordered_json::array();
    for (const auto& v : rec.J) jj.push_back(rat_str(v));
    auto& hg = j["h_graph"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : rec.h_graph)
        hg.push_back(nlohmann::ordered_json::array({rat_str(a), rat_str(b)}));
    j["ground_truth_ok"] = rec.matches_ground_truth;
    ok = ok && rec.matches_ground_truth && rec.nesting_ok;

    if (format == "csv") {
        std::cout << "key,value\n";
        std::cout << "pi," << rat_str(mp.pi_value) << "\n";
        std::cout << "ground_truth_ok," << (rec.matches_ground_truth ? "pass" : "fail") << "\n";
        std::cout << "status," << (ok ? "pass" : "fail") << "\n";
    } else {
        j["status"] = ok ? "pass" : "fail";
        std::cout << j.dump(2) << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for the simplicial, cyclic and epicyclic categories"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    int jobs = 0;
    app.add_option("--format", format, "output format (json|csv)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--jobs", jobs, "parallelism degree (0 = all cores)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    int n_max = 3, k_max = 3, l_max = 3;
    verify->add_option("--suite", suite, "identities|presentation|triangulation|groupoid|all");
    verify->add_option("--n-max", n_max, "object bound");
    verify->add_option("--k-max", k_max, "module bound");
    verify->add_option("--l-max", l_max, "second module bound");

    auto* sigma = app.add_subcommand("sigma", "enumerate Sigma_n^k");
    int sn = 2, sk = 2;
    long long cap = default_cap();
    sigma->add_option("--n", sn, "object")->required();
    sigma->add_option("--k", sk, "order")->required();
    sigma->add_option("--cap", cap, "size cap");

    auto* hcc = app.add_subcommand("hc", "cyclic homology of a ring module");
    std::string module_path;
    int hc_nmax = 3, twist_j = 0;
    std::vector<int> ks;
    long long hc_cap = default_cap();
    hcc->add_option("--module", module_path, "ring JSON file")->required();
    hcc->add_option("--n-max", hc_nmax, "top homology degree");
    hcc->add_option("--k", ks, "lambda operation orders (repeatable)");
    hcc->add_option("--twist", twist_j, "twist exponent");
    hcc->add_option("--cap", hc_cap, "rank cap per degree");

    auto* point = app.add_subcommand("point", "interval and reconstruction report");
    std::string arch_path, point_str = "0,1";
    int level = 2, pk_max = 3;
    point->add_option("--archset", arch_path, "archimedean set JSON file")->required();
    point->add_option("--point", point_str, "<orbit>,<height>");
    point->add_option("--level", level, "reconstruction level");
    point->add_option("--k-max", pk_max, "module bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*verify) return cmd_verify(suite, n_max, k_max, l_max, jobs, format);
        if (*sigma) return cmd_sigma(sn, sk, cap, format);
        if (*hcc) return cmd_hc(module_path, hc_nmax, ks, twist_j, hc_cap, format);
        if (*point) return cmd_point(arch_path, point_str, level, pk_max, format);
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
