#include "epicat/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace epicat {

bool Report::all_ok() const {
    for (const auto& r : rows)
        if (!r.ok) return false;
    return true;
}

long long Report::failures() const {
    long long f = 0;
    for (const auto& r : rows)
        if (!r.ok) ++f;
    return f;
}

void Report::append(const Report& other) {
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

void Report::sort_rows() {
    std::stable_sort(rows.begin(), rows.end(), [](const CheckRow& a, const CheckRow& b) {
        return std::tie(a.suite, a.name, a.n, a.k, a.l) <
               std::tie(b.suite, b.name, b.n, b.k, b.l);
    });
}

std::string report_to_json(const Report& rep, const std::string& command) {
    nlohmann::ordered_json j;
    j["command"] = command;
    auto& rows = j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rep.rows) {
        nlohmann::ordered_json o;
        o["suite"] = r.suite;
        o["identity"] = r.name;
        if (r.n >= 0) o["n"] = r.n;
        if (r.k >= 0) o["k"] = r.k;
        if (r.l >= 0) o["l"] = r.l;
        if (r.count >= 0) o["term_count"] = r.count;
        o["status"] = r.ok ? "pass" : "fail";
        if (!r.detail.empty()) o["detail"] = r.detail;
        rows.push_back(o);
    }
    j["summary"]["total"] = rep.rows.size();
    j["summary"]["failed"] = rep.failures();
    return j.dump(2);
}

namespace {
std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}
}  // namespace

std::string report_to_csv(const Report& rep) {
    std::ostringstream os;
    os << "suite,identity,n,k,l,term_count,status,detail\n";
    for (const auto& r : rep.rows) {
        os << csv_escape(r.suite) << "," << csv_escape(r.name) << ",";
        if (r.n >= 0) os << r.n;
        os << ",";
        if (r.k >= 0) os << r.k;
        os << ",";
        if (r.l >= 0) os << r.l;
        os << ",";
        if (r.count >= 0) os << r.count;
        os << "," << (r.ok ? "pass" : "fail") << "," << csv_escape(r.detail) << "\n";
    }
    return os.str();
}

void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn) {
    if (jobs <= 0) jobs = (int)std::thread::hardware_concurrency();
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= count) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int threads = std::min<int>(jobs, (int)count);
    pool.reserve((size_t)threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace epicat
