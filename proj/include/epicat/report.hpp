#pragma once

#include <functional>
#include <string>
#include <vector>

namespace epicat {

// One checked instance inside a verification suite.
struct CheckRow {
    std::string suite;
    std::string name;
    int n = -1, k = -1, l = -1;
    long long count = -1;  // term/element count when meaningful
    bool ok = false;
    std::string detail;
};

struct Report {
    std::vector<CheckRow> rows;

    bool all_ok() const;
    long long failures() const;
    void append(const Report& other);
    void sort_rows();
};

std::string report_to_json(const Report& rep, const std::string& command);
std::string report_to_csv(const Report& rep);

// Runs fn(i) for i in [0, count) on up to `jobs` threads; results must be
// written into pre-sized slots so the output order is scheduling-free.
void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn);

}  // namespace epicat
