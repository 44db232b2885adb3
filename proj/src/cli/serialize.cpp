#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "lzb/cli.hpp"

namespace lzb::cli {

void run_cases(const std::vector<Case>& cases, int jobs, const std::function<void(const CaseReport&)>& emit) {
    if (jobs <= 1 || cases.size() <= 1) {
        for (const Case& c : cases) emit(c.run());
        return;
    }
    std::vector<std::optional<CaseReport>> done(cases.size());
    std::vector<std::exception_ptr> errors(cases.size());
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::size_t emitted = 0;
    bool failed = false;

    auto flush = [&] {  // mu held
        while (emitted < cases.size() && !failed) {
            if (errors[emitted]) {
                failed = true;
                return;
            }
            if (!done[emitted]) return;
            emit(*done[emitted]);
            done[emitted].reset();
            ++emitted;
        }
    };
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            std::optional<CaseReport> r;
            std::exception_ptr e;
            try {
                r = cases[i].run();
            } catch (...) {
                e = std::current_exception();
            }
            std::lock_guard<std::mutex> lock(mu);
            done[i] = std::move(r);
            errors[i] = e;
            flush();
        }
    };
    std::vector<std::thread> pool;
    const int n = std::min<int>(jobs, static_cast<int>(cases.size()));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (std::size_t i = emitted; i < cases.size(); ++i)
        if (errors[i]) std::rethrow_exception(errors[i]);
}

std::string report_json(const CaseReport& r) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json c;
    c["kind"] = r.kind;
    for (const auto& [k, v] : r.fields) c[k] = v;
    j["case"] = c;
    j["status"] = r.pass ? "pass" : "fail";
    j["checks"] = r.checks;
    if (!r.pass) j["first_mismatch"] = nlohmann::ordered_json::parse(r.detail_json);
    return j.dump();
}

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

}  // namespace

std::string report_csv_header(const CaseReport& r) {
    std::string s = "kind";
    for (const auto& [k, v] : r.fields) s += "," + csv_cell(k);
    return s + ",status";
}

std::string report_csv_row(const CaseReport& r) {
    std::string s = csv_cell(r.kind);
    for (const auto& [k, v] : r.fields) s += "," + csv_cell(v);
    return s + "," + (r.pass ? "pass" : "fail");
}

std::string report_text(const CaseReport& r) {
    std::string s = std::string(r.pass ? "PASS " : "FAIL ") + r.kind;
    for (const auto& [k, v] : r.fields) s += " " + k + "=" + v;
    s += " checks=" + std::to_string(r.checks);
    if (!r.pass) s += " :: " + r.detail_text;
    return s;
}

}  // namespace lzb::cli
