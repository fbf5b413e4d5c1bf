#include "hopflab/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace hopflab {

std::string content_digest(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

void Report::set_input(const std::string& name, const std::string& bytes) {
    input_name_ = name;
    digest_ = content_digest(bytes);
}

void Report::add_pass(const std::string& id, const std::string& statement,
                      double ms) {
    records_.push_back({id, statement, "pass", "", "", false, ms});
}

void Report::add_fail(const std::string& id, const std::string& statement,
                      const std::string& witness, double ms) {
    records_.push_back({id, statement, "fail", "", witness, false, ms});
}

void Report::add_skip(const std::string& id, const std::string& statement,
                      const std::string& reason) {
    records_.push_back({id, statement, "skipped", reason, "", false, 0});
}

void Report::add_info(const std::string& id, const std::string& statement,
                      bool pass, const std::string& witness) {
    records_.push_back(
        {id, statement, pass ? "pass" : "fail", "", witness, true, 0});
}

void Report::add_checks(const std::string& prefix, const CheckReport& checks,
                        double ms) {
    bool first = true;
    for (const auto& item : checks.items()) {
        const std::string id =
            prefix.empty() ? item.id : prefix + "." + item.id;
        records_.push_back({id, item.statement,
                            item.pass ? "pass" : "fail", "", item.witness,
                            item.informational, first ? ms : 0});
        first = false;
    }
}

size_t Report::passed() const {
    size_t n = 0;
    for (const auto& r : records_)
        if (r.verdict == "pass" && !r.informational) ++n;
    return n;
}

size_t Report::failed() const {
    size_t n = 0;
    for (const auto& r : records_)
        if (r.verdict == "fail" && !r.informational) ++n;
    return n;
}

size_t Report::skipped() const {
    size_t n = 0;
    for (const auto& r : records_)
        if (r.verdict == "skipped") ++n;
    return n;
}

std::string Report::to_json() const {
    nlohmann::json j;
    j["version"] = version_;
    j["input"] = input_name_;
    j["input_digest"] = digest_;
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& r : records_) {
        nlohmann::json e;
        e["id"] = r.id;
        e["statement"] = r.statement;
        e["verdict"] = r.verdict;
        if (!r.reason.empty()) e["reason"] = r.reason;
        if (!r.witness.empty()) e["witness"] = r.witness;
        if (r.informational) e["informational"] = true;
        recs.push_back(e);
    }
    j["records"] = recs;
    j["summary"] = {{"pass", passed()},
                    {"fail", failed()},
                    {"skipped", skipped()}};
    if (data_) j["data"] = *data_;
    return j.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& r : records_) {
        os << "[" << (r.verdict == "pass"
                          ? "PASS"
                          : r.verdict == "fail" ? "FAIL" : "SKIP")
           << (r.informational ? "*" : "") << "] " << r.id << ": "
           << r.statement;
        if (!r.reason.empty()) os << " (" << r.reason << ")";
        if (!r.witness.empty()) os << " [witness: " << r.witness << "]";
        if (r.time_ms > 0.5)
            os << " (" << std::fixed << std::setprecision(0) << r.time_ms
               << " ms)";
        os << "\n";
    }
    os << passed() << " passed, " << failed() << " failed, " << skipped()
       << " skipped";
    if (std::any_of(records_.begin(), records_.end(),
                    [](const CheckRecord& r) { return r.informational; }))
        os << " (* informational)";
    os << "\n";
    return os.str();
}

}  // namespace hopflab
