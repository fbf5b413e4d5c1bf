#pragma once

// Machine- and human-readable run reports. The JSON serialization is
// canonical (sorted keys, stable record order) and deliberately excludes
// wall-clock timings so that reports are byte-identical across runs with
// the same seed and input; timings appear in the text rendering only.

#include "hopflab/checks.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hopflab {

struct CheckRecord {
    std::string id;
    std::string statement;
    std::string verdict;  // "pass" | "fail" | "skipped"
    std::string reason;   // for skipped records
    std::string witness;  // for failed records
    bool informational = false;
    double time_ms = 0;  // text output only
};

class Report {
public:
    explicit Report(std::string tool_version = "hopflab 0.1.0")
        : version_(std::move(tool_version)) {}

    void set_input(const std::string& name, const std::string& bytes);
    const std::string& input_digest() const { return digest_; }

    void add_pass(const std::string& id, const std::string& statement,
                  double ms = 0);
    void add_fail(const std::string& id, const std::string& statement,
                  const std::string& witness, double ms = 0);
    void add_skip(const std::string& id, const std::string& statement,
                  const std::string& reason);
    void add_info(const std::string& id, const std::string& statement,
                  bool pass, const std::string& witness = "");
    /// Imports every item of an axiom-checker report under an id prefix.
    void add_checks(const std::string& prefix, const CheckReport& checks,
                    double ms = 0);

    const std::vector<CheckRecord>& records() const { return records_; }
    size_t passed() const;
    size_t failed() const;  // non-informational failures
    size_t skipped() const;

    /// 0 when no required record failed, 1 otherwise.
    int exit_code() const { return failed() == 0 ? 0 : 1; }

    /// Optional machine payload (structure constants etc.).
    void set_data(nlohmann::json data) { data_ = std::move(data); }

    std::string to_json() const;
    std::string to_text() const;

private:
    std::string version_;
    std::string input_name_;
    std::string digest_ = "-";
    std::vector<CheckRecord> records_;
    std::optional<nlohmann::json> data_;
};

/// FNV-1a 64-bit content digest, hex encoded.
std::string content_digest(const std::string& bytes);

}  // namespace hopflab
