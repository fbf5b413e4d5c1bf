#include "doctest.h"
#include "hopflab/builders.hpp"
#include "hopflab/cli.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>

using namespace hopflab;

namespace {

int run(const std::vector<std::string>& args, Report* rep = nullptr) {
    std::vector<std::string> full = args;
    full.push_back("--quiet");
    return run_command(full, rep);
}

const std::string kD2 = "/tmp/hopflab_cli_d2.json";
const std::string kS3file = "/tmp/hopflab_cli_ks3.json";

void ensure_files() {
    static bool done = false;
    if (done) return;
    REQUIRE(run({"gen", "double", "Z2", "--field", "fp:3", "-o", kD2}) == 0);
    REQUIRE(run({"gen", "group-algebra", "S3", "--field", "fp:7", "-o",
                 kS3file}) == 0);
    done = true;
}

}  // namespace

TEST_CASE("gen then check round-trips with exit code 0") {
    ensure_files();
    Report rep;
    CHECK(run({"check", kD2}, &rep) == 0);
    CHECK(rep.failed() == 0);
    CHECK(rep.passed() > 10);
    CHECK(rep.input_digest() != "-");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"frobnicate", kD2}) == 2);
    CHECK(run({"gen", "double"}) == 2);           // missing group and -o
    CHECK(run({"gen", "nonsense", "Z2", "-o", "/tmp/x.json"}) == 2);
    CHECK(run({"gen", "double", "S9", "-o", "/tmp/x.json"}) == 2);
    CHECK(run({"gen", "double", "Z2", "--field", "fp:6", "-o", "/tmp/x.json"}) ==
          2);
}

TEST_CASE("check on a corrupted file exits 1 with a witness") {
    ensure_files();
    nlohmann::json j;
    {
        std::ifstream in(kD2);
        in >> j;
    }
    for (auto& e : j["mult"])
        if (e[0] == 1 && e[1] == 1) e[3] = "2";
    const std::string bad = "/tmp/hopflab_cli_bad.json";
    {
        std::ofstream out(bad);
        out << j.dump();
    }
    Report rep;
    CHECK(run({"check", bad}, &rep) == 1);
    CHECK(rep.failed() > 0);
    bool witnessed = false;
    for (const auto& r : rep.records())
        if (r.verdict == "fail" && !r.witness.empty()) witnessed = true;
    CHECK(witnessed);
    std::remove(bad.c_str());
}

TEST_CASE("factorizable on kS3 is informational and exits 0") {
    ensure_files();
    Report rep;
    CHECK(run({"factorizable", kS3file}, &rep) == 0);
    bool found = false;
    for (const auto& r : rep.records())
        if (r.id == "factorizable") {
            found = true;
            CHECK(r.informational);
            CHECK(r.verdict == "fail");  // rank 1 of 6
            CHECK(r.statement.find("rank 1 of 6") != std::string::npos);
        }
    CHECK(found);
}

TEST_CASE("suite on a factorizable double passes everything") {
    ensure_files();
    Report rep;
    CHECK(run({"suite", kD2}, &rep) == 0);
    CHECK(rep.failed() == 0);
    CHECK(rep.skipped() == 0);
    CHECK(rep.passed() > 50);
}

TEST_CASE("suite on a non-factorizable input downgrades to skips") {
    ensure_files();
    Report rep;
    CHECK(run({"suite", kS3file}, &rep) == 0);
    CHECK(rep.failed() == 0);
    size_t skips = 0;
    for (const auto& r : rep.records())
        if (r.verdict == "skipped") {
            ++skips;
            CHECK(r.reason.find("not factorizable") != std::string::npos);
        }
    CHECK(skips == 4);  // decompose, classify, nw, equivalence
}

TEST_CASE("inputs without an R-matrix skip the quasi-triangular stages") {
    ensure_files();
    nlohmann::json j;
    {
        std::ifstream in(kD2);
        in >> j;
    }
    j.erase("r");
    const std::string f = "/tmp/hopflab_cli_nor.json";
    {
        std::ofstream out(f);
        out << j.dump();
    }
    Report rep;
    CHECK(run({"suite", f}, &rep) == 0);
    CHECK(rep.failed() == 0);
    bool qt_skipped = false;
    for (const auto& r : rep.records())
        if (r.verdict == "skipped" && r.id == "qt") qt_skipped = true;
    CHECK(qt_skipped);
    CHECK(rep.skipped() >= 5);
    std::remove(f.c_str());
}

TEST_CASE("modular group orders skip with an uncertifiable radical") {
    // char 2 divides |S3|: the trace form vanishes and the radical method
    // must refuse, downgrading the structure stages
    const std::string f = "/tmp/hopflab_cli_s3f2.json";
    REQUIRE(run({"gen", "group-algebra", "S3", "--field", "fp:2", "-o", f}) ==
            0);
    Report rep;
    CHECK(run({"suite", f}, &rep) == 0);
    CHECK(rep.failed() == 0);
    bool skipped = false;
    for (const auto& r : rep.records())
        if (r.verdict == "skipped" &&
            r.reason.find("radical not certifiable") != std::string::npos)
            skipped = true;
    CHECK(skipped);
    std::remove(f.c_str());
}

TEST_CASE("non-splitting fields skip with a non-split reason") {
    // cube roots of unity are missing from F_5, so kZ3 has a non-split block
    const std::string f = "/tmp/hopflab_cli_z3f5.json";
    REQUIRE(run({"gen", "group-algebra", "Z3", "--field", "fp:5", "-o", f}) ==
            0);
    Report rep;
    CHECK(run({"decompose", f}, &rep) == 0);
    bool skipped = false;
    for (const auto& r : rep.records())
        if (r.verdict == "skipped" &&
            r.reason.find("non-split component") != std::string::npos)
            skipped = true;
    CHECK(skipped);
    std::remove(f.c_str());
}

TEST_CASE("reports are byte-identical across runs with the same seed") {
    ensure_files();
    Report r1, r2;
    run({"suite", kD2, "--seed", "9"}, &r1);
    run({"suite", kD2, "--seed", "9"}, &r2);
    CHECK(r1.to_json() == r2.to_json());
}

TEST_CASE("nw emits structure constants and verdicts") {
    ensure_files();
    Report rep;
    CHECK(run({"nw", kD2, "--w", "1"}, &rep) == 0);
    const std::string js = rep.to_json();
    const nlohmann::json j = nlohmann::json::parse(js);
    REQUIRE(j.contains("data"));
    CHECK(j["data"]["dim"] == 4);
    CHECK(j["data"]["mult"].size() > 0);
    CHECK(run({"nw", kD2, "--w", "9"}) == 1);  // out of range
}

TEST_CASE("yd classify serializes the simple objects") {
    ensure_files();
    Report rep;
    CHECK(run({"yd", "classify", kD2}, &rep) == 0);
    const nlohmann::json j = nlohmann::json::parse(rep.to_json());
    REQUIRE(j.contains("data"));
    REQUIRE(j["data"]["objects"].size() == 16);
    const auto& first = j["data"]["objects"][0];
    CHECK(first.contains("action"));
    CHECK(first.contains("coaction"));
    CHECK(first.contains("label"));
}

TEST_CASE("transmute writes the braided coproduct in coalgebra form") {
    ensure_files();
    const std::string out = "/tmp/hopflab_cli_hr.json";
    CHECK(run({"transmute", kD2, "-o", out}) == 0);
    std::ifstream in(out);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    CHECK(j["dim"] == 4);
    CHECK(j.contains("comult"));
    CHECK(j.contains("s_r"));
    CHECK(j.contains("counit"));
    std::remove(out.c_str());
}

TEST_CASE("the full pipeline on D(kS3) ends with zero failures") {
    const std::string f = "/tmp/hopflab_cli_ds3.json";
    REQUIRE(run({"gen", "double", "S3", "--field", "fp:7", "-o", f}) == 0);
    Report rep;
    CHECK(run({"suite", f}, &rep) == 0);
    CHECK(rep.failed() == 0);
    CHECK(rep.skipped() == 0);
    std::remove(f.c_str());
}

TEST_CASE("equivalence subcommand runs the round trips") {
    ensure_files();
    Report rep;
    CHECK(run({"equivalence", kD2, "--w", "0"}, &rep) == 0);
    bool fwd = false, back = false;
    for (const auto& r : rep.records()) {
        if (r.id == "equivalence.w0.forward") fwd = r.verdict == "pass";
        if (r.id == "equivalence.w0.roundtrip") back = r.verdict == "pass";
    }
    CHECK(fwd);
    CHECK(back);
}
