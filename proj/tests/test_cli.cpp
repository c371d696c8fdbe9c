// End-to-end checks of the installed command-line surface: exit codes,
// determinism across parallelism degrees, and the documented output formats.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "gheights/io.hpp"

using namespace gheights;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(GHEIGHTS_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("gheights_cli_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::filesystem::path file(const std::string& name, const std::string& contents) const {
        auto p = path / name;
        std::ofstream(p) << contents;
        return p;
    }
};

const char* kSplitC2Pair = R"({
  "algebra": {"split": {"order": 2, "table": [[0, 1], [1, 0]]}},
  "x": ["1", "0"]
})";

const char* kC2Group = R"({"order": 2, "table": [[0, 1], [1, 0]]})";

}  // namespace

TEST_CASE("cli height on the identity split pair") {
    TempDir tmp;
    auto pair = tmp.file("pair.json", kSplitC2Pair);
    auto res = run_cli("height " + pair.string());
    CHECK(res.exit_code == 0);
    json j = json::parse(res.out);
    CHECK(j["height"]["value"] == "1");
    CHECK(j["finite_parts_agree"] == true);
}

TEST_CASE("cli exit codes follow the contract") {
    TempDir tmp;
    auto bad = tmp.file("bad.json", "{ not json");
    CHECK(run_cli("height " + bad.string()).exit_code == 2);
    auto nonnormal = tmp.file("nonnormal.json", R"({
      "algebra": {"split": {"order": 2, "table": [[0, 1], [1, 0]]}},
      "x": ["1/2", "1/2"]
    })");
    CHECK(run_cli("height " + nonnormal.string()).exit_code == 3);
    auto big_group = [&] {
        // order 12 cyclic table
        std::ostringstream os;
        os << "{\"order\": 12, \"table\": [";
        for (int i = 0; i < 12; ++i) {
            os << (i ? "," : "") << "[";
            for (int j = 0; j < 12; ++j) os << (j ? "," : "") << (i + j) % 12;
            os << "]";
        }
        os << "]}";
        return tmp.file("c12.json", os.str());
    }();
    CHECK(run_cli("molien " + big_group.string()).exit_code == 4);
}

TEST_CASE("cli molien row for C2") {
    TempDir tmp;
    auto group = tmp.file("c2.json", kC2Group);
    auto res = run_cli("molien " + group.string());
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("2,2,2,true,4") != std::string::npos);
}

TEST_CASE("cli discrepancy of the Z[sqrt(-3)] conductor") {
    TempDir tmp;
    auto order = tmp.file("order.json", R"({
      "field": {"min_poly": [3, 0, 1]},
      "denominator": 1,
      "basis": [[1, 0], [0, 1]]
    })");
    // The conductor 2O = lattice spanned by 2 and 1 + sqrt(-3).
    auto ideal = tmp.file("ideal.json", R"({
      "denominator": 1,
      "basis": [[2, 0], [1, 1]]
    })");
    auto res = run_cli("discrepancy " + order.string() + " " + ideal.string());
    CHECK(res.exit_code == 0);
    json j = json::parse(res.out);
    CHECK(j["discrepancy"] == "2");
    CHECK(j["bounds"]["upper"] == "8");
    CHECK(j["invertible"] == false);
    CHECK(j["order_is_gorenstein"] == true);
    // A lattice that is not stable under the order: precondition exit.
    auto notideal = tmp.file("notideal.json", R"({
      "denominator": 3,
      "basis": [[1, 0], [0, 2]]
    })");
    CHECK(run_cli("discrepancy " + order.string() + " " + notideal.string()).exit_code == 3);
}

TEST_CASE("cli enumeration is byte-identical across parallelism degrees") {
    TempDir tmp;
    auto group = tmp.file("c2.json", kC2Group);
    auto out1 = tmp.path / "p1.csv";
    auto out8 = tmp.path / "p8.csv";
    auto r1 = run_cli("--parallelism 1 enumerate " + group.string() + " --bound 10 --out " +
                      out1.string());
    auto r8 = run_cli("--parallelism 8 enumerate " + group.string() + " --bound 10 --out " +
                      out8.string());
    CHECK(r1.exit_code == 0);
    CHECK(r8.exit_code == 0);
    CHECK(r1.out == r8.out);  // checkpoint rows on stdout
    std::ifstream f1(out1), f8(out8);
    std::stringstream s1, s8;
    s1 << f1.rdbuf();
    s8 << f8.rdbuf();
    CHECK(s1.str() == s8.str());
    CHECK(s1.str().find("height,point") == 0);
    // B = 0.5: header only.
    auto empty_out = tmp.path / "empty.csv";
    auto re = run_cli("enumerate " + group.string() + " --bound 1/2 --out " + empty_out.string());
    CHECK(re.exit_code == 0);
    std::ifstream fe(empty_out);
    std::stringstream se;
    se << fe.rdbuf();
    CHECK(se.str() == "height,point\n");
}

TEST_CASE("cli selfdual search lists the C2 indicators") {
    TempDir tmp;
    auto algebra = tmp.file("algebra.json", R"({
      "split": {"order": 2, "table": [[0, 1], [1, 0]]}
    })");
    auto res = run_cli("selfdual-search " + algebra.string() +
                       " --coeff-bound 2 --denominator-bound 1");
    CHECK(res.exit_code == 0);
    json j = json::parse(res.out);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["x"] == json::array({"0", "1"}));
    CHECK(j[1]["x"] == json::array({"1", "0"}));
}

TEST_CASE("cli csv format and field-restricted selfdual search") {
    TempDir tmp;
    auto pair = tmp.file("pair.json", kSplitC2Pair);
    auto res = run_cli("--format csv height " + pair.string());
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("height_mid,height_rad,finite_part") == 0);
    CHECK(res.out.find("\n1.") != std::string::npos);

    // Search restricted to the square root of the inverse different of the
    // real cyclotomic cubic; must find the height-7 generator.
    auto algebra = tmp.file("algebra.json", R"({
      "field": {
        "group": {"order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]},
        "min_poly": [-1, -2, 1, 1],
        "galois": {"generator_images": {"1": [-2, 0, 1]}}
      },
      "restrict_to": {"denominator": 7, "basis": [[1, 6, 2], [0, 7, 0], [0, 0, 7]]}
    })");
    auto search = run_cli("selfdual-search " + algebra.string() +
                          " --coeff-bound 8 --denominator-bound 7");
    CHECK(search.exit_code == 0);
    json j = json::parse(search.out);
    CHECK(!j.empty());
    bool found = false;
    for (const auto& item : j) {
        if (item["x"] == json::array({"-2/7", "2/7", "3/7"})) found = true;
    }
    CHECK(found);
}

TEST_CASE("cli height with cache directory is identical to without") {
    TempDir tmp;
    auto pair = tmp.file("pair.json", R"({
      "algebra": {"field": {
        "group": {"order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]},
        "min_poly": [-1, -2, 1, 1],
        "galois": {"generator_images": {"1": [-2, 0, 1]}}
      }},
      "x": ["0", "-1", "0"]
    })");
    auto without = run_cli("height " + pair.string());
    auto with1 = run_cli("--cache-dir " + (tmp.path / "cache").string() + " height " + pair.string());
    auto with2 = run_cli("--cache-dir " + (tmp.path / "cache").string() + " height " + pair.string());
    CHECK(without.exit_code == 0);
    CHECK(without.out == with1.out);
    CHECK(with1.out == with2.out);
}
