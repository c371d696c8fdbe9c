#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "fixtures.hpp"
#include "gheights/io.hpp"

using namespace gheights;
using namespace gheights::fixtures;

namespace {
json zeta7_field_json() {
    return json{{"group", {{"order", 3}, {"table", {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}}}},
                {"min_poly", {-1, -2, 1, 1}},
                {"galois", {{"generator_images", {{"1", {-2, 0, 1}}}}}}};
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("gheights_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};
}  // namespace

TEST_CASE("group json round trip") {
    auto s3 = FiniteGroup::symmetric(3);
    auto back = group_from_json(group_to_json(*s3));
    CHECK(back->same_table(*s3));
    CHECK_THROWS_AS(group_from_json(json{{"order", 2}}), SchemaError);
    CHECK_THROWS_AS(group_from_json(json{{"order", 2}, {"table", {{0, 1}, {1, 1}}}}),
                    SchemaError);
}

TEST_CASE("lattice json round trip") {
    HNFBasis h = hnf(ZMat{{2, 1}, {0, 3}});
    HNFBasis back = lattice_from_json(lattice_to_json(h));
    CHECK(back == h);
    CHECK_THROWS_AS(lattice_from_json(json{{"denominator", 0}, {"basis", {{1}}}}), SchemaError);
}

TEST_CASE("field and algebra parsing") {
    FieldInput in = field_from_json(zeta7_field_json());
    CHECK(in.field->degree() == 3);
    CHECK(verify_galois(*in.field, in.action));
    GAlgebra alg = algebra_from_json(json{{"field", zeta7_field_json()}});
    CHECK(!alg.is_split());
    GAlgebra split = algebra_from_json(
        json{{"split", {{"order", 2}, {"table", {{0, 1}, {1, 0}}}}}});
    CHECK(split.is_split());
    CHECK_THROWS_AS(algebra_from_json(json::object()), SchemaError);
}

TEST_CASE("pair json round trip") {
    json doc{{"algebra", {{"split", {{"order", 2}, {"table", {{0, 1}, {1, 0}}}}}}},
             {"x", {"3/5", "2/5"}}};
    Pair p = pair_from_json(doc);
    CHECK(p.x()[0] == Rat(3, 5));
    Pair back = pair_from_json(pair_to_json(p));
    CHECK(back == p);
    GAlgebra z7 = zeta7_plus_algebra();
    Pair fp(z7, {Rat(0), Rat(-1), Rat(0)});
    CHECK(pair_from_json(pair_to_json(fp)) == fp);
    // Non-normal pair: schema is fine, normality is not.
    json bad = doc;
    bad["x"] = {"1/2", "1/2"};
    CHECK_THROWS_AS(pair_from_json(bad), NotNormalError);
}

TEST_CASE("height report serialization carries exact strings") {
    auto c3 = FiniteGroup::cyclic(3);
    Pair p(GAlgebra::split(c3), {Rat(-1, 3), Rat(2, 3), Rat(2, 3)});
    HeightReport rep = height(p);
    json j = height_report_to_json(rep, 12);
    CHECK(j["finite_part_invariant"] == "3");
    CHECK(j["finite_parts_agree"] == true);
    CHECK(j["height"]["exact"] == true);
    CHECK(j["height"]["value"] == "27");
    CHECK(j["invariants"]["discrepancy"] == "1");
}

TEST_CASE("field cache verifies on read and is stable across runs") {
    TempDir tmp;
    FieldCache cache(tmp.path);
    FieldInput in = field_from_json(zeta7_field_json());
    Order first = cache.maximal_order_of(in);
    CHECK(first.discriminant() == 49);
    // Second call hits the file; the record must verify and agree.
    Order second = cache.maximal_order_of(in);
    CHECK(first == second);
    CHECK(std::filesystem::exists(tmp.path / (FieldCache::fingerprint(in) + ".json")));
    // Corrupt the record: the cache must fall back to recomputation.
    {
        std::ofstream out(tmp.path / (FieldCache::fingerprint(in) + ".json"));
        out << "{ not json";
    }
    Order third = cache.maximal_order_of(in);
    CHECK(first == third);
}

TEST_CASE("malformed files raise schema errors") {
    TempDir tmp;
    auto file = tmp.path / "broken.json";
    std::ofstream(file) << "{ nope";
    CHECK_THROWS_AS(parse_json_file(file), SchemaError);
    CHECK_THROWS_AS(parse_json_file(tmp.path / "missing.json"), SchemaError);
}

TEST_CASE("csv escaping") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
}
