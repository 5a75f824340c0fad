#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "whitney/dot_export.hpp"
#include "whitney/families.hpp"
#include "whitney/ideals.hpp"
#include "whitney/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace whitney;
using nlohmann::json;

namespace {

struct DotStats {
    int nodes = 0;
    int edges = 0;
};

DotStats parse_dot(const std::string& dot) {
    DotStats stats;
    std::istringstream in(dot);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find(" -> ") != std::string::npos) {
            ++stats.edges;
        } else if (line.size() > 4 && line.substr(0, 3) == "  \"" && line.back() == ';') {
            ++stats.nodes;
        }
    }
    return stats;
}

}  // namespace

TEST_CASE("poset JSON round trip") {
    Poset p = fap(3, 2, 1, 3);
    json j = poset_to_json(p);
    Poset q = poset_from_json(j);
    CHECK(q.elements() == p.elements());
    CHECK(q.covers() == p.covers());
    CHECK(poset_to_json(q) == j);
}

TEST_CASE("poset JSON accepts the documented shape") {
    json j = json::parse(R"({"elements": ["z1", "z2", "z3"], "covers": [["z1","z2"],["z3","z2"]]})");
    Poset p = poset_from_json(j);
    CHECK(p.size() == 3);
    CHECK(testutil::isomorphic(p, fence(3)));

    SUBCASE("transitive covers in input are reduced") {
        json r = json::parse(R"({"elements": ["a","b","c"], "covers": [["a","b"],["b","c"],["a","c"]]})");
        CHECK(poset_from_json(r).covers().size() == 2);
    }
}

TEST_CASE("poset JSON rejections") {
    CHECK_THROWS_AS(poset_from_json(json::parse("[1,2]")), PosetError);
    CHECK_THROWS_AS(poset_from_json(json::parse(R"({"elements": ["a"]})")), PosetError);
    CHECK_THROWS_AS(poset_from_json(json::parse(R"({"elements": [3], "covers": []})")), PosetError);
    CHECK_THROWS_AS(poset_from_json(json::parse(R"({"elements": ["a"], "covers": [["a"]]})")),
                    PosetError);
    CHECK_THROWS_AS(
        poset_from_json(json::parse(R"({"elements": ["a","b"], "covers": [["a","b"],["b","a"]]})")),
        PosetError);
}

TEST_CASE("poset file loading") {
    const char* path = "test_poset_tmp.json";
    {
        std::ofstream out(path);
        out << poset_to_json(crown(3)).dump();
    }
    Poset p = load_poset_file(path);
    CHECK(p.size() == 6);
    std::remove(path);
    CHECK_THROWS_WITH_AS(load_poset_file("does_not_exist.json"), doctest::Contains("open"),
                         PosetError);
    {
        std::ofstream out(path);
        out << "{not json";
    }
    CHECK_THROWS_WITH_AS(load_poset_file(path), doctest::Contains("parse"), PosetError);
    std::remove(path);
}

TEST_CASE("family serialization") {
    CHECK(family_to_json(Fence{5}) == json::parse(R"({"family":"fence","n":5})"));
    CHECK(family_to_json(Crown{3}) == json::parse(R"({"family":"crown","n":3})"));
    CHECK(family_to_json(AsymmetricPeak{2, 1}) == json::parse(R"({"family":"ap","mu":2,"nu":1})"));
    CHECK(family_to_json(Fap{3, 1, 1, 3}) ==
          json::parse(R"({"family":"fap","w":3,"x":1,"y":1,"z":3})"));
}

TEST_CASE("table and polynomial emission round trip") {
    WhitneyTable t = whitney_oracle(fence(5));
    json j = table_to_json(Fence{5}, t, "oracle");
    CHECK(j["counts"] == json::parse(R"(["1","3","3","3","2","1"])"));
    CHECK(j["path"] == "oracle");
    CHECK(j["family"] == "fence");
    CHECK(j["n"] == 5);
    CHECK(json::parse(j.dump()) == j);

    json pj = polynomial_to_json(Fap{3, 1, 1, 3}, fap_rank_polynomial(3, 1, 1, 3));
    CHECK(pj["coeffs"].size() == 10);
    CHECK(pj["coeffs"][0] == "1");
}

TEST_CASE("conjecture report emission") {
    auto reports = conjecture_sweep(6);
    json with_violation;
    json without_violation;
    for (const auto& r : reports) {
        json j = report_to_json(r);
        if (describe(r.instance) == "crown(2)") with_violation = j;
        if (describe(r.instance) == "fence(1)") without_violation = j;
    }
    CHECK(with_violation["unimodal"] == false);
    CHECK(with_violation["first_violation"]["kind"] == "log_concave");
    CHECK(with_violation["first_violation"]["triple"] == json::parse(R"(["2","1","2"])"));
    CHECK(without_violation["first_violation"].is_null());
    CHECK(without_violation["strictly_log_concave"] == true);
}

TEST_CASE("DOT export") {
    auto f3 = parse_dot(to_dot(fence(3)));
    CHECK(f3.nodes == 3);
    CHECK(f3.edges == 2);

    auto c3 = parse_dot(to_dot(crown(3)));
    CHECK(c3.nodes == 6);
    CHECK(c3.edges == 6);

    auto big = parse_dot(to_dot(fap(7, 10, 6, 7)));
    CHECK(big.nodes == 31);

    std::string dot = to_dot(fence(2));
    CHECK(dot.find("\"z1\" -> \"z2\"") != std::string::npos);  // edges go lower -> upper
    CHECK(dot.find("rank = same") != std::string::npos);
    CHECK(dot.substr(0, 7) == "digraph");
}
