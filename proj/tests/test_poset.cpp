#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "whitney/families.hpp"
#include "whitney/poset.hpp"

#include <string>
#include <vector>

using namespace whitney;

namespace {

Poset make(std::vector<std::string> els, std::vector<std::pair<std::string, std::string>> covers) {
    return Poset::from_covers(std::move(els), covers);
}

}  // namespace

TEST_CASE("construction from covers") {
    SUBCASE("fence Z_3 shape") {
        Poset p = make({"z1", "z2", "z3"}, {{"z1", "z2"}, {"z3", "z2"}});
        CHECK(p.size() == 3);
        CHECK(p.covers().size() == 2);
        CHECK(testutil::isomorphic(p, fence(3)));
    }
    SUBCASE("one element, no covers") {
        Poset p = make({"a"}, {});
        CHECK(p.size() == 1);
        CHECK(p.minimal_elements() == std::vector<std::string>{"a"});
    }
    SUBCASE("two-cycle is rejected with a witness") {
        CHECK_THROWS_WITH_AS(make({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
                             doctest::Contains("cycle"), PosetError);
    }
    SUBCASE("self-cover is rejected") {
        CHECK_THROWS_AS(make({"a"}, {{"a", "a"}}), PosetError);
    }
    SUBCASE("longer cycle names the loop") {
        try {
            make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
            FAIL("expected a cycle rejection");
        } catch (const PosetError& e) {
            std::string msg = e.what();
            CHECK(msg.find("->") != std::string::npos);
        }
    }
    SUBCASE("unknown identifier in covers") {
        CHECK_THROWS_WITH_AS(make({"a"}, {{"a", "zz"}}), doctest::Contains("unknown"), PosetError);
    }
    SUBCASE("duplicate identifiers") {
        CHECK_THROWS_AS(make({"a", "a"}, {}), PosetError);
    }
    SUBCASE("redundant covers are silently reduced") {
        Poset p = make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
        CHECK(p.covers().size() == 2);
        CHECK(p.less(p.index_of("a"), p.index_of("c")));
        Poset dup = make({"a", "b"}, {{"a", "b"}, {"a", "b"}});
        CHECK(dup.covers().size() == 1);
    }
}

TEST_CASE("minimal elements") {
    CHECK(fence(5).minimal_elements() == std::vector<std::string>{"z1", "z3", "z5"});
    Poset chain = make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(chain.minimal_elements() == std::vector<std::string>{"a"});
    Poset anti = make({"a", "b", "c", "d"}, {});
    CHECK(anti.minimal_elements().size() == 4);
}

TEST_CASE("delete element") {
    SUBCASE("fence end deletion keeps the fence shape") {
        CHECK(testutil::isomorphic(fence(5).delete_element("z5"), fence(4)));
    }
    SUBCASE("deleting a singleton gives the empty poset") {
        Poset p = make({"a"}, {});
        CHECK(p.delete_element("a").size() == 0);
    }
    SUBCASE("removing the peak of Z_3 disconnects the minimals") {
        Poset p = fence(3).delete_element("z2");
        CHECK(p.size() == 2);
        CHECK(p.covers().empty());
        CHECK(p.elements() == std::vector<std::string>{"z1", "z3"});
    }
    SUBCASE("unknown element is rejected") {
        CHECK_THROWS_AS(fence(3).delete_element("nope"), PosetError);
    }
    SUBCASE("deletion restores implied covers") {
        // a < b < c plus a < d: removing b must surface the induced a < c
        Poset p = make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "d"}});
        Poset q = p.delete_element("b");
        CHECK(q.less(q.index_of("a"), q.index_of("c")));
        CHECK(q.covers().size() == 2);
    }
}

TEST_CASE("order comparison and heights") {
    Poset p = fence(4);
    CHECK(p.less(p.index_of("z1"), p.index_of("z2")));
    CHECK_FALSE(p.less(p.index_of("z1"), p.index_of("z3")));
    CHECK_FALSE(p.less(p.index_of("z2"), p.index_of("z1")));
    auto h = p.heights();
    CHECK(h == std::vector<int>{0, 1, 0, 1});
    CHECK(make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}).heights() == std::vector<int>{0, 1, 2});
}
