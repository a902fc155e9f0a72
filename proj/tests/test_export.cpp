/**
 * Tests for JSON and DOT emission: shapes, fixed orderings, byte stability.
 */
#include <catch2/catch_amalgamated.hpp>

#include "kcell/export.hpp"

using namespace kcell;

namespace {

struct Ctx {
    RootSystem rs;
    WeylGroup wg;

    Ctx(Family f, int rank) : rs(build_root_system({f, rank})) {
        wg = WeylGroup::enumerate(rs);
    }
};

} // namespace

TEST_CASE("Root system JSON", "[export]")
{
    const Ctx a2(Family::A, 2);
    const Json j = to_json(a2.rs);
    REQUIRE(j["type"] == "A2");
    REQUIRE(j["cartan"] == Json::array({{2, -1}, {-1, 2}}));
    REQUIRE(j["positive_roots"] == Json::array({{1, 0}, {0, 1}, {1, 1}}));
    REQUIRE(j.dump() == to_json(build_root_system({Family::A, 2})).dump());
}

TEST_CASE("Weyl group JSON", "[export]")
{
    const Ctx a2(Family::A, 2);
    const Json j = to_json(a2.wg);
    REQUIRE(j["elements"].size() == 6);
    REQUIRE(j["elements"][0]["word"].empty());
    REQUIRE(j["elements"][5]["word"] == Json::array({1, 2, 1}));
    REQUIRE(j["elements"][5]["length"] == 3);
    // the A2 Bruhat graph has 8 cover edges
    REQUIRE(j["covers"].size() == 8);
}

TEST_CASE("Complex JSON has the documented shape", "[export]")
{
    const Ctx a2(Family::A, 2);
    const UGroup ug(a2.rs, a2.wg);
    const auto cx = build_complex(ug, Space::CompactGroup);
    const Json j = to_json(cx);
    REQUIRE(j["space"] == "compact");
    REQUIRE(j["type"] == "A2");
    REQUIRE(j["dims"] == Json::array({4, 8, 8, 4}));
    REQUIRE(j["boundaries"].size() == 3);
    REQUIRE(j["boundaries"][0]["d"] == 1);
    // entries are [row, col, value] triples sorted by (row, col)
    const auto& entries = j["boundaries"][0]["entries"];
    REQUIRE(entries[0].size() == 3);
    REQUIRE(entries[0][0] == 0);

    // byte-stable across rebuilds
    const auto cx2 = build_complex(ug, Space::CompactGroup);
    REQUIRE(j.dump() == to_json(cx2).dump());
}

TEST_CASE("Homology JSON", "[export]")
{
    const Json j = to_json(std::vector<HomologyGroup>{{1, {}}, {0, {2}}});
    REQUIRE(j.dump() == R"([{"free_rank":1,"torsion":[]},{"free_rank":0,"torsion":[2]}])");
}

TEST_CASE("Order graph exports", "[export]")
{
    const Ctx a1(Family::A, 1);
    const UGroup ug(a1.rs, a1.wg);
    const auto g = order_graph(ug);

    const Json j = to_json(ug, g);
    REQUIRE(j["vertices"].size() == 4);
    REQUIRE(j["edges"].size() == 4);
    REQUIRE(j["edges"][0]["from"] == Json::array({1, 0}));
    REQUIRE(j["edges"][0]["to"] == Json::array({0, 0}));
    REQUIRE(j["edges"][0]["position"] == 1);
    REQUIRE(j["edges"][0]["kind"] == 0);

    const std::string dot = to_dot(ug, g);
    REQUIRE(dot.find("digraph order_A1") != std::string::npos);
    REQUIRE(dot.find("\"s1\" -> \"1\";") != std::string::npos);
    REQUIRE(dot.find("\"s1 c1\" -> \"c1\";") != std::string::npos);
    REQUIRE(dot.find("rank=same") != std::string::npos);

    const std::string wdot = to_dot(a1.wg);
    REQUIRE(wdot.find("\"r1\" -> \"1\";") != std::string::npos);
}
