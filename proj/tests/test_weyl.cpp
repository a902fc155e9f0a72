/**
 * Tests for Weyl group enumeration, canonical words, inversion sets and
 * Bruhat cover positions.
 */
#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "kcell/weyl.hpp"

using namespace kcell;

namespace {

struct Ctx {
    RootSystem rs;
    WeylGroup wg;

    Ctx(Family f, int rank) : rs(build_root_system({f, rank})) {
        wg = WeylGroup::enumerate(rs);
    }
};

/** All reduced words of every element, found by depth-first ascent search. */
std::map<int, std::vector<std::vector<int>>> all_reduced_words(const Ctx& c) {
    std::map<int, std::vector<std::vector<int>>> out;
    std::vector<int> word;
    std::function<void(int)> dfs = [&](int id) {
        out[id].push_back(word);
        for (int i = 0; i < c.rs.rank(); ++i) {
            const int next = c.wg.right_multiply(id, i);
            if (c.wg.length(next) > c.wg.length(id)) {
                word.push_back(i);
                dfs(next);
                word.pop_back();
            }
        }
    };
    dfs(0);
    return out;
}

} // namespace

TEST_CASE("Enumeration of the small Weyl groups", "[weyl]")
{
    SECTION("A1") {
        const Ctx c(Family::A, 1);
        REQUIRE(c.wg.size() == 2);
        REQUIRE(c.wg.word(0).empty());
        REQUIRE(c.wg.word(1) == std::vector<int>{0});
    }
    SECTION("A2") {
        const Ctx c(Family::A, 2);
        REQUIRE(c.wg.size() == 6);
        const std::vector<std::vector<int>> expected = {
            {}, {0}, {1}, {0, 1}, {1, 0}, {0, 1, 0}};
        for (int id = 0; id < 6; ++id)
            REQUIRE(c.wg.word(id) == expected[id]);
        REQUIRE(c.wg.longest() == 5);
    }
    SECTION("G2") {
        const Ctx c(Family::G, 2);
        REQUIRE(c.wg.size() == 12);
        REQUIRE(c.wg.max_length() == 6);
        REQUIRE(c.wg.word(c.wg.longest()) == std::vector<int>{0, 1, 0, 1, 0, 1});
        std::vector<std::size_t> counts;
        for (const auto& level : c.wg.by_length())
            counts.push_back(level.size());
        REQUIRE(counts == std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 1});
    }
    SECTION("orders") {
        REQUIRE(Ctx(Family::A, 3).wg.size() == 24);
        REQUIRE(Ctx(Family::A, 4).wg.size() == 120);
        REQUIRE(Ctx(Family::B, 2).wg.size() == 8);
        REQUIRE(Ctx(Family::C, 2).wg.size() == 8);
    }
}

TEST_CASE("Enumeration budget", "[weyl]")
{
    const auto rs = build_root_system({Family::A, 2});
    REQUIRE_THROWS_AS(WeylGroup::enumerate(rs, 3), EnumerationLimitError);
}

TEST_CASE("Inversion sets", "[weyl]")
{
    const Ctx a2(Family::A, 2);
    SECTION("A2 word r2 r1") {
        const auto inv = inversion_set(a2.rs, {1, 0});
        REQUIRE(inv == std::vector<Root>{{0, 1}, {1, 1}});
    }
    SECTION("empty word") {
        REQUIRE(inversion_set(a2.rs, {}).empty());
    }
    SECTION("G2 word (r1 r2)^2") {
        const Ctx g2(Family::G, 2);
        const auto inv = inversion_set(g2.rs, {0, 1, 0, 1});
        const std::set<Root> got(inv.begin(), inv.end());
        REQUIRE(got == std::set<Root>{{1, 0}, {3, 1}, {2, 1}, {3, 2}});
    }
    SECTION("non-reduced words are rejected") {
        REQUIRE_THROWS_AS(inversion_set(a2.rs, {0, 0}), InvalidArgument);
        REQUIRE_THROWS_AS(inversion_set(a2.rs, {0, 1, 0, 1}), InvalidArgument);
    }
}

TEST_CASE("Group operations", "[weyl]")
{
    const Ctx a2(Family::A, 2);
    REQUIRE(a2.wg.multiply(1, 1) == 0);  // r1 r1 = 1
    REQUIRE(a2.wg.apply(2, a2.rs.simple_root(0)) == Root{1, 1});  // r2(a1) = a1 + a2

    const Ctx g2(Family::G, 2);
    REQUIRE(g2.wg.length(g2.wg.longest()) == 6);

    for (const auto& c : {a2, g2})
        for (const auto& w : c.wg.elements()) {
            REQUIRE(c.wg.multiply(w.id, c.wg.inverse(w.id)) == 0);
            REQUIRE(c.wg.multiply(c.wg.inverse(w.id), w.id) == 0);
        }
}

TEST_CASE("Cover positions by single deletions", "[weyl]")
{
    const Ctx a2(Family::A, 2);
    const int r1 = a2.wg.element_of_word({0});
    const int r2 = a2.wg.element_of_word({1});
    const int r1r2 = a2.wg.element_of_word({0, 1});
    const int r2r1 = a2.wg.element_of_word({1, 0});
    const int w0 = a2.wg.element_of_word({0, 1, 0});

    REQUIRE(a2.wg.cover_deletions(r1r2) ==
            std::vector<std::pair<int, int>>{{0, r2}, {1, r1}});
    // the middle deletion of r1 r2 r1 leaves r1 r1, which is not reduced
    REQUIRE(a2.wg.cover_deletions(w0) ==
            std::vector<std::pair<int, int>>{{0, r2r1}, {2, r1r2}});
    REQUIRE(a2.wg.cover_deletions(r1) == std::vector<std::pair<int, int>>{{0, 0}});
    REQUIRE(a2.wg.cover_deletions(0).empty());
}

TEST_CASE("Weyl group properties per supported type", "[weyl][properties]")
{
    const std::pair<Family, int> types[] = {
        {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4},
        {Family::B, 2}, {Family::C, 2}, {Family::G, 2}};
    for (const auto& [f, rank] : types) {
        const Ctx c(f, rank);

        // length == inversion count, and the top length is the positive-root count
        for (const auto& w : c.wg.elements())
            REQUIRE(inversion_set(c.rs, w.word).size() == static_cast<std::size_t>(w.length));
        REQUIRE(c.wg.max_length() == static_cast<int>(c.rs.positive_roots.size()));
        REQUIRE(c.wg.by_length().back().size() == 1);

        // equal numbers of even- and odd-length elements
        long long signed_count = 0;
        for (const auto& w : c.wg.elements())
            signed_count += w.length % 2 == 0 ? 1 : -1;
        REQUIRE(signed_count == 0);

        // every cover deletion drops the length by exactly one
        for (const auto& w : c.wg.elements())
            for (const auto& [pos, v] : c.wg.cover_deletions(w.id))
                REQUIRE(c.wg.length(v) == w.length - 1);
    }
}

TEST_CASE("All reduced words agree in length and action", "[weyl][properties]")
{
    const std::pair<Family, int> types[] = {
        {Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::G, 2}};
    for (const auto& [f, rank] : types) {
        const Ctx c(f, rank);
        const auto words = all_reduced_words(c);
        REQUIRE(words.size() == c.wg.size());
        for (const auto& [id, list] : words) {
            for (const auto& w : list) {
                REQUIRE(w.size() == static_cast<std::size_t>(c.wg.length(id)));
                REQUIRE(c.wg.element_of_word(w) == id);
                REQUIRE_NOTHROW(inversion_set(c.rs, w));
            }
            // the canonical word is the ShortLex-least reduced word
            REQUIRE(*std::min_element(list.begin(), list.end()) == c.wg.word(id));
        }
    }
}
