#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "corpus.hpp"
#include "rlz/oracle.hpp"
#include "rlz/parse.hpp"
#include "rlz/source_grid.hpp"

using namespace rlz;

namespace {

Parse parsed(const ReferenceIndex& ref, const std::vector<Sequence>& docs) {
    return parse_collection(ref, docs);
}

}  // namespace

TEST_CASE("source grid points of the running example") {
    ReferenceIndex ref("acgtgca");
    SourceGrid grid = SourceGrid::build(parsed(ref, {"cgtgacgt"}));
    REQUIRE(grid.point_count() == 2);
    // Sorted by source start: "acgt" copies G[1..4] to text position 5,
    // "cgtg" copies G[2..5] to text position 1.
    CHECK(grid.points()[0] == SourceGrid::Point{1, 4, 5, 1});
    CHECK(grid.points()[1] == SourceGrid::Point{2, 5, 1, 1});
}

TEST_CASE("containing() reports exactly the covering source intervals") {
    std::mt19937_64 rng(301);
    for (int round = 0; round < 12; ++round) {
        std::string g = testutil::random_string(rng, 100);
        ReferenceIndex ref(g);
        std::vector<Sequence> docs;
        for (int t = 0; t < 4; ++t) docs.push_back(testutil::mutate(rng, g, 0.04));
        SourceGrid grid = SourceGrid::build(parsed(ref, docs));

        for (int q = 0; q < 50; ++q) {
            std::uint64_t x = 1 + rng() % g.size();
            std::uint64_t y = x + rng() % 12;
            std::vector<SourceGrid::Point> got;
            grid.containing(x, y, got);
            std::vector<SourceGrid::Point> expect;
            for (const SourceGrid::Point& p : grid.points())
                if (p.src_lo <= x && p.src_hi >= y) expect.push_back(p);
            auto key = [](const SourceGrid::Point& p) {
                return std::make_pair(p.src_lo, p.text_pos);
            };
            std::sort(got.begin(), got.end(),
                      [&](const auto& a, const auto& b) { return key(a) < key(b); });
            CHECK(got == expect);
        }
    }
}

TEST_CASE("containing() touches few tree nodes") {
    std::mt19937_64 rng(302);
    std::string g = testutil::random_string(rng, 400);
    ReferenceIndex ref(g);
    std::vector<Sequence> docs;
    for (int t = 0; t < 10; ++t) docs.push_back(testutil::mutate(rng, g, 0.03));
    SourceGrid grid = SourceGrid::build(parsed(ref, docs));
    REQUIRE(grid.point_count() > 20);

    const double log_r = std::log2(static_cast<double>(grid.point_count()));
    for (int q = 0; q < 500; ++q) {
        std::uint64_t x = 1 + rng() % g.size();
        std::uint64_t y = x + rng() % 20;
        std::vector<SourceGrid::Point> got;
        std::uint64_t visits = 0;
        grid.containing(x, y, got, &visits);
        // Output-sensitive: node visits stay within a constant factor of
        // the answer size plus one root-to-leaf path.
        CHECK(visits <= 6.0 * (static_cast<double>(got.size()) + log_r + 1.0));
    }
}

TEST_CASE("secondary occurrences of the running example") {
    ReferenceIndex ref("acgtgca");
    SourceGrid grid = SourceGrid::build(parsed(ref, {"cgtgacgt"}));
    // "cg" occurs in G at position 2 only; both phrase copies cover it.
    auto hits = grid.secondary_occurrences({2}, 2);
    REQUIRE(hits.size() == 2);
    CHECK(hits[0] == TextHit{1, 1});
    CHECK(hits[1] == TextHit{1, 6});
    // "gac" has no reference occurrence, so nothing is copied.
    CHECK(grid.secondary_occurrences({}, 3).empty());
}

TEST_CASE("secondary occurrences equal the within-phrase hits of the naive search") {
    std::mt19937_64 rng(303);
    for (int round = 0; round < 8; ++round) {
        const char* alphabet = round % 2 ? "AC" : "ACGT";
        std::string g = testutil::random_string(rng, 120, alphabet);
        ReferenceIndex ref(g);
        std::vector<Sequence> docs;
        for (int t = 0; t < 4; ++t) docs.push_back(testutil::mutate(rng, g, 0.05, alphabet));
        Parse parse = parsed(ref, docs);
        SourceGrid grid = SourceGrid::build(parse);

        for (int q = 0; q < 40; ++q) {
            std::string p = testutil::sample_pattern(rng, docs, 1, 10);
            std::vector<std::uint64_t> ref_hits = ref.locate(ref.interval_of(p));
            auto got = grid.secondary_occurrences(ref_hits, p.size());

            std::vector<TextHit> expect;
            for (const NaiveHit& h : naive_search(g, docs, p))
                if (h.doc != 0 && h.containing_phrase.has_value())
                    expect.push_back(TextHit{h.doc, h.offset});
            std::sort(expect.begin(), expect.end());
            CHECK(got == expect);
        }
    }
}

TEST_CASE("a pattern longer than a phrase is never inside it") {
    ReferenceIndex ref("acgtgca");
    // Doc = "cgtg" + "acgt": no 5+ symbol window fits in one phrase.
    SourceGrid grid = SourceGrid::build(parsed(ref, {"cgtgacgt"}));
    CHECK(grid.secondary_occurrences({1}, 5).empty());
    CHECK(grid.secondary_occurrences({1, 2, 3}, 7).empty());
}

TEST_CASE("an empty collection has an empty grid") {
    ReferenceIndex ref("acgtgca");
    SourceGrid grid = SourceGrid::build(parsed(ref, {}));
    CHECK(grid.point_count() == 0);
    CHECK(grid.secondary_occurrences({1, 2}, 1).empty());
}
