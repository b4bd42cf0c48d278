// Tests for the boundary-crossing machinery: the reversed phrase
// dictionary, the phrase sequence with its sorted boundary suffixes, the
// boundary grid, and crossing-occurrence reporting end to end.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "doctest.h"
#include "rlz/oracle.hpp"
#include "rlz/parse.hpp"
#include "rlz/primary_index.hpp"
#include "rlz/reference_index.hpp"

using namespace rlz;

namespace {

struct Built {
    ReferenceIndex ref;
    Parse parse;
    PhraseDict dict;
    PrimaryIndex pidx;

    Built(const Sequence& g, const std::vector<Sequence>& docs)
        : ref(g),
          parse(parse_collection(ref, docs)),
          dict(build_dict(ref, parse)),
          pidx(PrimaryIndex::build(ref, parse, dict)) {}

    std::vector<TextHit> crossing(std::string_view p) const {
        const MatchStats ms = ref.matching_statistics(p);
        const auto rev_ivs = ref.reversed_prefix_intervals(p);
        return pidx.primary_occurrences(dict, parse, p, ms, rev_ivs);
    }
};

std::vector<TextHit> oracle_crossing(const Sequence& g, const std::vector<Sequence>& docs,
                                     std::string_view p) {
    std::vector<TextHit> out;
    for (const NaiveHit& h : naive_search(g, docs, std::string(p))) {
        if (h.doc != 0 && h.spans_boundary) out.push_back({h.doc, h.offset});
    }
    return out;
}

}  // namespace

TEST_CASE("reversed dictionary keys the reversed phrase texts") {
    Built b("acgtgca", {"cgtgacgt"});
    const ReversedPhraseDict rdict = build_reversed_dict(b.ref, b.dict);

    CHECK(rdict.size() == 2);
    CHECK(rdict.base() == 7);
    // Reversed texts: "acgt" -> "tgca" sits at reversed-order rank 7,
    // "cgtg" -> "gtgc" at rank 6, so keys sort as {6*7+4, 7*7+4}.
    CHECK(rdict.keys() == std::vector<std::uint64_t>{46, 53});
    CHECK(rdict.rev_rank_of(1) == 2);
    CHECK(rdict.rev_rank_of(2) == 1);
}

TEST_CASE("reversed-prefix lookup finds phrases ending with a string") {
    Built b("acgtgca", {"cgtgacgt"});
    const ReversedPhraseDict rdict = build_reversed_dict(b.ref, b.dict);

    // "g" occupies [5..6] in the reversed-reference ordering; the only
    // phrase whose reversal starts with "g" is "cgtg".
    CHECK(rdict.prefix_range(SuffixInterval{5, 6}, 1) == PhraseRange{1, 1});
    // "ca" -> phrases ending with "ac": none ("acgt" ends "gt", "cgtg" ends "tg").
    const auto rivs = b.ref.reversed_prefix_intervals("ca");
    CHECK(rdict.prefix_range(rivs[1], 2).empty());
    CHECK(rdict.prefix_range(SuffixInterval::none(), 3).empty());
}

TEST_CASE("reversed dictionary round-trips through explicit reversal") {
    std::mt19937_64 rng(0x9d5u);
    for (int it = 0; it < 40; ++it) {
        const std::string alphabet = it % 2 ? "ACGT" : "AB";
        const Sequence g = testutil::random_string(rng, 30 + it, alphabet);
        std::vector<Sequence> docs;
        for (int d = 0; d < 4; ++d) docs.push_back(testutil::mutate(rng, g, 0.08, alphabet));
        Built b(g, docs);
        const ReversedPhraseDict rdict = build_reversed_dict(b.ref, b.dict);

        // Decode every forward phrase, reverse its text, and check that
        // rev_rank_of agrees with the rank of that text among all
        // reversed phrase texts sorted lexicographically.
        std::vector<std::string> rev_texts;
        for (std::uint64_t r = 1; r <= b.dict.size(); ++r) {
            const Phrase ph = b.dict.decode(b.dict.key_at(r), b.ref);
            std::string t(b.ref.text().substr(ph.src_start - 1, ph.len));
            std::reverse(t.begin(), t.end());
            rev_texts.push_back(std::move(t));
        }
        std::vector<std::string> sorted = rev_texts;
        std::sort(sorted.begin(), sorted.end());
        for (std::uint64_t r = 1; r <= b.dict.size(); ++r) {
            const auto it2 = std::lower_bound(sorted.begin(), sorted.end(), rev_texts[r - 1]);
            const std::uint64_t expect = std::uint64_t(it2 - sorted.begin()) + 1;
            CHECK(rdict.rev_rank_of(r) == expect);
        }
    }
}

TEST_CASE("phrase sequence records ranks, sentinels, and boundaries") {
    Built b("acgtgca", {"cgtgacgt"});
    CHECK(phrase_ranks(b.ref, b.parse, b.dict) == std::vector<std::uint64_t>{2, 1});

    const PhraseSequence& seq = b.pidx.seq;
    CHECK(seq.syms() == std::vector<std::uint64_t>{2, 1, 0});
    REQUIRE(seq.boundary_count() == 1);
    CHECK(seq.boundary(1).seq_pos == 2);
    CHECK(seq.boundary(1).text_pos == 5);
    CHECK(seq.boundary(1).doc == 1);
    CHECK(seq.boundary(1).end_phrase == 0);
    CHECK(seq.rank_of_boundary(1) == 1);
    CHECK(seq.boundary_of_rank(1) == 1);

    CHECK(seq.starting_with(PhraseRange{1, 1}) == BoundaryRange{1, 1});
    CHECK(seq.starting_with(PhraseRange{2, 2}).empty());
    CHECK(seq.starting_with(PhraseRange{1, 2}) == BoundaryRange{1, 1});
    CHECK(seq.starting_with(PhraseRange::none()).empty());
    CHECK(seq.backward_step(BoundaryRange{1, 1}, 2).empty());
}

TEST_CASE("boundary suffixes sort as integer sequences, shorter first") {
    // Two copies of the document: the second boundary's suffix (1, 0) is
    // a proper prefix of the first's (1, 0, 2, 1, 0) and must rank lower.
    Built b("acgtgca", {"cgtgacgt", "cgtgacgt"});
    const PhraseSequence& seq = b.pidx.seq;
    CHECK(seq.syms() == std::vector<std::uint64_t>{2, 1, 0, 2, 1, 0});
    REQUIRE(seq.boundary_count() == 2);
    CHECK(seq.boundary(2).seq_pos == 5);
    CHECK(seq.boundary(2).text_pos == 13);
    CHECK(seq.boundary(2).doc == 2);
    CHECK(seq.boundary(2).end_phrase == 2);
    CHECK(seq.rank_of_boundary(1) == 2);
    CHECK(seq.rank_of_boundary(2) == 1);
    CHECK(seq.boundary_of_rank(1) == 2);
    CHECK(seq.boundary_of_rank(2) == 1);
    CHECK(seq.starting_with(PhraseRange{1, 1}) == BoundaryRange{1, 2});
}

TEST_CASE("backward step walks one phrase leftward") {
    // "cgtgacgtcgtg" parses into three phrases (ranks 2, 1, 2) with
    // boundary suffixes (1,2,0) and (2,0) sorted in that order.
    Built b("acgtgca", {"cgtgacgtcgtg"});
    const PhraseSequence& seq = b.pidx.seq;
    CHECK(seq.syms() == std::vector<std::uint64_t>{2, 1, 2, 0});
    REQUIRE(seq.boundary_count() == 2);
    CHECK(seq.rank_of_boundary(1) == 1);
    CHECK(seq.rank_of_boundary(2) == 2);

    CHECK(seq.starting_with(PhraseRange{1, 1}) == BoundaryRange{1, 1});
    CHECK(seq.starting_with(PhraseRange{2, 2}) == BoundaryRange{2, 2});
    // Suffixes starting (1, ...) preceded by phrase 2: exactly (2, 0).
    CHECK(seq.backward_step(BoundaryRange{1, 1}, 2).empty());
    // Suffixes starting (2, ...) preceded by phrase 1: the (2, 0) at
    // sequence position 3, whose predecessor position is the boundary
    // after phrase 1.
    CHECK(seq.backward_step(BoundaryRange{2, 2}, 1) == BoundaryRange{1, 1});
    CHECK(seq.backward_step(BoundaryRange::none(), 1).empty());
}

TEST_CASE("boundary grid stores one point per boundary and reports rectangles") {
    Built b("acgtgca", {"cgtgacgt"});
    const BoundaryGrid& grid = b.pidx.grid;
    REQUIRE(grid.point_count() == 1);
    CHECK(grid.points()[0] == BoundaryGrid::Point{1, 1, 1});
    CHECK(grid.report(BoundaryRange{1, 1}, PhraseRange{1, 1}) ==
          std::vector<std::uint64_t>{1});
    CHECK(grid.report(BoundaryRange{1, 1}, PhraseRange{2, 2}).empty());
    CHECK(grid.report(BoundaryRange::none(), PhraseRange{1, 2}).empty());
}

TEST_CASE("boundary grid reporting matches a direct scan") {
    std::mt19937_64 rng(0x51dbu);
    for (int it = 0; it < 30; ++it) {
        const std::uint64_t count = 1 + rng() % 40;
        const std::uint64_t ymax = 1 + rng() % 20;
        std::vector<std::uint64_t> xs(count);
        for (std::uint64_t i = 0; i < count; ++i) xs[i] = i + 1;
        std::shuffle(xs.begin(), xs.end(), rng);
        std::vector<BoundaryGrid::Point> pts(count);
        for (std::uint64_t i = 0; i < count; ++i)
            pts[i] = {xs[i], 1 + rng() % ymax, i + 1};
        const BoundaryGrid grid(pts);
        REQUIRE(grid.point_count() == count);

        for (int q = 0; q < 50; ++q) {
            const std::uint64_t xlo = 1 + rng() % count, xhi = 1 + rng() % count;
            const std::uint64_t ylo = 1 + rng() % ymax, yhi = 1 + rng() % ymax;
            std::vector<std::uint64_t> expect;
            for (const auto& p : pts)
                if (p.x >= xlo && p.x <= xhi && p.y >= ylo && p.y <= yhi)
                    expect.push_back(p.b);
            std::sort(expect.begin(), expect.end());
            auto got = grid.report(BoundaryRange{xlo, xhi}, PhraseRange{ylo, yhi});
            std::sort(got.begin(), got.end());
            CHECK(got == expect);
        }
    }
}

TEST_CASE("pattern suffix ranges cover every split point") {
    Built b("acgtgca", {"cgtgacgt"});
    const MatchStats ms = b.ref.matching_statistics("gac");
    const auto entries = b.pidx.pattern_suffix_ranges(b.dict, "gac", ms);
    REQUIRE(entries.size() == 2);
    // Split i=2: boundary suffixes realizing "ac..." — the phrase
    // sequence suffix (1, 0), rank 1.
    CHECK(entries[0] == BoundaryRange{1, 1});
    // Split i=3: "c" alone is a proper prefix of both phrases, never a
    // whole leading phrase, so no boundary suffix realizes it.
    CHECK(entries[1].empty());
}

TEST_CASE("crossing occurrences of the worked example") {
    Built b("acgtgca", {"cgtgacgt"});
    CHECK(b.crossing("gac") == std::vector<TextHit>{{1, 4}});
    CHECK(b.crossing("cg").empty());
    CHECK(b.crossing("cgtgacgt") == std::vector<TextHit>{{1, 1}});
    CHECK(b.crossing("tga") == std::vector<TextHit>{{1, 3}});
    CHECK(b.crossing("zzz").empty());
}

TEST_CASE("occurrences spanning several phrases chain through whole phrases") {
    // Every phrase of "ababab" is "ab"; patterns longer than one phrase
    // must consume whole phrases between their first and last fragments.
    Built b("ab", {"ababab"});
    CHECK(phrase_ranks(b.ref, b.parse, b.dict) == std::vector<std::uint64_t>{1, 1, 1});
    CHECK(b.crossing("ba") == std::vector<TextHit>{{1, 2}, {1, 4}});
    CHECK(b.crossing("baba") == std::vector<TextHit>{{1, 2}});
    CHECK(b.crossing("abab") == std::vector<TextHit>{{1, 1}, {1, 3}});
    CHECK(b.crossing("ababab") == std::vector<TextHit>{{1, 1}});
    CHECK(b.crossing("bab") == std::vector<TextHit>{{1, 2}, {1, 4}});
    CHECK(b.crossing("ab").empty());   // aligned with the phrases
    CHECK(b.crossing("aba") == std::vector<TextHit>{{1, 1}, {1, 3}});
    CHECK(b.crossing("bb").empty());
    CHECK(b.crossing("aa").empty());

    // Same shape against the oracle for good measure.
    for (const char* p : {"a", "b", "ab", "ba", "aba", "bab", "abab", "baba", "ababab"})
        CHECK(b.crossing(p) == oracle_crossing("ab", {"ababab"}, p));
}

TEST_CASE("crossing occurrences match the oracle on mutated collections") {
    std::mt19937_64 rng(0xc0ffeeu);
    for (int it = 0; it < 12; ++it) {
        const std::string alphabet = it % 3 ? "ACGT" : "ACG";
        const Sequence g = testutil::random_string(rng, 120 + 15 * it, alphabet);
        std::vector<Sequence> docs;
        const std::uint64_t ndocs = 2 + rng() % 5;
        for (std::uint64_t d = 0; d < ndocs; ++d)
            docs.push_back(testutil::mutate(rng, g, 0.05, alphabet));
        Built b(g, docs);

        for (int q = 0; q < 60; ++q) {
            const std::string p = testutil::sample_pattern(rng, docs, 1, 25, alphabet);
            CAPTURE(p);
            CHECK(b.crossing(p) == oracle_crossing(g, docs, p));
        }
    }
}

TEST_CASE("crossing occurrences match the oracle when phrases are short") {
    // Random (not mutated) documents over a two-letter alphabet keep
    // phrases short, so longer patterns routinely span three or more
    // phrases and exercise the whole-phrase chain.
    std::mt19937_64 rng(0xfeedu);
    for (int it = 0; it < 10; ++it) {
        const Sequence g = testutil::random_string(rng, 16, "ab");
        std::vector<Sequence> docs;
        const std::uint64_t ndocs = 1 + rng() % 4;
        for (std::uint64_t d = 0; d < ndocs; ++d)
            docs.push_back(testutil::random_string(rng, 40 + rng() % 40, "ab"));
        Built b(g, docs);

        for (int q = 0; q < 80; ++q) {
            const std::string p = testutil::sample_pattern(rng, docs, 1, 14, "ab");
            CAPTURE(p);
            CHECK(b.crossing(p) == oracle_crossing(g, docs, p));
        }
    }
}

TEST_CASE("rebuilding from stored parts reproduces the primary structures") {
    std::mt19937_64 rng(0xabcdu);
    const Sequence g = testutil::random_string(rng, 80, "ACGT");
    std::vector<Sequence> docs;
    for (int d = 0; d < 3; ++d) docs.push_back(testutil::mutate(rng, g, 0.06, "ACGT"));
    Built b(g, docs);

    const auto ranks = phrase_ranks(b.ref, b.parse, b.dict);
    std::vector<std::uint64_t> stored;
    for (std::uint64_t bd = 1; bd <= b.pidx.seq.boundary_count(); ++bd)
        stored.push_back(b.pidx.seq.rank_of_boundary(bd));
    const PrimaryIndex again =
        PrimaryIndex::from_parts(b.ref, b.parse, b.dict, ranks, stored);

    CHECK(again.seq.syms() == b.pidx.seq.syms());
    REQUIRE(again.seq.boundary_count() == b.pidx.seq.boundary_count());
    for (std::uint64_t bd = 1; bd <= again.seq.boundary_count(); ++bd)
        CHECK(again.seq.rank_of_boundary(bd) == b.pidx.seq.rank_of_boundary(bd));
    CHECK(again.grid.points() == b.pidx.grid.points());
    CHECK(again.rdict.keys() == b.pidx.rdict.keys());

    for (int q = 0; q < 40; ++q) {
        const std::string p = testutil::sample_pattern(rng, docs, 1, 20, "ACGT");
        const MatchStats ms = b.ref.matching_statistics(p);
        const auto rivs = b.ref.reversed_prefix_intervals(p);
        CHECK(again.primary_occurrences(b.dict, b.parse, p, ms, rivs) ==
              b.pidx.primary_occurrences(b.dict, b.parse, p, ms, rivs));
    }
}
