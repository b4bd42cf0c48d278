#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "rlz/parse.hpp"
#include "rlz/reference_index.hpp"
#include "rlz/types.hpp"

namespace rlz {

// Dictionary of the reversed phrase texts, keyed over the reversed
// reference ordering exactly as PhraseDict keys the forward texts.
class ReversedPhraseDict {
public:
    ReversedPhraseDict() = default;
    ReversedPhraseDict(std::vector<std::uint64_t> keys,
                       std::vector<std::uint64_t> rev_rank_by_rank, std::uint64_t base);

    std::uint64_t size() const { return keys_.size(); }
    std::uint64_t base() const { return base_; }
    const std::vector<std::uint64_t>& keys() const { return keys_; }
    // Rank in this dictionary of the phrase with forward rank fr.
    std::uint64_t rev_rank_of(std::uint64_t fr) const { return rev_rank_by_rank_[fr - 1]; }

    // Ranks of reversed phrases beginning with the string whose interval
    // in the reversed reference ordering is riv (min_len = its length).
    PhraseRange prefix_range(const SuffixInterval& riv, std::uint64_t min_len) const;

private:
    std::vector<std::uint64_t> keys_;              // sorted
    std::vector<std::uint64_t> rev_rank_by_rank_;  // forward rank -> rank here
    std::uint64_t base_ = 0;
};

// The collection rewritten as dictionary ranks, one run per document,
// each run closed by a 0 sentinel.  Boundary suffixes — the suffixes
// starting right after each non-final phrase of a document — are kept in
// sorted order and support backward search by whole phrases.
class PhraseSequence {
public:
    struct Boundary {
        std::uint64_t seq_pos = 0;   // position in syms (1-based)
        std::uint64_t text_pos = 0;  // global text position just after the phrase
        std::uint64_t doc = 0;
        std::uint64_t end_phrase = 0;  // 0-based parse index of the phrase ending here
    };

    PhraseSequence() = default;
    // rank_by_boundary: precomputed sorted-order ranks (loading path);
    // empty to sort here.
    static PhraseSequence build(const Parse& parse, const std::vector<std::uint64_t>& phrase_ranks,
                                std::uint64_t dict_size,
                                std::vector<std::uint64_t> rank_by_boundary = {});

    const std::vector<std::uint64_t>& syms() const { return syms_; }
    std::uint64_t boundary_count() const { return bds_.size(); }
    const Boundary& boundary(std::uint64_t b) const { return bds_[b - 1]; }  // text order
    std::uint64_t rank_of_boundary(std::uint64_t b) const { return rank_by_b_[b - 1]; }
    std::uint64_t boundary_of_rank(std::uint64_t x) const { return b_by_rank_[x - 1]; }

    // Boundary suffixes whose first phrase has rank in dr.
    BoundaryRange starting_with(const PhraseRange& dr) const;

    // From the range of boundary suffixes realizing a phrase string W,
    // the range realizing f·W.
    BoundaryRange backward_step(const BoundaryRange& iv, std::uint64_t f) const;

private:
    std::vector<std::uint64_t> syms_;
    std::vector<Boundary> bds_;
    std::vector<std::uint64_t> rank_by_b_, b_by_rank_;
    std::vector<std::uint64_t> first_counts_;            // C: size d+2 cumulative
    std::vector<std::vector<std::uint64_t>> pred_occ_;   // per symbol: sorted suffix ranks whose
                                                         // predecessor position carries it
    std::vector<std::uint64_t> sentinel_tail_;           // per symbol: #suffixes (f, 0, ...)
};

// One point per boundary: x = sorted rank of its suffix, y = reversed
// dictionary rank of the phrase ending there.  Orthogonal range
// reporting via a y-sorted tree over x segments.
class BoundaryGrid {
public:
    struct Point {
        std::uint64_t x = 0, y = 0, b = 0;
        friend bool operator==(const Point&, const Point&) = default;
    };

    BoundaryGrid() = default;
    explicit BoundaryGrid(std::vector<Point> points);  // any order; stored by b

    std::uint64_t point_count() const { return by_b_.size(); }
    const std::vector<Point>& points() const { return by_b_; }

    // Boundary ids of points with x in xr and y in yr.
    std::vector<std::uint64_t> report(const BoundaryRange& xr, const PhraseRange& yr) const;

private:
    void collect(std::uint64_t node, std::uint64_t lo, std::uint64_t hi, std::uint64_t xlo,
                 std::uint64_t xhi, std::uint64_t ylo, std::uint64_t yhi,
                 std::vector<std::uint64_t>& out) const;

    std::vector<Point> by_b_;
    std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> nodes_;  // (y, b) sorted
    std::uint64_t leaves_ = 0;
};

struct PrimaryIndex {
    PhraseSequence seq;
    ReversedPhraseDict rdict;
    BoundaryGrid grid;

    static PrimaryIndex build(const ReferenceIndex& ref, const Parse& parse,
                              const PhraseDict& dict);
    // Loading path: phrase ranks come from the stored phrase sequence and
    // boundary ranks arrive precomputed, skipping the suffix sort.
    static PrimaryIndex from_parts(const ReferenceIndex& ref, const Parse& parse,
                                   const PhraseDict& dict,
                                   const std::vector<std::uint64_t>& phrase_ranks,
                                   std::vector<std::uint64_t> rank_by_boundary);

    // Entry k (0-based) is the range of boundary suffixes realizing
    // P[i..m] for split i = k+2; m-1 entries for a length-m pattern.
    std::vector<BoundaryRange> pattern_suffix_ranges(const PhraseDict& dict, std::string_view p,
                                                     const MatchStats& ms) const;

    // Occurrences crossing at least one phrase boundary, each reported at
    // its first internal boundary; sorted by (doc, offset).
    std::vector<TextHit> primary_occurrences(const PhraseDict& dict, const Parse& parse,
                                             std::string_view p, const MatchStats& ms,
                                             const std::vector<SuffixInterval>& rev_ivs) const;

  private:
    static PrimaryIndex assemble(const ReferenceIndex& ref, const Parse& parse,
                                 const PhraseDict& dict, const std::vector<std::uint64_t>& ranks,
                                 std::vector<std::uint64_t> rank_by_boundary);
};

// Forward phrase ranks (into dict) for every phrase of the parse.
std::vector<std::uint64_t> phrase_ranks(const ReferenceIndex& ref, const Parse& parse,
                                        const PhraseDict& dict);

ReversedPhraseDict build_reversed_dict(const ReferenceIndex& ref, const PhraseDict& dict);

}  // namespace rlz
