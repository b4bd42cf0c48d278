#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "rlz/types.hpp"

namespace rlz {

// Suffix-array index over the reference text and its reversal.
//
// Both directions carry a plain suffix array plus inverse, an LCP array
// and previous/next-smaller-value arrays over it.  Suffixes are compared
// so that a suffix that is a proper prefix of another sorts first (an
// implicit end-of-text sentinel smaller than every symbol).  All ranks
// and text positions in this API are 1-based.
class ReferenceIndex {
public:
    explicit ReferenceIndex(Sequence text);

    // Reassembles an index from stored suffix/LCP arrays (1-based
    // positions; lcp[k] = LCP of the k-th and (k-1)-th sorted suffixes,
    // k in [2..n]).  Derived arrays are rebuilt, not checked.
    static ReferenceIndex from_parts(Sequence text,
                                     std::vector<std::uint64_t> sa_fwd,
                                     std::vector<std::uint64_t> lcp_fwd,
                                     std::vector<std::uint64_t> sa_rev,
                                     std::vector<std::uint64_t> lcp_rev);

    std::uint64_t size() const { return n_; }
    const Sequence& text() const { return fwd_.text; }
    const Sequence& reversed_text() const { return rev_.text; }
    std::uint32_t sigma() const { return sigma_; }
    bool contains_symbol(Symbol c) const;

    // Rank <-> position accessors (1-based on both sides).
    std::uint64_t suffix_at(std::uint64_t rank, bool reversed = false) const;
    std::uint64_t rank_of_suffix(std::uint64_t pos, bool reversed = false) const;
    std::uint64_t lcp_at(std::uint64_t rank, bool reversed = false) const;

    // Interval of all suffixes having x as a prefix; [1..n] for empty x.
    SuffixInterval interval_of(std::string_view x, bool reversed = false) const;

    // Sorted text positions of the suffixes in iv.
    std::vector<std::uint64_t> locate(const SuffixInterval& iv) const;

    // From the interval of a string X of length x_len, the interval of cX.
    SuffixInterval extend_left(const SuffixInterval& x_iv, std::uint64_t x_len, Symbol c,
                               bool reversed = false) const;

    // From the full interval of a string W of length target_len+1, the
    // interval of W's length-target_len prefix.  Constant time via the
    // smaller-value arrays; never re-searches.
    SuffixInterval contract_right(const SuffixInterval& w_iv, std::uint64_t target_len,
                                  bool reversed = false) const;

    // Narrows the interval of a string X of length x_len to the interval
    // of Xc (one more symbol on the right).
    SuffixInterval narrow_right(const SuffixInterval& x_iv, std::uint64_t x_len, Symbol c,
                                bool reversed = false) const;

    // Per-position longest-match table for p against the reference,
    // computed right to left with extend_left / contract_right steps.
    MatchStats matching_statistics(std::string_view p) const;

    // Entry k (0-based) is the interval, in the reversed ordering, of
    // reverse(p[1..k+1]) — i.e. of the reversed pattern prefixes; there
    // are m entries for a length-m pattern.
    std::vector<SuffixInterval> reversed_prefix_intervals(std::string_view p) const;

private:
    struct Side {
        Sequence text;
        std::vector<std::uint64_t> sa;    // rank -> position, [1..n]
        std::vector<std::uint64_t> isa;   // position -> rank, [1..n]
        std::vector<std::int64_t> lcp;    // [1..n+1], sentinels -1 at 1 and n+1
        std::vector<std::uint64_t> psv;   // previous rank with strictly smaller lcp
        std::vector<std::uint64_t> nsv;   // next rank with strictly smaller lcp
        std::array<std::uint64_t, 257> char_start{};  // first rank per first symbol

        std::uint64_t n() const { return sa.size() ? sa.size() - 1 : 0; }
        std::uint64_t tail_rank(std::uint64_t rank) const;
        void finish();  // derive isa/psv/nsv/char_start from text+sa+lcp
    };

    ReferenceIndex() = default;
    static Side build_side(Sequence text);
    const Side& side(bool reversed) const { return reversed ? rev_ : fwd_; }

    Side fwd_, rev_;
    std::uint64_t n_ = 0;
    std::uint32_t sigma_ = 0;
    std::array<bool, 256> present_{};
};

}  // namespace rlz
