#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rlz/types.hpp"

namespace rlz {

// Brute-force reference implementations, used only by the test suite to
// check the index against first principles.

struct NaiveHit {
    std::uint64_t doc = 0;     // 0 = the reference itself
    std::uint64_t offset = 0;  // 1-based within the sequence
    bool spans_boundary = false;
    // 1-based phrase index within the document's parse when the whole
    // occurrence sits inside that phrase.
    std::optional<std::uint64_t> containing_phrase;
};

// Sorted suffix array (rank -> 1-based position) by direct comparison;
// a suffix that is a prefix of another sorts first.
std::vector<std::uint64_t> naive_suffix_sort(const Sequence& s);

// Suffix interval of x by scanning the sorted suffixes.
SuffixInterval naive_interval(const Sequence& s, const std::vector<std::uint64_t>& sa,
                              std::string_view x);

// For every 1-based position i of s: length of the longest prefix of
// s[i..] that occurs somewhere in ref.
std::vector<std::uint64_t> naive_match_lengths(const Sequence& ref, std::string_view s);

// Greedy factorization by direct longest-match search; source is the
// leftmost occurrence in ref.  Throws MissingSymbol (doc 0).
std::vector<Phrase> naive_parse(const Sequence& ref, const Sequence& doc);

// Every occurrence of p in the reference and in each document, by
// sliding-window comparison; boundary crossing / containing phrase are
// classified against the given parses (one per document).
std::vector<NaiveHit> naive_search_with_parses(const Sequence& ref,
                                               const std::vector<Sequence>& docs,
                                               const std::vector<std::vector<Phrase>>& parses,
                                               std::string_view p);

// Convenience wrapper that parses the documents itself.
std::vector<NaiveHit> naive_search(const Sequence& ref, const std::vector<Sequence>& docs,
                                   std::string_view p);

}  // namespace rlz
