#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rlz/reference_index.hpp"
#include "rlz/types.hpp"

namespace rlz {

// Greedy factorization of doc into longest prefixes occurring in the
// reference.  Throws MissingSymbol (doc id 0) on a symbol the reference
// lacks.
std::vector<Phrase> rlz_parse(const ReferenceIndex& ref, std::string_view doc);

// Factorizes every document and lays the phrases out over the
// concatenated collection text.  MissingSymbol is rethrown with the
// 1-based document id attached.
Parse parse_collection(const ReferenceIndex& ref, const std::vector<Sequence>& docs);

std::string_view phrase_text(const Sequence& reference, const Phrase& ph);

// Integer key: (rank of the smallest reference suffix with the phrase as
// prefix) * n + phrase length.  Key order is lexicographic phrase order,
// with a prefix sorting before its extensions.
std::uint64_t phrase_key(const ReferenceIndex& ref, const Phrase& ph);

// Sorted set of the distinct phrase keys of a parse.
class PhraseDict {
public:
    PhraseDict() = default;
    PhraseDict(std::vector<std::uint64_t> keys, std::uint64_t base);

    std::uint64_t size() const { return keys_.size(); }             // d
    std::uint64_t base() const { return base_; }                    // n
    std::uint64_t key_at(std::uint64_t rank) const { return keys_[rank - 1]; }
    const std::vector<std::uint64_t>& keys() const { return keys_; }

    std::optional<std::uint64_t> rank_of(std::uint64_t key) const;  // 1-based
    // Ranks of all keys in [key_lo .. key_hi].
    PhraseRange range_of_keys(std::uint64_t key_lo, std::uint64_t key_hi) const;

    // Source position and length encoded by a key (the smallest suffix
    // with the phrase as prefix starts at its source).
    Phrase decode(std::uint64_t key, const ReferenceIndex& ref) const;

private:
    std::vector<std::uint64_t> keys_;
    std::uint64_t base_ = 0;
};

PhraseDict build_dict(const ReferenceIndex& ref, const Parse& parse);

// Ranks of the dictionary phrases that begin with the string whose
// suffix interval is g_iv (min_len = that string's length).
PhraseRange phrase_range(const PhraseDict& dict, const SuffixInterval& g_iv, std::uint64_t min_len);

// Rank of the phrase exactly equal to the length-len string whose suffix
// interval is g_iv, if present.
std::optional<std::uint64_t> exact_phrase_rank(const PhraseDict& dict, const SuffixInterval& g_iv,
                                               std::uint64_t len);

}  // namespace rlz
