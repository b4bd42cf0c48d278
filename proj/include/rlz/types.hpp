#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rlz {

// Sequences are byte strings; every byte value is a valid symbol.
using Symbol = unsigned char;
using Sequence = std::string;

inline Symbol sym_at(const Sequence& s, std::uint64_t pos_1based) {
    return static_cast<Symbol>(s[pos_1based - 1]);
}

// Inclusive 1-based rank range; empty iff lo > hi.  The canonical empty
// value is {1, 0}; operations normalize their results to it.
template <class Tag>
struct RankInterval {
    std::uint64_t lo = 1;
    std::uint64_t hi = 0;

    bool empty() const { return lo > hi; }
    std::uint64_t count() const { return empty() ? 0 : hi - lo + 1; }
    static RankInterval none() { return {1, 0}; }
    friend bool operator==(const RankInterval&, const RankInterval&) = default;
};

// Ranks over the sorted suffixes of the reference (or of its reversal).
using SuffixInterval = RankInterval<struct SuffixOrderTag>;
// Ranks into a sorted phrase dictionary (forward or reversed phrases).
using PhraseRange = RankInterval<struct PhraseDictTag>;
// Ranks over the sorted boundary suffixes of the phrase sequence.
using BoundaryRange = RankInterval<struct BoundarySuffixTag>;

// One parse phrase: a copy of reference[src_start .. src_start+len-1].
// src_start is 1-based and points at the leftmost occurrence of the
// phrase text in the reference.
struct Phrase {
    std::uint64_t src_start = 0;
    std::uint64_t len = 0;
    friend bool operator==(const Phrase&, const Phrase&) = default;
};

struct DocBound {
    std::uint64_t doc = 0;    // 1-based document id
    std::uint64_t start = 0;  // 1-based global start in the concatenated text
    std::uint64_t len = 0;
};

// Phrase factorization of a document collection.  Phrases are stored in
// text order; text_start[k] is the 1-based global start of phrase k+1.
struct Parse {
    std::vector<Phrase> phrases;
    std::vector<std::uint64_t> text_start;
    std::vector<DocBound> docs;
    std::uint64_t total_len = 0;

    std::uint64_t phrase_count() const { return phrases.size(); }
    std::uint64_t doc_count() const { return docs.size(); }

    // Index (0-based) of the phrase covering the 1-based global position.
    std::uint64_t phrase_at(std::uint64_t global_pos) const;
};

// Per-position match lengths against the reference: entry k (0-based)
// describes pattern position i = k+1.  ell[k] is one past the end of the
// longest prefix of P[i..m] occurring in the reference (i itself if P[i]
// is absent, m+1 if the whole suffix occurs); iv[k] is the suffix
// interval of that longest prefix (the full interval when the prefix is
// empty).
struct MatchStats {
    std::vector<std::uint64_t> ell;
    std::vector<SuffixInterval> iv;

    std::uint64_t ell_at(std::uint64_t i) const { return ell[i - 1]; }
    const SuffixInterval& iv_at(std::uint64_t i) const { return iv[i - 1]; }
};

struct TextHit {
    std::uint64_t doc = 0;     // 1-based
    std::uint64_t offset = 0;  // 1-based within the document
    friend bool operator==(const TextHit&, const TextHit&) = default;
    friend auto operator<=>(const TextHit&, const TextHit&) = default;
};

enum class HitKind { ref, primary, secondary };

struct ClassifiedHit {
    std::uint64_t doc = 0;
    std::uint64_t offset = 0;
    HitKind kind = HitKind::secondary;
    friend bool operator==(const ClassifiedHit&, const ClassifiedHit&) = default;
};

struct QueryResult {
    std::vector<std::uint64_t> ref_hits;    // sorted positions in the reference
    std::vector<ClassifiedHit> text_hits;   // sorted by (doc, offset)
    std::uint64_t ref_count = 0;
    std::uint64_t primary_count = 0;
    std::uint64_t secondary_count = 0;
};

}  // namespace rlz
