#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "rlz/parse.hpp"
#include "rlz/primary_index.hpp"
#include "rlz/reference_index.hpp"
#include "rlz/source_grid.hpp"
#include "rlz/types.hpp"

namespace rlz {

// Self-index over a reference sequence and a document collection stored
// only as its phrase factorization.  Answers locate/count for arbitrary
// patterns over both the reference and every document, and extracts any
// document substring, without keeping the documents themselves.
class RlzIndex {
public:
    // Factorizes every document against the reference and builds all
    // query structures.
    RlzIndex(Sequence reference, const std::vector<Sequence>& docs);

    // Reassembly from stored arrays (the deserialization path): suffix
    // orders come from the arrays instead of being recomputed.
    struct Parts {
        Sequence reference;
        std::vector<std::uint64_t> sa_fwd, lcp_fwd, sa_rev, lcp_rev;
        Parse parse;
        std::vector<std::uint64_t> dict_keys;
        std::vector<std::uint64_t> phrase_ranks;      // per phrase, in text order
        std::vector<std::uint64_t> rank_by_boundary;  // per boundary, in text order
    };
    explicit RlzIndex(Parts parts);

    const ReferenceIndex& reference() const { return ref_; }
    const Parse& parse() const { return parse_; }
    const PhraseDict& dict() const { return dict_; }
    const SourceGrid& source_grid() const { return sgrid_; }
    const PrimaryIndex& primary() const { return pidx_; }

    // Every occurrence of the pattern: positions in the reference, plus
    // (doc, offset) hits classified as boundary-crossing (primary) or
    // within-phrase (secondary).  Throws InvalidPattern on an empty
    // pattern.
    QueryResult locate(std::string_view pattern) const;

    // Occurrence counts only, same classification.
    struct Counts {
        std::uint64_t ref = 0;
        std::uint64_t primary = 0;
        std::uint64_t secondary = 0;
        std::uint64_t total() const { return ref + primary + secondary; }
    };
    Counts count(std::string_view pattern) const;

    // Substring T[doc][offset .. offset+len-1], copied back out of the
    // reference via the covering phrases.  Throws OutOfRange when the
    // range does not fit in the document.
    Sequence extract(std::uint64_t doc, std::uint64_t offset, std::uint64_t len) const;

private:
    ReferenceIndex ref_;
    Parse parse_;
    PhraseDict dict_;
    SourceGrid sgrid_;
    PrimaryIndex pidx_;
};

}  // namespace rlz
