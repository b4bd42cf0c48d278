#include "rlz/index.hpp"

#include <algorithm>

#include "rlz/errors.hpp"

namespace rlz {

RlzIndex::RlzIndex(Sequence reference, const std::vector<Sequence>& docs)
    : ref_(std::move(reference)) {
    parse_ = parse_collection(ref_, docs);
    dict_ = build_dict(ref_, parse_);
    sgrid_ = SourceGrid::build(parse_);
    pidx_ = PrimaryIndex::build(ref_, parse_, dict_);
}

RlzIndex::RlzIndex(Parts parts)
    : ref_(ReferenceIndex::from_parts(std::move(parts.reference), std::move(parts.sa_fwd),
                                      std::move(parts.lcp_fwd), std::move(parts.sa_rev),
                                      std::move(parts.lcp_rev))) {
    parse_ = std::move(parts.parse);
    dict_ = PhraseDict(std::move(parts.dict_keys), ref_.size());
    sgrid_ = SourceGrid::build(parse_);
    pidx_ = PrimaryIndex::from_parts(ref_, parse_, dict_, parts.phrase_ranks,
                                     std::move(parts.rank_by_boundary));
}

QueryResult RlzIndex::locate(std::string_view pattern) const {
    if (pattern.empty()) throw InvalidPattern("empty pattern");
    const std::uint64_t m = pattern.size();
    QueryResult res;

    MatchStats ms = ref_.matching_statistics(pattern);
    SuffixInterval whole =
        ms.ell_at(1) == m + 1 ? ms.iv_at(1) : SuffixInterval::none();
    res.ref_hits = ref_.locate(whole);
    res.ref_count = res.ref_hits.size();

    std::vector<TextHit> sec = sgrid_.secondary_occurrences(res.ref_hits, m);
    std::vector<TextHit> prim;
    if (m >= 2) {
        std::vector<SuffixInterval> rev_ivs = ref_.reversed_prefix_intervals(pattern);
        prim = pidx_.primary_occurrences(dict_, parse_, pattern, ms, rev_ivs);
    }
    res.primary_count = prim.size();
    res.secondary_count = sec.size();

    res.text_hits.reserve(prim.size() + sec.size());
    auto pi = prim.begin();
    auto si = sec.begin();
    while (pi != prim.end() || si != sec.end()) {
        bool take_prim = si == sec.end() || (pi != prim.end() && *pi < *si);
        const TextHit& h = take_prim ? *pi++ : *si++;
        res.text_hits.push_back(
            ClassifiedHit{h.doc, h.offset, take_prim ? HitKind::primary : HitKind::secondary});
    }
    return res;
}

RlzIndex::Counts RlzIndex::count(std::string_view pattern) const {
    QueryResult res = locate(pattern);
    return Counts{res.ref_count, res.primary_count, res.secondary_count};
}

Sequence RlzIndex::extract(std::uint64_t doc, std::uint64_t offset, std::uint64_t len) const {
    if (doc == 0 || doc > parse_.doc_count())
        throw OutOfRange("no such document");
    const DocBound& db = parse_.docs[doc - 1];
    if (offset == 0 || offset > db.len + 1 || len > db.len + 1 - offset)
        throw OutOfRange("range outside document");
    Sequence out;
    out.reserve(len);
    std::uint64_t g = db.start + offset - 1;  // 1-based global position
    std::uint64_t k = len ? parse_.phrase_at(g) : 0;
    while (out.size() < len) {
        const Phrase& ph = parse_.phrases[k];
        std::uint64_t skip = g - parse_.text_start[k];
        std::uint64_t take = std::min<std::uint64_t>(len - out.size(), ph.len - skip);
        out.append(ref_.text(), ph.src_start - 1 + skip, take);
        g += take;
        ++k;
    }
    return out;
}

}  // namespace rlz
