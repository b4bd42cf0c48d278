#include "rlz/primary_index.hpp"

#include <algorithm>
#include <cassert>

#include "rlz/errors.hpp"

namespace rlz {

ReversedPhraseDict::ReversedPhraseDict(std::vector<std::uint64_t> keys,
                                       std::vector<std::uint64_t> rev_rank_by_rank,
                                       std::uint64_t base)
    : keys_(std::move(keys)), rev_rank_by_rank_(std::move(rev_rank_by_rank)), base_(base) {}

PhraseRange ReversedPhraseDict::prefix_range(const SuffixInterval& riv,
                                             std::uint64_t min_len) const {
    if (riv.empty() || keys_.empty()) return PhraseRange::none();
    auto lo = std::lower_bound(keys_.begin(), keys_.end(), riv.lo * base_ + min_len);
    auto hi = std::upper_bound(keys_.begin(), keys_.end(), riv.hi * base_ + base_);
    if (lo >= hi) return PhraseRange::none();
    return {static_cast<std::uint64_t>(lo - keys_.begin()) + 1,
            static_cast<std::uint64_t>(hi - keys_.begin())};
}

ReversedPhraseDict build_reversed_dict(const ReferenceIndex& ref, const PhraseDict& dict) {
    const std::uint64_t d = dict.size();
    std::vector<std::pair<std::uint64_t, std::uint64_t>> keyed(d);  // (reversed key, fwd rank)
    for (std::uint64_t fr = 1; fr <= d; ++fr) {
        Phrase ph = dict.decode(dict.key_at(fr), ref);
        Sequence rev_text(phrase_text(ref.text(), ph));
        std::reverse(rev_text.begin(), rev_text.end());
        SuffixInterval riv = ref.interval_of(rev_text, /*reversed=*/true);
        keyed[fr - 1] = {riv.lo * ref.size() + ph.len, fr};
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::uint64_t> keys(d), rev_rank_by_rank(d);
    for (std::uint64_t rr = 1; rr <= d; ++rr) {
        keys[rr - 1] = keyed[rr - 1].first;
        rev_rank_by_rank[keyed[rr - 1].second - 1] = rr;
    }
    return ReversedPhraseDict(std::move(keys), std::move(rev_rank_by_rank), ref.size());
}

std::vector<std::uint64_t> phrase_ranks(const ReferenceIndex& ref, const Parse& parse,
                                        const PhraseDict& dict) {
    std::vector<std::uint64_t> ranks;
    ranks.reserve(parse.phrase_count());
    for (const Phrase& ph : parse.phrases) {
        auto r = dict.rank_of(phrase_key(ref, ph));
        assert(r.has_value());
        ranks.push_back(*r);
    }
    return ranks;
}

PhraseSequence PhraseSequence::build(const Parse& parse,
                                     const std::vector<std::uint64_t>& phrase_ranks,
                                     std::uint64_t dict_size,
                                     std::vector<std::uint64_t> rank_by_boundary) {
    PhraseSequence seq;
    seq.syms_.reserve(parse.phrase_count() + parse.doc_count());

    // Lay out the runs and collect the boundaries (after every non-final
    // phrase of each document).
    std::uint64_t k = 0;
    for (const DocBound& db : parse.docs) {
        std::uint64_t end = db.start + db.len;
        std::uint64_t first = k;
        while (k < parse.phrase_count() && parse.text_start[k] < end) {
            seq.syms_.push_back(phrase_ranks[k]);
            if (k > first)
                seq.bds_.push_back(
                    Boundary{seq.syms_.size(), parse.text_start[k], db.doc, k - 1});
            ++k;
        }
        seq.syms_.push_back(0);
    }

    const std::uint64_t b_count = seq.bds_.size();
    if (rank_by_boundary.empty()) {
        // Sort the boundary suffixes of syms as integer sequences.
        std::vector<std::uint64_t> order(b_count);
        for (std::uint64_t i = 0; i < b_count; ++i) order[i] = i;
        const auto& syms = seq.syms_;
        std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
            std::uint64_t pa = seq.bds_[a].seq_pos - 1, pb = seq.bds_[b].seq_pos - 1;
            while (pa < syms.size() && pb < syms.size()) {
                if (syms[pa] != syms[pb]) return syms[pa] < syms[pb];
                ++pa, ++pb;
            }
            return pa == syms.size() && pb != syms.size();  // shorter suffix first
        });
        seq.rank_by_b_.assign(b_count, 0);
        seq.b_by_rank_.assign(b_count, 0);
        for (std::uint64_t x = 1; x <= b_count; ++x) {
            seq.b_by_rank_[x - 1] = order[x - 1] + 1;
            seq.rank_by_b_[order[x - 1]] = x;
        }
    } else {
        seq.rank_by_b_ = std::move(rank_by_boundary);
        seq.b_by_rank_.assign(b_count, 0);
        for (std::uint64_t b = 1; b <= b_count; ++b) seq.b_by_rank_[seq.rank_by_b_[b - 1] - 1] = b;
    }

    // Cumulative first-symbol counts over the sorted boundary suffixes.
    seq.first_counts_.assign(dict_size + 2, 0);
    for (const Boundary& bd : seq.bds_) {
        std::uint64_t f = seq.syms_[bd.seq_pos - 1];
        ++seq.first_counts_[f + 1];
    }
    for (std::uint64_t f = 1; f < seq.first_counts_.size(); ++f)
        seq.first_counts_[f] += seq.first_counts_[f - 1];

    // Tails that begin with the run sentinel sort before every other tail
    // within the same first-phrase block; count them per phrase.
    seq.sentinel_tail_.assign(dict_size + 1, 0);
    for (const Boundary& bd : seq.bds_) {
        std::uint64_t f = seq.syms_[bd.seq_pos - 1];
        if (seq.syms_[bd.seq_pos] == 0) ++seq.sentinel_tail_[f];
    }

    // For each phrase f, the sorted ranks of the boundary suffixes whose
    // immediately preceding sequence position is itself a boundary holding
    // f.  These are exactly the non-sentinel tails of the f block, in tail
    // order, which makes the backward step a pair of binary searches.
    std::vector<char> is_boundary_pos(seq.syms_.size() + 1, 0);
    for (const Boundary& bd : seq.bds_) is_boundary_pos[bd.seq_pos] = 1;
    seq.pred_occ_.assign(dict_size + 1, {});
    for (std::uint64_t x = 1; x <= b_count; ++x) {
        const Boundary& bd = seq.bds_[seq.b_by_rank_[x - 1] - 1];
        std::uint64_t prev_pos = bd.seq_pos - 1;
        if (prev_pos >= 1 && is_boundary_pos[prev_pos])
            seq.pred_occ_[seq.syms_[prev_pos - 1]].push_back(x);
    }
    return seq;
}

BoundaryRange PhraseSequence::starting_with(const PhraseRange& dr) const {
    if (dr.empty() || first_counts_.empty()) return BoundaryRange::none();
    std::uint64_t lo = first_counts_[dr.lo] + 1;
    std::uint64_t hi = first_counts_[dr.hi + 1];
    if (lo > hi) return BoundaryRange::none();
    return {lo, hi};
}

BoundaryRange PhraseSequence::backward_step(const BoundaryRange& iv, std::uint64_t f) const {
    if (iv.empty() || f == 0 || f + 1 >= first_counts_.size()) return BoundaryRange::none();
    const auto& occ = pred_occ_[f];
    std::uint64_t below = std::lower_bound(occ.begin(), occ.end(), iv.lo) - occ.begin();
    std::uint64_t upto = std::upper_bound(occ.begin(), occ.end(), iv.hi) - occ.begin();
    if (below >= upto) return BoundaryRange::none();
    std::uint64_t base = first_counts_[f] + sentinel_tail_[f];
    return {base + below + 1, base + upto};
}

BoundaryGrid::BoundaryGrid(std::vector<Point> points) {
    std::sort(points.begin(), points.end(),
              [](const Point& a, const Point& b) { return a.b < b.b; });
    by_b_ = std::move(points);
    leaves_ = by_b_.size();
    if (!leaves_) return;
    // Segment tree over x in [1..leaves_]; x values are a permutation, so
    // each leaf holds exactly one point.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> y_by_x(leaves_);
    for (const Point& p : by_b_) y_by_x[p.x - 1] = {p.y, p.b};
    nodes_.assign(4 * leaves_, {});
    struct Builder {
        std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>>& nodes;
        const std::vector<std::pair<std::uint64_t, std::uint64_t>>& base;
        void fill(std::uint64_t node, std::uint64_t lo, std::uint64_t hi) {
            auto& list = nodes[node];
            if (lo == hi) {
                list.push_back(base[lo - 1]);
                return;
            }
            std::uint64_t mid = (lo + hi) / 2;
            fill(2 * node, lo, mid);
            fill(2 * node + 1, mid + 1, hi);
            const auto& l = nodes[2 * node];
            const auto& r = nodes[2 * node + 1];
            list.resize(l.size() + r.size());
            std::merge(l.begin(), l.end(), r.begin(), r.end(), list.begin());
        }
    };
    Builder{nodes_, y_by_x}.fill(1, 1, leaves_);
}

void BoundaryGrid::collect(std::uint64_t node, std::uint64_t lo, std::uint64_t hi,
                           std::uint64_t xlo, std::uint64_t xhi, std::uint64_t ylo,
                           std::uint64_t yhi, std::vector<std::uint64_t>& out) const {
    if (hi < xlo || lo > xhi) return;
    if (xlo <= lo && hi <= xhi) {
        const auto& list = nodes_[node];
        auto first = std::lower_bound(list.begin(), list.end(), std::make_pair(ylo, std::uint64_t{0}));
        for (auto it = first; it != list.end() && it->first <= yhi; ++it) out.push_back(it->second);
        return;
    }
    std::uint64_t mid = (lo + hi) / 2;
    collect(2 * node, lo, mid, xlo, xhi, ylo, yhi, out);
    collect(2 * node + 1, mid + 1, hi, xlo, xhi, ylo, yhi, out);
}

std::vector<std::uint64_t> BoundaryGrid::report(const BoundaryRange& xr,
                                                const PhraseRange& yr) const {
    std::vector<std::uint64_t> out;
    if (xr.empty() || yr.empty() || !leaves_) return out;
    collect(1, 1, leaves_, xr.lo, std::min(xr.hi, leaves_), yr.lo, yr.hi, out);
    return out;
}

PrimaryIndex PrimaryIndex::build(const ReferenceIndex& ref, const Parse& parse,
                                 const PhraseDict& dict) {
    std::vector<std::uint64_t> ranks = phrase_ranks(ref, parse, dict);
    return assemble(ref, parse, dict, ranks, {});
}

PrimaryIndex PrimaryIndex::from_parts(const ReferenceIndex& ref, const Parse& parse,
                                      const PhraseDict& dict,
                                      const std::vector<std::uint64_t>& phrase_ranks,
                                      std::vector<std::uint64_t> rank_by_boundary) {
    return assemble(ref, parse, dict, phrase_ranks, std::move(rank_by_boundary));
}

PrimaryIndex PrimaryIndex::assemble(const ReferenceIndex& ref, const Parse& parse,
                                    const PhraseDict& dict,
                                    const std::vector<std::uint64_t>& ranks,
                                    std::vector<std::uint64_t> rank_by_boundary) {
    PrimaryIndex pi;
    pi.seq = PhraseSequence::build(parse, ranks, dict.size(), std::move(rank_by_boundary));
    pi.rdict = build_reversed_dict(ref, dict);
    std::vector<BoundaryGrid::Point> points;
    points.reserve(pi.seq.boundary_count());
    for (std::uint64_t b = 1; b <= pi.seq.boundary_count(); ++b) {
        const PhraseSequence::Boundary& bd = pi.seq.boundary(b);
        std::uint64_t fr = ranks[bd.end_phrase];
        points.push_back(BoundaryGrid::Point{pi.seq.rank_of_boundary(b),
                                             pi.rdict.rev_rank_of(fr), b});
    }
    pi.grid = BoundaryGrid(std::move(points));
    return pi;
}

std::vector<BoundaryRange> PrimaryIndex::pattern_suffix_ranges(const PhraseDict& dict,
                                                               std::string_view p,
                                                               const MatchStats& ms) const {
    const std::uint64_t m = p.size();
    std::vector<BoundaryRange> entries(m >= 2 ? m - 1 : 0, BoundaryRange::none());
    for (std::uint64_t i = m; i >= 2; --i) {
        std::uint64_t l = ms.ell_at(i);
        BoundaryRange e = BoundaryRange::none();
        if (l == m + 1) {
            e = seq.starting_with(phrase_range(dict, ms.iv_at(i), m - i + 1));
        } else if (l > i) {
            auto f = exact_phrase_rank(dict, ms.iv_at(i), l - i);
            const BoundaryRange& chained = entries[l - 2];
            if (f && !chained.empty()) e = seq.backward_step(chained, *f);
        }
        entries[i - 2] = e;
    }
    return entries;
}

std::vector<TextHit> PrimaryIndex::primary_occurrences(
    const PhraseDict& dict, const Parse& parse, std::string_view p, const MatchStats& ms,
    const std::vector<SuffixInterval>& rev_ivs) const {
    std::vector<TextHit> hits;
    const std::uint64_t m = p.size();
    if (m < 2) return hits;
    std::vector<BoundaryRange> entries = pattern_suffix_ranges(dict, p, ms);
    for (std::uint64_t i = 2; i <= m; ++i) {
        const BoundaryRange& xr = entries[i - 2];
        if (xr.empty()) continue;
        PhraseRange yr = rdict.prefix_range(rev_ivs[i - 2], i - 1);
        if (yr.empty()) continue;
        for (std::uint64_t b : grid.report(xr, yr)) {
            const PhraseSequence::Boundary& bd = seq.boundary(b);
            std::uint64_t global = bd.text_pos - (i - 1);
            hits.push_back(TextHit{bd.doc, global - parse.docs[bd.doc - 1].start + 1});
        }
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

}  // namespace rlz
