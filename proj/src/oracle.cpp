#include "rlz/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "rlz/errors.hpp"

namespace rlz {

std::vector<std::uint64_t> naive_suffix_sort(const Sequence& s) {
    std::vector<std::uint64_t> sa(s.size());
    std::iota(sa.begin(), sa.end(), 1);
    std::sort(sa.begin(), sa.end(), [&](std::uint64_t a, std::uint64_t b) {
        return s.compare(a - 1, Sequence::npos, s, b - 1, Sequence::npos) < 0;
    });
    return sa;
}

SuffixInterval naive_interval(const Sequence& s, const std::vector<std::uint64_t>& sa,
                              std::string_view x) {
    SuffixInterval iv = SuffixInterval::none();
    for (std::uint64_t rank = 1; rank <= sa.size(); ++rank) {
        if (s.compare(sa[rank - 1] - 1, x.size(), x) != 0) continue;
        if (iv.empty()) iv.lo = rank;
        iv.hi = rank;
    }
    return iv;
}

std::vector<std::uint64_t> naive_match_lengths(const Sequence& ref, std::string_view s) {
    const std::size_t n = ref.size();
    const std::size_t m = s.size();
    std::vector<std::uint64_t> best(m, 0);
    // Match-length table against every reference position, two rows at a
    // time: row[g] = longest common prefix of s[i..] and ref[g..].
    std::vector<std::uint64_t> row(n + 1, 0), next(n + 1, 0);
    for (std::size_t i = m; i >= 1; --i) {
        for (std::size_t g = 1; g <= n; ++g) {
            row[g - 1] = s[i - 1] == ref[g - 1] ? 1 + next[g] : 0;
            best[i - 1] = std::max(best[i - 1], row[g - 1]);
        }
        row[n] = 0;
        std::swap(row, next);
    }
    return best;
}

std::vector<Phrase> naive_parse(const Sequence& ref, const Sequence& doc) {
    std::vector<std::uint64_t> len_at = naive_match_lengths(ref, doc);
    std::vector<Phrase> phrases;
    std::uint64_t pos = 1;
    while (pos <= doc.size()) {
        std::uint64_t len = len_at[pos - 1];
        if (len == 0)
            throw MissingSymbol(0, pos, static_cast<Symbol>(doc[pos - 1]));
        std::size_t src = ref.find(doc.data() + (pos - 1), 0, len);
        phrases.push_back(Phrase{static_cast<std::uint64_t>(src) + 1, len});
        pos += len;
    }
    return phrases;
}

namespace {

void scan_sequence(const Sequence& text, std::string_view p, std::uint64_t doc,
                   std::vector<NaiveHit>& out) {
    if (p.empty() || text.size() < p.size()) return;
    for (std::uint64_t o = 1; o + p.size() - 1 <= text.size(); ++o)
        if (text.compare(o - 1, p.size(), p) == 0) out.push_back(NaiveHit{doc, o, false, {}});
}

}  // namespace

std::vector<NaiveHit> naive_search_with_parses(const Sequence& ref,
                                               const std::vector<Sequence>& docs,
                                               const std::vector<std::vector<Phrase>>& parses,
                                               std::string_view p) {
    std::vector<NaiveHit> hits;
    scan_sequence(ref, p, 0, hits);
    for (std::uint64_t d = 1; d <= docs.size(); ++d) {
        std::size_t first = hits.size();
        scan_sequence(docs[d - 1], p, d, hits);
        if (first == hits.size()) continue;
        // 1-based start offset of each phrase in this document.
        std::vector<std::uint64_t> starts;
        std::uint64_t pos = 1;
        for (const Phrase& ph : parses[d - 1]) {
            starts.push_back(pos);
            pos += ph.len;
        }
        for (std::size_t h = first; h < hits.size(); ++h) {
            NaiveHit& hit = hits[h];
            std::uint64_t end = hit.offset + p.size() - 1;
            // Phrase whose start is the predecessor of the occurrence start.
            std::size_t j =
                std::upper_bound(starts.begin(), starts.end(), hit.offset) - starts.begin();
            std::uint64_t phrase_end = (j < starts.size() ? starts[j] : pos) - 1;
            if (end <= phrase_end) {
                hit.containing_phrase = j;  // 1-based phrase index
            } else {
                hit.spans_boundary = true;
            }
        }
    }
    return hits;
}

std::vector<NaiveHit> naive_search(const Sequence& ref, const std::vector<Sequence>& docs,
                                   std::string_view p) {
    std::vector<std::vector<Phrase>> parses;
    parses.reserve(docs.size());
    for (const Sequence& doc : docs) parses.push_back(naive_parse(ref, doc));
    return naive_search_with_parses(ref, docs, parses, p);
}

}  // namespace rlz
