#include "rlz/parse.hpp"

#include <algorithm>

#include "rlz/errors.hpp"

namespace rlz {

std::uint64_t Parse::phrase_at(std::uint64_t global_pos) const {
    auto it = std::upper_bound(text_start.begin(), text_start.end(), global_pos);
    return static_cast<std::uint64_t>(it - text_start.begin()) - 1;
}

std::vector<Phrase> rlz_parse(const ReferenceIndex& ref, std::string_view doc) {
    std::vector<Phrase> out;
    const std::uint64_t len = doc.size();
    std::uint64_t pos = 1;
    while (pos <= len) {
        SuffixInterval iv{1, ref.size()};
        std::uint64_t match = 0;
        while (pos + match <= len) {
            SuffixInterval next =
                ref.narrow_right(iv, match, static_cast<Symbol>(doc[pos - 1 + match]));
            if (next.empty()) break;
            iv = next;
            ++match;
        }
        if (match == 0) throw MissingSymbol(0, pos, static_cast<Symbol>(doc[pos - 1]));
        std::uint64_t src = ref.suffix_at(iv.lo);
        for (std::uint64_t r = iv.lo + 1; r <= iv.hi; ++r)
            src = std::min(src, ref.suffix_at(r));
        out.push_back(Phrase{src, match});
        pos += match;
    }
    return out;
}

Parse parse_collection(const ReferenceIndex& ref, const std::vector<Sequence>& docs) {
    Parse parse;
    std::uint64_t global = 1;
    for (std::uint64_t d = 0; d < docs.size(); ++d) {
        std::vector<Phrase> phrases;
        try {
            phrases = rlz_parse(ref, docs[d]);
        } catch (const MissingSymbol& e) {
            throw MissingSymbol(d + 1, e.position, e.symbol);
        }
        parse.docs.push_back(DocBound{d + 1, global, docs[d].size()});
        for (const Phrase& ph : phrases) {
            parse.phrases.push_back(ph);
            parse.text_start.push_back(global);
            global += ph.len;
        }
    }
    parse.total_len = global - 1;
    return parse;
}

std::string_view phrase_text(const Sequence& reference, const Phrase& ph) {
    return std::string_view(reference).substr(ph.src_start - 1, ph.len);
}

std::uint64_t phrase_key(const ReferenceIndex& ref, const Phrase& ph) {
    SuffixInterval iv = ref.interval_of(phrase_text(ref.text(), ph));
    return iv.lo * ref.size() + ph.len;
}

PhraseDict::PhraseDict(std::vector<std::uint64_t> keys, std::uint64_t base)
    : keys_(std::move(keys)), base_(base) {}

std::optional<std::uint64_t> PhraseDict::rank_of(std::uint64_t key) const {
    auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
    if (it == keys_.end() || *it != key) return std::nullopt;
    return static_cast<std::uint64_t>(it - keys_.begin()) + 1;
}

PhraseRange PhraseDict::range_of_keys(std::uint64_t key_lo, std::uint64_t key_hi) const {
    auto lo = std::lower_bound(keys_.begin(), keys_.end(), key_lo);
    auto hi = std::upper_bound(keys_.begin(), keys_.end(), key_hi);
    if (lo >= hi) return PhraseRange::none();
    return {static_cast<std::uint64_t>(lo - keys_.begin()) + 1,
            static_cast<std::uint64_t>(hi - keys_.begin())};
}

Phrase PhraseDict::decode(std::uint64_t key, const ReferenceIndex& ref) const {
    std::uint64_t q = (key - 1) / base_;
    std::uint64_t len = key - q * base_;
    return Phrase{ref.suffix_at(q), len};
}

PhraseDict build_dict(const ReferenceIndex& ref, const Parse& parse) {
    std::vector<std::uint64_t> keys;
    keys.reserve(parse.phrases.size());
    for (const Phrase& ph : parse.phrases) keys.push_back(phrase_key(ref, ph));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return PhraseDict(std::move(keys), ref.size());
}

PhraseRange phrase_range(const PhraseDict& dict, const SuffixInterval& g_iv,
                         std::uint64_t min_len) {
    if (g_iv.empty() || dict.size() == 0) return PhraseRange::none();
    std::uint64_t n = dict.base();
    return dict.range_of_keys(g_iv.lo * n + min_len, g_iv.hi * n + n);
}

std::optional<std::uint64_t> exact_phrase_rank(const PhraseDict& dict, const SuffixInterval& g_iv,
                                               std::uint64_t len) {
    if (g_iv.empty() || len == 0 || dict.size() == 0) return std::nullopt;
    return dict.rank_of(g_iv.lo * dict.base() + len);
}

}  // namespace rlz
