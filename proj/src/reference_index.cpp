#include "rlz/reference_index.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "rlz/errors.hpp"

namespace rlz {

namespace {

// Prefix-doubling suffix sort; positions and ranks are 1-based.
std::vector<std::uint64_t> build_suffix_array(const Sequence& text) {
    const std::uint64_t n = text.size();
    std::vector<std::uint64_t> sa(n + 1), rank(n + 2), tmp(n + 2);
    std::iota(sa.begin() + 1, sa.end(), 1);
    for (std::uint64_t p = 1; p <= n; ++p) rank[p] = static_cast<Symbol>(text[p - 1]) + 1;
    rank[n + 1] = 0;  // implicit sentinel: out-of-range suffix key

    auto key = [&](std::uint64_t p, std::uint64_t k) -> std::uint64_t {
        return p + k <= n ? rank[p + k] : 0;
    };
    for (std::uint64_t k = 0;; k = k ? 2 * k : 1) {
        std::sort(sa.begin() + 1, sa.end(), [&](std::uint64_t a, std::uint64_t b) {
            if (rank[a] != rank[b]) return rank[a] < rank[b];
            return key(a, k) < key(b, k);
        });
        tmp[sa[1]] = 1;
        for (std::uint64_t r = 2; r <= n; ++r) {
            bool same = rank[sa[r]] == rank[sa[r - 1]] && key(sa[r], k) == key(sa[r - 1], k);
            tmp[sa[r]] = tmp[sa[r - 1]] + (same ? 0 : 1);
        }
        std::copy(tmp.begin() + 1, tmp.begin() + 1 + n, rank.begin() + 1);
        if (n == 0 || rank[sa[n]] == n) break;
    }
    return sa;
}

// Kasai's algorithm; lcp[k] = LCP(suffix at rank k-1, suffix at rank k).
std::vector<std::int64_t> build_lcp(const Sequence& text, const std::vector<std::uint64_t>& sa,
                                    const std::vector<std::uint64_t>& isa) {
    const std::uint64_t n = text.size();
    std::vector<std::int64_t> lcp(n + 2, -1);
    std::uint64_t h = 0;
    for (std::uint64_t p = 1; p <= n; ++p) {
        std::uint64_t r = isa[p];
        if (r == 1) {
            h = 0;
            continue;
        }
        std::uint64_t q = sa[r - 1];
        while (p + h <= n && q + h <= n && text[p + h - 1] == text[q + h - 1]) ++h;
        lcp[r] = static_cast<std::int64_t>(h);
        if (h) --h;
    }
    if (n) lcp[1] = -1;
    return lcp;
}

}  // namespace

std::uint64_t ReferenceIndex::Side::tail_rank(std::uint64_t rank) const {
    std::uint64_t p = sa[rank];
    return p == n() ? 0 : isa[p + 1];
}

void ReferenceIndex::Side::finish() {
    const std::uint64_t n = this->n();
    isa.assign(n + 1, 0);
    for (std::uint64_t r = 1; r <= n; ++r) isa[sa[r]] = r;

    // Monotone stacks over the lcp array (sentinels -1 at both ends stay
    // put, so every real rank has a defined smaller neighbour).
    psv.assign(n + 2, 0);
    nsv.assign(n + 2, 0);
    std::vector<std::uint64_t> stack;
    stack.push_back(1);
    for (std::uint64_t k = 2; k <= n; ++k) {
        while (lcp[stack.back()] >= lcp[k]) stack.pop_back();
        psv[k] = stack.back();
        stack.push_back(k);
    }
    stack.assign(1, n + 1);
    for (std::uint64_t k = n; k >= 2; --k) {
        while (lcp[stack.back()] >= lcp[k]) stack.pop_back();
        nsv[k] = stack.back();
        stack.push_back(k);
    }

    char_start.fill(0);
    for (char ch : text) ++char_start[static_cast<Symbol>(ch)];
    std::uint64_t acc = 1;
    for (std::size_t c = 0; c < 257; ++c) {
        std::uint64_t cnt = char_start[c];
        char_start[c] = acc;
        acc += cnt;
    }
}

ReferenceIndex::Side ReferenceIndex::build_side(Sequence text) {
    Side s;
    s.text = std::move(text);
    s.sa = build_suffix_array(s.text);
    const std::uint64_t n = s.text.size();
    s.isa.assign(n + 1, 0);
    for (std::uint64_t r = 1; r <= n; ++r) s.isa[s.sa[r]] = r;
    s.lcp = build_lcp(s.text, s.sa, s.isa);
    s.finish();
    return s;
}

ReferenceIndex::ReferenceIndex(Sequence text) {
    if (text.empty()) throw BuildError("reference must not be empty");
    n_ = text.size();
    for (char ch : text) present_[static_cast<Symbol>(ch)] = true;
    sigma_ = 0;
    for (bool b : present_) sigma_ += b;
    Sequence rev(text.rbegin(), text.rend());
    fwd_ = build_side(std::move(text));
    rev_ = build_side(std::move(rev));
}

ReferenceIndex ReferenceIndex::from_parts(Sequence text, std::vector<std::uint64_t> sa_fwd,
                                          std::vector<std::uint64_t> lcp_fwd,
                                          std::vector<std::uint64_t> sa_rev,
                                          std::vector<std::uint64_t> lcp_rev) {
    if (text.empty()) throw BuildError("reference must not be empty");
    ReferenceIndex idx;
    idx.n_ = text.size();
    for (char ch : text) idx.present_[static_cast<Symbol>(ch)] = true;
    idx.sigma_ = 0;
    for (bool b : idx.present_) idx.sigma_ += b;

    auto assemble = [](Sequence t, std::vector<std::uint64_t>&& sa,
                       std::vector<std::uint64_t>&& lcp_values) {
        Side s;
        const std::uint64_t n = t.size();
        s.text = std::move(t);
        s.sa.assign(n + 1, 0);
        std::copy(sa.begin(), sa.end(), s.sa.begin() + 1);
        s.lcp.assign(n + 2, -1);
        for (std::uint64_t k = 2; k <= n; ++k) s.lcp[k] = static_cast<std::int64_t>(lcp_values[k - 2]);
        s.finish();
        return s;
    };
    Sequence rev(text.rbegin(), text.rend());
    idx.fwd_ = assemble(std::move(text), std::move(sa_fwd), std::move(lcp_fwd));
    idx.rev_ = assemble(std::move(rev), std::move(sa_rev), std::move(lcp_rev));
    return idx;
}

bool ReferenceIndex::contains_symbol(Symbol c) const { return present_[c]; }

std::uint64_t ReferenceIndex::suffix_at(std::uint64_t rank, bool reversed) const {
    return side(reversed).sa[rank];
}

std::uint64_t ReferenceIndex::rank_of_suffix(std::uint64_t pos, bool reversed) const {
    return side(reversed).isa[pos];
}

std::uint64_t ReferenceIndex::lcp_at(std::uint64_t rank, bool reversed) const {
    if (rank == 1) return 0;  // no predecessor
    return static_cast<std::uint64_t>(side(reversed).lcp[rank]);
}

SuffixInterval ReferenceIndex::narrow_right(const SuffixInterval& x_iv, std::uint64_t x_len,
                                            Symbol c, bool reversed) const {
    if (x_iv.empty()) return SuffixInterval::none();
    const Side& s = side(reversed);
    // Suffixes in x_iv share their first x_len symbols; order within the
    // interval is decided by the symbol at offset x_len (absent < all).
    auto key = [&](std::uint64_t rank) -> int {
        std::uint64_t p = s.sa[rank] + x_len;
        return p > s.n() ? -1 : static_cast<Symbol>(s.text[p - 1]);
    };
    std::uint64_t lo = x_iv.lo, hi = x_iv.hi + 1;
    std::uint64_t first = lo, last = hi;
    // first rank with key >= c, first rank with key > c
    {
        std::uint64_t a = lo, b = hi;
        while (a < b) {
            std::uint64_t mid = a + (b - a) / 2;
            if (key(mid) < static_cast<int>(c)) a = mid + 1; else b = mid;
        }
        first = a;
        b = hi;
        while (a < b) {
            std::uint64_t mid = a + (b - a) / 2;
            if (key(mid) <= static_cast<int>(c)) a = mid + 1; else b = mid;
        }
        last = a;
    }
    if (first >= last) return SuffixInterval::none();
    return {first, last - 1};
}

SuffixInterval ReferenceIndex::interval_of(std::string_view x, bool reversed) const {
    const Side& s = side(reversed);
    SuffixInterval iv{1, s.n()};
    for (std::uint64_t k = 0; k < x.size(); ++k) {
        iv = narrow_right(iv, k, static_cast<Symbol>(x[k]), reversed);
        if (iv.empty()) return SuffixInterval::none();
    }
    return iv;
}

std::vector<std::uint64_t> ReferenceIndex::locate(const SuffixInterval& iv) const {
    std::vector<std::uint64_t> out;
    if (iv.empty()) return out;
    out.reserve(iv.count());
    for (std::uint64_t r = iv.lo; r <= iv.hi; ++r) out.push_back(fwd_.sa[r]);
    std::sort(out.begin(), out.end());
    return out;
}

SuffixInterval ReferenceIndex::extend_left(const SuffixInterval& x_iv, std::uint64_t x_len,
                                           Symbol c, bool reversed) const {
    if (x_iv.empty()) return SuffixInterval::none();
    const Side& s = side(reversed);
    std::uint64_t clo = s.char_start[c], chi = s.char_start[c + 1];
    if (clo >= chi) return SuffixInterval::none();
    if (x_len == 0) return {clo, chi - 1};
    // Within the block of suffixes starting with c, tail ranks increase;
    // keep those whose tail lies in x_iv.  Rank 0 marks the length-one
    // suffix (empty tail), which only an empty X can absorb.
    std::uint64_t a = clo, b = chi;
    while (a < b) {
        std::uint64_t mid = a + (b - a) / 2;
        if (s.tail_rank(mid) < x_iv.lo) a = mid + 1; else b = mid;
    }
    std::uint64_t first = a;
    b = chi;
    while (a < b) {
        std::uint64_t mid = a + (b - a) / 2;
        if (s.tail_rank(mid) <= x_iv.hi) a = mid + 1; else b = mid;
    }
    if (first >= a) return SuffixInterval::none();
    return {first, a - 1};
}

SuffixInterval ReferenceIndex::contract_right(const SuffixInterval& w_iv, std::uint64_t target_len,
                                              bool reversed) const {
    if (w_iv.empty()) return SuffixInterval::none();
    const Side& s = side(reversed);
    const std::int64_t t = static_cast<std::int64_t>(target_len);
    // The interval of the shortened string extends outward over every
    // neighbour sharing at least target_len symbols; one smaller-value
    // hop per side reaches the boundary.
    std::uint64_t lo = s.lcp[w_iv.lo] < t ? w_iv.lo : s.psv[w_iv.lo];
    std::uint64_t hi = s.lcp[w_iv.hi + 1] < t ? w_iv.hi : s.nsv[w_iv.hi + 1] - 1;
    return {lo, hi};
}

MatchStats ReferenceIndex::matching_statistics(std::string_view p) const {
    if (p.empty()) throw InvalidPattern("pattern must not be empty");
    const std::uint64_t m = p.size();
    MatchStats ms;
    ms.ell.assign(m, 0);
    ms.iv.assign(m, SuffixInterval::none());

    SuffixInterval cur{1, n_};  // interval of the current matched string
    std::uint64_t len = 0;      // its length
    for (std::uint64_t i = m; i >= 1; --i) {
        Symbol c = static_cast<Symbol>(p[i - 1]);
        for (;;) {
            SuffixInterval ext = extend_left(cur, len, c);
            if (!ext.empty()) {
                cur = ext;
                ++len;
                break;
            }
            if (len == 0) break;  // symbol absent from the reference
            cur = contract_right(cur, len - 1);
            --len;
        }
        ms.ell[i - 1] = i + len;
        ms.iv[i - 1] = len ? cur : SuffixInterval{1, n_};
    }
    return ms;
}

std::vector<SuffixInterval> ReferenceIndex::reversed_prefix_intervals(std::string_view p) const {
    std::vector<SuffixInterval> out(p.size(), SuffixInterval::none());
    SuffixInterval cur{1, n_};
    for (std::uint64_t k = 0; k < p.size(); ++k) {
        cur = cur.empty() ? SuffixInterval::none()
                          : extend_left(cur, k, static_cast<Symbol>(p[k]), /*reversed=*/true);
        out[k] = cur;
    }
    return out;
}

}  // namespace rlz
