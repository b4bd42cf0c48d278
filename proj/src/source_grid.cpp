#include "rlz/source_grid.hpp"

#include <algorithm>

namespace rlz {

SourceGrid SourceGrid::build(const Parse& parse) {
    SourceGrid grid;
    grid.pts_.reserve(parse.phrase_count());
    std::uint64_t k = 0;
    for (const DocBound& db : parse.docs) {
        grid.doc_start_.push_back(db.start);
        std::uint64_t end = db.start + db.len;
        while (k < parse.phrase_count() && parse.text_start[k] < end) {
            const Phrase& ph = parse.phrases[k];
            grid.pts_.push_back(
                Point{ph.src_start, ph.src_start + ph.len - 1, parse.text_start[k], db.doc});
            ++k;
        }
    }
    std::sort(grid.pts_.begin(), grid.pts_.end(), [](const Point& a, const Point& b) {
        if (a.src_lo != b.src_lo) return a.src_lo < b.src_lo;
        return a.text_pos < b.text_pos;
    });
    grid.build_tree();
    return grid;
}

void SourceGrid::build_tree() {
    std::uint64_t n = pts_.size();
    max_hi_.assign(n ? 4 * n : 0, 0);
    if (!n) return;
    // Recursive bottom-up fill.
    struct Builder {
        const std::vector<Point>& pts;
        std::vector<std::uint64_t>& tree;
        void fill(std::uint64_t node, std::uint64_t lo, std::uint64_t hi) {
            if (lo == hi) {
                tree[node] = pts[lo].src_hi;
                return;
            }
            std::uint64_t mid = (lo + hi) / 2;
            fill(2 * node, lo, mid);
            fill(2 * node + 1, mid + 1, hi);
            tree[node] = std::max(tree[2 * node], tree[2 * node + 1]);
        }
    };
    Builder{pts_, max_hi_}.fill(1, 0, n - 1);
}

void SourceGrid::report(std::uint64_t node, std::uint64_t lo, std::uint64_t hi,
                        std::uint64_t limit, std::uint64_t y, std::vector<Point>& out,
                        std::uint64_t& visits) const {
    ++visits;
    if (lo > limit || max_hi_[node] < y) return;
    if (lo == hi) {
        out.push_back(pts_[lo]);
        return;
    }
    std::uint64_t mid = (lo + hi) / 2;
    report(2 * node, lo, mid, limit, y, out, visits);
    if (mid < limit) report(2 * node + 1, mid + 1, hi, limit, y, out, visits);
}

void SourceGrid::containing(std::uint64_t x, std::uint64_t y, std::vector<Point>& out,
                            std::uint64_t* visits) const {
    std::uint64_t v = 0;
    if (!pts_.empty()) {
        // Points are sorted by src_lo; only the prefix with src_lo <= x
        // can qualify.
        auto it = std::upper_bound(pts_.begin(), pts_.end(), x,
                                   [](std::uint64_t val, const Point& p) { return val < p.src_lo; });
        if (it != pts_.begin()) {
            std::uint64_t limit = static_cast<std::uint64_t>(it - pts_.begin()) - 1;
            report(1, 0, pts_.size() - 1, limit, y, out, v);
        }
    }
    if (visits) *visits = v;
}

std::vector<TextHit> SourceGrid::secondary_occurrences(const std::vector<std::uint64_t>& ref_hits,
                                                       std::uint64_t m) const {
    std::vector<TextHit> hits;
    std::vector<Point> found;
    for (std::uint64_t x : ref_hits) {
        found.clear();
        containing(x, x + m - 1, found);
        for (const Point& p : found) {
            std::uint64_t global = p.text_pos + (x - p.src_lo);
            hits.push_back(TextHit{p.doc, global - doc_start_[p.doc - 1] + 1});
        }
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

}  // namespace rlz
