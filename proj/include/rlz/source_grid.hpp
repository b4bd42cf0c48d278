#pragma once

#include <cstdint>
#include <vector>

#include "rlz/types.hpp"

namespace rlz {

// One point per phrase occurrence, keyed by its source interval in the
// reference.  Supports "all phrases whose source covers [y..x]... " —
// precisely: all points with src_lo <= x and src_hi >= y — reported in
// time proportional to the answer plus log of the point count, via a
// range-maximum tree over src_hi.
class SourceGrid {
public:
    struct Point {
        std::uint64_t src_lo = 0;    // first source position (1-based)
        std::uint64_t src_hi = 0;    // last source position
        std::uint64_t text_pos = 0;  // global start of the occurrence in the collection
        std::uint64_t doc = 0;       // 1-based document id
        friend bool operator==(const Point&, const Point&) = default;
    };

    SourceGrid() = default;
    static SourceGrid build(const Parse& parse);

    std::uint64_t point_count() const { return pts_.size(); }
    const std::vector<Point>& points() const { return pts_; }  // sorted by (src_lo, text_pos)

    // All points with src_lo <= x and src_hi >= y.  visits, when given,
    // receives the number of tree nodes touched.
    void containing(std::uint64_t x, std::uint64_t y, std::vector<Point>& out,
                    std::uint64_t* visits = nullptr) const;

    // Text occurrences of a length-m pattern that lie entirely inside one
    // phrase, given the pattern's reference hits; sorted by (doc, offset).
    std::vector<TextHit> secondary_occurrences(const std::vector<std::uint64_t>& ref_hits,
                                               std::uint64_t m) const;

private:
    void build_tree();
    void report(std::uint64_t node, std::uint64_t lo, std::uint64_t hi, std::uint64_t limit,
                std::uint64_t y, std::vector<Point>& out, std::uint64_t& visits) const;

    std::vector<Point> pts_;
    std::vector<std::uint64_t> max_hi_;      // segment tree over src_hi
    std::vector<std::uint64_t> doc_start_;   // global start per document (index doc-1)
};

}  // namespace rlz
