#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace muqm {

/// A finite union of disjoint closed intervals, kept sorted by lower
/// endpoint. Overlapping or touching input intervals are merged during
/// normalization; each stored interval satisfies lo < hi with both finite.
class IntervalSet {
public:
    struct Interval {
        double lo;
        double hi;
    };

    IntervalSet() = default;  // empty set

    /// Sorts and merges; throws std::invalid_argument on non-finite or
    /// degenerate (lo >= hi) intervals. If changed is non-null it is set to
    /// true when merging or reordering altered the input.
    static IntervalSet normalized(std::vector<Interval> intervals, bool* changed = nullptr);

    /// Parses the wire syntax "[lo,hi];[lo,hi];...". Whitespace around
    /// numbers and separators is tolerated. Normalizes like normalized().
    static IntervalSet parse(std::string_view text, bool* changed = nullptr);

    const std::vector<Interval>& intervals() const { return intervals_; }
    bool empty() const { return intervals_.empty(); }

    /// True when 0 lies outside the closure of every interval; the trace
    /// formula requires this of the position-side set.
    bool excludes_zero() const;

    /// Wire-format round trip: "[lo,hi];[lo,hi]" with 17 significant digits.
    std::string to_string() const;

private:
    std::vector<Interval> intervals_;
};

}  // namespace muqm
