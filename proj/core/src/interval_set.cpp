#include "muqm/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace muqm {

IntervalSet IntervalSet::normalized(std::vector<Interval> intervals, bool* changed) {
    if (changed) *changed = false;
    for (const Interval& iv : intervals) {
        if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi))
            throw std::invalid_argument("interval endpoints must be finite");
        if (!(iv.lo < iv.hi))
            throw std::invalid_argument("interval requires lo < hi");
    }
    auto by_lo = [](const Interval& a, const Interval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    };
    if (!std::is_sorted(intervals.begin(), intervals.end(), by_lo)) {
        std::sort(intervals.begin(), intervals.end(), by_lo);
        if (changed) *changed = true;
    }
    IntervalSet out;
    for (const Interval& iv : intervals) {
        if (!out.intervals_.empty() && iv.lo <= out.intervals_.back().hi) {
            out.intervals_.back().hi = std::max(out.intervals_.back().hi, iv.hi);
            if (changed) *changed = true;
        } else {
            out.intervals_.push_back(iv);
        }
    }
    return out;
}

IntervalSet IntervalSet::parse(std::string_view text, bool* changed) {
    auto fail = [&] { throw std::invalid_argument("expected interval syntax \"[lo,hi];[lo,hi]\""); };
    std::vector<Interval> parsed;
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto read_number = [&]() -> double {
        skip_ws();
        std::string token;
        while (pos < text.size() && std::string_view("];,").find(text[pos]) == std::string_view::npos)
            token.push_back(text[pos++]);
        size_t used = 0;
        double v;
        try {
            v = std::stod(token, &used);
        } catch (const std::exception&) {
            fail();
        }
        while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
        if (used != token.size()) fail();
        return v;
    };
    while (true) {
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '[') fail();
        ++pos;
        double lo = read_number();
        skip_ws();
        if (pos == text.size() || text[pos] != ',') fail();
        ++pos;
        double hi = read_number();
        skip_ws();
        if (pos == text.size() || text[pos] != ']') fail();
        ++pos;
        parsed.push_back({lo, hi});
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != ';') fail();
        ++pos;
        skip_ws();
        if (pos == text.size()) fail();  // trailing ';' with nothing after it
    }
    return normalized(std::move(parsed), changed);
}

bool IntervalSet::excludes_zero() const {
    for (const Interval& iv : intervals_)
        if (iv.lo <= 0.0 && 0.0 <= iv.hi) return false;
    return true;
}

std::string IntervalSet::to_string() const {
    std::string out;
    char buf[64];
    for (size_t i = 0; i < intervals_.size(); ++i) {
        if (i) out.push_back(';');
        std::snprintf(buf, sizeof buf, "[%.17g,%.17g]", intervals_[i].lo, intervals_[i].hi);
        out += buf;
    }
    return out;
}

}  // namespace muqm
