#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "linhash/bitword.hpp"
#include "linhash/hashfun.hpp"

namespace linhash {

enum class BurstVariant {
    strict,   // the 1s fill a window of exactly `window` consecutive positions
    general,  // any nonzero pattern inside some window of `window` positions
};

/// The set D of error patterns a channel may XOR onto a codeword. Never
/// contains the all-zero word. Members enumerate in a deterministic order:
/// explicit lists keep their given order, weight balls use ball order, and
/// bursts run left to right.
class DistortionSet {
public:
    enum class Kind { explicit_list, weight_ball, burst };

    static DistortionSet explicit_list(uint32_t length, std::vector<BitWord> words) {
        WordSet seen;
        for (const BitWord& w : words) {
            if (w.length() != length)
                throw std::invalid_argument("DistortionSet: member of wrong length");
            if (w.is_zero())
                throw std::invalid_argument("DistortionSet: the zero word is not a distortion");
            if (!seen.insert(w).second)
                throw std::invalid_argument("DistortionSet: duplicate member " + w.to_string());
        }
        DistortionSet d(Kind::explicit_list, length);
        d.members_ = std::move(words);
        return d;
    }

    static DistortionSet weight_ball(uint32_t length, uint32_t max_weight) {
        if (max_weight == 0 || max_weight > length)
            throw std::invalid_argument("DistortionSet: weight bound must be in 1..L");
        DistortionSet d(Kind::weight_ball, length);
        d.param_ = max_weight;
        BallStream ball(length, max_weight);
        while (auto w = ball.next())
            if (!w->is_zero()) d.members_.push_back(*w);
        return d;
    }

    static DistortionSet burst(uint32_t length, uint32_t window, BurstVariant variant) {
        if (window == 0 || window > length)
            throw std::invalid_argument("DistortionSet: burst length must be in 1..L");
        DistortionSet d(Kind::burst, length);
        d.param_ = window;
        d.variant_ = variant;
        if (variant == BurstVariant::strict) {
            for (uint32_t s = 1; s + window - 1 <= length; ++s) {
                BitWord w(length);
                for (uint32_t p = s; p < s + window; ++p) w.set_bit(p, true);
                d.members_.push_back(w);
            }
        } else {
            // Each word is listed under the window starting at its first 1,
            // so nothing repeats across overlapping windows.
            for (uint32_t s = 1; s <= length; ++s) {
                uint32_t free = std::min(window, length - s + 1) - 1;
                for (uint64_t mask = 0; mask < (uint64_t{1} << free); ++mask) {
                    BitWord w(length);
                    w.set_bit(s, true);
                    for (uint32_t j = 0; j < free; ++j)
                        if ((mask >> j) & 1) w.set_bit(s + 1 + j, true);
                    d.members_.push_back(w);
                }
            }
        }
        return d;
    }

    Kind kind() const { return kind_; }
    uint32_t length() const { return length_; }
    size_t size() const { return members_.size(); }
    const std::vector<BitWord>& members() const { return members_; }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (const BitWord& w : members_) fn(w);
    }

    /// Compact description for code-file metadata, e.g. "burst:2:strict".
    std::string descriptor() const {
        switch (kind_) {
            case Kind::weight_ball: return "weight:" + std::to_string(param_);
            case Kind::burst:
                return "burst:" + std::to_string(param_) +
                       (variant_ == BurstVariant::strict ? ":strict" : ":general");
            case Kind::explicit_list: return "explicit:" + std::to_string(members_.size());
        }
        return "?";
    }

private:
    DistortionSet(Kind kind, uint32_t length) : kind_(kind), length_(length) {
        if (length == 0) throw std::invalid_argument("DistortionSet: length must be >= 1");
    }

    Kind kind_;
    uint32_t length_;
    uint32_t param_ = 0;
    BurstVariant variant_ = BurstVariant::strict;
    std::vector<BitWord> members_;
};

// ---------------------------------------------------------------------------
// Derived sets for the general detection constructor
// ---------------------------------------------------------------------------

/// D_i: the distortions whose support ends exactly at position i.
/// D'_i: the same words with that last 1 cleared. Every nonzero distortion
/// lands in exactly one D_i.
struct DetectionSets {
    std::vector<BitWord> members;  // D_i
    std::vector<BitWord> cleared;  // D'_i
};

inline DetectionSets detection_sets(const DistortionSet& D, uint32_t i) {
    if (i == 0 || i > D.length())
        throw std::invalid_argument("detection_sets: index out of range");
    DetectionSets out;
    BitWord e_i = BitWord::unit(D.length(), i);
    D.for_each([&](const BitWord& d) {
        if (d.last_set_bit() == i) {
            out.members.push_back(d);
            out.cleared.push_back(d ^ e_i);
        }
    });
    return out;
}

/// All D'_i in one pass; index 0 of the result is unused.
inline std::vector<std::vector<BitWord>> all_cleared_sets(const DistortionSet& D) {
    std::vector<std::vector<BitWord>> cleared(D.length() + 1);
    D.for_each([&](const BitWord& d) {
        uint32_t i = d.last_set_bit();
        cleared[i].push_back(d ^ BitWord::unit(D.length(), i));
    });
    return cleared;
}

// ---------------------------------------------------------------------------
// Derived sets for the general correction constructor
// ---------------------------------------------------------------------------

/// Prefix truncations of D+ = D u {0} and their increments:
///   G_i = {d|_1^i : d in D+},   H_i = G_i \ G_{i-1}  (H_1 = G_1),
///   F_i = {g ^ h ^ e_i : g in G_{i-1}, h in H_i}.
/// G_0 is the single zero word (the empty prefix truncates everything to 0),
/// which is what reproduces F_1 = {e_1, 0} on nonempty first columns.
struct CorrectionSets {
    std::vector<WordSet> g, h, f;  // index 1..L; index 0 holds the G_0 convention

    size_t max_f_size() const {
        size_t m = 0;
        for (size_t i = 1; i < f.size(); ++i) m = std::max(m, f[i].size());
        return m;
    }
};

inline CorrectionSets correction_sets(const DistortionSet& D) {
    const uint32_t L = D.length();
    CorrectionSets cs;
    cs.g.resize(L + 1);
    cs.h.resize(L + 1);
    cs.f.resize(L + 1);

    std::vector<BitWord> dplus = D.members();
    dplus.push_back(BitWord::zero(L));
    cs.g[0].insert(BitWord::zero(L));

    for (uint32_t i = 1; i <= L; ++i) {
        for (const BitWord& d : dplus) cs.g[i].insert(d.prefix(i));
        for (const BitWord& w : cs.g[i])
            if (i == 1 || !cs.g[i - 1].count(w)) cs.h[i].insert(w);
        BitWord e_i = BitWord::unit(L, i);
        for (const BitWord& g : cs.g[i - 1])
            for (const BitWord& h : cs.h[i]) cs.f[i].insert(g ^ h ^ e_i);
    }
    return cs;
}

// ---------------------------------------------------------------------------
// Distortion-set files
// ---------------------------------------------------------------------------

struct DistortionParse {
    std::optional<DistortionSet> set;
    std::string error;
    size_t line = 0;

    bool ok() const { return set.has_value(); }
};

/// Format: first line "L <integer>", then one L-digit binary word per line.
/// Duplicates, zero words and malformed lines are rejected.
inline DistortionParse parse_distortion_file(std::istream& in) {
    std::string line;
    size_t lineno = 1;
    if (!std::getline(in, line)) return {std::nullopt, "empty file", lineno};
    uint32_t length = 0;
    {
        std::istringstream hdr(line);
        std::string tag;
        long long n = 0;
        if (!(hdr >> tag >> n) || tag != "L" || n < 1)
            return {std::nullopt, "expected header \"L <integer>\"", lineno};
        std::string rest;
        if (hdr >> rest) return {std::nullopt, "trailing content after header", lineno};
        length = static_cast<uint32_t>(n);
    }
    std::vector<BitWord> words;
    WordSet seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto w = BitWord::try_parse(line);
        if (!w || w->length() != length)
            return {std::nullopt, "expected a " + std::to_string(length) + "-digit binary word", lineno};
        if (w->is_zero()) return {std::nullopt, "the zero word is not a distortion", lineno};
        if (!seen.insert(*w).second) return {std::nullopt, "duplicate word", lineno};
        words.push_back(*w);
    }
    if (words.empty()) return {std::nullopt, "no distortion words", lineno};
    return {DistortionSet::explicit_list(length, std::move(words)), "", 0};
}

inline void write_distortion_file(std::ostream& out, const DistortionSet& D) {
    out << "L " << D.length() << "\n";
    D.for_each([&](const BitWord& w) { out << w.to_string() << "\n"; });
}

}  // namespace linhash
