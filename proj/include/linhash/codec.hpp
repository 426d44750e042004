#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linhash/bitword.hpp"
#include "linhash/bounded_weight.hpp"
#include "linhash/distortions.hpp"
#include "linhash/general_codes.hpp"
#include "linhash/hashfun.hpp"

namespace linhash {

/// A complete code: the hash function plus where its check symbols live.
/// The j-th check position always maps to the j-th unit hash value, which is
/// what lets encode fill the check symbols with a single evaluation instead
/// of solving a linear system.
class CodeSpec {
public:
    CodeSpec(LinearHashFunction hash, std::vector<uint32_t> check_positions, CodeMode mode)
        : hash_(std::move(hash)), checks_(std::move(check_positions)), mode_(mode) {
        const uint32_t L = hash_.message_length(), l = hash_.hash_length();
        if (checks_.size() != l)
            throw std::invalid_argument("CodeSpec: need exactly l check positions");
        std::vector<bool> used(L + 1, false);
        for (uint32_t j = 0; j < l; ++j) {
            uint32_t p = checks_[j];
            if (p == 0 || p > L || used[p])
                throw std::invalid_argument("CodeSpec: check positions must be distinct indices in 1..L");
            used[p] = true;
            if (hash_.column(p) != BitWord::unit(l, j + 1))
                throw std::invalid_argument("CodeSpec: check position " + std::to_string(p) +
                                            " does not map to unit " + std::to_string(j + 1));
        }
        for (uint32_t p = 1; p <= L; ++p)
            if (!used[p]) info_.push_back(p);
        if (info_.empty()) throw std::invalid_argument("CodeSpec: no information positions");
    }

    const LinearHashFunction& hash() const { return hash_; }
    const std::vector<uint32_t>& check_positions() const { return checks_; }
    const std::vector<uint32_t>& info_positions() const { return info_; }
    CodeMode mode() const { return mode_; }
    uint32_t message_length() const { return hash_.message_length(); }
    uint32_t check_length() const { return hash_.hash_length(); }
    uint32_t info_length() const { return static_cast<uint32_t>(info_.size()); }

    /// Construction provenance, carried through code files untouched.
    std::vector<std::pair<std::string, std::string>> metadata;

private:
    LinearHashFunction hash_;
    std::vector<uint32_t> checks_;
    CodeMode mode_;
    std::vector<uint32_t> info_;
};

/// Bounded-weight codes put their check symbols at the last l positions.
inline CodeSpec spec_from_bounded(const BoundedWeightCode& code, CodeMode mode) {
    const uint32_t L = code.hash.message_length(), l = code.hash.hash_length();
    std::vector<uint32_t> checks(l);
    for (uint32_t j = 0; j < l; ++j) checks[j] = L - l + j + 1;
    return CodeSpec(code.hash, std::move(checks), mode);
}

/// General codes put them at positions 1..l.
inline CodeSpec spec_from_general(const GeneralCodeResult& res) {
    return CodeSpec(res.hash, res.check_positions, res.mode);
}

/// Places the information symbols, zero-fills the check positions, evaluates
/// once, and writes the j-th hash digit into the j-th check position. The
/// result always hashes to zero.
inline BitWord encode(const CodeSpec& spec, const BitWord& info) {
    if (info.length() != spec.info_length())
        throw std::invalid_argument("encode: info word of wrong length");
    BitWord x(spec.message_length());
    const auto& info_pos = spec.info_positions();
    for (uint32_t j = 0; j < info.length(); ++j)
        if (info.bit(j + 1)) x.set_bit(info_pos[j], true);
    BitWord w = spec.hash().eval(x);
    const auto& checks = spec.check_positions();
    for (uint32_t j = 0; j < checks.size(); ++j)
        if (w.bit(j + 1)) x.set_bit(checks[j], true);
    return x;
}

/// Reads the information positions back out, ascending.
inline BitWord extract_info(const CodeSpec& spec, const BitWord& x) {
    if (x.length() != spec.message_length())
        throw std::invalid_argument("extract_info: word of wrong length");
    BitWord info(spec.info_length());
    const auto& info_pos = spec.info_positions();
    for (uint32_t j = 0; j < info.length(); ++j)
        if (x.bit(info_pos[j])) info.set_bit(j + 1, true);
    return info;
}

struct DetectOutcome {
    bool clean;
    BitWord syndrome;  // zero iff clean
};

inline DetectOutcome detect(const CodeSpec& spec, const BitWord& y) {
    BitWord s = spec.hash().eval(y);
    return {s.is_zero(), std::move(s)};
}

/// Injective map from syndromes to distortions; the zero syndrome is never a
/// key. Entry order is the distortion enumeration order, which keeps file
/// round-trips byte-exact.
class SyndromeTable {
public:
    bool try_insert(BitWord syndrome, BitWord distortion) {
        if (syndrome.is_zero()) return false;
        auto [it, fresh] = index_.emplace(syndrome, entries_.size());
        if (!fresh) return false;
        entries_.emplace_back(std::move(syndrome), std::move(distortion));
        return true;
    }

    const BitWord* find(const BitWord& syndrome) const {
        auto it = index_.find(syndrome);
        return it == index_.end() ? nullptr : &entries_[it->second].second;
    }

    size_t size() const { return entries_.size(); }
    const std::vector<std::pair<BitWord, BitWord>>& entries() const { return entries_; }

    friend bool operator==(const SyndromeTable& a, const SyndromeTable& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::vector<std::pair<BitWord, BitWord>> entries_;
    std::unordered_map<BitWord, size_t, BitWordHash> index_;
};

struct SyndromeBuild {
    std::optional<SyndromeTable> table;
    // On failure: the colliding pair. A distortion hashing to zero collides
    // with the zero word.
    std::optional<std::pair<BitWord, BitWord>> collision;
    std::string message;

    bool ok() const { return table.has_value(); }
};

inline SyndromeBuild build_syndrome_table(const CodeSpec& spec, const DistortionSet& D) {
    if (D.length() != spec.message_length())
        throw std::invalid_argument("build_syndrome_table: distortion length mismatch");
    SyndromeTable table;
    for (const BitWord& d : D.members()) {
        BitWord s = spec.hash().eval(d);
        if (s.is_zero())
            return {std::nullopt, std::make_pair(d, BitWord::zero(D.length())),
                    "distortion " + d.to_string() + " has a zero syndrome"};
        if (const BitWord* prev = table.find(s))
            return {std::nullopt, std::make_pair(*prev, d),
                    "syndrome collision between " + prev->to_string() + " and " + d.to_string()};
        table.try_insert(std::move(s), d);
    }
    return {std::move(table), std::nullopt, ""};
}

struct CorrectOutcome {
    enum class Kind { clean, corrected, uncorrectable };
    Kind kind;
    std::optional<BitWord> codeword;    // corrected: y ^ d
    std::optional<BitWord> distortion;  // corrected: the table entry
    BitWord syndrome;
};

inline CorrectOutcome correct(const CodeSpec& spec, const SyndromeTable& table, const BitWord& y) {
    BitWord s = spec.hash().eval(y);
    if (s.is_zero()) return {CorrectOutcome::Kind::clean, std::nullopt, std::nullopt, std::move(s)};
    if (const BitWord* d = table.find(s))
        return {CorrectOutcome::Kind::corrected, y ^ *d, *d, std::move(s)};
    return {CorrectOutcome::Kind::uncorrectable, std::nullopt, std::nullopt, std::move(s)};
}

}  // namespace linhash
