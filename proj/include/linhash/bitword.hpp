#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace linhash {

/// Fixed-length binary word. Position 1 is the leftmost digit, matching the
/// usual x_1 ... x_L indexing of block codes; the textual form prints
/// position 1 first ("011000").
///
/// Words of up to 64 bits live in a single machine word; longer words spill
/// into a heap-allocated tail. Both representations satisfy the same
/// contracts. Values are immutable after creation as far as sharing between
/// threads is concerned; set_bit exists for builders that assemble a word
/// before publishing it.
class BitWord {
public:
    explicit BitWord(uint32_t length) : len_(length), head_(0) {
        if (length == 0) throw std::invalid_argument("BitWord: length must be >= 1");
        if (length > 64) tail_.assign((length - 1) / 64, 0);
    }

    /// e^length_i: the unit word with a single 1 at position i; i = 0 yields
    /// the all-zero word.
    static BitWord unit(uint32_t length, uint32_t i) {
        if (i > length) throw std::invalid_argument("BitWord::unit: position out of range");
        BitWord w(length);
        if (i > 0) w.set_bit(i, true);
        return w;
    }

    static BitWord zero(uint32_t length) { return BitWord(length); }

    /// Word with 1s exactly at the given (1-based, ascending or not) positions.
    static BitWord from_support(uint32_t length, std::span<const uint32_t> positions) {
        BitWord w(length);
        for (uint32_t p : positions) w.set_bit(p, true);
        return w;
    }

    static std::optional<BitWord> try_parse(std::string_view digits) {
        if (digits.empty() || digits.size() > UINT32_MAX) return std::nullopt;
        BitWord w(static_cast<uint32_t>(digits.size()));
        for (uint32_t i = 0; i < digits.size(); ++i) {
            char c = digits[i];
            if (c == '1') w.set_bit(i + 1, true);
            else if (c != '0') return std::nullopt;
        }
        return w;
    }

    static BitWord from_string(std::string_view digits) {
        auto w = try_parse(digits);
        if (!w) throw std::invalid_argument("BitWord: malformed digit string");
        return *w;
    }

    uint32_t length() const { return len_; }

    bool bit(uint32_t pos) const {
        check_pos(pos);
        uint32_t idx = pos - 1;
        return ((word_at(idx / 64) >> (idx % 64)) & 1u) != 0;
    }

    void set_bit(uint32_t pos, bool value) {
        check_pos(pos);
        uint32_t idx = pos - 1;
        uint64_t mask = uint64_t{1} << (idx % 64);
        uint64_t& w = idx < 64 ? head_ : tail_[idx / 64 - 1];
        if (value) w |= mask; else w &= ~mask;
    }

    bool is_zero() const {
        if (head_ != 0) return false;
        for (uint64_t w : tail_) if (w != 0) return false;
        return true;
    }

    /// Hamming weight: the number of 1s.
    uint32_t weight() const {
        uint32_t n = popcount64(head_);
        for (uint64_t w : tail_) n += popcount64(w);
        return n;
    }

    BitWord& operator^=(const BitWord& other) {
        check_same_length(other);
        head_ ^= other.head_;
        for (size_t i = 0; i < tail_.size(); ++i) tail_[i] ^= other.tail_[i];
        return *this;
    }

    friend BitWord operator^(BitWord a, const BitWord& b) { return a ^= b; }

    friend bool operator==(const BitWord& a, const BitWord& b) {
        return a.len_ == b.len_ && a.head_ == b.head_ && a.tail_ == b.tail_;
    }
    friend bool operator!=(const BitWord& a, const BitWord& b) { return !(a == b); }

    /// Calls fn(pos) for every 1-digit, ascending position.
    template <typename Fn>
    void for_each_set_bit(Fn&& fn) const {
        for (uint32_t wi = 0; wi <= tail_.size(); ++wi) {
            uint64_t w = word_at(wi);
            while (w != 0) {
                uint32_t b = ctz64(w);
                fn(wi * 64 + b + 1);
                w &= w - 1;
            }
        }
    }

    /// Position of the last 1-digit; 0 for the all-zero word.
    uint32_t last_set_bit() const {
        for (uint32_t wi = word_count(); wi-- > 0;) {
            uint64_t w = word_at(wi);
            if (w != 0) return wi * 64 + 64 - clz64(w);
        }
        return 0;
    }

    /// Copy with every position above `keep` cleared (the x|_1^i truncation).
    BitWord prefix(uint32_t keep) const {
        BitWord r = *this;
        for (uint32_t wi = 0; wi <= r.tail_.size(); ++wi) {
            uint32_t base = wi * 64;  // positions base+1 .. base+64
            uint64_t& w = wi == 0 ? r.head_ : r.tail_[wi - 1];
            if (keep <= base) w = 0;
            else if (keep < base + 64) w &= (uint64_t{1} << (keep - base)) - 1;
        }
        return r;
    }

    std::string to_string() const {
        std::string s(len_, '0');
        for_each_set_bit([&](uint32_t pos) { s[pos - 1] = '1'; });
        return s;
    }

    uint64_t hash_value() const {
        uint64_t h = mix(head_ ^ len_);
        for (uint64_t w : tail_) h = mix(h ^ w);
        return h;
    }

    /// Number of 64-bit storage words (head plus tail).
    uint32_t word_count() const { return 1 + static_cast<uint32_t>(tail_.size()); }

    /// Storage word i (0-based); word 0 holds positions 1..64, LSB = position 1.
    uint64_t word_at(uint32_t word_index) const {
        return word_index == 0 ? head_ : tail_[word_index - 1];
    }

private:
    void check_pos(uint32_t pos) const {
        if (pos == 0 || pos > len_) throw std::invalid_argument("BitWord: position out of range");
    }
    void check_same_length(const BitWord& other) const {
        if (len_ != other.len_) throw std::invalid_argument("BitWord: length mismatch");
    }
    static uint32_t popcount64(uint64_t w) { return static_cast<uint32_t>(__builtin_popcountll(w)); }
    static uint32_t ctz64(uint64_t w) { return static_cast<uint32_t>(__builtin_ctzll(w)); }
    static uint32_t clz64(uint64_t w) { return static_cast<uint32_t>(__builtin_clzll(w)); }
    static uint64_t mix(uint64_t x) {
        x ^= x >> 33; x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33; x *= 0xc4ceb9fe1a85ec53ULL;
        x ^= x >> 33; return x;
    }

    uint32_t len_;
    uint64_t head_;
    std::vector<uint64_t> tail_;
};

inline uint32_t hamming_distance(const BitWord& a, const BitWord& b) {
    return (a ^ b).weight();
}

struct BitWordHash {
    size_t operator()(const BitWord& w) const { return static_cast<size_t>(w.hash_value()); }
};

/// Deterministic total order used at every "any word" choice point: ascending
/// Hamming weight, ties broken by the support read as a lexicographic
/// position tuple ({1,2} before {1,3} before {2,3}). The tie-break reduces to:
/// the word holding a 1 at the first differing position comes first.
inline bool weight_lex_less(const BitWord& a, const BitWord& b) {
    uint32_t wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    for (uint32_t wi = 0; wi < a.word_count(); ++wi) {
        uint64_t diff = a.word_at(wi) ^ b.word_at(wi);
        if (diff != 0) {
            uint64_t low = diff & (~diff + 1);
            return (a.word_at(wi) & low) != 0;
        }
    }
    return false;
}

/// Lazy stream over the Hamming ball: all words of the given length whose
/// weight is at most max_weight and whose 1s lie within positions
/// 1..support_limit. Order is weight-ascending, then support-lexicographic;
/// the order is stable across runs. The stream has exactly
/// sum_{i=0}^{max_weight} C(support_limit, i) elements.
class BallStream {
public:
    BallStream(uint32_t length, uint32_t max_weight, uint32_t support_limit)
        : len_(length), sup_(support_limit) {
        if (support_limit > length) throw std::invalid_argument("BallStream: support_limit > length");
        if (max_weight > length) throw std::invalid_argument("BallStream: max_weight > length");
        maxw_ = max_weight < sup_ ? max_weight : sup_;
    }

    BallStream(uint32_t length, uint32_t max_weight) : BallStream(length, max_weight, length) {}

    std::optional<BitWord> next() {
        if (done_) return std::nullopt;
        if (fresh_) {
            fresh_ = false;
            return BitWord::zero(len_);  // the weight-0 layer
        }
        if (!advance()) { done_ = true; return std::nullopt; }
        return BitWord::from_support(len_, comb_);
    }

    template <typename Fn>
    void for_each(Fn&& fn) {
        while (auto w = next()) fn(*w);
    }

private:
    // Steps comb_ to the next weight-w combination, or opens the next weight layer.
    bool advance() {
        uint32_t w = static_cast<uint32_t>(comb_.size());
        if (w > 0) {
            for (uint32_t i = w; i-- > 0;) {
                if (comb_[i] < sup_ - (w - 1 - i)) {
                    ++comb_[i];
                    for (uint32_t j = i + 1; j < w; ++j) comb_[j] = comb_[j - 1] + 1;
                    return true;
                }
            }
        }
        if (w == maxw_) return false;
        comb_.resize(w + 1);
        for (uint32_t j = 0; j <= w; ++j) comb_[j] = j + 1;
        return true;
    }

    uint32_t len_, sup_, maxw_;
    bool fresh_ = true, done_ = false;
    std::vector<uint32_t> comb_;
};

}  // namespace linhash

template <>
struct std::hash<linhash::BitWord> {
    size_t operator()(const linhash::BitWord& w) const { return static_cast<size_t>(w.hash_value()); }
};
