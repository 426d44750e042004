#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "linhash/bitword.hpp"
#include "linhash/rng.hpp"

namespace linhash {

/// A linear hash function from L-bit words to l-bit words, stored
/// extensionally as the table v_1, ..., v_L of its values on the unit words.
/// Linearity makes this representation lossless: evaluating any input is the
/// XOR of the table entries at its 1-positions, so evaluation needs no
/// multiplications and runs in time linear in L.
class LinearHashFunction {
public:
    LinearHashFunction(uint32_t message_length, uint32_t hash_length,
                       std::vector<BitWord> table)
        : message_length_(message_length), hash_length_(hash_length),
          table_(std::move(table)) {
        if (hash_length_ == 0 || message_length_ == 0)
            throw std::invalid_argument("LinearHashFunction: lengths must be >= 1");
        if (table_.size() != message_length_)
            throw std::invalid_argument("LinearHashFunction: table must have L entries");
        for (const BitWord& v : table_)
            if (v.length() != hash_length_)
                throw std::invalid_argument("LinearHashFunction: table entry of wrong length");
    }

    uint32_t message_length() const { return message_length_; }
    uint32_t hash_length() const { return hash_length_; }
    const std::vector<BitWord>& table() const { return table_; }

    /// Table entry for unit word i (1-based).
    const BitWord& column(uint32_t i) const { return table_.at(i - 1); }

    BitWord eval(const BitWord& x) const {
        if (x.length() != message_length_)
            throw std::invalid_argument("LinearHashFunction::eval: length mismatch");
        BitWord acc(hash_length_);
        // Walks 64-bit blocks of x so all-zero stretches of a long message
        // cost one compare each.
        x.for_each_set_bit([&](uint32_t pos) { acc ^= table_[pos - 1]; });
        return acc;
    }

    friend bool operator==(const LinearHashFunction& a, const LinearHashFunction& b) {
        return a.message_length_ == b.message_length_ &&
               a.hash_length_ == b.hash_length_ && a.table_ == b.table_;
    }

private:
    uint32_t message_length_;
    uint32_t hash_length_;
    std::vector<BitWord> table_;
};

using WordSet = std::unordered_set<BitWord, BitWordHash>;

/// The set of distinct hash values over a stream of words.
inline WordSet image(const LinearHashFunction& h, BallStream stream) {
    WordSet out;
    stream.for_each([&](const BitWord& w) { out.insert(h.eval(w)); });
    return out;
}

inline WordSet image(const LinearHashFunction& h, const std::vector<BitWord>& words) {
    WordSet out;
    for (const BitWord& w : words) out.insert(h.eval(w));
    return out;
}

/// Samples random pairs and checks eval(x ^ y) == eval(x) ^ eval(y).
/// Always true by construction; exists so tests can hammer the evaluator.
inline bool linearity_check(const LinearHashFunction& h, uint32_t trials, uint64_t seed) {
    Rng rng(seed);
    for (uint32_t t = 0; t < trials; ++t) {
        BitWord x = rng.word(h.message_length());
        BitWord y = rng.word(h.message_length());
        if (h.eval(x ^ y) != (h.eval(x) ^ h.eval(y))) return false;
    }
    return true;
}

}  // namespace linhash
