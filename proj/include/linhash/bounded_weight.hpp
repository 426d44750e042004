#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linhash/bignum.hpp"
#include "linhash/bitword.hpp"
#include "linhash/hashfun.hpp"
#include "linhash/rng.hpp"

namespace linhash {

// ---------------------------------------------------------------------------
// Check-bit formulas
// ---------------------------------------------------------------------------

/// sum_{i=0}^{max_weight} C(n, i): the size of the radius-max_weight Hamming
/// ball over n positions.
inline BigUint ball_size_sum(uint32_t n, uint32_t max_weight) {
    BigUint s(0);
    for (uint32_t i = 0; i <= max_weight; ++i) s += binomial(n, i);
    return s;
}

/// Check-bit count matching the Varshamov-Gilbert bound:
/// l = ceil(log2(sum_{i=0}^{d-2} C(L-1, i) + 1)). Returns nullopt when no
/// solution exists (l >= L). Exact integer arithmetic throughout.
inline std::optional<uint32_t> check_bits_vg(uint32_t L, uint32_t d) {
    if (L < 2 || d < 2) throw std::invalid_argument("check_bits_vg: need L >= 2, d >= 2");
    BigUint s = ball_size_sum(L - 1, d - 2);
    s += BigUint(1);
    uint32_t l = ceil_log2(s);
    if (l >= L) return std::nullopt;
    return l;
}

/// |Z| for the overlap construction: words z = x y 00 with |x| = d-1,
/// |y| = L-d-1, ||x|| + ||y|| <= d-3 and ||y|| <= ||x|| - 1. Counting by
/// s = ||x||, j = ||y|| gives
///   sum_{s=1}^{d-3} C(d-1, s) * sum_{j=0}^{min(s-1, d-3-s)} C(L-d-1, j),
/// the index ranges pinned by exhaustive enumeration of the constraint set
/// (see uvz_sets and its tests).
inline BigUint zsize_formula(uint32_t L, uint32_t d) {
    BigUint total(0);
    if (d < 4 || L < d + 1) return total;
    for (uint32_t s = 1; s + 3 <= d; ++s) {
        uint32_t jmax = std::min(s - 1, d - 3 - s);
        BigUint inner(0);
        for (uint32_t j = 0; j <= jmax; ++j) inner += binomial(L - d - 1, j);
        total += binomial(d - 1, s) * inner;
    }
    return total;
}

/// Improved check-bit count: the ball-size sum shrinks by |Z| because the
/// overlap sets U and V are hashed onto each other. The overlap is exploited
/// only for d >= 5; for d <= 4 this coincides with check_bits_vg (Algorithm 2
/// falls back to the Algorithm 1 rule there). Never exceeds check_bits_vg.
inline std::optional<uint32_t> check_bits_improved(uint32_t L, uint32_t d) {
    if (L < 2 || d < 2) throw std::invalid_argument("check_bits_improved: need L >= 2, d >= 2");
    BigUint s = ball_size_sum(L - 1, d - 2);
    if (d >= 5) s -= zsize_formula(L, d);
    s += BigUint(1);
    uint32_t l = ceil_log2(s);
    if (l >= L) return std::nullopt;
    return l;
}

/// Lower bound on the probability that one random draw of Algorithm 3
/// yields a code of distance >= d:
///   max(0, 1 - 2^{-(l+delta)} sum_{j=0}^{d-2} C(L, j+1)),
/// with l from the VG formula. Exact rational arithmetic.
inline Pow2Rational success_bound(uint32_t L, uint32_t d, uint32_t delta) {
    if (L < 2 || d < 2 || d >= L)
        throw std::invalid_argument("success_bound: need L > d >= 2");
    BigUint s = ball_size_sum(L - 1, d - 2);
    s += BigUint(1);
    uint32_t l = ceil_log2(s);
    uint32_t k = l + delta;
    BigUint num(0);
    for (uint32_t j = 0; j + 2 <= d; ++j) num += binomial(L, j + 1);
    BigUint den = BigUint::pow2(k);
    if (num >= den) return Pow2Rational::zero();
    return Pow2Rational{den - num, k};
}

// ---------------------------------------------------------------------------
// The U/V/Z overlap sets
// ---------------------------------------------------------------------------

struct UvzSets {
    std::vector<BitWord> z, u, v;
};

/// Materializes Z = {x y 00 : |x| = d-1, |y| = L-d-1, ||x||+||y|| <= d-3,
/// ||y|| <= ||x||-1}, U = {e_{L-1} ^ z} and V = {1^{d-1} 0... ^ z}, in a
/// deterministic order (x in ball order, then y). Checks the structural
/// properties on the way out: U and V are disjoint subsets of the radius
/// d-2 ball with support inside 1..L-1, every u ends "10", every v ends
/// "00", and |U| = |Z| = |V|.
inline UvzSets uvz_sets(uint32_t L, uint32_t d) {
    if (d < 2 || L < d + 1) throw std::invalid_argument("uvz_sets: need d >= 2, L >= d+1");
    UvzSets out;
    if (d < 4) return out;

    const uint32_t x_len = d - 1;
    const uint32_t y_len = L - d - 1;
    BitWord e_last1 = BitWord::unit(L, L - 1);
    BitWord ones(L);
    for (uint32_t p = 1; p <= d - 1; ++p) ones.set_bit(p, true);

    BallStream xs(x_len, std::min(x_len, d - 3));
    while (auto x = xs.next()) {
        uint32_t wx = x->weight();
        if (wx == 0) continue;  // ||y|| <= ||x|| - 1 needs ||x|| >= 1
        uint32_t jmax = std::min(wx - 1, d - 3 - wx);
        auto emit = [&](const BitWord& z) {
            out.z.push_back(z);
            out.u.push_back(e_last1 ^ z);
            out.v.push_back(ones ^ z);
        };
        if (y_len == 0) {
            BitWord z(L);
            x->for_each_set_bit([&](uint32_t p) { z.set_bit(p, true); });
            emit(z);
            continue;
        }
        BallStream ys(y_len, std::min(y_len, jmax));
        while (auto y = ys.next()) {
            BitWord z(L);
            x->for_each_set_bit([&](uint32_t p) { z.set_bit(p, true); });
            y->for_each_set_bit([&](uint32_t p) { z.set_bit(x_len + p, true); });
            emit(z);
        }
    }

    WordSet useen, vseen;
    for (size_t i = 0; i < out.z.size(); ++i) {
        const BitWord &u = out.u[i], &v = out.v[i];
        bool ok = u.weight() <= d - 2 && v.weight() <= d - 2 &&
                  u.bit(L - 1) && !u.bit(L) && !v.bit(L - 1) && !v.bit(L);
        if (!ok || !useen.insert(u).second || !vseen.insert(v).second)
            throw std::logic_error("uvz_sets: structural property violated");
    }
    for (const BitWord& u : out.u)
        if (vseen.count(u)) throw std::logic_error("uvz_sets: U and V intersect");
    return out;
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

enum class Algorithm { alg1, alg2, alg3 };

inline const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::alg1: return "alg1";
        case Algorithm::alg2: return "alg2";
        case Algorithm::alg3: return "alg3";
    }
    return "?";
}

struct BoundedWeightParams {
    uint32_t message_length = 0;  // L
    uint32_t distance = 0;        // d, 2 <= d < L
    uint32_t delta = 0;           // Algorithm 3 only
    uint64_t seed = 0;            // Algorithm 3 only
};

struct ConstructionTrace {
    Algorithm algorithm = Algorithm::alg1;
    uint32_t check_bits = 0;  // l (l + delta for Algorithm 3)
    std::vector<BitWord> pre_permutation_table;
    bool permuted = false;
    uint32_t delta = 0;
    uint64_t seed = 0;
    std::string rng;  // generator id for Algorithm 3, empty otherwise
};

struct BoundedWeightCode {
    LinearHashFunction hash;
    ConstructionTrace trace;
};

enum class ConstructStatus {
    ok,
    no_solution,          // the check-bit formula admits no l < L
    choice_set_empty,     // Algorithm 2 ran out of admissible words at some step
    construction_failed,  // Algorithm 3 random draw failed the ball check
    verification_failed,  // Algorithm 2 output failed the ball check
};

struct BoundedWeightResult {
    ConstructStatus status = ConstructStatus::ok;
    std::optional<BoundedWeightCode> code;
    uint32_t fail_step = 0;
    std::string message;

    bool ok() const { return status == ConstructStatus::ok; }
};

namespace detail {

/// Incrementally maintained images of Hamming-ball words under a partially
/// built table. After columns v_1..v_m have been added, full() holds the
/// images of every word of weight <= max_weight with support in 1..m, and
/// inner() the same for weight <= max_weight - 1. Adding column m+1 extends
/// each tracked image of weight w < max_weight by one XOR, so the total work
/// over a whole construction is proportional to the final ball size.
class BallImageTracker {
public:
    BallImageTracker(uint32_t hash_bits, uint32_t max_weight)
        : max_weight_(max_weight), by_weight_(max_weight + 1) {
        BitWord z(hash_bits);
        by_weight_[0].insert(z);
        full_.insert(z);
        inner_.insert(z);
    }

    void add_column(const BitWord& v) {
        for (uint32_t w = max_weight_; w-- > 0;) {
            for (const BitWord& x : by_weight_[w]) {
                BitWord y = x ^ v;
                if (by_weight_[w + 1].insert(y).second) {
                    full_.insert(y);
                    if (w + 1 < max_weight_) inner_.insert(y);
                }
            }
        }
    }

    const WordSet& full() const { return full_; }
    const WordSet& inner() const { return inner_; }

private:
    uint32_t max_weight_;
    std::vector<WordSet> by_weight_;
    WordSet full_, inner_;
};

/// First word of the given length, in weight-lex order, that is not in
/// `taken`; nullopt when `taken` covers the whole space.
inline std::optional<BitWord> smallest_absent(uint32_t bits, const WordSet& taken) {
    BallStream all(bits, bits);
    while (auto w = all.next())
        if (!taken.count(*w)) return w;
    return std::nullopt;
}

/// Weight-lex minimum of big \ small; nullopt when the difference is empty.
inline std::optional<BitWord> smallest_in_difference(const WordSet& big, const WordSet& small) {
    std::optional<BitWord> best;
    for (const BitWord& w : big) {
        if (small.count(w)) continue;
        if (!best || weight_lex_less(w, *best)) best = w;
    }
    return best;
}

/// Moves the unit block from the front to the back:
/// final[i] = hat[i+l] for i = 1..L-l, final[L-l+i] = hat[i].
inline std::vector<BitWord> apply_final_permutation(const std::vector<BitWord>& hat, uint32_t l) {
    std::vector<BitWord> out;
    out.reserve(hat.size());
    for (size_t i = l; i < hat.size(); ++i) out.push_back(hat[i]);
    for (size_t i = 0; i < l; ++i) out.push_back(hat[i]);
    return out;
}

inline void validate_params(const BoundedWeightParams& p) {
    if (p.distance < 2 || p.distance >= p.message_length)
        throw std::invalid_argument("bounded-weight constructor: need 2 <= d < L");
}

}  // namespace detail

/// Streams the radius-(d-1) ball minus the zero word and returns the first
/// element hashing to zero, if any. The empty return certifies, via the
/// distance criterion, that the encoding set has minimum distance >= d.
inline std::optional<BitWord> find_ball_counterexample(const LinearHashFunction& h, uint32_t d) {
    BallStream ball(h.message_length(), std::min(d - 1, h.message_length()));
    while (auto w = ball.next()) {
        if (w->is_zero()) continue;
        if (h.eval(*w).is_zero()) return w;
    }
    return std::nullopt;
}

/// Algorithm 1: the VG-matching construction. Unit values on the first l
/// positions, then at every later position the smallest word (weight-lexographic)
/// outside the image of the prefix ball of radius d-2, and finally the
/// permutation that moves the unit block to the last l positions so the
/// check symbols sit at the end.
inline BoundedWeightResult construct_alg1(const BoundedWeightParams& p) {
    detail::validate_params(p);
    const uint32_t L = p.message_length, d = p.distance;
    auto l_opt = check_bits_vg(L, d);
    if (!l_opt) return {ConstructStatus::no_solution, std::nullopt, 0, "no l < L satisfies the check-bit formula"};
    const uint32_t l = *l_opt;

    detail::BallImageTracker tracker(l, d - 2);
    std::vector<BitWord> hat;
    hat.reserve(L);
    for (uint32_t i = 1; i <= L; ++i) {
        BitWord v(l);
        if (i <= l) {
            v = BitWord::unit(l, i);
        } else {
            auto c = detail::smallest_absent(l, tracker.full());
            // Cannot happen: |image| <= ball size < 2^l by the choice of l.
            if (!c) throw std::logic_error("Algorithm 1: internal exhaustion at step " + std::to_string(i));
            v = *c;
        }
        hat.push_back(v);
        tracker.add_column(v);
    }

    ConstructionTrace trace{Algorithm::alg1, l, hat, true, 0, 0, ""};
    LinearHashFunction hash(L, l, detail::apply_final_permutation(hat, l));
    return {ConstructStatus::ok, BoundedWeightCode{std::move(hash), std::move(trace)}, 0, ""};
}

/// Algorithm 2: same skeleton as Algorithm 1 with the improved check-bit
/// count; for d >= 5 each new value is drawn from
/// image(ball d-1) \ image(ball d-2) of the prefix, which is what makes the
/// smaller l feasible. The output is always re-verified with the ball check
/// rather than trusted.
inline BoundedWeightResult construct_alg2(const BoundedWeightParams& p) {
    detail::validate_params(p);
    const uint32_t L = p.message_length, d = p.distance;
    auto l_opt = check_bits_improved(L, d);
    if (!l_opt) return {ConstructStatus::no_solution, std::nullopt, 0, "no l < L satisfies the check-bit formula"};
    const uint32_t l = *l_opt;

    const bool improved_rule = d >= 5;
    detail::BallImageTracker tracker(l, improved_rule ? d - 1 : d - 2);
    std::vector<BitWord> hat;
    hat.reserve(L);
    for (uint32_t i = 1; i <= L; ++i) {
        BitWord v(l);
        if (i <= l) {
            v = BitWord::unit(l, i);
        } else if (improved_rule) {
            auto c = detail::smallest_in_difference(tracker.full(), tracker.inner());
            if (!c)
                return {ConstructStatus::choice_set_empty, std::nullopt, i,
                        "empty choice set at step " + std::to_string(i)};
            v = *c;
        } else {
            auto c = detail::smallest_absent(l, tracker.full());
            if (!c) throw std::logic_error("Algorithm 2: internal exhaustion at step " + std::to_string(i));
            v = *c;
        }
        hat.push_back(v);
        tracker.add_column(v);
    }

    ConstructionTrace trace{Algorithm::alg2, l, hat, true, 0, 0, ""};
    LinearHashFunction hash(L, l, detail::apply_final_permutation(hat, l));
    if (auto bad = find_ball_counterexample(hash, d))
        return {ConstructStatus::verification_failed, std::nullopt, 0,
                "ball check failed at " + bad->to_string()};
    return {ConstructStatus::ok, BoundedWeightCode{std::move(hash), std::move(trace)}, 0, ""};
}

/// Algorithm 3: the randomised construction. Units on the first l+delta
/// positions, uniform draws everywhere else, the usual final permutation,
/// then the ball check as the accept/reject gate. Deterministic for a fixed
/// (params, seed); callers retry with fresh seeds on ConstructionFailed.
inline BoundedWeightResult construct_alg3(const BoundedWeightParams& p) {
    detail::validate_params(p);
    const uint32_t L = p.message_length, d = p.distance;
    auto l_opt = check_bits_vg(L, d);
    if (!l_opt) return {ConstructStatus::no_solution, std::nullopt, 0, "no l < L satisfies the check-bit formula"};
    const uint32_t l_delta = *l_opt + p.delta;
    if (L < l_delta + 1)
        return {ConstructStatus::no_solution, std::nullopt, 0, "l + delta leaves no information symbols"};

    Rng rng(p.seed);
    std::vector<BitWord> hat;
    hat.reserve(L);
    for (uint32_t i = 1; i <= L; ++i)
        hat.push_back(i <= l_delta ? BitWord::unit(l_delta, i) : rng.word(l_delta));

    ConstructionTrace trace{Algorithm::alg3, l_delta, hat, true, p.delta, p.seed, Rng::kAlgorithmId};
    LinearHashFunction hash(L, l_delta, detail::apply_final_permutation(hat, l_delta));
    if (auto bad = find_ball_counterexample(hash, d))
        return {ConstructStatus::construction_failed, std::nullopt, 0,
                "random draw failed the ball check at " + bad->to_string()};
    return {ConstructStatus::ok, BoundedWeightCode{std::move(hash), std::move(trace)}, 0, ""};
}

}  // namespace linhash
