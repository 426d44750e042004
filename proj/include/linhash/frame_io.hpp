#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "linhash/bitword.hpp"

namespace linhash {

struct FrameReadResult {
    std::vector<BitWord> frames;
    bool ok = true;
    std::string error;
};

/// Text framing: the stream is a string of '0'/'1' digits; whitespace is
/// ignored. The digit count must be an exact multiple of frame_bits; a final
/// partial frame is an error, not padded.
inline FrameReadResult read_frames_text(std::istream& in, uint32_t frame_bits) {
    FrameReadResult out;
    BitWord cur(frame_bits);
    uint32_t fill = 0;
    char c;
    while (in.get(c)) {
        if (c == '\n' || c == '\r' || c == ' ' || c == '\t') continue;
        if (c != '0' && c != '1') {
            return {{}, false, std::string("invalid character '") + c + "' in bit stream"};
        }
        if (c == '1') cur.set_bit(fill + 1, true);
        if (++fill == frame_bits) {
            out.frames.push_back(cur);
            cur = BitWord(frame_bits);
            fill = 0;
        }
    }
    if (fill != 0)
        return {{}, false, "input ends with a partial frame (" + std::to_string(fill) + " of " +
                               std::to_string(frame_bits) + " bits)"};
    return out;
}

inline void write_frames_text(std::ostream& out, const std::vector<BitWord>& frames) {
    for (const BitWord& f : frames) out << f.to_string() << "\n";
}

/// Raw framing: bits are packed most-significant-bit-first within each byte.
/// The total bit count (8 x file size) must be an exact multiple of
/// frame_bits; anything else is rejected rather than padded.
inline FrameReadResult read_frames_bits(std::istream& in, uint32_t frame_bits) {
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
    uint64_t total_bits = uint64_t{8} * bytes.size();
    if (total_bits % frame_bits != 0)
        return {{}, false, std::to_string(total_bits) + " bits is not a multiple of the " +
                               std::to_string(frame_bits) + "-bit frame; refusing to pad"};
    FrameReadResult out;
    out.frames.reserve(total_bits / frame_bits);
    for (uint64_t start = 0; start < total_bits; start += frame_bits) {
        BitWord f(frame_bits);
        for (uint32_t j = 0; j < frame_bits; ++j) {
            uint64_t idx = start + j;
            if ((bytes[idx / 8] >> (7 - idx % 8)) & 1) f.set_bit(j + 1, true);
        }
        out.frames.push_back(f);
    }
    return out;
}

inline bool write_frames_bits(std::ostream& out, const std::vector<BitWord>& frames,
                              std::string* error = nullptr) {
    uint64_t total_bits = 0;
    for (const BitWord& f : frames) total_bits += f.length();
    if (total_bits % 8 != 0) {
        if (error)
            *error = std::to_string(total_bits) +
                     " output bits do not fill whole bytes; refusing to pad (use text framing)";
        return false;
    }
    unsigned char byte = 0;
    uint32_t fill = 0;
    for (const BitWord& f : frames) {
        for (uint32_t j = 1; j <= f.length(); ++j) {
            byte = static_cast<unsigned char>((byte << 1) | (f.bit(j) ? 1 : 0));
            if (++fill == 8) {
                out.put(static_cast<char>(byte));
                byte = 0;
                fill = 0;
            }
        }
    }
    return true;
}

}  // namespace linhash
