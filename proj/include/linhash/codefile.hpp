#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "linhash/codec.hpp"

namespace linhash {

/// Line-based text format, newline = single LF, digit strings position 1
/// first:
///
///   LINHASH v1
///   L=<n>
///   l=<n>
///   mode=<detect|correct>
///   checks=<comma-separated positions>
///   <v_1>
///   ...            (L table lines)
///   SYNDROMES      (optional, correct mode only)
///   <syndrome> <distortion>
///   # key=value    (trailing construction metadata)
///
/// save -> load -> save is byte-identical.

struct CodeFileError {
    enum class Kind { io, parse, invariant };
    Kind kind;
    size_t line = 0;       // 1-based; 0 when not line-specific
    std::string invariant; // named invariant for Kind::invariant
    std::string message;
};

struct LoadedCode {
    CodeSpec spec;
    std::optional<SyndromeTable> syndromes;
};

struct LoadResult {
    std::optional<LoadedCode> code;
    std::optional<CodeFileError> error;

    bool ok() const { return code.has_value(); }
};

inline std::string serialize_code(const CodeSpec& spec, const SyndromeTable* table) {
    std::ostringstream out;
    out << "LINHASH v1\n";
    out << "L=" << spec.message_length() << "\n";
    out << "l=" << spec.check_length() << "\n";
    out << "mode=" << mode_name(spec.mode()) << "\n";
    out << "checks=";
    const auto& checks = spec.check_positions();
    for (size_t j = 0; j < checks.size(); ++j) out << (j ? "," : "") << checks[j];
    out << "\n";
    for (const BitWord& v : spec.hash().table()) out << v.to_string() << "\n";
    if (table && table->size() > 0) {
        out << "SYNDROMES\n";
        for (const auto& [s, d] : table->entries())
            out << s.to_string() << " " << d.to_string() << "\n";
    }
    for (const auto& [key, value] : spec.metadata) out << "# " << key << "=" << value << "\n";
    return out.str();
}

namespace detail {

inline std::optional<uint64_t> parse_uint(std::string_view s) {
    if (s.empty() || s.size() > 19) return std::nullopt;
    uint64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + static_cast<uint64_t>(c - '0');
    }
    return v;
}

}  // namespace detail

inline LoadResult parse_code(std::string_view text) {
    auto parse_fail = [](size_t line, std::string msg) -> LoadResult {
        return {std::nullopt, CodeFileError{CodeFileError::Kind::parse, line, "", std::move(msg)}};
    };
    auto invariant_fail = [](size_t line, std::string name, std::string msg) -> LoadResult {
        return {std::nullopt,
                CodeFileError{CodeFileError::Kind::invariant, line, std::move(name), std::move(msg)}};
    };

    std::vector<std::string> lines;
    {
        size_t start = 0;
        while (start <= text.size()) {
            size_t end = text.find('\n', start);
            if (end == std::string_view::npos) {
                if (start < text.size()) lines.emplace_back(text.substr(start));
                break;
            }
            lines.emplace_back(text.substr(start, end - start));
            start = end + 1;
        }
    }

    size_t at = 0;
    auto next_line = [&]() -> const std::string* {
        return at < lines.size() ? &lines[at++] : nullptr;
    };

    const std::string* line = next_line();
    if (!line || *line != "LINHASH v1") return parse_fail(1, "expected header \"LINHASH v1\"");

    auto expect_field = [&](std::string_view key) -> std::optional<std::string> {
        const std::string* l = next_line();
        if (!l || l->rfind(std::string(key) + "=", 0) != 0) return std::nullopt;
        return l->substr(key.size() + 1);
    };

    auto l_str = expect_field("L");
    if (!l_str) return parse_fail(at, "expected L=<n>");
    auto L_val = detail::parse_uint(*l_str);
    if (!L_val || *L_val < 2 || *L_val > 1u << 24) return parse_fail(at, "bad message length");
    const uint32_t L = static_cast<uint32_t>(*L_val);

    auto ll_str = expect_field("l");
    if (!ll_str) return parse_fail(at, "expected l=<n>");
    auto ll_val = detail::parse_uint(*ll_str);
    if (!ll_val || *ll_val < 1) return parse_fail(at, "bad check-bit count");
    const uint32_t l = static_cast<uint32_t>(*ll_val);
    if (l >= L) return invariant_fail(at, "check-bits-below-length", "need l < L");

    auto mode_str = expect_field("mode");
    if (!mode_str) return parse_fail(at, "expected mode=detect|correct");
    CodeMode mode;
    if (*mode_str == "detect") mode = CodeMode::detect;
    else if (*mode_str == "correct") mode = CodeMode::correct;
    else return parse_fail(at, "mode must be detect or correct");

    auto checks_str = expect_field("checks");
    if (!checks_str) return parse_fail(at, "expected checks=<positions>");
    const size_t checks_line = at;
    std::vector<uint32_t> checks;
    {
        std::string cur;
        std::istringstream ss(*checks_str);
        while (std::getline(ss, cur, ',')) {
            auto p = detail::parse_uint(cur);
            if (!p || *p < 1 || *p > L) return parse_fail(checks_line, "bad check position");
            checks.push_back(static_cast<uint32_t>(*p));
        }
    }
    if (checks.size() != l)
        return invariant_fail(checks_line, "check-count-equals-l", "need exactly l check positions");
    {
        std::vector<bool> used(L + 1, false);
        for (uint32_t p : checks) {
            if (used[p]) return invariant_fail(checks_line, "check-positions-distinct",
                                               "duplicate check position " + std::to_string(p));
            used[p] = true;
        }
    }

    std::vector<BitWord> table;
    table.reserve(L);
    for (uint32_t i = 0; i < L; ++i) {
        const std::string* row = next_line();
        if (!row) return parse_fail(at, "missing table line");
        auto v = BitWord::try_parse(*row);
        if (!v || v->length() != l)
            return parse_fail(at, "expected an " + std::to_string(l) + "-digit binary word");
        table.push_back(*v);
    }

    std::optional<CodeSpec> spec;
    try {
        spec.emplace(LinearHashFunction(L, l, std::move(table)), std::move(checks), mode);
    } catch (const std::invalid_argument& e) {
        return invariant_fail(checks_line, "check-position-unit-image", e.what());
    }

    std::optional<SyndromeTable> syndromes;
    const std::string* rest = next_line();
    if (rest && *rest == "SYNDROMES") {
        if (mode != CodeMode::correct)
            return invariant_fail(at, "syndromes-require-correct-mode",
                                  "detect-mode files carry no syndrome section");
        syndromes.emplace();
        rest = next_line();
        while (rest && rest->rfind("#", 0) != 0) {
            size_t space = rest->find(' ');
            if (space == std::string::npos) return parse_fail(at, "expected \"<syndrome> <distortion>\"");
            auto s = BitWord::try_parse(rest->substr(0, space));
            auto d = BitWord::try_parse(rest->substr(space + 1));
            if (!s || s->length() != l || !d || d->length() != L)
                return parse_fail(at, "malformed syndrome entry");
            if (s->is_zero())
                return invariant_fail(at, "syndrome-nonzero", "the zero syndrome is never a key");
            if (spec->hash().eval(*d) != *s)
                return invariant_fail(at, "syndrome-consistency",
                                      "stored syndrome does not match the hash of " + d->to_string());
            if (!syndromes->try_insert(*s, *d))
                return invariant_fail(at, "syndrome-injective", "duplicate syndrome " + s->to_string());
            rest = next_line();
        }
    }

    while (rest) {
        if (rest->rfind("# ", 0) != 0) return parse_fail(at, "expected \"# key=value\" metadata");
        std::string_view kv(*rest);
        kv.remove_prefix(2);
        size_t eq = kv.find('=');
        if (eq == std::string_view::npos) return parse_fail(at, "expected \"# key=value\" metadata");
        spec->metadata.emplace_back(std::string(kv.substr(0, eq)), std::string(kv.substr(eq + 1)));
        rest = next_line();
    }

    return {LoadedCode{std::move(*spec), std::move(syndromes)}, std::nullopt};
}

inline bool save_code(const std::string& path, const CodeSpec& spec, const SyndromeTable* table,
                      std::string* error = nullptr) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        if (error) *error = "cannot open " + path + " for writing";
        return false;
    }
    out << serialize_code(spec, table);
    out.flush();
    if (!out) {
        if (error) *error = "write failed for " + path;
        return false;
    }
    return true;
}

inline LoadResult load_code(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return {std::nullopt, CodeFileError{CodeFileError::Kind::io, 0, "", "cannot open " + path}};
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code(buf.str());
}

}  // namespace linhash
