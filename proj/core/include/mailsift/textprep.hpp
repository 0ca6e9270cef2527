#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace mailsift {

/// Ordered, lowercase, stop-word-free tokens of one document.
using TokenSequence = std::vector<std::string>;

struct PrepConfig {
    std::unordered_set<std::string> stopwords;
    bool lowercase = true;
    std::size_t min_token_len = 1;

    /// The shipped English list (data/stopwords_en.txt, version below).
    static PrepConfig english();
};

/// Version tag of the built-in stop-word list; bumps whenever the list changes.
inline constexpr int kStopwordListVersion = 1;

const std::vector<std::string>& builtin_stopwords();

/// One word per line; blank lines and '#' comments skipped. Entries are
/// lowercased and must be purely alphanumeric (InvalidArgument otherwise).
std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path);

/// Lowercases (if configured), extracts maximal runs of ASCII letters and
/// digits, then drops short tokens and stop words. Any other byte, including
/// every byte of a multi-byte UTF-8 sequence, is a separator.
TokenSequence preprocess(std::string_view raw, const PrepConfig& config);

/// Token plus its byte range in the raw input.
struct TokenSpan {
    std::string token;
    std::size_t begin = 0;
    std::size_t end = 0;
};

/// Same tokens as preprocess(), with their source offsets.
std::vector<TokenSpan> preprocess_with_spans(std::string_view raw, const PrepConfig& config);

std::string join_tokens(const TokenSequence& tokens);

}  // namespace mailsift
