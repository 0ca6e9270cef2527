#include "mailsift/textprep.hpp"

#include <fstream>
#include <sstream>

#include "mailsift/error.hpp"
#include "strings.hpp"

namespace mailsift {

namespace detail {
extern const char* const kStopwordData;
}

namespace {

bool is_token_char(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

char ascii_lower(char c) noexcept { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

std::vector<std::string> parse_word_list(std::istream& in, const std::string& origin) {
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        const auto w = detail::trim(line);
        if (w.empty() || w.front() == '#') continue;
        std::string lowered = detail::to_lower(w);
        for (char c : lowered) {
            if (!is_token_char(c)) {
                throw Error(ErrorKind::InvalidArgument, "stop word '" + lowered + "' in " + origin +
                                                            " is not alphanumeric");
            }
        }
        words.push_back(std::move(lowered));
    }
    return words;
}

template <typename Emit>
void scan_tokens(std::string_view raw, const PrepConfig& config, Emit&& emit) {
    std::size_t i = 0;
    std::string token;
    std::string key;
    while (i < raw.size()) {
        if (!is_token_char(raw[i])) {
            ++i;
            continue;
        }
        const std::size_t begin = i;
        while (i < raw.size() && is_token_char(raw[i])) ++i;
        token.assign(raw.substr(begin, i - begin));
        key = token;
        for (char& c : key) c = ascii_lower(c);
        if (config.lowercase) token = key;
        if (token.size() < config.min_token_len) continue;
        if (config.stopwords.contains(key)) continue;
        emit(token, begin, i);
    }
}

}  // namespace

const std::vector<std::string>& builtin_stopwords() {
    static const std::vector<std::string> words = [] {
        std::istringstream in(detail::kStopwordData);
        return parse_word_list(in, "built-in list");
    }();
    return words;
}

PrepConfig PrepConfig::english() {
    PrepConfig cfg;
    const auto& words = builtin_stopwords();
    cfg.stopwords.insert(words.begin(), words.end());
    return cfg;
}

std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open stop-word list " + path.string());
    auto words = parse_word_list(in, path.string());
    return {words.begin(), words.end()};
}

TokenSequence preprocess(std::string_view raw, const PrepConfig& config) {
    TokenSequence out;
    scan_tokens(raw, config, [&](const std::string& tok, std::size_t, std::size_t) { out.push_back(tok); });
    return out;
}

std::vector<TokenSpan> preprocess_with_spans(std::string_view raw, const PrepConfig& config) {
    std::vector<TokenSpan> out;
    scan_tokens(raw, config, [&](const std::string& tok, std::size_t b, std::size_t e) {
        out.push_back({tok, b, e});
    });
    return out;
}

std::string join_tokens(const TokenSequence& tokens) {
    std::string out;
    for (const auto& t : tokens) {
        if (!out.empty()) out.push_back(' ');
        out += t;
    }
    return out;
}

}  // namespace mailsift
