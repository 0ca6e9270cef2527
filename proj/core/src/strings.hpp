#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

namespace mailsift::detail {

inline bool is_space(char c) noexcept { return std::isspace(static_cast<unsigned char>(c)) != 0; }

inline std::string_view trim(std::string_view s) noexcept {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

struct Fnv1a64 {
    std::uint64_t state = 0xcbf29ce484222325ULL;

    void update(std::string_view bytes) noexcept {
        for (unsigned char c : bytes) {
            state ^= c;
            state *= 0x100000001b3ULL;
        }
    }
};

}  // namespace mailsift::detail
