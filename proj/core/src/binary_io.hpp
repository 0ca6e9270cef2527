#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "mailsift/error.hpp"

namespace mailsift::detail {

static_assert(std::endian::native == std::endian::little, "artifact codec assumes a little-endian host");

class ByteWriter {
public:
    template <typename T>
    void put(T value) {
        static_assert(std::is_trivially_copyable_v<T>);
        const auto* p = reinterpret_cast<const std::uint8_t*>(&value);
        bytes_.insert(bytes_.end(), p, p + sizeof(T));
    }
    void put_u8(std::uint8_t v) { put(v); }
    void put_u32(std::uint32_t v) { put(v); }
    void put_u64(std::uint64_t v) { put(v); }
    void put_i64(std::int64_t v) { put(v); }
    void put_f64(double v) { put(v); }

    void put_string(const std::string& s) {
        put_u64(s.size());
        bytes_.insert(bytes_.end(), s.begin(), s.end());
    }

    template <typename T>
    void put_array(const std::vector<T>& values) {
        put_u64(values.size());
        const auto* p = reinterpret_cast<const std::uint8_t*>(values.data());
        bytes_.insert(bytes_.end(), p, p + values.size() * sizeof(T));
    }

    std::vector<std::uint8_t>& bytes() noexcept { return bytes_; }

private:
    std::vector<std::uint8_t> bytes_;
};

class ByteReader {
public:
    ByteReader(const std::uint8_t* data, std::size_t size) : data_(data), size_(size) {}

    template <typename T>
    T get() {
        need(sizeof(T));
        T value;
        std::memcpy(&value, data_ + pos_, sizeof(T));
        pos_ += sizeof(T);
        return value;
    }
    std::uint8_t get_u8() { return get<std::uint8_t>(); }
    std::uint32_t get_u32() { return get<std::uint32_t>(); }
    std::uint64_t get_u64() { return get<std::uint64_t>(); }
    std::int64_t get_i64() { return get<std::int64_t>(); }
    double get_f64() { return get<double>(); }

    std::string get_string() {
        const auto n = get_u64();
        need(n);
        std::string s(reinterpret_cast<const char*>(data_ + pos_), n);
        pos_ += n;
        return s;
    }

    template <typename T>
    std::vector<T> get_array() {
        const auto n = get_u64();
        if (n > (size_ - pos_) / sizeof(T)) fail();
        std::vector<T> values(n);
        std::memcpy(values.data(), data_ + pos_, n * sizeof(T));
        pos_ += n * sizeof(T);
        return values;
    }

    bool at_end() const noexcept { return pos_ == size_; }

    [[noreturn]] static void fail() { throw Error(ErrorKind::CorruptArtifact, "truncated or malformed payload"); }

private:
    void need(std::size_t n) const {
        if (n > size_ - pos_) fail();
    }

    const std::uint8_t* data_;
    std::size_t size_;
    std::size_t pos_ = 0;
};

}  // namespace mailsift::detail
