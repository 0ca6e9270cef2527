#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace mailsift::csv {

using Row = std::vector<std::string>;

// RFC-4180 reader: quoted fields, doubled quotes, embedded newlines,
// CRLF or LF line endings. A leading UTF-8 BOM is skipped.
class Reader {
public:
    explicit Reader(std::istream& in);

    /// Next record, or nullopt at end of input.
    std::optional<Row> next();

    /// 1-based physical line on which the last returned record started.
    std::size_t line() const noexcept { return record_line_; }

private:
    std::istream& in_;
    std::size_t line_ = 1;
    std::size_t record_line_ = 0;
    bool first_ = true;
};

std::vector<Row> read_all(std::istream& in);

}  // namespace mailsift::csv
