#include "mailsift/csv.hpp"

namespace mailsift::csv {

Reader::Reader(std::istream& in) : in_(in) {}

std::optional<Row> Reader::next() {
    if (first_) {
        first_ = false;
        if (in_.peek() == 0xEF) {
            char bom[3];
            in_.read(bom, 3);
            if (!(static_cast<unsigned char>(bom[1]) == 0xBB && static_cast<unsigned char>(bom[2]) == 0xBF)) {
                in_.clear();
                in_.seekg(0);
            }
        }
    }

    Row row;
    std::string field;
    bool in_quotes = false;
    bool any = false;
    record_line_ = line_;

    for (int c = in_.get(); c != std::char_traits<char>::eof(); c = in_.get()) {
        any = true;
        const char ch = static_cast<char>(c);
        if (in_quotes) {
            if (ch == '"') {
                if (in_.peek() == '"') {
                    in_.get();
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                if (ch == '\n') ++line_;
                field.push_back(ch);
            }
            continue;
        }
        switch (ch) {
            case '"':
                in_quotes = true;
                break;
            case ',':
                row.push_back(std::move(field));
                field.clear();
                break;
            case '\r':
                if (in_.peek() == '\n') in_.get();
                [[fallthrough]];
            case '\n':
                ++line_;
                row.push_back(std::move(field));
                return row;
            default:
                field.push_back(ch);
        }
    }
    if (!any) return std::nullopt;
    // last record without trailing newline
    row.push_back(std::move(field));
    return row;
}

std::vector<Row> read_all(std::istream& in) {
    Reader reader(in);
    std::vector<Row> rows;
    while (auto row = reader.next()) rows.push_back(std::move(*row));
    return rows;
}

}  // namespace mailsift::csv
