#include "mailsift/corpus.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "mailsift/csv.hpp"
#include "mailsift/error.hpp"
#include "strings.hpp"

namespace mailsift {

namespace {

using detail::to_lower;
using detail::trim;

std::optional<std::string> optional_field(const csv::Row& row, std::optional<std::size_t> col) {
    if (!col || *col >= row.size() || row[*col].empty()) return std::nullopt;
    return row[*col];
}

std::optional<Label> parse_label(std::string_view cell) {
    cell = trim(cell);
    if (cell == "0") return Label::Ham;
    if (cell == "1") return Label::Spam;
    return std::nullopt;
}

std::vector<std::string_view> required_columns(CorpusSchema schema) {
    if (schema == CorpusSchema::SubjectBody) return {"subject", "body", "label"};
    return {"sender", "receiver", "date", "subject", "body", "label", "urls"};
}

}  // namespace

std::string_view to_string(CorpusSchema schema) noexcept {
    return schema == CorpusSchema::SubjectBody ? "subject_body" : "full_header";
}

std::optional<CorpusSchema> parse_schema(std::string_view tag) noexcept {
    const std::string t = to_lower(trim(tag));
    if (t == "subject_body" || t == "mdf1" || t == "mdf_1") return CorpusSchema::SubjectBody;
    if (t == "full_header" || t == "mdf2" || t == "mdf_2") return CorpusSchema::FullHeader;
    return std::nullopt;
}

LoadedDataset load_dataset(const std::filesystem::path& path, CorpusSchema schema, std::string source) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
    if (source.empty()) source = path.stem().string();

    csv::Reader reader(in);
    auto header = reader.next();
    if (!header) throw Error(ErrorKind::EmptyDataset, path.string() + " has no header row");

    std::unordered_map<std::string, std::size_t> columns;
    for (std::size_t i = 0; i < header->size(); ++i) {
        columns.emplace(to_lower(trim((*header)[i])), i);
    }
    for (auto name : required_columns(schema)) {
        if (!columns.contains(std::string(name))) {
            throw Error(ErrorKind::MissingColumn, std::string(name) + " in " + path.string());
        }
    }
    auto col = [&](const char* name) -> std::optional<std::size_t> {
        auto it = columns.find(name);
        if (it == columns.end()) return std::nullopt;
        return it->second;
    };
    const std::size_t body_col = *col("body");
    const std::size_t label_col = *col("label");
    const auto subject_col = col("subject");
    const bool full = schema == CorpusSchema::FullHeader;

    LoadedDataset out;
    out.schema = schema;
    while (auto row = reader.next()) {
        if (row->size() == 1 && row->front().empty()) continue;  // blank line
        if (label_col >= row->size() || body_col >= row->size()) {
            ++out.dropped_rows;
            continue;
        }
        const auto label = parse_label((*row)[label_col]);
        if (!label) {
            ++out.dropped_rows;
            continue;
        }
        EmailRecord rec;
        rec.label = *label;
        rec.body = (*row)[body_col];
        rec.subject = optional_field(*row, subject_col);
        if (full) {
            rec.sender = optional_field(*row, col("sender"));
            rec.receiver = optional_field(*row, col("receiver"));
            rec.date = optional_field(*row, col("date"));
            if (auto urls = optional_field(*row, col("urls"))) {
                const auto flag = trim(*urls);
                if (flag == "0") rec.url_flag = false;
                if (flag == "1") rec.url_flag = true;
            }
        }
        rec.source = source;
        out.records.push_back(std::move(rec));
    }
    if (out.records.empty()) throw Error(ErrorKind::EmptyDataset, path.string() + " has no valid rows");
    return out;
}

std::string combine_text(const EmailRecord& record, CorpusSchema schema, TextFields fields) {
    std::string out;
    auto append = [&out](std::string_view part) {
        part = trim(part);
        if (part.empty()) return;
        if (!out.empty()) out.push_back(' ');
        out.append(part);
    };
    if (fields == TextFields::Combined) {
        if (schema == CorpusSchema::FullHeader) {
            if (record.sender) append(*record.sender);
            if (record.date) append(*record.date);
        }
        if (record.subject) append(*record.subject);
    }
    append(record.body);
    return out;
}

Corpus::Corpus(std::vector<CorpusRecord> records, std::size_t dropped_blank)
    : records_(std::move(records)), dropped_blank_(dropped_blank) {
    for (const auto& r : records_) {
        if (trim(r.text_combined).empty()) {
            throw Error(ErrorKind::InvalidArgument, "corpus record with blank text from " + r.source);
        }
        if (r.label == Label::Spam) {
            ++counts_.spam;
        } else {
            ++counts_.ham;
        }
    }
}

std::string Corpus::fingerprint() const {
    detail::Fnv1a64 h;
    for (const auto& r : records_) {
        h.update(r.label == Label::Spam ? "1" : "0");
        h.update(r.text_combined);
        h.update(std::string_view("\0", 1));
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h.state));
    return buf;
}

Corpus merge_corpora(const std::vector<LoadedDataset>& datasets, TextFields fields) {
    std::vector<CorpusRecord> records;
    std::size_t dropped = 0;
    for (const auto& ds : datasets) {
        for (const auto& rec : ds.records) {
            auto text = combine_text(rec, ds.schema, fields);
            if (text.empty()) {
                ++dropped;
                continue;
            }
            records.push_back({std::move(text), rec.label, rec.source});
        }
    }
    if (records.empty()) throw Error(ErrorKind::EmptyDataset, "no non-blank records to merge");
    return Corpus(std::move(records), dropped);
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& manifest) {
    std::ifstream in(manifest);
    if (!in) throw Error(ErrorKind::IoError, "cannot open manifest " + manifest.string());
    const auto base = manifest.parent_path();

    std::vector<ManifestEntry> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto text = trim(line);
        if (text.empty() || text.front() == '#') continue;

        std::string_view path_part;
        std::string_view tag_part;
        if (auto comma = text.rfind(','); comma != std::string_view::npos) {
            path_part = trim(text.substr(0, comma));
            tag_part = trim(text.substr(comma + 1));
        } else if (auto space = text.find_last_of(" \t"); space != std::string_view::npos) {
            path_part = trim(text.substr(0, space));
            tag_part = trim(text.substr(space + 1));
        }
        const auto schema = parse_schema(tag_part);
        if (path_part.empty() || !schema) {
            throw Error(ErrorKind::BadManifest,
                        manifest.string() + ":" + std::to_string(lineno) + ": expected 'path,schema'");
        }
        std::filesystem::path p(path_part);
        if (p.is_relative()) p = base / p;
        entries.push_back({std::move(p), *schema});
    }
    if (entries.empty()) throw Error(ErrorKind::BadManifest, manifest.string() + " lists no datasets");
    return entries;
}

Corpus load_manifest(const std::filesystem::path& manifest, TextFields fields, IngestReport* report) {
    std::vector<LoadedDataset> datasets;
    for (const auto& entry : read_manifest(manifest)) {
        datasets.push_back(load_dataset(entry.path, entry.schema));
        if (report) {
            const auto source = entry.path.stem().string();
            report->loaded.emplace_back(source, datasets.back().records.size());
            report->dropped.emplace_back(source, datasets.back().dropped_rows);
        }
    }
    return merge_corpora(datasets, fields);
}

}  // namespace mailsift
