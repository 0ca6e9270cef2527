#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mailsift {

enum class Label : int { Ham = 0, Spam = 1 };

/// Column layout of an input file.
///  - SubjectBody: subject, body, label (Enron / Ling style)
///  - FullHeader:  sender, receiver, date, subject, body, label, urls
///    (CEAS / Nazario / Nigerian Fraud / SpamAssassin style)
enum class CorpusSchema { SubjectBody, FullHeader };

std::string_view to_string(CorpusSchema schema) noexcept;
/// Accepts "subject_body"/"mdf1" and "full_header"/"mdf2" (case-insensitive).
std::optional<CorpusSchema> parse_schema(std::string_view tag) noexcept;

struct EmailRecord {
    std::optional<std::string> sender;
    std::optional<std::string> receiver;
    std::optional<std::string> date;  // verbatim
    std::optional<std::string> subject;
    std::string body;
    std::optional<bool> url_flag;
    Label label = Label::Ham;
    std::string source;
};

struct LoadedDataset {
    CorpusSchema schema = CorpusSchema::SubjectBody;
    std::vector<EmailRecord> records;
    std::size_t dropped_rows = 0;  // unparseable label or short row
};

/// Reads one CSV file. Header names are matched case-insensitively; extra
/// columns are ignored. Throws MissingColumn, IoError or EmptyDataset.
LoadedDataset load_dataset(const std::filesystem::path& path, CorpusSchema schema,
                           std::string source = {});

/// Which fields feed text_combined. BodyOnly exists for the field ablation.
enum class TextFields { Combined, BodyOnly };

/// Joins present, non-blank fields with single spaces: sender, date, subject,
/// body for FullHeader; subject, body for SubjectBody. receiver and urls never
/// contribute. The result has no leading or trailing whitespace.
std::string combine_text(const EmailRecord& record, CorpusSchema schema,
                         TextFields fields = TextFields::Combined);

struct CorpusRecord {
    std::string text_combined;
    Label label = Label::Ham;
    std::string source;
};

struct ClassCounts {
    std::size_t spam = 0;
    std::size_t ham = 0;
    friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

class Corpus {
public:
    /// Validates that no record has blank text and that counts match labels.
    Corpus(std::vector<CorpusRecord> records, std::size_t dropped_blank = 0);

    const std::vector<CorpusRecord>& records() const noexcept { return records_; }
    std::size_t size() const noexcept { return records_.size(); }
    ClassCounts class_counts() const noexcept { return counts_; }
    std::size_t dropped_blank() const noexcept { return dropped_blank_; }

    /// FNV-1a over labels and texts; identifies the corpus in artifacts.
    std::string fingerprint() const;

private:
    std::vector<CorpusRecord> records_;
    ClassCounts counts_;
    std::size_t dropped_blank_ = 0;
};

/// Maps every record through combine_text in input order and drops blank
/// rows. Throws EmptyDataset when nothing survives.
Corpus merge_corpora(const std::vector<LoadedDataset>& datasets,
                     TextFields fields = TextFields::Combined);

struct ManifestEntry {
    std::filesystem::path path;
    CorpusSchema schema = CorpusSchema::SubjectBody;
};

/// One dataset per line: `path,schema` or `path schema`. Blank lines and
/// lines starting with '#' are skipped. Relative paths resolve against the
/// manifest's directory.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& manifest);

struct IngestReport {
    std::vector<std::pair<std::string, std::size_t>> loaded;   // source, rows kept
    std::vector<std::pair<std::string, std::size_t>> dropped;  // source, rows dropped
};

Corpus load_manifest(const std::filesystem::path& manifest,
                     TextFields fields = TextFields::Combined,
                     IngestReport* report = nullptr);

}  // namespace mailsift
