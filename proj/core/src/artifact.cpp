#include "mailsift/artifact.hpp"

#include <zlib.h>

#include <algorithm>
#include <fstream>
#include <iterator>

#include "binary_io.hpp"
#include "mailsift/error.hpp"

namespace mailsift {

namespace {

using detail::ByteReader;
using detail::ByteWriter;

constexpr std::size_t kHeaderSize = sizeof(kArtifactMagic) + 4 + 8 + 4;

std::uint32_t crc32_of(const std::uint8_t* data, std::size_t size) {
    uLong crc = crc32(0L, Z_NULL, 0);
    while (size > 0) {
        const auto chunk = static_cast<uInt>(std::min<std::size_t>(size, 1u << 30));
        crc = crc32(crc, data, chunk);
        data += chunk;
        size -= chunk;
    }
    return static_cast<std::uint32_t>(crc);
}

void put_strings(ByteWriter& w, const std::vector<std::string>& items) {
    w.put_u64(items.size());
    for (const auto& s : items) w.put_string(s);
}

std::vector<std::string> get_strings(ByteReader& r) {
    const auto n = r.get_u64();
    std::vector<std::string> items;
    for (std::uint64_t i = 0; i < n; ++i) items.push_back(r.get_string());
    return items;
}

void put_prep(ByteWriter& w, const PrepConfig& prep) {
    w.put_u8(prep.lowercase ? 1 : 0);
    w.put_u64(prep.min_token_len);
    std::vector<std::string> words(prep.stopwords.begin(), prep.stopwords.end());
    std::sort(words.begin(), words.end());
    put_strings(w, words);
}

PrepConfig get_prep(ByteReader& r) {
    PrepConfig prep;
    prep.lowercase = r.get_u8() != 0;
    prep.min_token_len = r.get_u64();
    for (auto& s : get_strings(r)) prep.stopwords.insert(std::move(s));
    return prep;
}

void put_vectorizer(ByteWriter& w, const Vectorizer& v) {
    w.put_u8(static_cast<std::uint8_t>(v.index()));
    if (const auto* t = std::get_if<TfIdfVectorizer>(&v)) {
        w.put_u8(static_cast<std::uint8_t>(t->input));
        w.put_u8(t->l2_normalize ? 1 : 0);
        w.put_u64(t->model.n_docs());
        put_strings(w, t->model.tokens());
        std::vector<std::uint64_t> df(t->model.doc_freq().begin(), t->model.doc_freq().end());
        w.put_array(df);
        return;
    }
    const auto& table = std::get<Word2VecVectorizer>(v).table;
    const auto& p = table.params();
    for (auto x : {p.dim, p.window, p.epochs, p.negative, p.min_count}) w.put_u64(x);
    w.put_u64(p.seed);
    w.put_f64(p.learning_rate);
    w.put_f64(p.min_learning_rate);
    put_strings(w, table.tokens());
    w.put_array(table.data());
}

Vectorizer get_vectorizer(ByteReader& r) {
    const auto tag = r.get_u8();
    if (tag == 0) {
        TfIdfVectorizer t;
        const auto input = r.get_u8();
        if (input > 1) ByteReader::fail();
        t.input = static_cast<FeatureInput>(input);
        t.l2_normalize = r.get_u8() != 0;
        const auto n_docs = r.get_u64();
        auto tokens = get_strings(r);
        auto df64 = r.get_array<std::uint64_t>();
        std::vector<std::size_t> df(df64.begin(), df64.end());
        try {
            t.model = TfIdfModel::from_parts(std::move(tokens), std::move(df), n_docs);
        } catch (const Error& e) {
            throw Error(ErrorKind::CorruptArtifact, e.what());
        }
        return t;
    }
    if (tag == 1) {
        Word2VecParams p;
        p.dim = r.get_u64();
        p.window = r.get_u64();
        p.epochs = r.get_u64();
        p.negative = r.get_u64();
        p.min_count = r.get_u64();
        p.seed = r.get_u64();
        p.learning_rate = r.get_f64();
        p.min_learning_rate = r.get_f64();
        auto tokens = get_strings(r);
        auto data = r.get_array<float>();
        try {
            return Word2VecVectorizer{EmbeddingTable(p, std::move(tokens), std::move(data))};
        } catch (const Error& e) {
            throw Error(ErrorKind::CorruptArtifact, e.what());
        }
    }
    ByteReader::fail();
}

void put_classifier(ByteWriter& w, const ClassifierModel& model) {
    w.put_u8(static_cast<std::uint8_t>(model.index()));
    if (const auto* m = std::get_if<SvmModel>(&model)) {
        w.put_f64(m->params.C);
        w.put_u64(m->params.epochs);
        w.put_u64(m->params.seed);
        w.put_array(m->weights);
        w.put_f64(m->bias);
    } else if (const auto* m = std::get_if<MnbModel>(&model)) {
        w.put_f64(m->alpha);
        w.put_u64(m->n_features);
        w.put_f64(m->log_prior[0]);
        w.put_f64(m->log_prior[1]);
        w.put_array(m->log_likelihood[0]);
        w.put_array(m->log_likelihood[1]);
    } else {
        const auto& rf = std::get<RfModel>(model);
        const auto& p = rf.params;
        for (auto x : {p.n_trees, p.max_features, p.threads, p.max_depth, p.min_samples_leaf}) w.put_u64(x);
        w.put_u64(p.seed);
        w.put_u64(rf.n_features);
        w.put_u64(rf.trees.size());
        for (const auto& tree : rf.trees) {
            w.put_u64(tree.nodes.size());
            for (const auto& node : tree.nodes) {
                w.put(node.feature);
                w.put_f64(node.threshold);
                w.put_u32(node.left);
                w.put_u32(node.right);
                w.put_u8(static_cast<std::uint8_t>(node.vote));
            }
        }
    }
}

ClassifierModel get_classifier(ByteReader& r) {
    const auto tag = r.get_u8();
    if (tag == 0) {
        SvmModel m;
        m.params.C = r.get_f64();
        m.params.epochs = r.get_u64();
        m.params.seed = r.get_u64();
        m.weights = r.get_array<double>();
        m.bias = r.get_f64();
        return m;
    }
    if (tag == 1) {
        MnbModel m;
        m.alpha = r.get_f64();
        m.n_features = r.get_u64();
        m.log_prior[0] = r.get_f64();
        m.log_prior[1] = r.get_f64();
        m.log_likelihood[0] = r.get_array<double>();
        m.log_likelihood[1] = r.get_array<double>();
        if (m.log_likelihood[0].size() != m.n_features || m.log_likelihood[1].size() != m.n_features) {
            ByteReader::fail();
        }
        return m;
    }
    if (tag == 2) {
        RfModel rf;
        auto& p = rf.params;
        p.n_trees = r.get_u64();
        p.max_features = r.get_u64();
        p.threads = r.get_u64();
        p.max_depth = r.get_u64();
        p.min_samples_leaf = r.get_u64();
        p.seed = r.get_u64();
        rf.n_features = r.get_u64();
        const auto n_trees = r.get_u64();
        for (std::uint64_t t = 0; t < n_trees; ++t) {
            DecisionTree tree;
            const auto n_nodes = r.get_u64();
            if (n_nodes == 0) ByteReader::fail();
            for (std::uint64_t i = 0; i < n_nodes; ++i) {
                DecisionTree::Node node;
                node.feature = r.get<std::int32_t>();
                node.threshold = r.get_f64();
                node.left = r.get_u32();
                node.right = r.get_u32();
                const auto vote = r.get_u8();
                if (vote > 1) ByteReader::fail();
                node.vote = static_cast<Label>(vote);
                if (node.feature >= 0) {
                    if (static_cast<std::uint64_t>(node.feature) >= rf.n_features) ByteReader::fail();
                    // children always follow their parent
                    if (node.left <= i || node.right <= i || node.left >= n_nodes || node.right >= n_nodes) {
                        ByteReader::fail();
                    }
                }
                tree.nodes.push_back(node);
            }
            rf.trees.push_back(std::move(tree));
        }
        return rf;
    }
    ByteReader::fail();
}

}  // namespace

namespace detail {

std::vector<std::uint8_t> encode_payload(const Pipeline& p) {
    ByteWriter w;
    put_prep(w, p.prep);
    put_vectorizer(w, p.vectorizer);
    put_classifier(w, p.classifier);
    const auto& m = p.metadata;
    w.put_string(m.corpus_fingerprint);
    w.put_string(m.dataset);
    w.put_u64(m.split_seed);
    w.put_f64(m.test_ratio);
    w.put_u64(m.n_train);
    w.put_u64(m.n_test);
    w.put_f64(m.metrics.accuracy);
    w.put_f64(m.metrics.precision);
    w.put_f64(m.metrics.recall);
    w.put_f64(m.metrics.f1);
    w.put_i64(m.created_at);
    return std::move(w.bytes());
}

std::vector<std::uint8_t> wrap_payload(const std::vector<std::uint8_t>& payload, std::uint32_t version) {
    ByteWriter w;
    for (char c : kArtifactMagic) w.put(c);
    w.put_u32(version);
    w.put_u64(payload.size());
    w.put_u32(crc32_of(payload.data(), payload.size()));
    auto out = std::move(w.bytes());
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

}  // namespace detail

std::vector<std::uint8_t> encode_artifact(const Pipeline& pipeline) {
    pipeline.validate();
    return detail::wrap_payload(detail::encode_payload(pipeline), kArtifactFormatVersion);
}

Pipeline decode_artifact(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < kHeaderSize || !std::equal(std::begin(kArtifactMagic), std::end(kArtifactMagic), bytes.begin())) {
        throw Error(ErrorKind::CorruptArtifact, "missing MSFT1 header");
    }
    ByteReader header(bytes.data() + sizeof(kArtifactMagic), kHeaderSize - sizeof(kArtifactMagic));
    const auto version = header.get_u32();
    const auto length = header.get_u64();
    const auto checksum = header.get_u32();
    if (version != kArtifactFormatVersion) {
        throw Error(ErrorKind::UnsupportedVersion, "format_version " + std::to_string(version) + " (supported: " +
                                                       std::to_string(kArtifactFormatVersion) + ")");
    }
    if (length != bytes.size() - kHeaderSize) throw Error(ErrorKind::CorruptArtifact, "payload length mismatch");
    const std::uint8_t* payload = bytes.data() + kHeaderSize;
    if (crc32_of(payload, length) != checksum) throw Error(ErrorKind::CorruptArtifact, "checksum mismatch");

    ByteReader r(payload, length);
    Pipeline p;
    p.prep = get_prep(r);
    p.vectorizer = get_vectorizer(r);
    p.classifier = get_classifier(r);
    auto& m = p.metadata;
    m.corpus_fingerprint = r.get_string();
    m.dataset = r.get_string();
    m.split_seed = r.get_u64();
    m.test_ratio = r.get_f64();
    m.n_train = r.get_u64();
    m.n_test = r.get_u64();
    m.metrics.accuracy = r.get_f64();
    m.metrics.precision = r.get_f64();
    m.metrics.recall = r.get_f64();
    m.metrics.f1 = r.get_f64();
    m.created_at = r.get_i64();
    if (!r.at_end()) ByteReader::fail();
    p.validate();
    return p;
}

void save_artifact(const Pipeline& pipeline, const std::filesystem::path& path) {
    const auto bytes = encode_artifact(pipeline);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorKind::IoError, "short write to " + path.string());
}

Pipeline load_artifact(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return decode_artifact(bytes);
}

}  // namespace mailsift
