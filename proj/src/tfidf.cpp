#include "emberank/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "emberank/murmur3.hpp"
#include "emberank/textio.hpp"

namespace emberank {

namespace {

constexpr std::uint32_t kHashSeed = 42;

std::string humanize(std::size_t n) {
    if (n == 0) return "all";
    if (n % 1000 == 0) return std::to_string(n / 1000) + "K";
    return std::to_string(n);
}

}  // namespace

std::string TfidfConfig::label() const {
    return humanize(vocab_size) + "/" + humanize(num_buckets);
}

std::uint32_t hash_token(std::string_view token, std::size_t num_buckets) {
    if (num_buckets < 1) throw std::invalid_argument("num_buckets must be >= 1");
    return murmur3_x86_32(token, kHashSeed) % static_cast<std::uint32_t>(num_buckets);
}

SparseVector term_frequencies(const std::vector<std::string>& tokens, const TfidfConfig& config,
                              const TokenStats* vocab_ranking) {
    if (config.vocab_size > 0 && vocab_ranking == nullptr)
        throw std::invalid_argument("vocabulary cut requires a token ranking");
    std::map<std::uint32_t, float> buckets;
    for (const auto& token : tokens) {
        if (config.vocab_size > 0) {
            auto rank = vocab_ranking->rank_of(token);
            if (!rank || *rank >= config.vocab_size) continue;
        }
        buckets[hash_token(token, config.num_buckets)] += 1.0f;
    }
    SparseVector v;
    v.dim = config.num_buckets;
    v.indices.reserve(buckets.size());
    v.values.reserve(buckets.size());
    for (const auto& [index, count] : buckets) {
        v.indices.push_back(index);
        v.values.push_back(count);
    }
    return v;
}

IdfModel fit_idf(const std::vector<SparseVector>& corpus_tf) {
    if (corpus_tf.empty()) throw std::invalid_argument("fit_idf: no vectors");
    const std::size_t num_buckets = corpus_tf.front().dim;
    std::vector<std::uint64_t> df(num_buckets, 0);
    for (const auto& v : corpus_tf) {
        if (v.dim != num_buckets)
            throw std::invalid_argument("fit_idf: inconsistent vector dimensions");
        for (std::size_t i = 0; i < v.indices.size(); ++i)
            if (v.values[i] != 0.0f) df[v.indices[i]] += 1;
    }
    IdfModel model;
    model.num_buckets = num_buckets;
    model.n_docs_fitted = corpus_tf.size();
    model.idf.resize(num_buckets);
    const double n = static_cast<double>(corpus_tf.size());
    for (std::size_t b = 0; b < num_buckets; ++b)
        model.idf[b] = static_cast<float>(std::log((n + 1.0) / (static_cast<double>(df[b]) + 1.0)));
    return model;
}

SparseVector apply_idf(const SparseVector& tf, const IdfModel& model) {
    if (tf.dim != model.num_buckets)
        throw std::invalid_argument("tfidf: bucket count mismatch between vector and idf model");
    SparseVector v;
    v.dim = tf.dim;
    for (std::size_t i = 0; i < tf.indices.size(); ++i) {
        float w = tf.values[i] * model.idf[tf.indices[i]];
        if (w != 0.0f) {
            v.indices.push_back(tf.indices[i]);
            v.values.push_back(w);
        }
    }
    return v;
}

SparseVector tfidf_vector(const std::vector<std::string>& tokens, const TfidfConfig& config,
                          const IdfModel& model, const TokenStats* vocab_ranking) {
    if (config.num_buckets != model.num_buckets)
        throw std::invalid_argument("tfidf: config and idf model bucket counts differ");
    return apply_idf(term_frequencies(tokens, config, vocab_ranking), model);
}

double sparse_dot(const SparseVector& a, const SparseVector& b) {
    if (a.dim != b.dim) throw std::invalid_argument("sparse_dot: dimension mismatch");
    double acc = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.indices.size() && j < b.indices.size()) {
        if (a.indices[i] < b.indices[j]) {
            ++i;
        } else if (a.indices[i] > b.indices[j]) {
            ++j;
        } else {
            acc += static_cast<double>(a.values[i]) * static_cast<double>(b.values[j]);
            ++i;
            ++j;
        }
    }
    return acc;
}

DenseVector to_dense(const SparseVector& a) {
    DenseVector dense(a.dim, 0.0f);
    for (std::size_t i = 0; i < a.indices.size(); ++i) dense[a.indices[i]] = a.values[i];
    return dense;
}

double dense_dot(const DenseVector& a, const DenseVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dense_dot: dimension mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    return acc;
}

void save_tfidf_model(const TfidfModel& model, std::ostream& out) {
    out << "tfidf v1 " << model.idf.num_buckets << ' ' << model.config.vocab_size << ' '
        << model.idf.n_docs_fitted << '\n';
    for (std::size_t b = 0; b < model.idf.num_buckets; ++b)
        out << b << ' ' << float_repr(model.idf.idf[b]) << '\n';
}

TfidfModel load_tfidf_model(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("tfidf model: empty file");
    std::istringstream header(line);
    std::string magic, version;
    TfidfModel model;
    header >> magic >> version >> model.idf.num_buckets >> model.config.vocab_size >>
        model.idf.n_docs_fitted;
    if (!header || magic != "tfidf" || version != "v1")
        throw std::runtime_error("tfidf model: malformed header (line 1)");
    model.config.num_buckets = model.idf.num_buckets;
    model.idf.idf.assign(model.idf.num_buckets, 0.0f);
    std::size_t line_no = 1;
    std::size_t count = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto space = line.find(' ');
        if (space == std::string::npos)
            throw std::runtime_error("tfidf model: malformed line " + std::to_string(line_no));
        std::size_t bucket = 0;
        try {
            bucket = std::stoul(line.substr(0, space));
        } catch (const std::exception&) {
            throw std::runtime_error("tfidf model: malformed bucket at line " +
                                     std::to_string(line_no));
        }
        if (bucket >= model.idf.num_buckets)
            throw std::runtime_error("tfidf model: bucket out of range at line " +
                                     std::to_string(line_no));
        model.idf.idf[bucket] = parse_float(std::string_view(line).substr(space + 1));
        ++count;
    }
    if (count != model.idf.num_buckets)
        throw std::runtime_error("tfidf model: expected " + std::to_string(model.idf.num_buckets) +
                                 " bucket lines, found " + std::to_string(count));
    return model;
}

void write_sparse_vector(std::string_view doc_id, const SparseVector& v, std::ostream& out) {
    out << doc_id;
    for (std::size_t i = 0; i < v.indices.size(); ++i)
        out << ' ' << v.indices[i] << ':' << float_repr(v.values[i]);
    out << '\n';
}

}  // namespace emberank
