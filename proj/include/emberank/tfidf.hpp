#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "emberank/corpus.hpp"

namespace emberank {

using DenseVector = std::vector<float>;

// A hashed-TFIDF configuration, labeled "vocabulary-size / hash-buckets".
struct TfidfConfig {
    std::size_t vocab_size = 10000;  // top-V tokens by corpus frequency; 0 = unlimited
    std::size_t num_buckets = 10000;

    std::string label() const;  // e.g. "10K/10K", "all/5K"
};

struct SparseVector {
    std::size_t dim = 0;
    std::vector<std::uint32_t> indices;  // strictly ascending, unique
    std::vector<float> values;

    std::size_t nnz() const { return indices.size(); }
};

// MurmurHash3 x86_32 with seed 42 over the token's UTF-8 bytes, mod buckets.
std::uint32_t hash_token(std::string_view token, std::size_t num_buckets);

// Raw term counts over hash buckets. If config.vocab_size > 0, tokens outside
// the top vocab_size of vocab_ranking are dropped before hashing (ranking must
// then be non-null).
SparseVector term_frequencies(const std::vector<std::string>& tokens, const TfidfConfig& config,
                              const TokenStats* vocab_ranking);

struct IdfModel {
    std::size_t num_buckets = 0;
    std::vector<float> idf;  // length num_buckets; ln((N+1)/(df+1))
    std::size_t n_docs_fitted = 0;
};

IdfModel fit_idf(const std::vector<SparseVector>& corpus_tf);

// tf * idf per bucket; zero products are omitted from the sparse form.
SparseVector apply_idf(const SparseVector& tf, const IdfModel& model);
SparseVector tfidf_vector(const std::vector<std::string>& tokens, const TfidfConfig& config,
                          const IdfModel& model, const TokenStats* vocab_ranking);

double sparse_dot(const SparseVector& a, const SparseVector& b);
DenseVector to_dense(const SparseVector& a);
double dense_dot(const DenseVector& a, const DenseVector& b);

// Model file: header "tfidf v1 <num_buckets> <vocab_size> <n_docs>", then one
// "<bucket> <idf>" line per bucket.
struct TfidfModel {
    TfidfConfig config;
    IdfModel idf;
};

void save_tfidf_model(const TfidfModel& model, std::ostream& out);
TfidfModel load_tfidf_model(std::istream& in);

// Vector dump lines: "doc_id idx:val idx:val ...".
void write_sparse_vector(std::string_view doc_id, const SparseVector& v, std::ostream& out);

}  // namespace emberank
