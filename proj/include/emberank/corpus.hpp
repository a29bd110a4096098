#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace emberank {

// One article record. Fields mirror the JSONL corpus format one-to-one.
struct Document {
    std::string id;
    std::string title;
    std::string abstract_text;  // serialized as "abstract"
    std::string journal_id;
    std::string journal_name;
    std::string publisher;
    int year = 0;
};

using Corpus = std::vector<Document>;

enum class Field { title, abstract, both };

std::string_view field_name(Field field);
Field parse_field(std::string_view name);

enum class StemmerKind { none, porter };

// Preprocessing order is fixed: tokenize, lowercase, stopword removal, stem.
struct PipelineConfig {
    bool lowercase = true;
    std::unordered_set<std::string> stopwords;  // matched after lowercasing
    StemmerKind stemmer = StemmerKind::porter;
    std::size_t min_token_len = 2;
};

// Shipped English stopword list (v1); see data/stopwords_en.txt.
const std::vector<std::string>& default_stopword_list();

// Lowercase + default stopwords + Porter.
PipelineConfig default_pipeline();

// One token per line; blank lines and '#' comments skipped.
std::unordered_set<std::string> load_stopwords(std::istream& in);
std::unordered_set<std::string> load_stopwords_file(const std::string& path);

// Tokens are maximal runs of ASCII alphanumerics; anything else separates.
// Runs shorter than min_token_len are dropped.
std::vector<std::string> tokenize(std::string_view text, const PipelineConfig& config);

// Tokens of one document field; both = title tokens then abstract tokens.
std::vector<std::string> tokenize_field(const Document& doc, Field field,
                                        const PipelineConfig& config);

// One sentence per (document, field), corpus order; field both yields the
// title sentence then the abstract sentence per document. Context windows in
// training never cross sentences. Empty sentences are skipped.
std::vector<std::vector<std::string>> tokenize_sentences(const Corpus& corpus, Field field,
                                                         const PipelineConfig& config);

struct TokenCounts {
    std::uint64_t corpus_frequency = 0;
    std::uint64_t document_frequency = 0;
};

struct TokenStats {
    std::unordered_map<std::string, TokenCounts> counts;
    std::uint64_t total_tokens = 0;
    // Rank 0 = most frequent; ties broken lexicographically.
    std::vector<std::string> by_rank;
    std::unordered_map<std::string, std::size_t> rank;

    std::size_t unique_tokens() const { return counts.size(); }
    std::uint64_t corpus_frequency(const std::string& token) const;
    std::uint64_t document_frequency(const std::string& token) const;
    std::optional<std::size_t> rank_of(const std::string& token) const;
};

TokenStats token_stats(const Corpus& corpus, Field field, const PipelineConfig& config);

// Same statistics over pre-tokenized documents (one token list per document).
TokenStats token_stats_from_tokens(const std::vector<std::vector<std::string>>& docs);

// CSV export: rank,token,corpus_frequency,document_frequency (rank 1 = most frequent).
void write_token_stats_csv(const TokenStats& stats, std::ostream& out);

enum class SplitPart { train, test };

// Assignment is a pure function of (doc_id, seed, test_fraction): a document
// goes to test iff murmur3(id bytes, seed) mod 10000 < round(fraction * 10000).
SplitPart assign_split(std::string_view doc_id, std::uint32_t seed, double test_fraction);

struct SplitAssignment {
    double test_fraction = 0.2;
    std::uint32_t seed = 0;
    std::unordered_map<std::string, SplitPart> parts;

    bool is_test(const std::string& doc_id) const;
    std::size_t test_count() const;
    std::size_t train_count() const;
};

SplitAssignment split_train_test(const Corpus& corpus, double test_fraction, std::uint32_t seed);

// Journals with >= min_pubs documents and at least one document on each side
// of the split. Throws if none qualify.
std::set<std::string> filter_journals(const Corpus& corpus, const SplitAssignment& split,
                                      std::size_t min_pubs);

// Planted-topic synthetic corpus. Each journal belongs to one topic and draws
// tokens from its topic pool with probability topic_token_ratio, otherwise
// from the shared pool. Both pools are Zipf-distributed; each journal uses its
// own permutation of its topic pool so that journals within a topic remain
// statistically distinguishable.
struct SynthSpec {
    std::size_t n_topics = 5;
    std::size_t journals_per_topic = 10;
    std::size_t docs_per_journal = 100;
    std::size_t topic_vocab_size = 250;
    std::size_t shared_vocab_size = 1500;
    std::size_t title_len = 8;
    std::size_t abstract_len = 200;
    double topic_token_ratio = 0.8;
    std::uint64_t seed = 1;

    void validate() const;
};

Corpus generate_synthetic(const SynthSpec& spec);

// JSONL corpus format: one object per line with the Document field names.
Corpus read_corpus_jsonl(std::istream& in);
Corpus read_corpus_file(const std::string& path);
void write_corpus_jsonl(const Corpus& corpus, std::ostream& out);
void write_corpus_file(const Corpus& corpus, const std::string& path);

}  // namespace emberank
