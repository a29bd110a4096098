#include "emberank/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "emberank/murmur3.hpp"
#include "emberank/porter.hpp"
#include "emberank/rng.hpp"

namespace emberank {

std::string_view field_name(Field field) {
    switch (field) {
        case Field::title: return "title";
        case Field::abstract: return "abstract";
        case Field::both: return "both";
    }
    return "?";
}

Field parse_field(std::string_view name) {
    if (name == "title") return Field::title;
    if (name == "abstract") return Field::abstract;
    if (name == "both") return Field::both;
    throw std::invalid_argument("unknown field: " + std::string(name));
}

namespace {

// Shipped list v1: Snowball English stopwords minus apostrophe forms and
// single letters (the tokenizer never emits either).
constexpr std::string_view kStopwordsV1[] = {
    "me", "my", "myself", "we", "our", "ours", "ourselves", "you", "your", "yours",
    "yourself", "yourselves", "he", "him", "his", "himself", "she", "her", "hers",
    "herself", "it", "its", "itself", "they", "them", "their", "theirs", "themselves",
    "what", "which", "who", "whom", "this", "that", "these", "those", "am", "is",
    "are", "was", "were", "be", "been", "being", "have", "has", "had", "having",
    "do", "does", "did", "doing", "an", "the", "and", "but", "if", "or", "because",
    "as", "until", "while", "of", "at", "by", "for", "with", "about", "against",
    "between", "into", "through", "during", "before", "after", "above", "below",
    "to", "from", "up", "down", "in", "out", "on", "off", "over", "under", "again",
    "further", "then", "once", "here", "there", "when", "where", "why", "how",
    "all", "any", "both", "each", "few", "more", "most", "other", "some", "such",
    "no", "nor", "not", "only", "own", "same", "so", "than", "too", "very", "can",
    "will", "just", "should", "now",
};

bool is_token_byte(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

}  // namespace

const std::vector<std::string>& default_stopword_list() {
    static const std::vector<std::string> list(std::begin(kStopwordsV1), std::end(kStopwordsV1));
    return list;
}

PipelineConfig default_pipeline() {
    PipelineConfig config;
    const auto& list = default_stopword_list();
    config.stopwords.insert(list.begin(), list.end());
    return config;
}

std::unordered_set<std::string> load_stopwords(std::istream& in) {
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        words.insert(line);
    }
    return words;
}

std::unordered_set<std::string> load_stopwords_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stopword file: " + path);
    return load_stopwords(in);
}

std::vector<std::string> tokenize(std::string_view text, const PipelineConfig& config) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (current.size() >= config.min_token_len && !config.stopwords.contains(current)) {
            if (config.stemmer == StemmerKind::porter) current = porter_stem(std::move(current));
            tokens.push_back(std::move(current));
        }
        current.clear();
    };
    for (unsigned char c : text) {
        if (is_token_byte(c)) {
            current.push_back(config.lowercase && c >= 'A' && c <= 'Z'
                                  ? static_cast<char>(c - 'A' + 'a')
                                  : static_cast<char>(c));
        } else if (!current.empty()) {
            flush();
        }
    }
    if (!current.empty()) flush();
    return tokens;
}

std::vector<std::string> tokenize_field(const Document& doc, Field field,
                                        const PipelineConfig& config) {
    switch (field) {
        case Field::title:
            return tokenize(doc.title, config);
        case Field::abstract:
            return tokenize(doc.abstract_text, config);
        case Field::both: {
            auto tokens = tokenize(doc.title, config);
            auto abs_tokens = tokenize(doc.abstract_text, config);
            tokens.insert(tokens.end(), std::make_move_iterator(abs_tokens.begin()),
                          std::make_move_iterator(abs_tokens.end()));
            return tokens;
        }
    }
    return {};
}

std::vector<std::vector<std::string>> tokenize_sentences(const Corpus& corpus, Field field,
                                                         const PipelineConfig& config) {
    std::vector<std::vector<std::string>> sentences;
    auto add = [&](const std::string& text) {
        auto tokens = tokenize(text, config);
        if (!tokens.empty()) sentences.push_back(std::move(tokens));
    };
    for (const auto& doc : corpus) {
        if (field == Field::title || field == Field::both) add(doc.title);
        if (field == Field::abstract || field == Field::both) add(doc.abstract_text);
    }
    return sentences;
}

std::uint64_t TokenStats::corpus_frequency(const std::string& token) const {
    auto it = counts.find(token);
    return it == counts.end() ? 0 : it->second.corpus_frequency;
}

std::uint64_t TokenStats::document_frequency(const std::string& token) const {
    auto it = counts.find(token);
    return it == counts.end() ? 0 : it->second.document_frequency;
}

std::optional<std::size_t> TokenStats::rank_of(const std::string& token) const {
    auto it = rank.find(token);
    if (it == rank.end()) return std::nullopt;
    return it->second;
}

TokenStats token_stats_from_tokens(const std::vector<std::vector<std::string>>& docs) {
    TokenStats stats;
    std::unordered_set<std::string> seen;
    for (const auto& tokens : docs) {
        seen.clear();
        for (const auto& token : tokens) {
            auto& entry = stats.counts[token];
            entry.corpus_frequency += 1;
            stats.total_tokens += 1;
            if (seen.insert(token).second) entry.document_frequency += 1;
        }
    }
    stats.by_rank.reserve(stats.counts.size());
    for (const auto& [token, _] : stats.counts) stats.by_rank.push_back(token);
    std::sort(stats.by_rank.begin(), stats.by_rank.end(),
              [&](const std::string& a, const std::string& b) {
                  auto ca = stats.counts.at(a).corpus_frequency;
                  auto cb = stats.counts.at(b).corpus_frequency;
                  return ca != cb ? ca > cb : a < b;
              });
    stats.rank.reserve(stats.by_rank.size());
    for (std::size_t i = 0; i < stats.by_rank.size(); ++i) stats.rank[stats.by_rank[i]] = i;
    return stats;
}

TokenStats token_stats(const Corpus& corpus, Field field, const PipelineConfig& config) {
    if (corpus.empty()) throw std::runtime_error("empty corpus");
    std::vector<std::vector<std::string>> docs;
    docs.reserve(corpus.size());
    for (const auto& doc : corpus) docs.push_back(tokenize_field(doc, field, config));
    return token_stats_from_tokens(docs);
}

void write_token_stats_csv(const TokenStats& stats, std::ostream& out) {
    out << "rank,token,corpus_frequency,document_frequency\n";
    for (std::size_t i = 0; i < stats.by_rank.size(); ++i) {
        const auto& token = stats.by_rank[i];
        const auto& entry = stats.counts.at(token);
        out << (i + 1) << ',' << token << ',' << entry.corpus_frequency << ','
            << entry.document_frequency << '\n';
    }
}

SplitPart assign_split(std::string_view doc_id, std::uint32_t seed, double test_fraction) {
    auto threshold = static_cast<std::uint32_t>(std::llround(test_fraction * 10000.0));
    std::uint32_t bucket = murmur3_x86_32(doc_id, seed) % 10000u;
    return bucket < threshold ? SplitPart::test : SplitPart::train;
}

bool SplitAssignment::is_test(const std::string& doc_id) const {
    auto it = parts.find(doc_id);
    if (it == parts.end()) return assign_split(doc_id, seed, test_fraction) == SplitPart::test;
    return it->second == SplitPart::test;
}

std::size_t SplitAssignment::test_count() const {
    std::size_t n = 0;
    for (const auto& [_, part] : parts) n += part == SplitPart::test;
    return n;
}

std::size_t SplitAssignment::train_count() const { return parts.size() - test_count(); }

SplitAssignment split_train_test(const Corpus& corpus, double test_fraction, std::uint32_t seed) {
    if (!(test_fraction > 0.0 && test_fraction < 1.0))
        throw std::invalid_argument("test_fraction must be in (0, 1)");
    SplitAssignment split;
    split.test_fraction = test_fraction;
    split.seed = seed;
    split.parts.reserve(corpus.size());
    for (const auto& doc : corpus)
        split.parts.emplace(doc.id, assign_split(doc.id, seed, test_fraction));
    return split;
}

std::set<std::string> filter_journals(const Corpus& corpus, const SplitAssignment& split,
                                      std::size_t min_pubs) {
    struct JournalCount {
        std::size_t total = 0, train = 0, test = 0;
    };
    std::unordered_map<std::string, JournalCount> counts;
    for (const auto& doc : corpus) {
        auto& entry = counts[doc.journal_id];
        entry.total += 1;
        if (split.is_test(doc.id))
            entry.test += 1;
        else
            entry.train += 1;
    }
    std::set<std::string> eligible;
    for (const auto& [journal, entry] : counts)
        if (entry.total >= min_pubs && entry.train >= 1 && entry.test >= 1)
            eligible.insert(journal);
    if (eligible.empty()) throw std::runtime_error("no eligible journals");
    return eligible;
}

void SynthSpec::validate() const {
    if (n_topics < 1 || journals_per_topic < 1 || docs_per_journal < 1 || topic_vocab_size < 1 ||
        shared_vocab_size < 1 || title_len < 1 || abstract_len < 1)
        throw std::invalid_argument("SynthSpec counts must be >= 1");
    if (!(topic_token_ratio >= 0.0 && topic_token_ratio <= 1.0))
        throw std::invalid_argument("topic_token_ratio must be in [0, 1]");
}

namespace {

// Inverse-CDF Zipf(s=1) sampler over ranks 0..n-1.
class ZipfSampler {
  public:
    explicit ZipfSampler(std::size_t n) : cumulative_(n) {
        double acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            acc += 1.0 / static_cast<double>(k + 1);
            cumulative_[k] = acc;
        }
    }

    std::size_t sample(Pcg32& rng) const {
        double u = rng.next_double() * cumulative_.back();
        auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), u);
        return static_cast<std::size_t>(it - cumulative_.begin());
    }

  private:
    std::vector<double> cumulative_;
};

constexpr std::string_view kSynthPublishers[] = {"Wiley", "Elsevier", "Springer-Nature",
                                                 "Open Knowledge Press"};

}  // namespace

Corpus generate_synthetic(const SynthSpec& spec) {
    spec.validate();
    ZipfSampler topic_zipf(spec.topic_vocab_size);
    ZipfSampler shared_zipf(spec.shared_vocab_size);

    std::vector<std::string> shared_pool(spec.shared_vocab_size);
    for (std::size_t i = 0; i < spec.shared_vocab_size; ++i)
        shared_pool[i] = "sw" + std::to_string(i);

    Corpus corpus;
    corpus.reserve(spec.n_topics * spec.journals_per_topic * spec.docs_per_journal);
    Pcg32 rng(spec.seed, /*stream=*/0);
    std::size_t journal_counter = 0;
    std::size_t doc_counter = 0;

    for (std::size_t t = 0; t < spec.n_topics; ++t) {
        std::vector<std::string> topic_pool(spec.topic_vocab_size);
        for (std::size_t i = 0; i < spec.topic_vocab_size; ++i)
            topic_pool[i] = "t" + std::to_string(t) + "w" + std::to_string(i);

        for (std::size_t j = 0; j < spec.journals_per_topic; ++j, ++journal_counter) {
            // Journal-specific Zipf order over the topic pool.
            std::vector<std::size_t> perm(spec.topic_vocab_size);
            for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
            for (std::size_t i = perm.size(); i > 1; --i)
                std::swap(perm[i - 1], perm[rng.below(static_cast<std::uint32_t>(i))]);

            std::string journal_id = "t" + std::to_string(t) + "j" + std::to_string(j);
            std::string journal_name =
                "Journal of Topic " + std::to_string(t) + " Series " + std::to_string(j);
            std::string publisher(kSynthPublishers[journal_counter % 4]);

            auto draw_token = [&]() -> const std::string& {
                if (rng.next_double() < spec.topic_token_ratio)
                    return topic_pool[perm[topic_zipf.sample(rng)]];
                return shared_pool[shared_zipf.sample(rng)];
            };
            auto draw_text = [&](std::size_t len) {
                std::string text;
                for (std::size_t i = 0; i < len; ++i) {
                    if (i) text.push_back(' ');
                    text += draw_token();
                }
                return text;
            };

            for (std::size_t d = 0; d < spec.docs_per_journal; ++d, ++doc_counter) {
                Document doc;
                char buf[16];
                std::snprintf(buf, sizeof buf, "d%06zu", doc_counter);
                doc.id = buf;
                doc.title = draw_text(spec.title_len);
                doc.abstract_text = draw_text(spec.abstract_len);
                doc.journal_id = journal_id;
                doc.journal_name = journal_name;
                doc.publisher = publisher;
                doc.year = 2017;
                corpus.push_back(std::move(doc));
            }
        }
    }
    return corpus;
}

}  // namespace emberank
