#include <fstream>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "emberank/corpus.hpp"

namespace emberank {

namespace {

std::string get_string(const nlohmann::json& obj, const char* key, std::size_t line_no,
                       bool required) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) {
        if (required)
            throw std::runtime_error("corpus line " + std::to_string(line_no) +
                                     ": missing field \"" + key + "\"");
        return {};
    }
    if (!it->is_string())
        throw std::runtime_error("corpus line " + std::to_string(line_no) + ": field \"" + key +
                                 "\" must be a string");
    return it->get<std::string>();
}

}  // namespace

Corpus read_corpus_jsonl(std::istream& in) {
    Corpus corpus;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::runtime_error("corpus line " + std::to_string(line_no) +
                                     ": invalid JSON: " + e.what());
        }
        Document doc;
        doc.id = get_string(obj, "id", line_no, true);
        if (doc.id.empty())
            throw std::runtime_error("corpus line " + std::to_string(line_no) + ": empty id");
        if (!seen_ids.insert(doc.id).second)
            throw std::runtime_error("corpus line " + std::to_string(line_no) +
                                     ": duplicate id \"" + doc.id + "\"");
        doc.title = get_string(obj, "title", line_no, false);
        doc.abstract_text = get_string(obj, "abstract", line_no, false);
        doc.journal_id = get_string(obj, "journal_id", line_no, true);
        if (doc.journal_id.empty())
            throw std::runtime_error("corpus line " + std::to_string(line_no) +
                                     ": empty journal_id");
        doc.journal_name = get_string(obj, "journal_name", line_no, false);
        doc.publisher = get_string(obj, "publisher", line_no, false);
        if (auto it = obj.find("year"); it != obj.end() && !it->is_null()) {
            if (!it->is_number_integer())
                throw std::runtime_error("corpus line " + std::to_string(line_no) +
                                         ": field \"year\" must be an integer");
            doc.year = it->get<int>();
        }
        corpus.push_back(std::move(doc));
    }
    return corpus;
}

Corpus read_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    return read_corpus_jsonl(in);
}

void write_corpus_jsonl(const Corpus& corpus, std::ostream& out) {
    for (const auto& doc : corpus) {
        nlohmann::ordered_json obj;
        obj["id"] = doc.id;
        obj["title"] = doc.title;
        obj["abstract"] = doc.abstract_text;
        obj["journal_id"] = doc.journal_id;
        obj["journal_name"] = doc.journal_name;
        obj["publisher"] = doc.publisher;
        obj["year"] = doc.year;
        out << obj.dump() << '\n';
    }
}

void write_corpus_file(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_corpus_jsonl(corpus, out);
    if (!out) throw std::runtime_error("failed writing corpus file: " + path);
}

}  // namespace emberank
