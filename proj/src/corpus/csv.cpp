#include "hicite/corpus/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "hicite/errors.hpp"

namespace hicite::corpus {

namespace csv {

std::vector<std::string> split_record(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

std::string escape_field(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string join_record(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += escape_field(fields[i]);
    }
    return out;
}

}  // namespace csv

namespace {

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::int64_t parse_int(const std::string& s, const std::string& what, int line_no) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": " + what + " is not an integer: '" +
                         s + "'");
    }
    return value;
}

double parse_real(const std::string& s, const std::string& what, int line_no) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": " + what + " is not a number: '" +
                         s + "'");
    }
}

const std::string kArticlesHeader = "journal_id,category_id,pub_year,citations";

}  // namespace

const std::vector<PartKey>& part_schema_keys() {
    static const std::vector<PartKey> keys = [] {
        std::vector<PartKey> out;
        for (int q : {10, 20, 25, 30, 40})
            for (int t : {5, 4, 3, 2}) out.push_back({q, t});
        return out;
    }();
    return keys;
}

ArticleCorpus parse_article_corpus(std::istream& source, int census_year) {
    std::string line;
    if (!std::getline(source, line) || strip_cr(line) != kArticlesHeader) {
        throw ParseError("articles input: expected header '" + kArticlesHeader + "'");
    }
    std::vector<ArticleRecord> records;
    int line_no = 1;
    while (std::getline(source, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        auto fields = csv::split_record(line);
        if (fields.size() != 4) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 4 fields, got " +
                             std::to_string(fields.size()));
        }
        ArticleRecord rec;
        rec.journal_id = fields[0];
        rec.category_id = fields[1];
        rec.pub_year = static_cast<int>(parse_int(fields[2], "pub_year", line_no));
        rec.citations = parse_int(fields[3], "citations", line_no);
        if (rec.journal_id.empty() || rec.category_id.empty()) {
            throw ParseError("line " + std::to_string(line_no) + ": empty id field");
        }
        if (rec.citations < 0) {
            throw ValidationError("line " + std::to_string(line_no) + ": negative citations");
        }
        if (rec.pub_year > census_year) {
            throw ValidationError("line " + std::to_string(line_no) + ": pub_year " +
                                  std::to_string(rec.pub_year) + " is after census year " +
                                  std::to_string(census_year));
        }
        records.push_back(std::move(rec));
    }
    return ArticleCorpus(census_year, std::move(records));
}

ArticleCorpus parse_article_corpus_file(const std::string& path, int census_year) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_article_corpus(in, census_year);
}

void write_articles_csv(const ArticleCorpus& corpus, std::ostream& out) {
    out << kArticlesHeader << '\n';
    for (const auto& r : corpus.records()) {
        out << csv::join_record({r.journal_id, r.category_id, std::to_string(r.pub_year),
                                 std::to_string(r.citations)})
            << '\n';
    }
}

namespace {

std::string expected_journals_header() {
    std::vector<std::string> cols = {"id", "title", "category", "n_art", "jif5", "jif2", "h5", "h3"};
    for (PartKey key : part_schema_keys()) cols.push_back(part_column_name(key));
    return csv::join_record(cols);
}

std::string format3(double v) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << v;
    return os.str();
}

}  // namespace

JournalIndicatorTable parse_journal_indicator_table(std::istream& source) {
    const std::string expected = expected_journals_header();
    std::string line;
    if (!std::getline(source, line) || strip_cr(line) != expected) {
        throw ParseError("journal table: expected header '" + expected + "'");
    }
    JournalIndicatorTable table;
    table.provenance = Provenance::ingested;
    std::set<std::string> seen_ids;
    int line_no = 1;
    while (std::getline(source, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        auto fields = csv::split_record(line);
        if (fields.size() != 8 + part_schema_keys().size()) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(8 + part_schema_keys().size()) + " fields, got " +
                             std::to_string(fields.size()));
        }
        JournalIndicatorRow row;
        row.journal_id = fields[0];
        row.title = fields[1];
        row.category_id = fields[2];
        row.n_articles = parse_int(fields[3], "n_art", line_no);
        if (!fields[4].empty()) row.jif5 = parse_real(fields[4], "jif5", line_no);
        if (!fields[5].empty()) row.jif2 = parse_real(fields[5], "jif2", line_no);
        row.h5 = static_cast<int>(parse_int(fields[6], "h5", line_no));
        row.h3 = static_cast<int>(parse_int(fields[7], "h3", line_no));
        for (std::size_t i = 0; i < part_schema_keys().size(); ++i) {
            const std::string& cell = fields[8 + i];
            if (cell.empty()) continue;
            PartKey key = part_schema_keys()[i];
            double v = parse_real(cell, part_column_name(key), line_no);
            row.part[key] = v;
        }
        if (!seen_ids.insert(row.journal_id).second) {
            throw ValidationError("line " + std::to_string(line_no) + ": duplicate journal id '" +
                                  row.journal_id + "'");
        }
        validate_row_invariants(row, "line " + std::to_string(line_no) + " (" + row.journal_id + ")");
        table.rows.push_back(std::move(row));
    }
    return table;
}

JournalIndicatorTable parse_journal_indicator_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_journal_indicator_table(in);
}

void write_journal_indicator_table(const JournalIndicatorTable& table, std::ostream& out) {
    out << expected_journals_header() << '\n';
    for (const auto& row : table.rows) {
        std::vector<std::string> fields = {row.journal_id, row.title, row.category_id,
                                           std::to_string(row.n_articles)};
        fields.push_back(row.jif5 ? format3(*row.jif5) : "");
        fields.push_back(row.jif2 ? format3(*row.jif2) : "");
        fields.push_back(std::to_string(row.h5));
        fields.push_back(std::to_string(row.h3));
        for (PartKey key : part_schema_keys()) {
            auto v = row.part_value(key);
            fields.push_back(v ? format3(*v) : "");
        }
        out << csv::join_record(fields) << '\n';
    }
}

}  // namespace hicite::corpus
