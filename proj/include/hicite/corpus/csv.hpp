#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hicite/corpus/types.hpp"

namespace hicite::corpus {

/// `articles.csv`: header exactly `journal_id,category_id,pub_year,citations`.
ArticleCorpus parse_article_corpus(std::istream& source, int census_year);
ArticleCorpus parse_article_corpus_file(const std::string& path, int census_year);
void write_articles_csv(const ArticleCorpus& corpus, std::ostream& out);

/// `journals.csv`: header `id,title,category,n_art,jif5,jif2,h5,h3` followed by
/// pArt_{q}_{t} for q in {10,20,25,30,40} ascending, t in {5,4,3,2} descending.
/// Empty jif or pArt cells denote missing values.
JournalIndicatorTable parse_journal_indicator_table(std::istream& source);
JournalIndicatorTable parse_journal_indicator_table_file(const std::string& path);
void write_journal_indicator_table(const JournalIndicatorTable& table, std::ostream& out);

/// The twenty pArt column keys in schema order.
const std::vector<PartKey>& part_schema_keys();

namespace csv {

/// Splits one CSV record, honoring double-quoted fields.
std::vector<std::string> split_record(const std::string& line);

/// Quotes a field if it contains a comma, quote, or newline.
std::string escape_field(const std::string& field);

std::string join_record(const std::vector<std::string>& fields);

}  // namespace csv

}  // namespace hicite::corpus
