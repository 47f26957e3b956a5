#include "hicite/corpus/types.hpp"

#include <algorithm>
#include <set>

#include "hicite/errors.hpp"

namespace hicite::corpus {

ArticleCorpus::ArticleCorpus(int census_year, std::vector<ArticleRecord> records)
    : census_year_(census_year), records_(std::move(records)) {
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const auto& r = records_[i];
        if (r.citations < 0) {
            throw ValidationError("article " + r.journal_id + "/" + std::to_string(r.pub_year) +
                                  ": negative citation count");
        }
        if (r.pub_year > census_year_) {
            throw ValidationError("article " + r.journal_id + ": pub_year " +
                                  std::to_string(r.pub_year) + " is after census year " +
                                  std::to_string(census_year_));
        }
        by_category_year_[{r.category_id, r.pub_year}].push_back(i);
        by_journal_year_[{r.journal_id, r.pub_year}].push_back(i);
    }
}

const std::vector<std::size_t>& ArticleCorpus::category_cell(const std::string& category_id,
                                                             int pub_year) const {
    static const std::vector<std::size_t> empty;
    auto it = by_category_year_.find({category_id, pub_year});
    return it == by_category_year_.end() ? empty : it->second;
}

const std::vector<std::size_t>& ArticleCorpus::journal_cell(const std::string& journal_id,
                                                            int pub_year) const {
    static const std::vector<std::size_t> empty;
    auto it = by_journal_year_.find({journal_id, pub_year});
    return it == by_journal_year_.end() ? empty : it->second;
}

std::vector<std::string> ArticleCorpus::category_ids() const {
    std::set<std::string> ids;
    for (const auto& [key, _] : by_category_year_) ids.insert(key.id);
    return {ids.begin(), ids.end()};
}

std::vector<std::string> ArticleCorpus::journal_ids() const {
    std::set<std::string> ids;
    for (const auto& [key, _] : by_journal_year_) ids.insert(key.id);
    return {ids.begin(), ids.end()};
}

bool operator==(const ArticleCorpus& a, const ArticleCorpus& b) {
    if (a.census_year_ != b.census_year_) return false;
    auto left = a.records_;
    auto right = b.records_;
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    return left == right;
}

std::string part_column_name(PartKey key) {
    return "pArt_" + std::to_string(key.q) + "_" + std::to_string(key.t);
}

std::optional<double> JournalIndicatorRow::part_value(PartKey key) const {
    auto it = part.find(key);
    if (it == part.end()) return std::nullopt;
    return it->second;
}

const JournalIndicatorRow* JournalIndicatorTable::find(const std::string& journal_id) const {
    for (const auto& row : rows) {
        if (row.journal_id == journal_id) return &row;
    }
    return nullptr;
}

std::vector<std::string> JournalIndicatorTable::category_ids() const {
    std::set<std::string> ids;
    for (const auto& row : rows) ids.insert(row.category_id);
    return {ids.begin(), ids.end()};
}

void validate_row_invariants(const JournalIndicatorRow& row, const std::string& context) {
    for (const auto& [key, value] : row.part) {
        if (!(value >= 0.0 && value <= 1.0)) {
            throw ValidationError(context + ": " + part_column_name(key) + " value " +
                                  std::to_string(value) + " outside [0,1]");
        }
    }
    // indicators nest: a larger percentile only adds qualifying articles
    std::set<int> windows;
    for (const auto& [key, _] : row.part) windows.insert(key.t);
    for (int t : windows) {
        std::optional<double> prev;
        for (int q : {10, 20, 25, 30, 40, 100}) {
            auto v = row.part_value({q, t});
            if (!v) continue;
            if (prev && *v < *prev - 1e-12) {
                throw ValidationError(context + ": " + part_column_name({q, t}) +
                                      " decreases in percentile");
            }
            prev = v;
        }
    }
    if (row.h3 > row.h5) {
        throw ValidationError(context + ": h3 " + std::to_string(row.h3) + " exceeds h5 " +
                              std::to_string(row.h5));
    }
    if (row.h3 < 0 || row.n_articles < 0) {
        throw ValidationError(context + ": negative count");
    }
}

}  // namespace hicite::corpus
