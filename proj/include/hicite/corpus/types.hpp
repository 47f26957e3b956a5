#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hicite::corpus {

/// One published research article with its citation total accumulated from
/// publication through the owning corpus' census year.
struct ArticleRecord {
    std::string journal_id;
    std::string category_id;
    int pub_year = 0;
    std::int64_t citations = 0;

    friend bool operator==(const ArticleRecord&, const ArticleRecord&) = default;
    friend auto operator<=>(const ArticleRecord&, const ArticleRecord&) = default;
};

/// Key of a (category, publication year) or (journal, publication year) cell.
struct CellKey {
    std::string id;
    int year = 0;

    friend bool operator==(const CellKey&, const CellKey&) = default;
    friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

/// Article pool with a fixed census year. Immutable after construction;
/// maintains indices by (category, year) and (journal, year) over the same
/// record multiset.
class ArticleCorpus {
public:
    ArticleCorpus(int census_year, std::vector<ArticleRecord> records);

    int census_year() const { return census_year_; }
    const std::vector<ArticleRecord>& records() const { return records_; }

    /// Record indices of one (category_id, pub_year) cell; empty if absent.
    const std::vector<std::size_t>& category_cell(const std::string& category_id, int pub_year) const;
    /// Record indices of one (journal_id, pub_year) cell; empty if absent.
    const std::vector<std::size_t>& journal_cell(const std::string& journal_id, int pub_year) const;

    const std::map<CellKey, std::vector<std::size_t>>& by_category_year() const { return by_category_year_; }
    const std::map<CellKey, std::vector<std::size_t>>& by_journal_year() const { return by_journal_year_; }

    std::vector<std::string> category_ids() const;
    std::vector<std::string> journal_ids() const;

    /// Multiset equality of records plus equal census year.
    friend bool operator==(const ArticleCorpus& a, const ArticleCorpus& b);

private:
    int census_year_;
    std::vector<ArticleRecord> records_;
    std::map<CellKey, std::vector<std::size_t>> by_category_year_;
    std::map<CellKey, std::vector<std::size_t>> by_journal_year_;
};

/// (q, t) key of one percentage-of-highly-cited indicator: top-q% benchmark
/// over a t-year publication window.
struct PartKey {
    int q = 0;
    int t = 0;

    friend bool operator==(const PartKey&, const PartKey&) = default;
    friend auto operator<=>(const PartKey&, const PartKey&) = default;
};

/// Canonical column name, e.g. {10, 2} -> "pArt_10_2".
std::string part_column_name(PartKey key);

/// One journal's indicator row. jif5/jif2 are ingested metadata and may be
/// missing; part cells may be missing (undefined indicator or untranscribed).
struct JournalIndicatorRow {
    std::string journal_id;
    std::string title;
    std::string category_id;
    std::int64_t n_articles = 0;
    std::optional<double> jif5;
    std::optional<double> jif2;
    int h5 = 0;
    int h3 = 0;
    std::map<PartKey, double> part;

    std::optional<double> part_value(PartKey key) const;

    friend bool operator==(const JournalIndicatorRow&, const JournalIndicatorRow&) = default;
};

enum class Provenance { ingested, computed };

struct JournalIndicatorTable {
    std::vector<JournalIndicatorRow> rows;
    Provenance provenance = Provenance::ingested;

    const JournalIndicatorRow* find(const std::string& journal_id) const;
    std::vector<std::string> category_ids() const;

    friend bool operator==(const JournalIndicatorTable&, const JournalIndicatorTable&) = default;
};

/// Validates the row invariants shared by ingestion and computation:
/// part values in [0,1], part non-decreasing in q per window, h3 <= h5.
/// Throws ValidationError naming `context` on violation.
void validate_row_invariants(const JournalIndicatorRow& row, const std::string& context);

}  // namespace hicite::corpus
