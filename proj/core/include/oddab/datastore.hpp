#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oddab/montecarlo.hpp"
#include "oddab/selmer.hpp"

namespace oddab::datastore {

struct ChiRank {
  std::string chi_id;
  unsigned rho = 0;
  std::optional<unsigned> rho_plus;
};

/// One ingested field: identification plus 2-rank data. Optional entries stay
/// empty when the source did not provide them.
struct FieldRecord {
  std::string label;
  unsigned long ell = 0;
  std::uint64_t conductor = 0;
  std::vector<long long> poly;  // constant coefficient first
  unsigned rk2_cl = 0;
  unsigned rk2_clplus = 0;
  std::optional<unsigned> rk2_cl4;
  std::vector<ChiRank> chi_ranks;
  std::optional<unsigned> sgnrk;
  std::optional<BitMatrix> cl2_action;  // JSONL only

  RankProfile to_profile() const;
};

enum class Format { Csv, Jsonl };

/// Canonical CSV header, persisted byte-exactly.
extern const char* kCsvHeader;

std::vector<FieldRecord> load(const std::string& path, Format format);
void save(const std::vector<FieldRecord>& records, const std::string& path, Format format);

std::string to_csv_line(const FieldRecord& r);
FieldRecord from_csv_line(const std::string& line);
std::string to_jsonl_line(const FieldRecord& r);
FieldRecord from_jsonl_line(const std::string& line);

/// Structural validation across a dataset: per-record profile violations
/// (record index attached); duplicate labels are an error at load time.
struct RecordViolation {
  std::size_t index;
  std::string label;
  ProfileViolation violation;
};
std::vector<RecordViolation> validate(const std::vector<FieldRecord>& records);

/// Family filter like "ell=7,rho=0" (rho filters rk2_cl; rhoplus filters
/// rk2_clplus).
struct FamilyFilter {
  std::optional<unsigned long> ell;
  std::optional<unsigned> rho;
  std::optional<unsigned> rho_plus;
  static FamilyFilter parse(const std::string& text);
  bool matches(const FieldRecord& r) const;
  std::string to_string() const;
};

struct StatRow {
  std::string property;
  double proportion = 0;
  std::uint64_t count = 0;
  std::string prediction;  // "?" when no accepted prediction
  bool is_theorem = false;
};
struct StatReport {
  std::string family;
  std::uint64_t n = 0;
  std::vector<StatRow> rows;
  std::vector<StatRow> moments;
  std::string to_markdown() const;
  std::string to_csv() const;
};

/// Proportions of rk2/rk2+/sgnrk values plus moments of #Cl[2]^k and
/// #Cl+[2]^k for k = 1..3, with prediction column where one exists.
StatReport aggregate(const std::vector<FieldRecord>& records, const FamilyFilter& filter);

/// Fraction of records whose narrow per-character ranks agree across every
/// dual pair; falls back to the 2-group action matrix when chi_ranks are
/// absent.
double self_duality_rate(const std::vector<FieldRecord>& records);

/// Append-only JSON-lines store with a sidecar index (label -> byte offset)
/// and an optional provenance note. No database dependency; datasets stay in
/// the tens of thousands of rows.
class JsonlStore {
public:
  explicit JsonlStore(std::string path);  // opens or creates; rebuilds a missing index

  void append(const FieldRecord& r);      // duplicate labels are rejected
  std::optional<FieldRecord> find(const std::string& label) const;
  std::vector<FieldRecord> all() const;
  std::size_t size() const { return index_.size(); }

  /// Provenance of externally computed data, kept beside the store.
  void set_source(const std::string& description);
  std::optional<std::string> source() const;

  const std::string& path() const { return path_; }

private:
  std::string path_;
  std::map<std::string, long> index_;
  void write_index() const;
};

/// The three worked septic fields (as published), usable as a fixture.
std::vector<FieldRecord> septic_example_fields();

/// Synthetic table of the first 8000 septic fields with marginal 2-rank
/// counts 7739/241/20 and theorem-consistent narrow/signature data.
std::vector<FieldRecord> make_synthetic_septic_table();

/// Synthetic cyclic-cubic records with rk2_cl = 2 whose signature ranks are
/// drawn from the conditional unit-signature law (1/5, 4/5).
std::vector<FieldRecord> make_synthetic_cubic_sgnrk(std::size_t n, std::uint64_t seed);

}  // namespace oddab::datastore
