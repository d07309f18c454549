#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oddab/datastore.hpp"
#include "oddab/gmodule.hpp"

using namespace oddab;
using namespace oddab::datastore;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path tmp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("csv header and row format are stable") {
  CHECK(std::string(kCsvHeader) ==
        "label,ell,conductor,poly,rk2_cl,rk2_clplus,rk2_cl4,chi_ranks,sgnrk");
  FieldRecord r;
  r.label = "x1";
  r.ell = 7;
  r.conductor = 491;
  r.poly = {-1, 0, 1};
  r.rk2_cl = 3;
  r.rk2_clplus = 6;
  r.chi_ranks = {{"1", 1, 1u}, {"3", 0, 1u}};
  CHECK(to_csv_line(r) == "x1,7,491,-1 0 1,3,6,,1:1:1;3:0:1,");
  FieldRecord back = from_csv_line(to_csv_line(r));
  CHECK(back.label == r.label);
  CHECK(back.poly == r.poly);
  CHECK(back.chi_ranks.size() == 2);
  CHECK_FALSE(back.rk2_cl4.has_value());
  CHECK_FALSE(back.sgnrk.has_value());
}

TEST_CASE("round trip through both formats is byte-stable") {
  auto records = septic_example_fields();
  for (Format fmt : {Format::Csv, Format::Jsonl}) {
    auto p1 = tmp_file(fmt == Format::Csv ? "oddab_t1.csv" : "oddab_t1.jsonl");
    auto p2 = tmp_file(fmt == Format::Csv ? "oddab_t2.csv" : "oddab_t2.jsonl");
    save(records, p1.string(), fmt);
    auto loaded = load(p1.string(), fmt);
    save(loaded, p2.string(), fmt);
    CHECK(slurp(p1.string()) == slurp(p2.string()));
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
  }
}

TEST_CASE("schema errors are rejected") {
  CHECK_THROWS(from_csv_line("onlyonecell"));
  CHECK_THROWS(from_csv_line("lab,notanint,7,,0,0,,,"));
  CHECK_THROWS(from_csv_line("lab,7,43,1 2 x,0,0,,,"));
  auto p = tmp_file("oddab_dup.csv");
  {
    std::ofstream out(p);
    out << kCsvHeader << "\n";
    out << "same,7,43,,0,0,,,\n";
    out << "same,7,47,,0,0,,,\n";
  }
  CHECK_THROWS(load(p.string(), Format::Csv));
  std::filesystem::remove(p);
}

TEST_CASE("bundled worked septic fields validate cleanly") {
  auto path = std::string(TEST_SOURCE_DIR) + "/fixtures/septic_example_fields.csv";
  auto records = load(path, Format::Csv);
  REQUIRE(records.size() == 3);
  CHECK(validate(records).empty());
  // the in-code fixture agrees with the bundled file
  auto code = septic_example_fields();
  REQUIRE(code.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(to_csv_line(code[i]) == to_csv_line(records[i]));
}

TEST_CASE("structural violations are reported per record") {
  FieldRecord bad;
  bad.label = "bad1";
  bad.ell = 7;
  bad.conductor = 43;
  bad.rk2_cl = 3;
  bad.rk2_clplus = 2;  // narrow rank below class rank
  auto v1 = validate({bad});
  bool found = false;
  for (const auto& v : v1) found |= v.violation.rule == "narrow-rank-below-class-rank";
  CHECK(found);

  FieldRecord odd_rank;
  odd_rank.label = "bad2";
  odd_rank.ell = 3;
  odd_rank.conductor = 7;
  odd_rank.rk2_cl = 1;  // must be divisible by the degree f = 2
  odd_rank.rk2_clplus = 1;
  bool found2 = false;
  for (const auto& v : validate({odd_rank})) found2 |= v.violation.rule == "degree-divisibility";
  CHECK(found2);
}

TEST_CASE("action matrices are cross-checked against stored ranks") {
  OddAbelianGroup z7({7});
  auto classes = character_classes(z7);
  GModule irr1 = GModule::irreducible(classes[1]);
  GModule mod = GModule::direct_sum(irr1, GModule::irreducible(classes[2]));

  FieldRecord r;
  r.label = "act1";
  r.ell = 7;
  r.conductor = 43;
  r.rk2_cl = 6;
  r.rk2_clplus = 6;
  r.cl2_action = mod.generator_action(0);
  r.chi_ranks = {{"1", 1, 1u}, {"3", 1, 1u}};
  CHECK(validate({r}).empty());

  r.chi_ranks = {{"1", 2, 2u}, {"3", 0, 0u}};  // contradicts the matrix
  bool mismatch = false;
  for (const auto& v : validate({r})) mismatch |= v.violation.rule == "action-matrix-rank-mismatch";
  CHECK(mismatch);
}

TEST_CASE("aggregation over the synthetic septic table") {
  auto table = make_synthetic_septic_table();
  REQUIRE(table.size() == 8000);
  auto rep = aggregate(table, FamilyFilter::parse("ell=7"));
  // marginal proportions as displayed: 0.967 / 0.030 / 0.002 (truncated)
  for (const auto& row : rep.rows) {
    if (row.property == "rk2_cl = 0") CHECK(row.count == 7739);
    if (row.property == "rk2_cl = 3") CHECK(row.count == 241);
    if (row.property == "rk2_cl = 6") CHECK(row.count == 20);
  }
  bool mean_found = false;
  for (const auto& m : rep.moments)
    if (m.property == "E[#Cl[2]^1]") {
      mean_found = true;
      CHECK(m.proportion == doctest::Approx(1.368375).epsilon(1e-12));
    }
  CHECK(mean_found);

  // conditioned family: forced narrow rank
  auto rho3 = aggregate(table, FamilyFilter::parse("ell=7,rho=3"));
  CHECK(rho3.n == 241);
  for (const auto& row : rho3.rows) {
    if (row.property == "rk2_clplus = 6") {
      CHECK(row.proportion == 1.0);
      CHECK(row.prediction == "1");
      CHECK(row.is_theorem);
    }
    if (row.property == "sgnrk = 1") CHECK(row.prediction == "1/9");
    if (row.property == "sgnrk = 4") CHECK(row.prediction == "8/9");
  }
  CHECK_THROWS(aggregate(table, FamilyFilter::parse("ell=7,rho=1")));  // empty family

  // proportions over each property partition sum to one
  for (const char* prefix : {"rk2_cl =", "rk2_clplus =", "sgnrk ="}) {
    double sum = 0;
    for (const auto& row : rep.rows)
      if (row.property.rfind(prefix, 0) == 0) sum += row.proportion;
    CHECK(sum == doctest::Approx(1.0));
  }
}

TEST_CASE("synthetic conditional-signature sample matches its law") {
  auto records = make_synthetic_cubic_sgnrk(100000, 31337);
  auto rep = aggregate(records, FamilyFilter::parse("ell=3,rho=2"));
  double p1 = 0, p3 = 0;
  for (const auto& row : rep.rows) {
    if (row.property == "sgnrk = 1") { p1 = row.proportion; CHECK(row.prediction == "1/5"); }
    if (row.property == "sgnrk = 3") { p3 = row.proportion; CHECK(row.prediction == "4/5"); }
  }
  double se = std::sqrt(0.2 * 0.8 / 100000.0);
  CHECK(std::abs(p1 - 0.2) < 3 * se);
  CHECK(p1 + p3 == doctest::Approx(1.0));
}

TEST_CASE("self-duality rate from ranks and from matrices") {
  // per-character narrow ranks: equal on the dual pair means self-dual
  std::vector<FieldRecord> recs;
  for (int i = 0; i < 10; ++i) {
    FieldRecord r;
    r.label = "sd" + std::to_string(i);
    r.ell = 7;
    r.conductor = 100 + i;
    r.rk2_cl = 0;
    r.rk2_clplus = i < 7 ? 0 : 3;
    if (i < 7) r.chi_ranks = {{"1", 0, 0u}, {"3", 0, 0u}};
    else r.chi_ranks = {{"1", 0, 1u}, {"3", 0, 0u}};
    recs.push_back(std::move(r));
  }
  CHECK(self_duality_rate(recs) == doctest::Approx(0.7));

  // matrix fallback: F(chi) + F(dual) is self-dual, F(chi)^2 is not
  OddAbelianGroup z7({7});
  auto classes = character_classes(z7);
  GModule balanced = GModule::direct_sum(GModule::irreducible(classes[1]),
                                         GModule::irreducible(classes[2]));
  GModule lopsided = GModule::direct_sum(GModule::irreducible(classes[1]),
                                         GModule::irreducible(classes[1]));
  FieldRecord ra, rb;
  ra.label = "ma";
  ra.ell = 7;
  ra.conductor = 200;
  ra.rk2_cl = 6;
  ra.rk2_clplus = 6;
  ra.cl2_action = balanced.generator_action(0);
  rb = ra;
  rb.label = "mb";
  rb.cl2_action = lopsided.generator_action(0);
  CHECK(self_duality_rate({ra}) == 1.0);
  CHECK(self_duality_rate({rb}) == 0.0);

  // the published 77.9% split reproduced exactly: 6232 of 8000
  std::vector<FieldRecord> split;
  for (int i = 0; i < 8000; ++i) {
    FieldRecord r;
    r.label = "p" + std::to_string(i);
    r.ell = 7;
    r.conductor = 1000 + i;
    r.rk2_cl = 0;
    r.rk2_clplus = i < 6232 ? 0 : 3;
    if (i < 6232) r.chi_ranks = {{"1", 0, 0u}, {"3", 0, 0u}};
    else r.chi_ranks = {{"1", 0, 1u}, {"3", 0, 0u}};
    split.push_back(std::move(r));
  }
  CHECK(self_duality_rate(split) == doctest::Approx(0.779).epsilon(1e-12));
}

TEST_CASE("append-only store with index and provenance") {
  auto p = tmp_file("oddab_store.jsonl");
  std::filesystem::remove(p);
  std::filesystem::remove(p.string() + ".idx");
  std::filesystem::remove(p.string() + ".source");
  {
    JsonlStore store(p.string());
    CHECK(store.size() == 0);
    for (const auto& r : septic_example_fields()) store.append(r);
    CHECK(store.size() == 3);
    CHECK_THROWS(store.append(septic_example_fields()[0]));  // duplicate label
    store.set_source("external 2-rank data import");
  }
  {
    // reopen: index picks the records back up
    JsonlStore store(p.string());
    CHECK(store.size() == 3);
    auto rec = store.find("7.7.6321363049.1");
    REQUIRE(rec.has_value());
    CHECK(rec->conductor == 43);
    CHECK(rec->sgnrk == 7u);
    CHECK_FALSE(store.find("nope").has_value());
    CHECK(store.all().size() == 3);
    REQUIRE(store.source().has_value());
    CHECK(*store.source() == "external 2-rank data import");
  }
  {
    // a deleted index is rebuilt from the data file
    std::filesystem::remove(p.string() + ".idx");
    JsonlStore store(p.string());
    CHECK(store.size() == 3);
    CHECK(store.find("7.7.594823321.1").has_value());
  }
  std::filesystem::remove(p);
  std::filesystem::remove(p.string() + ".idx");
  std::filesystem::remove(p.string() + ".source");
}

TEST_CASE("jsonl carries the action matrix") {
  OddAbelianGroup z7({7});
  GModule irr = GModule::irreducible(character_classes(z7)[1]);
  FieldRecord r;
  r.label = "j1";
  r.ell = 7;
  r.conductor = 29;
  r.rk2_cl = 3;
  r.rk2_clplus = 3;
  r.cl2_action = irr.generator_action(0);
  FieldRecord back = from_jsonl_line(to_jsonl_line(r));
  REQUIRE(back.cl2_action.has_value());
  CHECK(*back.cl2_action == *r.cl2_action);
}
