#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "newman/errors.hpp"
#include "newman/ledger.hpp"
#include "newman/resume.hpp"
#include "oracle.hpp"

using namespace newman;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = oracle::temp_path("newman_ledger_");
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path file(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

LedgerRecord sample(std::uint64_t p, const std::string& s) {
  LedgerRecord r;
  r.kind = "divisibility";
  r.params = Json{{"p", p}};
  r.key = LedgerRecord::make_key(r.kind, r.params);
  r.result = Json{{"s_value", s}, {"divisible", true}};
  r.engine = "cyclo+dp";
  r.started_at = utc_timestamp_now();
  r.duration_ms = 1.5;
  r.status = Status::pass;
  return r;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(LedgerRecord, KeyIgnoresInsertionOrder) {
  const Json a{{"p", 5}, {"xmax", 100}};
  Json b = Json::object();
  b["xmax"] = 100;
  b["p"] = 5;
  EXPECT_EQ(LedgerRecord::make_key("positivity", a), LedgerRecord::make_key("positivity", b));
  EXPECT_NE(LedgerRecord::make_key("positivity", a), LedgerRecord::make_key("bound", a));
}

TEST(LedgerRecord, LineRoundTripIsLossless) {
  auto& gen = oracle::rng();
  for (int i = 0; i < 50; ++i) {
    BigInt big = from_u64(gen()) * pow2(200) - from_u64(gen());
    if (i % 2) big = -big;
    LedgerRecord r = sample(gen() % 1000, to_decimal(big));
    r.duration_ms = static_cast<double>(gen() % 100000) / 7.0;
    const LedgerRecord back = LedgerRecord::from_line(r.to_line());
    EXPECT_TRUE(back.same_payload(r));
    EXPECT_EQ(back.duration_ms, r.duration_ms);
    EXPECT_EQ(back.started_at, r.started_at);
    EXPECT_EQ(BigInt(back.result.at("s_value").get<std::string>()), big);
    EXPECT_EQ(back.to_line(), r.to_line());
  }
}

TEST(LedgerRecord, RejectsMalformed) {
  EXPECT_THROW(LedgerRecord::from_line("{\"key\":"), StorageError);
  EXPECT_THROW(LedgerRecord::from_line("{}"), StorageError);
  LedgerRecord r = sample(3, "3");
  r.key = "divisibility:{\"p\":4}";
  EXPECT_THROW(LedgerRecord::from_line(r.to_line()), StorageError);
  r = sample(3, "3");
  r.kind = "nonsense";
  r.key = LedgerRecord::make_key(r.kind, r.params);
  EXPECT_THROW(LedgerRecord::from_line(r.to_line()), StorageError);
}

TEST(Ledger, AppendThenFind) {
  TempDir dir;
  const auto path = dir.file("l.jsonl");
  {
    Ledger ledger(path);
    EXPECT_TRUE(ledger.append(sample(3, "3")));
    const auto found = ledger.find(sample(3, "3").key);
    ASSERT_TRUE(found);
    EXPECT_EQ(found->result.at("s_value"), "3");
  }
  Ledger reopened(path);
  EXPECT_TRUE(reopened.find(sample(3, "3").key).has_value());
  EXPECT_FALSE(reopened.find(sample(5, "5").key).has_value());
}

TEST(Ledger, DuplicateKeyIsCacheHitUnlessForced) {
  TempDir dir;
  Ledger ledger(dir.file("l.jsonl"));
  EXPECT_TRUE(ledger.append(sample(3, "3")));
  EXPECT_FALSE(ledger.append(sample(3, "3")));
  EXPECT_EQ(ledger.cache_hits(), 1U);
  EXPECT_EQ(ledger.records().size(), 1U);
  EXPECT_TRUE(ledger.append(sample(3, "3"), true));
  EXPECT_EQ(ledger.records().size(), 2U);
}

TEST(Ledger, TruncatedTrailingLineIsQuarantined) {
  TempDir dir;
  const auto path = dir.file("l.jsonl");
  {
    Ledger ledger(path);
    ledger.append(sample(3, "3"));
    ledger.append(sample(5, "5"));
    ledger.append(sample(7, "-7"));
  }
  // Cut the file in the middle of the last record.
  const std::string contents = read_file(path);
  const auto cut = contents.size() - 20;
  fs::resize_file(path, cut);

  Ledger ledger(path);
  EXPECT_EQ(ledger.quarantined_lines(), 1U);
  EXPECT_EQ(ledger.records().size(), 2U);
  EXPECT_TRUE(ledger.find(sample(5, "5").key).has_value());
  EXPECT_FALSE(ledger.find(sample(7, "-7").key).has_value());
  fs::path side = path;
  side += ".quarantine";
  const auto last_start = contents.rfind('\n', contents.size() - 2) + 1;
  EXPECT_EQ(read_file(side), contents.substr(last_start, cut - last_start) + "\n");

  // Appends continue cleanly after the last valid record.
  EXPECT_TRUE(ledger.append(sample(7, "-7")));
  Ledger again(path);
  EXPECT_EQ(again.quarantined_lines(), 0U);
  EXPECT_EQ(again.records().size(), 3U);
}

TEST(Ledger, SnapshotReaderSkipsPartialLine) {
  TempDir dir;
  const auto path = dir.file("l.jsonl");
  Ledger ledger(path);
  ledger.append(sample(3, "3"));
  {
    std::ofstream out(path, std::ios::app);
    out << "{\"key\":\"divis";
  }
  EXPECT_EQ(Ledger::read_snapshot(path).size(), 1U);
}

TEST(Resume, NoRecordsStartsAtZero) {
  TempDir dir;
  Ledger ledger(dir.file("l.jsonl"));
  const PositivityState s = resume_scan(ledger, 5, 1000000);
  EXPECT_EQ(s.x, 0U);
  EXPECT_EQ(s.p, 5U);
}

TEST(Resume, ContinuesFromCheckpointWithExactSum) {
  TempDir dir;
  Ledger ledger(dir.file("l.jsonl"));
  ResumableScanOptions opts;
  opts.stride = 100000;
  opts.interrupt = [](std::uint64_t x) { return x >= 500000; };
  const auto first = run_positivity_scan(ledger, 5, 1000000, opts);
  EXPECT_FALSE(first.final_record.has_value());
  EXPECT_EQ(first.checkpoints_written, 5U);

  const PositivityState st = resume_scan(ledger, 5, 1000000);
  EXPECT_EQ(st.x, 500000U);
  EXPECT_EQ(st.sum, oracle::prefix_class0(5, 500000)[500000]);

  opts.interrupt = nullptr;
  const auto second = run_positivity_scan(ledger, 5, 1000000, opts);
  EXPECT_EQ(second.resumed_from, 500000U);
  ASSERT_TRUE(second.final_record);
  EXPECT_EQ(second.final_record->result.at("sum"), "2150");
}

TEST(Resume, DifferentPrimeStartsFresh) {
  TempDir dir;
  Ledger ledger(dir.file("l.jsonl"));
  ResumableScanOptions opts;
  opts.stride = 1000;
  opts.interrupt = [](std::uint64_t x) { return x >= 5000; };
  run_positivity_scan(ledger, 5, 20000, opts);
  EXPECT_EQ(resume_scan(ledger, 5, 20000).x, 5000U);
  EXPECT_EQ(resume_scan(ledger, 7, 20000).x, 0U);
  EXPECT_EQ(resume_scan(ledger, 5, 4500).x, 4000U);
}

TEST(Resume, InterruptedRunsMatchOneShot) {
  TempDir dir;
  const std::uint64_t x_max = 2000000;
  ResumableScanOptions opts;
  opts.stride = 250000;

  Ledger one_shot(dir.file("a.jsonl"));
  const auto reference = run_positivity_scan(one_shot, 7, x_max, opts);
  ASSERT_TRUE(reference.final_record);

  Ledger pieces(dir.file("b.jsonl"));
  std::mt19937_64 gen(7);
  for (int i = 0; i < 3; ++i) {
    const std::uint64_t stop = gen() % x_max;
    opts.interrupt = [stop](std::uint64_t x) { return x >= stop; };
    run_positivity_scan(pieces, 7, x_max, opts);
  }
  opts.interrupt = nullptr;
  const auto resumed = run_positivity_scan(pieces, 7, x_max, opts);
  ASSERT_TRUE(resumed.final_record);
  EXPECT_TRUE(resumed.final_record->same_payload(*reference.final_record));

  // A rerun of the finished key is served from the ledger.
  const auto cached = run_positivity_scan(pieces, 7, x_max, opts);
  EXPECT_TRUE(cached.cache_hit);
  EXPECT_TRUE(cached.final_record->same_payload(*reference.final_record));
}

TEST(Resume, BudgetAndArguments) {
  TempDir dir;
  Ledger ledger(dir.file("l.jsonl"));
  ResumableScanOptions opts;
  opts.scan_budget = 100;
  EXPECT_THROW(run_positivity_scan(ledger, 5, 101, opts), BudgetExceeded);
  opts.scan_budget = 1000;
  opts.stride = 0;
  EXPECT_THROW(run_positivity_scan(ledger, 5, 10, opts), InvalidArgument);
}
