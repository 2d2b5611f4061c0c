#pragma once

// Append-only results ledger: one JSON object per line, keyed by a pure
// function of (kind, params) so reruns are idempotent.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace newman {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, inconclusive, clipped };

std::string_view to_string(Status s) noexcept;
Status parse_status(std::string_view text);

// Recognized record kinds.
bool is_record_kind(std::string_view kind) noexcept;

struct LedgerRecord {
  std::string key;
  std::string kind;
  Json params = Json::object();
  Json result = Json::object();
  std::string engine;
  std::string started_at;  // ISO-8601 UTC
  double duration_ms = 0.0;
  Status status = Status::pass;

  // kind + ':' + params with keys sorted; independent of insertion order.
  static std::string make_key(std::string_view kind, const Json& params);

  std::string to_line() const;
  // Throws StorageError on malformed input.
  static LedgerRecord from_line(std::string_view line);

  // Equality ignoring started_at and duration_ms.
  bool same_payload(const LedgerRecord& other) const;
};

std::string utc_timestamp_now();

// Single writer; appends are serialized by an internal mutex and fsync'ed.
class Ledger {
 public:
  // Opens or creates the file. Unparseable lines are moved to
  // `<path>.quarantine` and the file is rewritten with the valid records.
  explicit Ledger(std::filesystem::path path);
  ~Ledger();
  Ledger(const Ledger&) = delete;
  Ledger& operator=(const Ledger&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }

  std::optional<LedgerRecord> find(std::string_view key) const;

  // Returns false (and counts a cache hit) when the key exists and !force.
  bool append(const LedgerRecord& rec, bool force = false);

  // Checkpoint records carry params = base_params + {"checkpoint": x}. Returns
  // the one with the largest x <= limit whose base params match exactly.
  std::optional<LedgerRecord> latest_checkpoint(std::string_view kind, const Json& base_params,
                                                std::uint64_t limit) const;

  std::vector<LedgerRecord> records() const;
  std::size_t cache_hits() const;
  std::size_t quarantined_lines() const noexcept { return quarantined_; }

  // Reads valid records without taking ownership of the file.
  static std::vector<LedgerRecord> read_snapshot(const std::filesystem::path& path);

 private:
  struct FileCloser {
    void operator()(std::FILE* f) const noexcept { std::fclose(f); }
  };

  void load();

  std::filesystem::path path_;
  std::unique_ptr<std::FILE, FileCloser> file_;
  std::vector<LedgerRecord> records_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t cache_hits_ = 0;
  std::size_t quarantined_ = 0;
  mutable std::mutex mu_;
};

}  // namespace newman
