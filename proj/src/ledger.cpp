#include "newman/ledger.hpp"

#include <unistd.h>

#include <algorithm>
#include <array>
#include <cerrno>
#include <chrono>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>

#include "newman/errors.hpp"

namespace newman {

namespace {

constexpr std::array<std::string_view, 9> kKinds{"sum",     "table",      "theorem1", "theorem2", "divisibility",
                                                 "scaling", "positivity", "bound",    "classify"};

std::string errno_message(std::string_view what, const std::filesystem::path& path) {
  return std::string(what) + " '" + path.string() + "': " + std::strerror(errno);
}

void write_all(std::FILE* f, std::string_view data, const std::filesystem::path& path) {
  if (std::fwrite(data.data(), 1, data.size(), f) != data.size()) throw StorageError(errno_message("write failed", path));
}

void sync(std::FILE* f, const std::filesystem::path& path) {
  if (std::fflush(f) != 0 || ::fsync(::fileno(f)) != 0) throw StorageError(errno_message("sync failed", path));
}

}  // namespace

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::inconclusive:
      return "inconclusive";
    case Status::clipped:
      return "clipped";
  }
  return "fail";
}

Status parse_status(std::string_view text) {
  for (const Status s : {Status::pass, Status::fail, Status::inconclusive, Status::clipped}) {
    if (to_string(s) == text) return s;
  }
  throw StorageError("unknown status '" + std::string(text) + "'");
}

bool is_record_kind(std::string_view kind) noexcept {
  return std::find(kKinds.begin(), kKinds.end(), kind) != kKinds.end();
}

std::string LedgerRecord::make_key(std::string_view kind, const Json& params) {
  // nlohmann::json (unordered variant) stores objects in sorted maps.
  return std::string(kind) + ":" + nlohmann::json::parse(params.dump()).dump();
}

std::string LedgerRecord::to_line() const {
  Json j;
  j["key"] = key;
  j["kind"] = kind;
  j["params"] = params;
  j["result"] = result;
  j["engine"] = engine;
  j["started_at"] = started_at;
  j["duration_ms"] = duration_ms;
  j["status"] = to_string(status);
  return j.dump();
}

LedgerRecord LedgerRecord::from_line(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw StorageError(std::string("malformed ledger line: ") + e.what());
  }
  try {
    LedgerRecord rec;
    rec.key = j.at("key").get<std::string>();
    rec.kind = j.at("kind").get<std::string>();
    rec.params = j.at("params");
    rec.result = j.at("result");
    rec.engine = j.at("engine").get<std::string>();
    rec.started_at = j.at("started_at").get<std::string>();
    rec.duration_ms = j.at("duration_ms").get<double>();
    rec.status = parse_status(j.at("status").get<std::string>());
    if (!is_record_kind(rec.kind)) throw StorageError("unknown record kind '" + rec.kind + "'");
    if (!rec.params.is_object() || !rec.result.is_object()) throw StorageError("params and result must be objects");
    if (rec.key != make_key(rec.kind, rec.params)) throw StorageError("key does not match params");
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw StorageError(std::string("incomplete ledger record: ") + e.what());
  }
}

bool LedgerRecord::same_payload(const LedgerRecord& o) const {
  return key == o.key && kind == o.kind && params == o.params && result == o.result && engine == o.engine &&
         status == o.status;
}

std::string utc_timestamp_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::array<char, 32> buf{};
  std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%S", &tm);
  std::ostringstream os;
  os << buf.data() << '.' << (ms < 100 ? (ms < 10 ? "00" : "0") : "") << ms << 'Z';
  return os.str();
}

Ledger::Ledger(std::filesystem::path path) : path_(std::move(path)) {
  load();
  file_.reset(std::fopen(path_.c_str(), "ab"));
  if (!file_) throw StorageError(errno_message("cannot open ledger", path_));
}

Ledger::~Ledger() = default;

void Ledger::load() {
  std::error_code ec;
  if (!std::filesystem::exists(path_, ec)) return;

  std::ifstream in(path_, std::ios::binary);
  if (!in) throw StorageError(errno_message("cannot read ledger", path_));
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();

  std::vector<std::string> valid_lines;
  std::vector<std::string> bad_lines;
  std::size_t pos = 0;
  while (pos < contents.size()) {
    const auto end = contents.find('\n', pos);
    const bool terminated = end != std::string::npos;
    std::string line = contents.substr(pos, terminated ? end - pos : std::string::npos);
    pos = terminated ? end + 1 : contents.size();
    if (line.empty()) continue;
    try {
      LedgerRecord rec = LedgerRecord::from_line(line);
      if (!terminated) throw StorageError("unterminated trailing line");
      index_[rec.key] = records_.size();
      records_.push_back(std::move(rec));
      valid_lines.push_back(std::move(line));
    } catch (const StorageError&) {
      bad_lines.push_back(std::move(line));
    }
  }
  if (bad_lines.empty()) return;

  quarantined_ = bad_lines.size();
  {
    std::filesystem::path side = path_;
    side += ".quarantine";
    std::unique_ptr<std::FILE, FileCloser> q(std::fopen(side.c_str(), "ab"));
    if (!q) throw StorageError(errno_message("cannot open quarantine file", side));
    for (const auto& line : bad_lines) write_all(q.get(), line + "\n", side);
    sync(q.get(), side);
  }
  std::filesystem::path tmp = path_;
  tmp += ".tmp";
  {
    std::unique_ptr<std::FILE, FileCloser> out(std::fopen(tmp.c_str(), "wb"));
    if (!out) throw StorageError(errno_message("cannot rewrite ledger", tmp));
    for (const auto& line : valid_lines) write_all(out.get(), line + "\n", tmp);
    sync(out.get(), tmp);
  }
  std::filesystem::rename(tmp, path_, ec);
  if (ec) throw StorageError("cannot replace ledger '" + path_.string() + "': " + ec.message());
}

std::optional<LedgerRecord> Ledger::find(std::string_view key) const {
  std::lock_guard lock(mu_);
  const auto it = index_.find(std::string(key));
  if (it == index_.end()) return std::nullopt;
  return records_[it->second];
}

bool Ledger::append(const LedgerRecord& rec, bool force) {
  std::lock_guard lock(mu_);
  if (!force && index_.contains(rec.key)) {
    ++cache_hits_;
    return false;
  }
  write_all(file_.get(), rec.to_line() + "\n", path_);
  sync(file_.get(), path_);
  index_[rec.key] = records_.size();
  records_.push_back(rec);
  return true;
}

std::optional<LedgerRecord> Ledger::latest_checkpoint(std::string_view kind, const Json& base_params,
                                                      std::uint64_t limit) const {
  std::lock_guard lock(mu_);
  const LedgerRecord* best = nullptr;
  std::uint64_t best_x = 0;
  for (const auto& [key, idx] : index_) {
    const LedgerRecord& rec = records_[idx];
    if (rec.kind != kind || !rec.params.contains("checkpoint")) continue;
    Json base = rec.params;
    base.erase("checkpoint");
    if (LedgerRecord::make_key(kind, base) != LedgerRecord::make_key(kind, base_params)) continue;
    const auto x = rec.params.at("checkpoint").get<std::uint64_t>();
    if (x <= limit && (best == nullptr || x > best_x)) {
      best = &rec;
      best_x = x;
    }
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

std::vector<LedgerRecord> Ledger::records() const {
  std::lock_guard lock(mu_);
  return records_;
}

std::size_t Ledger::cache_hits() const {
  std::lock_guard lock(mu_);
  return cache_hits_;
}

std::vector<LedgerRecord> Ledger::read_snapshot(const std::filesystem::path& path) {
  std::vector<LedgerRecord> out;
  std::ifstream in(path, std::ios::binary);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      out.push_back(LedgerRecord::from_line(line));
    } catch (const StorageError&) {
      // Concurrent writer may leave a partial last line.
    }
  }
  return out;
}

}  // namespace newman
