#include "newman/resume.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "newman/bigint.hpp"
#include "newman/errors.hpp"
#include "newman/primes.hpp"

namespace newman {

namespace {

constexpr std::uint64_t kSlice = 1 << 16;

Json base_params(std::uint64_t p) { return Json{{"p", p}}; }

std::int64_t parse_i64(const Json& j) {
  const BigInt v(j.get<std::string>(), 10);
  if (!mpz_fits_slong_p(v.get_mpz_t())) throw StorageError("checkpoint value out of range");
  return v.get_si();
}

}  // namespace

Json positivity_state_to_json(const PositivityState& s) {
  return Json{{"p", s.p},
              {"x", s.x},
              {"sum", std::to_string(s.sum)},
              {"min_value", std::to_string(s.min_value)},
              {"argmin", s.argmin},
              {"last_nonpositive_x", s.last_nonpositive_x},
              {"sign_changes", s.sign_changes}};
}

PositivityState positivity_state_from_json(const Json& j) {
  try {
    PositivityState s;
    s.p = j.at("p").get<std::uint64_t>();
    s.x = j.at("x").get<std::uint64_t>();
    s.sum = parse_i64(j.at("sum"));
    s.min_value = parse_i64(j.at("min_value"));
    s.argmin = j.at("argmin").get<std::uint64_t>();
    s.last_nonpositive_x = j.at("last_nonpositive_x").get<std::uint64_t>();
    s.sign_changes = j.at("sign_changes").get<std::uint64_t>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw StorageError(std::string("malformed positivity state: ") + e.what());
  }
}

Json positivity_record_to_json(const PositivityRecord& r) {
  Json j = positivity_state_to_json(r.state);
  j["in_d_list"] = r.in_d_list;
  j["consistent"] = r.consistent;
  return j;
}

PositivityState resume_scan(const Ledger& ledger, std::uint64_t p, std::uint64_t limit) {
  const auto rec = ledger.latest_checkpoint("positivity", base_params(p), limit);
  if (!rec) return PositivityState{.p = p};
  PositivityState s = positivity_state_from_json(rec->result);
  if (s.p != p || s.x != rec->params.at("checkpoint").get<std::uint64_t>()) {
    throw StorageError("checkpoint record '" + rec->key + "' is inconsistent with its params");
  }
  return s;
}

ResumableScanOutcome run_positivity_scan(Ledger& ledger, std::uint64_t p, std::uint64_t x_max,
                                         const ResumableScanOptions& options) {
  require_odd_prime(p, "positivity scan");
  if (options.stride == 0) throw InvalidArgument("checkpoint stride must be positive");
  if (x_max > options.scan_budget) {
    throw BudgetExceeded("positivity scan to " + std::to_string(x_max) + " exceeds the scan budget " +
                         std::to_string(options.scan_budget));
  }

  ResumableScanOutcome outcome;
  const Json final_params{{"p", p}, {"xmax", x_max}};
  const std::string final_key = LedgerRecord::make_key("positivity", final_params);
  if (!options.force) {
    if (auto cached = ledger.find(final_key)) {
      ledger.append(*cached);  // registers the cache hit
      outcome.final_record = std::move(cached);
      outcome.cache_hit = true;
      return outcome;
    }
  }

  const auto started = std::chrono::steady_clock::now();
  const std::string started_at = utc_timestamp_now();
  PositivityScanner scanner(options.force ? PositivityState{.p = p} : resume_scan(ledger, p, x_max));
  outcome.resumed_from = scanner.state().x;

  while (scanner.state().x < x_max) {
    const std::uint64_t x = scanner.state().x;
    const std::uint64_t next_checkpoint = (x / options.stride + 1) * options.stride;
    scanner.advance_to(std::min({x_max, next_checkpoint, x + kSlice}));
    const std::uint64_t covered = scanner.state().x;
    if (covered % options.stride == 0 && covered < x_max) {
      LedgerRecord cp;
      cp.kind = "positivity";
      cp.params = Json{{"p", p}, {"checkpoint", covered}};
      cp.key = LedgerRecord::make_key(cp.kind, cp.params);
      cp.result = positivity_state_to_json(scanner.state());
      cp.engine = "scan";
      cp.started_at = utc_timestamp_now();
      cp.status = Status::clipped;
      if (ledger.append(cp, options.force)) ++outcome.checkpoints_written;
    }
    if (options.interrupt && covered < x_max && options.interrupt(covered)) return outcome;
  }

  const PositivityRecord summary = summarize_positivity(scanner.state());
  LedgerRecord rec;
  rec.kind = "positivity";
  rec.params = final_params;
  rec.key = final_key;
  rec.result = positivity_record_to_json(summary);
  rec.engine = "scan";
  rec.started_at = started_at;
  rec.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  rec.status = summary.consistent ? Status::pass : Status::inconclusive;
  ledger.append(rec, true);
  outcome.final_record = std::move(rec);
  return outcome;
}

}  // namespace newman
