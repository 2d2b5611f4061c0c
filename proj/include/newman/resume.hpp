#pragma once

// Ledger-backed positivity scans that checkpoint their exact running state
// and continue from the last checkpoint after an interruption.

#include <cstdint>
#include <functional>
#include <optional>

#include "newman/harness.hpp"
#include "newman/ledger.hpp"
#include "newman/scanner.hpp"

namespace newman {

inline constexpr std::uint64_t kDefaultCheckpointStride = 1'000'000;

Json positivity_state_to_json(const PositivityState& s);
PositivityState positivity_state_from_json(const Json& j);
Json positivity_record_to_json(const PositivityRecord& r);

// Largest checkpointed state for p with x <= limit; a fresh state if none.
PositivityState resume_scan(const Ledger& ledger, std::uint64_t p, std::uint64_t limit);

struct ResumableScanOptions {
  std::uint64_t stride = kDefaultCheckpointStride;
  std::uint64_t scan_budget = kDefaultScanBudget;
  bool force = false;
  // Polled with the covered x between work slices; returning true abandons
  // the scan there, as a crash would.
  std::function<bool(std::uint64_t)> interrupt;
};

struct ResumableScanOutcome {
  std::optional<LedgerRecord> final_record;  // empty when interrupted
  bool cache_hit = false;
  std::uint64_t resumed_from = 0;
  std::size_t checkpoints_written = 0;
};

ResumableScanOutcome run_positivity_scan(Ledger& ledger, std::uint64_t p, std::uint64_t x_max,
                                         const ResumableScanOptions& options = {});

}  // namespace newman
