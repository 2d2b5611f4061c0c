#include "newman/cli.hpp"

#include <chrono>
#include <memory>
#include <optional>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "newman/cyclotomic.hpp"
#include "newman/errors.hpp"
#include "newman/harness.hpp"
#include "newman/ledger.hpp"
#include "newman/primes.hpp"
#include "newman/resume.hpp"
#include "newman/weight_table.hpp"

namespace newman {

namespace {

std::uint64_t parse_u64(const std::string& text, std::string_view name) {
  const BigInt v = parse_natural(text);
  if (!fits_u64(v)) throw InvalidArgument(std::string(name) + " exceeds 64 bits");
  return to_u64(v);
}

// Exact power-of-two exponent, if x = 2^k with k >= 1.
std::optional<std::size_t> power_of_two_exponent(const BigInt& x) {
  if (sgn(x) <= 0 || mpz_popcount(x.get_mpz_t()) != 1) return std::nullopt;
  const std::size_t k = bit_length(x) - 1;
  if (k == 0) return std::nullopt;
  return k;
}

struct TaskResult {
  Json result;
  Status status;
};

class Session {
 public:
  Session(CliConfig cfg, bool force, std::ostream& out, std::ostream& err)
      : cfg_(std::move(cfg)), force_(force), out_(out), err_(err) {
    if (!cfg_.ledger_path.empty()) ledger_ = std::make_unique<Ledger>(cfg_.ledger_path);
    if (ledger_ && ledger_->quarantined_lines() > 0) {
      err_ << "ledger: quarantined " << ledger_->quarantined_lines() << " malformed line(s)\n";
    }
  }

  const CliConfig& config() const noexcept { return cfg_; }
  Ledger* ledger() noexcept { return ledger_.get(); }
  bool force() const noexcept { return force_; }

  // Reuses a ledger hit for the same key unless --force.
  LedgerRecord run(const std::string& kind, Json params, const std::string& engine,
                   const std::function<TaskResult()>& compute) {
    const std::string key = LedgerRecord::make_key(kind, params);
    if (ledger_ && !force_) {
      if (auto cached = ledger_->find(key)) {
        ledger_->append(*cached);
        note(cached->status);
        return *cached;
      }
    }
    LedgerRecord rec;
    rec.kind = kind;
    rec.key = key;
    rec.params = std::move(params);
    rec.engine = engine;
    rec.started_at = utc_timestamp_now();
    const auto start = std::chrono::steady_clock::now();
    TaskResult r = compute();
    rec.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rec.result = std::move(r.result);
    rec.status = r.status;
    if (ledger_) ledger_->append(rec, true);
    note(rec.status);
    return rec;
  }

  void note(Status s) {
    if (s == Status::fail) failed_ = true;
    if (s == Status::inconclusive) inconclusive_ = true;
  }

  void emit(const Table& t) { write_table(out_, t, cfg_.output_format); }
  std::ostream& err() { return err_; }

  int exit_code() const {
    if (inconclusive_) err_ << "note: some results are inconclusive\n";
    if (ledger_ && ledger_->cache_hits() > 0) err_ << "ledger: " << ledger_->cache_hits() << " cache hit(s)\n";
    return failed_ ? kExitVerificationFailure : kExitPass;
  }

 private:
  CliConfig cfg_;
  bool force_;
  std::ostream& out_;
  std::ostream& err_;
  std::unique_ptr<Ledger> ledger_;
  bool failed_ = false;
  bool inconclusive_ = false;
};

// Row = params overlaid with result (result wins) plus record metadata.
Json row_of(const LedgerRecord& rec) {
  Json row = rec.params;
  for (const auto& [k, v] : rec.result.items()) row[k] = v;
  row["status"] = to_string(rec.status);
  row["duration_ms"] = rec.duration_ms;
  return row;
}

Json opt_string(const std::optional<BigInt>& v) { return v ? Json(to_decimal(*v)) : Json(nullptr); }

// ---- sum -------------------------------------------------------------------

int cmd_sum(Session& s, std::uint64_t m, std::uint64_t l, const std::string& x_text, const std::string& engine) {
  const BigInt x = parse_natural(x_text);
  ResidueQuery q{m, l, x};
  q.validate();
  static const std::vector<std::string> kEngines{"naive", "dp", "cyclo", "complex", "all"};
  if (std::find(kEngines.begin(), kEngines.end(), engine) == kEngines.end()) {
    throw InvalidArgument("unknown engine '" + engine + "'");
  }
  const bool all = engine == "all";
  const auto k = power_of_two_exponent(x);
  const bool exact_applicable = m > 2 && is_prime(m) && k.has_value();
  const bool naive_applicable = x <= from_u64(s.config().enumeration_budget);
  if (!all) {
    if ((engine == "cyclo" || engine == "complex") && !exact_applicable) {
      throw InvalidArgument("engine " + engine + " needs an odd prime modulus and x = 2^k with k >= 1");
    }
    if (engine == "complex" && l != 0) throw InvalidArgument("engine complex evaluates class 0 only");
  }

  Json params{{"m", m}, {"l", l}, {"x", to_decimal(x)}, {"engine", engine}};
  if (engine == "complex" || (all && exact_applicable && l == 0)) {
    params["precision"] = s.config().float_precision_digits;
  }
  const LedgerRecord rec = s.run("sum", params, engine, [&]() -> TaskResult {
    std::optional<BigInt> naive, dp, cyclo, complex;
    std::optional<double> residual;
    if (engine == "naive" || (all && naive_applicable)) naive = s_naive(q, s.config().enumeration_budget);
    if (engine == "dp" || all) dp = s_fast(m, l, x);
    if (engine == "cyclo" || (all && exact_applicable)) cyclo = s_cyclotomic_vector(m, *k)[l];
    if (engine == "complex" || (all && exact_applicable && l == 0)) {
      const RoundedComplexResult r = s_complex(m, *k, s.config().float_precision_digits);
      if (r.warning) s.err() << "warning: complex residual " << r.residual << " above " << kResidualWarning << "\n";
      complex = r.nearest;
      residual = r.residual;
    }
    std::optional<BigInt> value;
    bool agree = true;
    for (const auto* v : {&naive, &dp, &cyclo, &complex}) {
      if (!v->has_value()) continue;
      if (!value) value = **v;
      agree = agree && **v == *value;
    }
    Json result{{"value", opt_string(value)}, {"naive", opt_string(naive)}, {"dp", opt_string(dp)},
                {"cyclo", opt_string(cyclo)}, {"complex", opt_string(complex)}, {"agree", agree}};
    if (residual) result["residual"] = *residual;
    return {result, agree ? Status::pass : Status::fail};
  });
  if (rec.status == Status::fail) s.err() << "engines disagree for " << rec.key << "\n";
  s.emit({{"m", "l", "x", "engine", "value", "naive", "dp", "cyclo", "complex", "agree"}, {row_of(rec)}});
  return s.exit_code();
}

// ---- table / classify --------------------------------------------------------

Json profile_json(const PrimeProfile& prof) {
  const BigInt prime = from_u64(prof.p);
  Json j{{"ord2", prof.ord2},
         {"primitive", prof.primitive_root2},
         {"s_value", to_decimal(prof.s_value)},
         {"s_over_p", prof.divisible_by_p ? Json(to_decimal(BigInt(prof.s_value / prime))) : Json("non-integer")},
         {"divisible", prof.divisible_by_p},
         {"abs_eq_p", prof.eq1_holds},
         {"parity", prof.parity_odd ? "odd" : "even"},
         {"in_d_list", prof.in_d_list}};
  if (prof.positivity) {
    const PositivityState& st = prof.positivity->state;
    j["min_value"] = std::to_string(st.min_value);
    j["argmin"] = st.argmin;
    j["last_nonpositive_x"] = st.last_nonpositive_x;
    j["sign_changes"] = st.sign_changes;
    j["positivity_consistent"] = prof.positivity->consistent;
  }
  j["invariant_failures"] = prof.invariant_failures;
  return j;
}

TaskResult classify_task(const Session& s, std::uint64_t p, std::uint64_t x_scan) {
  const PrimeProfile prof = classify_prime(p, x_scan, s.config().scan_budget);
  return {profile_json(prof), prof.invariant_failures.empty() ? Status::pass : Status::fail};
}

const std::vector<std::string> kProfileColumns{"p",      "ord2",      "primitive", "s_value",           "s_over_p",
                                               "abs_eq_p", "parity", "in_d_list", "last_nonpositive_x"};

int cmd_table(Session& s, std::uint64_t p_max, std::uint64_t x_scan) {
  Table t{kProfileColumns, {}};
  for (const std::uint64_t p : odd_primes_up_to(p_max)) {
    t.rows.push_back(row_of(s.run("table", Json{{"p", p}, {"xscan", x_scan}}, "cyclo+dp",
                                  [&] { return classify_task(s, p, x_scan); })));
  }
  s.emit(t);
  return s.exit_code();
}

int cmd_classify(Session& s, std::uint64_t p, std::uint64_t x_scan) {
  require_odd_prime(p, "classify");
  const LedgerRecord rec = s.run("classify", Json{{"p", p}, {"xscan", x_scan}}, "cyclo+dp+scan",
                                 [&] { return classify_task(s, p, x_scan); });
  std::vector<std::string> cols = kProfileColumns;
  cols.insert(cols.end(), {"min_value", "argmin", "sign_changes", "status"});
  s.emit({cols, {row_of(rec)}});
  return s.exit_code();
}

// ---- verify ----------------------------------------------------------------

int cmd_theorem1(Session& s, std::uint64_t p_max) {
  Table t{{"p", "s_cyclotomic", "s_digit_dp", "status", "duration_ms"}, {}};
  for (const std::uint64_t p : primitive_root_primes(p_max)) {
    t.rows.push_back(row_of(s.run("theorem1", Json{{"p", p}}, "cyclo+dp", [&]() -> TaskResult {
      const Theorem1Entry e = verify_theorem1_prime(p);
      return {Json{{"s_cyclotomic", to_decimal(e.s_cyclotomic)}, {"s_digit_dp", to_decimal(e.s_digit_dp)}},
              e.pass ? Status::pass : Status::fail};
    })));
  }
  s.emit(t);
  return s.exit_code();
}

int cmd_theorem2(Session& s, std::uint64_t p, const std::string& n_max_text) {
  require_odd_prime(p, "verify theorem2");
  const BigInt n_max = n_max_text.empty() ? pow2(p) : parse_natural(n_max_text);
  const std::uint64_t budget = s.config().scan_budget;
  const LedgerRecord rec =
      s.run("theorem2", Json{{"p", p}, {"nmax", to_decimal(n_max)}, {"scan_budget", budget}}, "cyclo+dp+scan",
            [&]() -> TaskResult {
              const Theorem2Record r = check_theorem2(p, n_max, budget);
              Json j{{"s_value", to_decimal(r.s_value)},
                     {"hypothesis_bound", r.hypothesis_bound},
                     {"hypothesis_clipped", r.hypothesis_clipped},
                     {"window_hi", r.window_hi},
                     {"bound_violations", r.bound_violations},
                     {"divisible", r.divisible},
                     {"eq5_consequence", r.eq5_consequence},
                     {"lemma_holds", r.lemma_holds},
                     {"parity_odd", r.parity_odd},
                     {"conclusion", r.conclusion},
                     {"implication_holds", r.implication_holds}};
              const Status st = !r.implication_holds ? Status::fail
                                : r.hypothesis_clipped ? Status::clipped
                                                       : Status::pass;
              return {j, st};
            });
  s.emit({{"p", "s_value", "hypothesis_bound", "divisible", "eq5_consequence", "parity_odd", "conclusion",
           "implication_holds", "bound_violations", "hypothesis_clipped", "status"},
          {row_of(rec)}});
  return s.exit_code();
}

int cmd_divisibility(Session& s, std::uint64_t p_max) {
  Table t{{"p", "s_value", "quotient", "divisible", "abs_eq_p", "in_d_list", "status"}, {}};
  for (const std::uint64_t p : odd_primes_up_to(p_max)) {
    const LedgerRecord rec = s.run("divisibility", Json{{"p", p}}, "cyclo+dp", [&]() -> TaskResult {
      const DivisibilityRow r = check_divisibility_prime(p);
      return {Json{{"s_value", to_decimal(r.s_value)},
                   {"quotient", to_decimal(r.quotient)},
                   {"divisible", r.divisible},
                   {"abs_eq_p", r.abs_equals_p},
                   {"in_d_list", in_d_list(p)}},
              r.divisible ? Status::pass : Status::fail};
    });
    if (rec.status == Status::fail) s.err() << "COUNTEREXAMPLE: p = " << p << " does not divide S_p(2^p)\n";
    t.rows.push_back(row_of(rec));
  }
  s.emit(t);
  return s.exit_code();
}

int cmd_scaling(Session& s, std::uint64_t p, std::uint64_t x_max) {
  require_odd_prime(p, "verify scaling");
  const LedgerRecord rec = s.run("scaling", Json{{"p", p}, {"xmax", x_max}}, "dp", [&]() -> TaskResult {
    const ScalingReport r = check_scaling(p, x_max);
    Json j{{"checked", r.checked}, {"mismatches", r.mismatches}};
    j["first_mismatch_x"] = r.first_mismatch ? Json(r.first_mismatch->x) : Json(nullptr);
    j["lhs"] = r.first_mismatch ? Json(to_decimal(r.first_mismatch->lhs)) : Json(nullptr);
    j["rhs"] = r.first_mismatch ? Json(to_decimal(r.first_mismatch->rhs)) : Json(nullptr);
    return {j, r.pass() ? Status::pass : Status::fail};
  });
  s.emit({{"p", "xmax", "checked", "mismatches", "first_mismatch_x", "lhs", "rhs", "status"}, {row_of(rec)}});
  return s.exit_code();
}

int cmd_bound(Session& s, std::uint64_t p, std::optional<std::uint64_t> n_lo, std::uint64_t n_hi) {
  require_odd_prime(p, "verify bound");
  const std::uint64_t lo = n_lo.value_or(p == 3 || p == 5 ? 1 : (p < 64 ? std::uint64_t{1} << p : 1));
  const BoundSpec spec = BoundSpec::for_prime(p, lo, n_hi);
  spec.validate();
  const std::uint64_t budget = s.config().scan_budget;
  const LedgerRecord rec =
      s.run("bound", Json{{"p", p}, {"nlo", lo}, {"nhi", n_hi}, {"strict", spec.strict_positive}, {"scan_budget", budget}},
            "scan", [&]() -> TaskResult {
              const BoundReport r = check_bound(spec, budget);
              Json j{{"exponent", spec.exponent},
                     {"checked", r.checked},
                     {"effective_hi", r.effective_hi},
                     {"clipped", r.clipped},
                     {"violations", r.violations.size()},
                     {"inconclusive", r.inconclusive.size()},
                     {"max_ratio", r.max_ratio}};
              Json first = Json::array();
              for (std::size_t i = 0; i < r.violations.size() && i < 10; ++i) {
                const BoundViolation& v = r.violations[i];
                first.push_back(Json{{"n", v.n},
                                     {"s", std::to_string(v.s)},
                                     {"bound", v.bound},
                                     {"kind", v.kind == BoundFailure::magnitude ? "magnitude" : "positivity"}});
              }
              j["first_violation_n"] = r.violations.empty() ? Json(nullptr) : Json(r.violations.front().n);
              j["first_violation_s"] =
                  r.violations.empty() ? Json(nullptr) : Json(std::to_string(r.violations.front().s));
              j["sample_violations"] = first;
              const Status st = !r.violations.empty()  ? Status::fail
                                : !r.inconclusive.empty() ? Status::inconclusive
                                : r.clipped               ? Status::clipped
                                                          : Status::pass;
              return {j, st};
            });
  s.emit({{"p", "nlo", "nhi", "exponent", "checked", "violations", "inconclusive", "max_ratio", "first_violation_n",
           "first_violation_s", "status"},
          {row_of(rec)}});
  return s.exit_code();
}

// ---- scan ------------------------------------------------------------------

int cmd_positivity(Session& s, std::uint64_t p, std::uint64_t x_max, std::uint64_t stride) {
  require_odd_prime(p, "scan positivity");
  LedgerRecord rec;
  if (Ledger* ledger = s.ledger()) {
    ResumableScanOptions opts;
    opts.stride = stride;
    opts.scan_budget = s.config().scan_budget;
    opts.force = s.force();
    const ResumableScanOutcome outcome = run_positivity_scan(*ledger, p, x_max, opts);
    if (outcome.resumed_from > 0) s.err() << "resumed from checkpoint x = " << outcome.resumed_from << "\n";
    rec = *outcome.final_record;
    s.note(rec.status);
  } else {
    rec = s.run("positivity", Json{{"p", p}, {"xmax", x_max}}, "scan", [&]() -> TaskResult {
      const PositivityRecord r = positivity_scan(p, x_max, s.config().scan_budget);
      return {positivity_record_to_json(r), r.consistent ? Status::pass : Status::inconclusive};
    });
  }
  s.emit({{"p", "xmax", "sum", "min_value", "argmin", "last_nonpositive_x", "sign_changes", "in_d_list", "consistent",
           "status"},
          {row_of(rec)}});
  return s.exit_code();
}

// ---- bench -----------------------------------------------------------------

int cmd_bench(Session& s) {
  Table t{{"engine", "workload", "value", "seconds"}, {}};
  auto time = [&](const std::string& engine, const std::string& workload, auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    const BigInt v = fn();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.rows.push_back(Json{{"engine", engine}, {"workload", workload}, {"value", to_decimal(v)}, {"seconds", secs}});
  };
  time("naive", "S_3(2^24)", [] { return s_naive({3, 0, pow2(24)}); });
  time("dp", "S_3(2^24)", [] { return s_fast(3, 0, pow2(24)); });
  time("dp", "S_199(2^199)", [] { return s_fast(199, 0, pow2(199)); });
  time("cyclo", "S_199(2^199)", [] { return s_cyclotomic(199, 199); });
  time("complex", "S_61(2^61)", [] { return s_complex(61, 61).nearest; });
  time("scan", "positivity p=5 x<=10^7", [] { return from_i64(positivity_scan(5, 10'000'000).state.sum); });
  s.emit(t);
  return kExitPass;
}

}  // namespace

void CliConfig::validate() const {
  if (enumeration_budget == 0) throw InvalidArgument("enumeration budget must be positive");
  if (scan_budget == 0) throw InvalidArgument("scan budget must be positive");
  if (float_precision_digits != 0 && float_precision_digits < 30) {
    throw InvalidArgument("precision must be at least 30 decimal digits");
  }
}

CliConfig config_from_environment(const EnvLookup& env) {
  CliConfig cfg;
  auto get = [&](const char* name) -> std::optional<std::string> {
    const char* v = env ? env(name) : nullptr;
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::string(v);
  };
  if (auto v = get("NEWMAN_ENUMERATION_BUDGET")) cfg.enumeration_budget = parse_u64(*v, "NEWMAN_ENUMERATION_BUDGET");
  if (auto v = get("NEWMAN_SCAN_BUDGET")) cfg.scan_budget = parse_u64(*v, "NEWMAN_SCAN_BUDGET");
  if (auto v = get("NEWMAN_PRECISION")) {
    cfg.float_precision_digits = static_cast<unsigned>(parse_u64(*v, "NEWMAN_PRECISION"));
  }
  if (auto v = get("NEWMAN_LEDGER")) cfg.ledger_path = *v;
  if (auto v = get("NEWMAN_FORMAT")) cfg.output_format = parse_output_format(*v);
  return cfg;
}

int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err, const EnvLookup& env) {
  CLI::App app{"Exact Newman-type digit sums and verification harness", "newman"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string engine = "all";
  std::string format;
  std::string ledger_path;
  std::string budget;
  std::string scan_budget;
  std::string precision;
  bool force = false;
  app.add_option("--engine", engine, "naive | dp | cyclo | complex | all");
  app.add_option("--format", format, "jsonl | csv | human");
  app.add_option("--ledger", ledger_path, "append results to this JSONL ledger");
  app.add_flag("--force", force, "recompute even when the ledger has the key");
  app.add_option("--budget", budget, "enumeration budget for the naive engine");
  app.add_option("--scan-budget", scan_budget, "budget for sequential scans");
  app.add_option("--precision", precision, "decimal digits for the complex engine (>= 30)");

  std::string m_text, l_text = "0", x_text, pmax_text, p_text, xmax_text, nmax_text, nlo_text, nhi_text;
  std::string stride_text = std::to_string(kDefaultCheckpointStride);
  std::string xscan_text;

  auto* sum = app.add_subcommand("sum", "evaluate S_{m,l}(x)");
  sum->add_option("--m", m_text, "modulus")->required();
  sum->add_option("--l", l_text, "residue class");
  sum->add_option("--x", x_text, "exclusive upper limit (decimal or B^K[*D])")->required();

  auto* table = app.add_subcommand("table", "profile every odd prime up to --pmax");
  table->add_option("--pmax", pmax_text)->required();
  table->add_option("--xscan", xscan_text, "positivity scan length per prime (default 0 = skip)");

  auto* verify = app.add_subcommand("verify", "run a verification task");
  verify->require_subcommand(1);
  auto* t1 = verify->add_subcommand("theorem1", "S_p(2^p) = p when 2 is a primitive root");
  t1->add_option("--pmax", pmax_text)->required();
  auto* t2 = verify->add_subcommand("theorem2", "hypotheses and conclusion of the +-p criterion");
  t2->add_option("--p", p_text)->required();
  t2->add_option("--nmax", nmax_text, "end of the bound window (default 2^p)");
  auto* div = verify->add_subcommand("divisibility", "p | S_p(2^p) for odd primes up to --pmax");
  div->add_option("--pmax", pmax_text)->required();
  auto* scal = verify->add_subcommand("scaling", "S_p(2^p x) = p S_p(2x) for 1 <= x <= --xmax");
  scal->add_option("--p", p_text)->required();
  scal->add_option("--xmax", xmax_text)->required();
  auto* bound = verify->add_subcommand("bound", "|S_p(n)| <= n^{ln p / ((p-1) ln 2)} on a window");
  bound->add_option("--p", p_text)->required();
  bound->add_option("--nlo", nlo_text, "default 1 for p = 3, 5; 2^p otherwise");
  bound->add_option("--nhi", nhi_text)->required();

  auto* scan = app.add_subcommand("scan", "sequential scans");
  scan->require_subcommand(1);
  auto* pos = scan->add_subcommand("positivity", "running S_p(x) for x <= --xmax");
  pos->add_option("--p", p_text)->required();
  pos->add_option("--xmax", xmax_text)->required();
  pos->add_option("--stride", stride_text, "checkpoint stride");

  auto* classify = app.add_subcommand("classify", "full profile of one prime");
  classify->add_option("--p", p_text)->required();
  classify->add_option("--xscan", xscan_text, "positivity scan length (default 10^6)");

  auto* bench = app.add_subcommand("bench", "time each engine");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    CliConfig cfg = config_from_environment(env);
    if (!format.empty()) cfg.output_format = parse_output_format(format);
    if (!ledger_path.empty()) cfg.ledger_path = ledger_path;
    if (!budget.empty()) cfg.enumeration_budget = parse_u64(budget, "--budget");
    if (!scan_budget.empty()) cfg.scan_budget = parse_u64(scan_budget, "--scan-budget");
    if (!precision.empty()) cfg.float_precision_digits = static_cast<unsigned>(parse_u64(precision, "--precision"));
    cfg.validate();

    Session session(cfg, force, out, err);
    if (sum->parsed()) {
      return cmd_sum(session, parse_u64(m_text, "--m"), parse_u64(l_text, "--l"), x_text, engine);
    }
    if (table->parsed()) {
      return cmd_table(session, parse_u64(pmax_text, "--pmax"), xscan_text.empty() ? 0 : parse_u64(xscan_text, "--xscan"));
    }
    if (t1->parsed()) return cmd_theorem1(session, parse_u64(pmax_text, "--pmax"));
    if (t2->parsed()) return cmd_theorem2(session, parse_u64(p_text, "--p"), nmax_text);
    if (div->parsed()) return cmd_divisibility(session, parse_u64(pmax_text, "--pmax"));
    if (scal->parsed()) return cmd_scaling(session, parse_u64(p_text, "--p"), parse_u64(xmax_text, "--xmax"));
    if (bound->parsed()) {
      std::optional<std::uint64_t> lo;
      if (!nlo_text.empty()) lo = parse_u64(nlo_text, "--nlo");
      return cmd_bound(session, parse_u64(p_text, "--p"), lo, parse_u64(nhi_text, "--nhi"));
    }
    if (pos->parsed()) {
      return cmd_positivity(session, parse_u64(p_text, "--p"), parse_u64(xmax_text, "--xmax"),
                            parse_u64(stride_text, "--stride"));
    }
    if (classify->parsed()) {
      return cmd_classify(session, parse_u64(p_text, "--p"),
                          xscan_text.empty() ? 1'000'000 : parse_u64(xscan_text, "--xscan"));
    }
    if (bench->parsed()) return cmd_bench(session);
    err << "usage error: no command\n";
    return kExitUsage;
  } catch (const PrecisionFailure& e) {
    err << "precision failure: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const StorageError& e) {
    err << "storage error: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const ArithmeticMismatch& e) {
    err << "verification failure: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const Error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace newman
