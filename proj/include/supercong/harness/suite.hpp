#pragma once

#include "supercong/congruence.hpp"
#include "supercong/harness/config.hpp"
#include "supercong/harness/report.hpp"
#include "supercong/primes.hpp"

#include <atomic>
#include <condition_variable>
#include <fstream>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace supercong::harness {

struct Task {
  Statement statement;
  std::int64_t p;
  std::optional<Rational> x;
};

/// Scan order: statement, then prime ascending, then x in config order.
inline std::vector<Task> plan(const SuiteConfig &cfg) {
  std::vector<Task> tasks;
  for (auto s : cfg.statements) {
    const auto cap = cfg.prime_cap(s);
    if (cap < cfg.prime_min)
      continue;
    PrimeSieve sieve(static_cast<std::uint64_t>(cfg.prime_min), static_cast<std::uint64_t>(cap));
    while (auto q = sieve.next()) {
      const auto p = static_cast<std::int64_t>(*q);
      if (p < 3)
        continue;
      if (takes_argument(s)) {
        for (const auto &x : cfg.x_values)
          tasks.push_back({s, p, x});
      } else {
        tasks.push_back({s, p, std::nullopt});
      }
    }
  }
  return tasks;
}

inline CongruenceReport execute(const Task &task, const SuiteConfig &cfg) {
  CongruenceReport r;
  try {
    r = run_statement(task.statement, task.p, task.x, cfg.oracle_mode);
  } catch (const std::exception &e) {
    r = CongruenceReport{};
    r.statement = task.statement;
    r.p = task.p;
    r.x = task.x;
    r.pass = false;
    r.detail = std::string("error: ") + e.what();
    return r;
  }
  if (r.skipped())
    return r;
  for (const auto &inj : cfg.injections) {
    if (inj.statement == task.statement && inj.p == task.p) {
      r.rhs = r.rhs + BigResidue(BigInt(task.p), r.rhs.modulus());
      r.pass = r.oracle_mismatch.empty() && r.lhs == r.rhs;
      r.detail += r.detail.empty() ? "injected rhs + p" : "; injected rhs + p";
    }
  }
  return r;
}

/// Runs every planned check on a bounded worker pool. Records reach the log
/// strictly in scan order, so an interrupted log is a prefix of a complete one.
inline RunSummary run_suite(const SuiteConfig &cfg) {
  validate(cfg);
  const auto tasks = plan(cfg);

  std::ofstream log;
  if (!cfg.output_path.empty()) {
    log.open(cfg.output_path, std::ios::out | std::ios::trunc);
    if (!log)
      throw io_error("cannot open output file '" + cfg.output_path + "'");
  }

  std::vector<std::optional<CongruenceReport>> slots(tasks.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size())
        return;
      auto report = execute(tasks[i], cfg);
      {
        std::lock_guard lock(mu);
        slots[i] = std::move(report);
      }
      ready.notify_all();
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.parallelism,
                                                        static_cast<unsigned>(tasks.size())));
  std::vector<std::jthread> pool;
  pool.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j)
    pool.emplace_back(worker);

  RunSummary summary;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    CongruenceReport report;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return slots[i].has_value(); });
      report = std::move(*slots[i]);
      slots[i].reset();
    }
    if (log.is_open()) {
      log << to_jsonl_line(report) << std::flush;
      if (!log)
        throw io_error("write to '" + cfg.output_path + "' failed");
    }
    summary.add(report);
  }
  return summary;
}

} // namespace supercong::harness
