//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

#include "ucca/trace_builder.hpp"
#include "ucca/verify.hpp"

namespace ucca::verify {

namespace {

constexpr std::uint64_t kExhaustiveChunk = 1 << 16;
constexpr std::uint64_t kRandomChunk = 1 << 12;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

struct ChunkResult {
  std::uint64_t examined = 0;
  std::vector<std::uint64_t> tally;
  std::vector<Violation> witnesses;
};

// Per-thread state: compiled specs plus a prefix cache of monitor states
// so odometer steps only replay the changed suffix.
class Worker {
 public:
  Worker(const Monitor& monitor, const std::vector<ltl::BuiltinSpec>& specs,
         const ReducedAlphabet& alphabet, std::size_t length,
         std::size_t witness_cap)
      : monitor_(monitor),
        specs_(specs),
        alphabet_(alphabet),
        cap_(witness_cap),
        states_(length + 1, monitor.initial_state()) {
    for (const auto& s : specs) evals_.emplace_back(s.formula);
    trace_.regions = regions_of(monitor);
    trace_.rows.resize(length);
  }

  void process(const std::vector<std::size_t>& digits, std::size_t from,
               ChunkResult& out) {
    for (std::size_t p = from; p < digits.size(); ++p) {
      SignalSnapshot s = alphabet_.symbols[digits[p]];
      s.step = p;
      MonitorState& next = states_[p + 1];
      next = states_[p];
      const Verdict v = monitor_.observe(states_[p], s, next);
      trace_.rows[p] = make_row(s, next, v.reset);
    }
    ++out.examined;
    for (std::size_t k = 0; k < evals_.size(); ++k) {
      const ltl::CheckResult r = evals_[k].check(trace_);
      if (r.holds) continue;
      if (out.tally[k]++ >= cap_) continue;
      Violation w;
      w.spec_id = specs_[k].id;
      w.property = specs_[k].property;
      w.ucc = specs_[k].ucc;
      w.step = r.witness;
      for (std::size_t p = 0; p < digits.size(); ++p) {
        w.trace.push_back(alphabet_.symbols[digits[p]]);
        w.trace.back().step = p;
      }
      out.witnesses.push_back(std::move(w));
    }
  }

 private:
  const Monitor& monitor_;
  const std::vector<ltl::BuiltinSpec>& specs_;
  const ReducedAlphabet& alphabet_;
  std::size_t cap_;
  std::vector<MonitorState> states_;
  std::vector<ltl::Evaluator> evals_;
  ltl::Trace trace_;
};

using ChunkFn = std::function<void(Worker&, std::uint64_t, ChunkResult&)>;

CheckReport run_chunks(const UccConfig& config, const ReducedAlphabet& alphabet,
                       std::size_t length, std::uint64_t n_chunks,
                       const CheckOptions& options, const ChunkFn& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  const Monitor monitor(config, options.mutation);
  const auto specs = ltl::builtin_specs(std::max<std::size_t>(1, config.uccs.size()));

  std::vector<ChunkResult> results(n_chunks);
  std::atomic<std::uint64_t> next_chunk{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    try {
      Worker w(monitor, specs, alphabet, length, options.max_witnesses_per_spec);
      for (std::uint64_t c = next_chunk++; c < n_chunks; c = next_chunk++) {
        results[c].tally.assign(specs.size(), 0);
        fn(w, c, results[c]);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!error) error = std::current_exception();
      next_chunk = n_chunks;
    }
  };
  const unsigned n_threads = static_cast<unsigned>(
      std::min<std::uint64_t>(worker_count(options.threads),
                              std::max<std::uint64_t>(1, n_chunks)));
  if (n_threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  CheckReport report;
  report.alphabet = alphabet.name;
  report.alphabet_size = alphabet.size();
  report.length = length;
  report.mutation = options.mutation;
  for (const auto& s : specs) {
    report.specs.push_back({s.id, s.property, s.ucc, s.name, s.text, 0});
  }
  std::vector<std::size_t> kept(specs.size(), 0);
  for (const ChunkResult& r : results) {
    report.traces_examined += r.examined;
    for (std::size_t k = 0; k < r.tally.size(); ++k) {
      report.specs[k].violations += r.tally[k];
    }
    for (const Violation& v : r.witnesses) {
      std::size_t& n = kept[v.spec_id - 1];
      if (n < options.max_witnesses_per_spec) {
        report.violations.push_back(v);
        ++n;
      }
    }
  }
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& a, const Violation& b) {
                     return a.spec_id < b.spec_id;
                   });
  report.elapsed_seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
  return report;
}

}  // namespace

unsigned worker_count(unsigned requested) {
  unsigned n = requested;
  if (n == 0) {
    if (const char* env = std::getenv("UCCA_SIM_THREADS")) {
      n = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    }
  }
  if (n == 0) n = std::thread::hardware_concurrency();
  return std::max(1u, n);
}

bool CheckReport::clean() const {
  return std::all_of(specs.begin(), specs.end(),
                     [](const SpecTally& s) { return s.violations == 0; });
}

std::vector<int> CheckReport::violated_properties() const {
  std::vector<int> out;
  for (const SpecTally& s : specs) {
    if (s.violations > 0 &&
        std::find(out.begin(), out.end(), s.property) == out.end()) {
      out.push_back(s.property);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool CheckReport::same_outcome(const CheckReport& o) const {
  if (mode != o.mode || alphabet != o.alphabet ||
      alphabet_size != o.alphabet_size || length != o.length ||
      seed != o.seed || mutation != o.mutation ||
      traces_examined != o.traces_examined ||
      specs.size() != o.specs.size() ||
      violations.size() != o.violations.size()) {
    return false;
  }
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (specs[i].id != o.specs[i].id ||
        specs[i].violations != o.specs[i].violations) {
      return false;
    }
  }
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const Violation& a = violations[i];
    const Violation& b = o.violations[i];
    if (a.spec_id != b.spec_id || a.step != b.step || a.trace != b.trace) {
      return false;
    }
  }
  return true;
}

CheckReport exhaustive_check(const UccConfig& config,
                             const ReducedAlphabet& alphabet, std::size_t depth,
                             const CheckOptions& options) {
  const auto total = sequence_count(alphabet.size(), depth);
  if (!total || *total > options.max_traces) {
    throw BudgetExceeded("exhaustive run of depth " + std::to_string(depth) +
                         " exceeds the trace budget of " +
                         std::to_string(options.max_traces));
  }
  const std::uint64_t count = depth == 0 ? 0 : *total;
  const std::uint64_t n_chunks = (count + kExhaustiveChunk - 1) / kExhaustiveChunk;
  const std::size_t base = alphabet.size();

  CheckReport r = run_chunks(
      config, alphabet, depth, n_chunks, options,
      [&](Worker& w, std::uint64_t c, ChunkResult& out) {
        const std::uint64_t begin = c * kExhaustiveChunk;
        const std::uint64_t end = std::min(count, begin + kExhaustiveChunk);
        std::vector<std::size_t> digits(depth);
        std::uint64_t x = begin;
        for (std::size_t p = depth; p-- > 0;) {
          digits[p] = x % base;
          x /= base;
        }
        w.process(digits, 0, out);
        for (std::uint64_t i = begin + 1; i < end; ++i) {
          std::size_t p = depth;
          while (p-- > 0) {
            if (++digits[p] < base) break;
            digits[p] = 0;
          }
          w.process(digits, p, out);
        }
      });
  r.mode = "exhaustive";
  return r;
}

CheckReport random_check(const UccConfig& config,
                         const ReducedAlphabet& alphabet, std::uint64_t n_traces,
                         std::size_t length, std::uint64_t seed,
                         const CheckOptions& options) {
  if (length < 2) throw std::invalid_argument("random_check: length < 2");
  if (alphabet.size() == 0) {
    throw std::invalid_argument("random_check: empty alphabet");
  }
  if (n_traces > options.max_traces) {
    throw BudgetExceeded("random run exceeds the trace budget");
  }
  const std::uint64_t n_chunks = (n_traces + kRandomChunk - 1) / kRandomChunk;
  CheckReport r = run_chunks(
      config, alphabet, length, n_chunks, options,
      [&](Worker& w, std::uint64_t c, ChunkResult& out) {
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(c)));
        std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
        const std::uint64_t begin = c * kRandomChunk;
        const std::uint64_t end = std::min(n_traces, begin + kRandomChunk);
        std::vector<std::size_t> digits(length);
        for (std::uint64_t i = begin; i < end; ++i) {
          for (auto& d : digits) d = pick(rng);
          w.process(digits, 0, out);
        }
      });
  r.mode = "random";
  r.seed = seed;
  return r;
}

ltl::CheckResult replay(const UccConfig& config, const Violation& v,
                        Mutation mutation) {
  const Monitor monitor(config, mutation);
  const auto specs =
      ltl::builtin_specs(std::max<std::size_t>(1, config.uccs.size()));
  if (v.spec_id < 1 || v.spec_id > static_cast<int>(specs.size())) {
    throw std::out_of_range("unknown spec id");
  }
  const MonitoredTrace mt = monitor_trace(monitor, v.trace);
  return ltl::check(specs[v.spec_id - 1].formula, mt.trace);
}

}  // namespace ucca::verify
