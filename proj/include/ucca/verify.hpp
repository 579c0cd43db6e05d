//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef UCCA_VERIFY_HPP
#define UCCA_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ucca/hwmod.hpp"
#include "ucca/ltl.hpp"

namespace ucca::verify {

struct ReducedAlphabet {
  std::string name;
  std::vector<Address> pc_domain;
  std::vector<Address> sp_domain;
  std::vector<Address> d_addr_domain;
  std::vector<std::optional<Address>> op_ret_domain;
  std::vector<SignalSnapshot> symbols;

  std::size_t size() const { return symbols.size(); }
};

// pc x sp x a fixed list of eleven bus/control effects.
ReducedAlphabet default_alphabet(const UccConfig& config, Address s0 = 0x09F0);
// pc x sp x every (w_en, d_addr, irq_jmp, op_ret) combination.
ReducedAlphabet full_alphabet(const UccConfig& config, Address s0 = 0x09F0);
ReducedAlphabet alphabet_from_symbols(std::string name,
                                      std::vector<SignalSnapshot> symbols);

// Default checker configuration: one UCC [0xC100, 0xC1FC].
UccConfig default_config();

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Odometer over alphabet^depth; the last position varies fastest.
class TraceStream {
 public:
  TraceStream(const ReducedAlphabet& alphabet, std::size_t depth);

  std::uint64_t count() const { return count_; }
  // Writes the next sequence; false once exhausted.
  bool next(std::vector<SignalSnapshot>& out);

 private:
  const ReducedAlphabet* alphabet_;
  std::size_t depth_;
  std::uint64_t count_;
  std::uint64_t emitted_ = 0;
  std::vector<std::size_t> digits_;
};

// |size|^depth, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> sequence_count(std::size_t size, std::size_t depth);

struct CheckOptions {
  Mutation mutation = Mutation::kNone;
  std::uint64_t max_traces = 100'000'000;
  std::size_t max_witnesses_per_spec = 3;
  unsigned threads = 0;  // 0: UCCA_SIM_THREADS or hardware concurrency
};

struct Violation {
  int spec_id = 0;
  int property = 0;
  int ucc = -1;
  std::size_t step = 0;
  std::vector<SignalSnapshot> trace;
};

struct SpecTally {
  int id = 0;
  int property = 0;
  int ucc = -1;
  std::string name;
  std::string text;
  std::uint64_t violations = 0;
};

struct CheckReport {
  std::string mode;
  std::string alphabet;
  std::size_t alphabet_size = 0;
  std::size_t length = 0;  // depth for exhaustive runs
  std::optional<std::uint64_t> seed;
  Mutation mutation = Mutation::kNone;
  std::uint64_t traces_examined = 0;
  std::vector<SpecTally> specs;
  std::vector<Violation> violations;  // witnesses, capped per spec
  double elapsed_seconds = 0;

  bool clean() const;
  // Properties (1..13) with at least one violation.
  std::vector<int> violated_properties() const;
  // Everything except elapsed time; used for determinism checks.
  bool same_outcome(const CheckReport& other) const;
};

unsigned worker_count(unsigned requested);

CheckReport exhaustive_check(const UccConfig& config,
                             const ReducedAlphabet& alphabet, std::size_t depth,
                             const CheckOptions& options = {});

CheckReport random_check(const UccConfig& config,
                         const ReducedAlphabet& alphabet, std::uint64_t n_traces,
                         std::size_t length, std::uint64_t seed,
                         const CheckOptions& options = {});

// Re-runs the monitor and the violated spec on a stored witness.
ltl::CheckResult replay(const UccConfig& config, const Violation& v,
                        Mutation mutation = Mutation::kNone);

}  // namespace ucca::verify

#endif  // UCCA_VERIFY_HPP
