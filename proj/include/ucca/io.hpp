//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef UCCA_IO_HPP
#define UCCA_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ucca/hwmod.hpp"
#include "ucca/ltl.hpp"
#include "ucca/runner.hpp"
#include "ucca/scenario.hpp"
#include "ucca/verify.hpp"

namespace ucca::io {

using Json = nlohmann::ordered_json;

// Well-formed file, bad contents.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Missing, unreadable or unwritable file.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string hex(Value v);  // "0x01AB"; -1 is not accepted
Json hex_or_null(Value v);
// Accepts "0x..." strings, decimal strings and integers in 0..0xFFFF.
Address parse_address(const Json& j, std::string_view what);

std::string read_text(const std::filesystem::path& p);
std::vector<std::uint8_t> read_bytes(const std::filesystem::path& p);
void write_text(const std::filesystem::path& p, std::string_view text);
void write_bytes(const std::filesystem::path& p,
                 std::span<const std::uint8_t> bytes);
Json parse_json(std::string_view text, std::string_view what);

// {"cr_base": "0x0100", "capacity": 8, "uccs": [{"min": "0xC100", ...}]}
Json to_json(const UccConfig& c);
UccConfig config_from_json(const Json& j);
UccConfig load_config(const std::filesystem::path& p);

// [{"step": 12, "irq": 3}, ...]
Json to_json(const std::vector<corpus::Interrupt>& schedule);
std::vector<corpus::Interrupt> schedule_from_json(const Json& j);
std::vector<corpus::Interrupt> load_schedule(const std::filesystem::path& p);

Json to_json(const corpus::LabelMap& labels);
Json to_json(const SignalSnapshot& s);
SignalSnapshot snapshot_from_json(const Json& j);

Cause cause_from_string(std::string_view s);

// Line-delimited trace: one header record, then one record per row.
struct TraceFile {
  ltl::Trace trace;
  // Parallel to trace.rows when present in the file.
  std::vector<std::vector<Cause>> causes;
};

void write_trace(std::ostream& out, const ltl::Trace& trace,
                 std::span<const Verdict> verdicts = {});
TraceFile read_trace(std::istream& in);
TraceFile load_trace(const std::filesystem::path& p);

Json to_json(const verify::CheckReport& r);
Json specs_to_json(std::span<const ltl::BuiltinSpec> specs);

// Scenario sidecar manifest; `source` names the assembly file.
Json manifest_of(const corpus::Scenario& s, const std::string& source_file);
// Writes <dir>/<name>.s and <dir>/<name>.json.
void export_scenario(const corpus::Scenario& s,
                     const std::filesystem::path& dir);
corpus::Scenario load_scenario(const std::filesystem::path& manifest);

Json to_json(const corpus::ScenarioResult& r);
Json matrix_to_json(std::span<const corpus::ScenarioResult> results);

}  // namespace ucca::io

#endif  // UCCA_IO_HPP
