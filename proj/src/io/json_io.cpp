//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ucca/io.hpp"

namespace ucca::io {

namespace fs = std::filesystem;

std::string hex(Value v) {
  if (v < 0 || v > 0xFFFF) {
    throw std::invalid_argument("hex: value out of range");
  }
  char buf[8];
  std::snprintf(buf, sizeof buf, "0x%04X", static_cast<unsigned>(v));
  return buf;
}

Json hex_or_null(Value v) { return v == kNone ? Json(nullptr) : Json(hex(v)); }

Address parse_address(const Json& j, std::string_view what) {
  long long v = -1;
  if (j.is_number_integer()) {
    v = j.get<long long>();
  } else if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      std::size_t used = 0;
      v = std::stoll(s, &used, 0);
      if (used != s.size()) v = -1;
    } catch (const std::exception&) {
      v = -1;
    }
  }
  if (v < 0 || v > 0xFFFF) {
    throw FormatError(std::string(what) + ": expected a 16-bit address");
  }
  return static_cast<Address>(v);
}

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::uint8_t> read_bytes(const fs::path& p) {
  const std::string s = read_text(p);
  return {s.begin(), s.end()};
}

void write_text(const fs::path& p, std::string_view text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + p.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("short write to " + p.string());
}

void write_bytes(const fs::path& p, std::span<const std::uint8_t> bytes) {
  write_text(p, {reinterpret_cast<const char*>(bytes.data()), bytes.size()});
}

Json parse_json(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

Json to_json(const UccConfig& c) {
  Json j;
  j["cr_base"] = hex(c.cr_base);
  j["capacity"] = c.capacity;
  j["uccs"] = Json::array();
  for (const UccDefinition& u : c.uccs) {
    j["uccs"].push_back({{"min", hex(u.r_min)}, {"max", hex(u.r_max)}});
  }
  return j;
}

UccConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("config: expected an object");
  UccConfig c;
  if (j.contains("cr_base")) c.cr_base = parse_address(j["cr_base"], "cr_base");
  if (j.contains("capacity")) {
    if (!j["capacity"].is_number_unsigned()) {
      throw FormatError("config: capacity must be a non-negative integer");
    }
    c.capacity = j["capacity"].get<std::size_t>();
  }
  if (!j.contains("uccs") || !j["uccs"].is_array()) {
    throw FormatError("config: missing uccs array");
  }
  for (const Json& u : j["uccs"]) {
    if (!u.is_object() || !u.contains("min") || !u.contains("max")) {
      throw FormatError("config: each ucc needs min and max");
    }
    c.uccs.push_back({parse_address(u["min"], "ucc.min"),
                      parse_address(u["max"], "ucc.max")});
  }
  return c;
}

UccConfig load_config(const fs::path& p) {
  return config_from_json(parse_json(read_text(p), p.string()));
}

Json to_json(const std::vector<corpus::Interrupt>& schedule) {
  Json j = Json::array();
  for (const corpus::Interrupt& i : schedule) {
    j.push_back({{"step", i.step}, {"irq", i.irq}});
  }
  return j;
}

std::vector<corpus::Interrupt> schedule_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("schedule: expected an array");
  std::vector<corpus::Interrupt> out;
  for (const Json& e : j) {
    if (!e.is_object() || !e.contains("step") || !e.contains("irq") ||
        !e["step"].is_number_unsigned() || !e["irq"].is_number_integer()) {
      throw FormatError("schedule: entries need integer step and irq");
    }
    const int irq = e["irq"].get<int>();
    if (irq < 0 || irq >= static_cast<int>(MemoryMap::kIvtSlots)) {
      throw FormatError("schedule: irq out of range");
    }
    out.push_back({e["step"].get<std::uint64_t>(), irq});
  }
  return out;
}

std::vector<corpus::Interrupt> load_schedule(const fs::path& p) {
  return schedule_from_json(parse_json(read_text(p), p.string()));
}

Json to_json(const corpus::LabelMap& labels) {
  Json j = Json::object();
  for (const auto& [name, addr] : labels) j[name] = hex(addr);
  return j;
}

Json to_json(const SignalSnapshot& s) {
  return {{"step", s.step},
          {"pc", hex(s.pc)},
          {"sp", hex(s.sp)},
          {"d_addr", hex_or_null(to_value(s.d_addr))},
          {"w_en", s.w_en},
          {"irq_jmp", s.irq_jmp},
          {"op_ret", hex_or_null(to_value(s.op_ret))},
          {"reset", s.reset}};
}

SignalSnapshot snapshot_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("snapshot: expected an object");
  SignalSnapshot s;
  try {
    s.step = j.value("step", std::uint64_t{0});
    s.pc = parse_address(j.at("pc"), "pc");
    s.sp = parse_address(j.at("sp"), "sp");
    if (!j.at("d_addr").is_null()) s.d_addr = parse_address(j["d_addr"], "d_addr");
    s.w_en = j.at("w_en").get<bool>();
    s.irq_jmp = j.at("irq_jmp").get<bool>();
    if (!j.at("op_ret").is_null()) s.op_ret = parse_address(j["op_ret"], "op_ret");
    s.reset = j.value("reset", false);
  } catch (const Json::exception& e) {
    throw FormatError(std::string("snapshot: ") + e.what());
  }
  return s;
}

Cause cause_from_string(std::string_view s) {
  const auto open = s.find('(');
  const auto kind = cause_kind_from_string(s.substr(0, open));
  if (!kind) throw FormatError("unknown cause: " + std::string(s));
  if (*kind == CauseKind::kCrIntegrity) {
    if (open != std::string_view::npos) {
      throw FormatError("cr-integrity takes no index");
    }
    return {*kind, -1};
  }
  if (open == std::string_view::npos || s.back() != ')') {
    throw FormatError("cause needs a UCC index: " + std::string(s));
  }
  const std::string idx(s.substr(open + 1, s.size() - open - 2));
  int ucc = -1;
  try {
    std::size_t used = 0;
    ucc = std::stoi(idx, &used);
    if (used != idx.size()) ucc = -1;
  } catch (const std::exception&) {
  }
  if (ucc < 0 || ucc >= static_cast<int>(kMaxUccs)) {
    throw FormatError("bad UCC index in cause: " + std::string(s));
  }
  return {*kind, ucc};
}

Json to_json(const verify::CheckReport& r) {
  Json j;
  j["mode"] = r.mode;
  j["alphabet"] = r.alphabet;
  j["alphabet_size"] = r.alphabet_size;
  j["length"] = r.length;
  j["seed"] = nullptr;
  if (r.seed) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%llX",
                  static_cast<unsigned long long>(*r.seed));
    j["seed"] = buf;
  }
  j["mutation"] = std::string(to_string(r.mutation));
  j["traces_examined"] = r.traces_examined;
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["clean"] = r.clean();
  j["specs"] = Json::array();
  for (const verify::SpecTally& t : r.specs) {
    j["specs"].push_back({{"id", t.id},
                          {"property", t.property},
                          {"ucc", t.ucc},
                          {"name", t.name},
                          {"text", t.text},
                          {"violations", t.violations},
                          {"holds", t.violations == 0}});
  }
  j["violations"] = Json::array();
  for (const verify::Violation& v : r.violations) {
    Json w = Json::array();
    for (const SignalSnapshot& s : v.trace) w.push_back(to_json(s));
    j["violations"].push_back({{"spec_id", v.spec_id},
                               {"property", v.property},
                               {"ucc", v.ucc},
                               {"step", v.step},
                               {"trace", w}});
  }
  return j;
}

Json specs_to_json(std::span<const ltl::BuiltinSpec> specs) {
  Json j = Json::array();
  for (const ltl::BuiltinSpec& s : specs) {
    Json e = {{"id", s.id},
              {"property", s.property},
              {"ucc", s.ucc},
              {"name", s.name},
              {"formula", ltl::print(s.formula)}};
    if (!s.note.empty()) e["note"] = s.note;
    j.push_back(e);
  }
  return j;
}

Json manifest_of(const corpus::Scenario& s, const std::string& source_file) {
  Json j;
  j["name"] = s.name;
  j["description"] = s.description;
  j["source"] = source_file;
  j["cr_base"] = hex(s.cr_base);
  j["uccs"] = Json::array();
  for (const corpus::UccBounds& u : s.uccs) {
    j["uccs"].push_back({{"min", u.min}, {"max", u.max}});
  }
  j["schedule"] = to_json(s.schedule);
  j["expected"] = s.expected.describe();
  j["max_steps"] = s.max_steps;
  return j;
}

void export_scenario(const corpus::Scenario& s, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string());
  const std::string src = s.name + ".s";
  write_text(dir / src, s.source);
  write_text(dir / (s.name + ".json"), manifest_of(s, src).dump(2) + "\n");
}

namespace {

corpus::Expectation expectation_from_string(const std::string& text) {
  if (text == "completes") return {};
  const std::string prefix = "reset-at ";
  if (text.rfind(prefix, 0) != 0) {
    throw FormatError("expected: \"completes\" or \"reset-at <cause>\"");
  }
  return {false, cause_from_string(text.substr(prefix.size()))};
}

}  // namespace

corpus::Scenario load_scenario(const fs::path& manifest) {
  const Json j = parse_json(read_text(manifest), manifest.string());
  corpus::Scenario s;
  try {
    s.name = j.at("name").get<std::string>();
    s.description = j.value("description", "");
    const fs::path src = manifest.parent_path() / j.at("source").get<std::string>();
    s.source = read_text(src);
    if (j.contains("cr_base")) s.cr_base = parse_address(j["cr_base"], "cr_base");
    for (const Json& u : j.at("uccs")) {
      s.uccs.push_back({u.at("min").get<std::string>(),
                        u.at("max").get<std::string>()});
    }
    if (j.contains("schedule")) s.schedule = schedule_from_json(j["schedule"]);
    s.expected = expectation_from_string(j.at("expected").get<std::string>());
    s.max_steps = j.value("max_steps", s.max_steps);
  } catch (const Json::exception& e) {
    throw FormatError(manifest.string() + ": " + e.what());
  }
  return s;
}

Json to_json(const corpus::ScenarioResult& r) {
  Json j;
  j["name"] = r.name;
  j["expected"] = r.expected.describe();
  j["actual"] = r.actual();
  j["matches"] = r.matches;
  j["outcome"] = std::string(corpus::to_string(r.run.outcome));
  j["steps"] = r.run.snapshots.size();
  if (!r.run.resets.empty()) {
    j["reset_step"] = r.run.resets.front().step;
  } else {
    j["reset_step"] = nullptr;
  }
  j["specs_hold"] = r.specs_hold();
  Json failed = Json::array();
  for (const corpus::SpecOutcome& s : r.specs) {
    if (!s.result.holds) {
      failed.push_back({{"id", s.id}, {"witness", s.result.witness}});
    }
  }
  j["failed_specs"] = failed;
  return j;
}

Json matrix_to_json(std::span<const corpus::ScenarioResult> results) {
  Json j;
  std::size_t passed = 0;
  j["scenarios"] = Json::array();
  for (const corpus::ScenarioResult& r : results) {
    if (r.matches && r.specs_hold()) ++passed;
    j["scenarios"].push_back(to_json(r));
  }
  j["total"] = results.size();
  j["passed"] = passed;
  return j;
}

}  // namespace ucca::io
