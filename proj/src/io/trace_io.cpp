//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <fstream>
#include <istream>
#include <ostream>

#include "ucca/io.hpp"

namespace ucca::io {

namespace {

constexpr std::string_view kFormat = "ucca-trace";
constexpr int kVersion = 1;

Value value_or_none(const Json& j, std::string_view what) {
  return j.is_null() ? kNone : parse_address(j, what);
}

std::uint8_t fsm_from_string(const Json& j) {
  for (auto s : {FsmState::kOut, FsmState::kIn, FsmState::kIrq,
                 FsmState::kReset}) {
    if (j.get<std::string>() == to_string(s)) {
      return static_cast<std::uint8_t>(s);
    }
  }
  throw FormatError("unknown FSM state " + j.dump());
}

std::uint8_t cr_from_string(const Json& j) {
  for (auto s : {CrState::kRun, CrState::kReset}) {
    if (j.get<std::string>() == to_string(s)) {
      return static_cast<std::uint8_t>(s);
    }
  }
  throw FormatError("unknown CR state " + j.dump());
}

Json header(const ltl::Regions& r) {
  Json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["cr"] = {{"lo", hex_or_null(r.cr_hi < r.cr_lo ? kNone : r.cr_lo)},
             {"hi", hex_or_null(r.cr_hi < r.cr_lo ? kNone : r.cr_hi)}};
  j["uccs"] = Json::array();
  for (const UccDefinition& u : r.uccs) {
    j["uccs"].push_back({{"min", hex(u.r_min)}, {"max", hex(u.r_max)}});
  }
  return j;
}

ltl::Regions regions_from(const Json& j) {
  if (!j.is_object() || j.value("format", "") != kFormat) {
    throw FormatError("trace: first record is not a ucca-trace header");
  }
  if (j.value("version", 0) != kVersion) {
    throw FormatError("trace: unsupported version");
  }
  ltl::Regions r;
  const Json& cr = j.at("cr");
  if (!cr.at("lo").is_null()) {
    r.cr_lo = parse_address(cr["lo"], "cr.lo");
    r.cr_hi = parse_address(cr.at("hi"), "cr.hi");
  }
  for (const Json& u : j.at("uccs")) {
    r.uccs.push_back({parse_address(u.at("min"), "ucc.min"),
                      parse_address(u.at("max"), "ucc.max")});
  }
  if (r.uccs.size() > kMaxUccs) throw FormatError("trace: too many UCCs");
  return r;
}

Json row_json(const ltl::TraceRow& row, std::size_t n_ucc,
              const Verdict* verdict) {
  Json j;
  j["step"] = row.step;
  j["pc"] = hex(row.pc);
  j["sp"] = hex(row.sp);
  j["d_addr"] = hex_or_null(row.d_addr);
  j["w_en"] = row.w_en;
  j["irq_jmp"] = row.irq_jmp;
  j["op_ret"] = hex_or_null(row.op_ret);
  j["reset"] = row.reset;
  j["cr"] = std::string(to_string(static_cast<CrState>(row.cr_state)));
  j["ucc"] = Json::array();
  for (std::size_t i = 0; i < n_ucc; ++i) {
    j["ucc"].push_back(
        {{"ret_exp", hex_or_null(row.ret_exp[i])},
         {"bp", hex_or_null(row.bp[i])},
         {"ret", to_string(static_cast<FsmState>(row.ret_state[i]))},
         {"stack", to_string(static_cast<FsmState>(row.stack_state[i]))}});
  }
  if (verdict) {
    j["causes"] = Json::array();
    for (const Cause& c : verdict->causes.list()) {
      j["causes"].push_back(c.describe());
    }
  }
  return j;
}

ltl::TraceRow row_from(const Json& j, std::size_t n_ucc,
                       std::vector<Cause>& causes) {
  ltl::TraceRow row;
  row.step = j.at("step").get<std::uint64_t>();
  row.pc = parse_address(j.at("pc"), "pc");
  row.sp = parse_address(j.at("sp"), "sp");
  row.d_addr = value_or_none(j.at("d_addr"), "d_addr");
  row.w_en = j.at("w_en").get<bool>();
  row.irq_jmp = j.at("irq_jmp").get<bool>();
  row.op_ret = value_or_none(j.at("op_ret"), "op_ret");
  row.reset = j.at("reset").get<bool>();
  row.cr_state = cr_from_string(j.at("cr"));
  const Json& uccs = j.at("ucc");
  if (!uccs.is_array() || uccs.size() != n_ucc) {
    throw FormatError("trace: row has wrong number of UCC entries");
  }
  for (std::size_t i = 0; i < n_ucc; ++i) {
    row.ret_exp[i] = value_or_none(uccs[i].at("ret_exp"), "ret_exp");
    row.bp[i] = value_or_none(uccs[i].at("bp"), "bp");
    row.ret_state[i] = fsm_from_string(uccs[i].at("ret"));
    row.stack_state[i] = fsm_from_string(uccs[i].at("stack"));
  }
  causes.clear();
  if (j.contains("causes")) {
    for (const Json& c : j["causes"]) {
      causes.push_back(cause_from_string(c.get<std::string>()));
    }
  }
  return row;
}

}  // namespace

void write_trace(std::ostream& out, const ltl::Trace& trace,
                 std::span<const Verdict> verdicts) {
  out << header(trace.regions).dump() << '\n';
  const std::size_t n = trace.regions.uccs.size();
  for (std::size_t i = 0; i < trace.rows.size(); ++i) {
    const Verdict* v = i < verdicts.size() ? &verdicts[i] : nullptr;
    out << row_json(trace.rows[i], n, v).dump() << '\n';
  }
}

TraceFile read_trace(std::istream& in) {
  TraceFile f;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::vector<Cause> causes;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const Json j = parse_json(line, "trace line " + std::to_string(lineno));
    try {
      if (!have_header) {
        f.trace.regions = regions_from(j);
        have_header = true;
        continue;
      }
      f.trace.rows.push_back(row_from(j, f.trace.regions.uccs.size(), causes));
      f.causes.push_back(causes);
    } catch (const Json::exception& e) {
      throw FormatError("trace line " + std::to_string(lineno) + ": " +
                        e.what());
    } catch (const FormatError& e) {
      throw FormatError("trace line " + std::to_string(lineno) + ": " +
                        e.what());
    }
  }
  if (!have_header) throw FormatError("trace: empty file");
  if (f.trace.rows.empty()) throw FormatError("trace: no rows");
  return f;
}

TraceFile load_trace(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw IoError("cannot read " + p.string());
  return read_trace(in);
}

}  // namespace ucca::io
