//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>

#include "ucca/verify.hpp"

namespace ucca::verify {

namespace {

struct BusEffect {
  bool w_en;
  std::optional<Address> d_addr;
  bool irq_jmp;
  std::optional<Address> op_ret;
};

void add_unique(std::vector<Address>& v, Address a) {
  if (std::find(v.begin(), v.end(), a) == v.end()) v.push_back(a);
}

std::vector<Address> pc_domain(const UccConfig& config) {
  std::vector<Address> pcs{0};
  for (const UccDefinition& u : config.uccs) {
    const Address mid = static_cast<Address>(((u.r_min + u.r_max) / 2) & ~1u);
    for (Address a : {static_cast<Address>(u.r_min - 2), u.r_min, mid, u.r_max,
                      static_cast<Address>(u.r_max + 2)}) {
      add_unique(pcs, a);
    }
  }
  return pcs;
}

ReducedAlphabet build(std::string name, const UccConfig& config, Address s0,
                      const std::vector<BusEffect>& effects) {
  ReducedAlphabet a;
  a.name = std::move(name);
  a.pc_domain = pc_domain(config);
  a.sp_domain = {static_cast<Address>(s0 - 2), s0,
                 static_cast<Address>(s0 + 2)};
  for (const BusEffect& e : effects) {
    if (e.d_addr) add_unique(a.d_addr_domain, *e.d_addr);
    if (std::find(a.op_ret_domain.begin(), a.op_ret_domain.end(), e.op_ret) ==
        a.op_ret_domain.end()) {
      a.op_ret_domain.push_back(e.op_ret);
    }
  }
  for (Address pc : a.pc_domain) {
    for (Address sp : a.sp_domain) {
      for (const BusEffect& e : effects) {
        SignalSnapshot s;
        s.pc = pc;
        s.sp = sp;
        s.w_en = e.w_en;
        s.d_addr = e.d_addr;
        s.irq_jmp = e.irq_jmp;
        s.op_ret = e.op_ret;
        a.symbols.push_back(s);
      }
    }
  }
  return a;
}

}  // namespace

UccConfig default_config() {
  UccConfig c;
  c.uccs = {{0xC100, 0xC1FC}};
  return c;
}

ReducedAlphabet default_alphabet(const UccConfig& config, Address s0) {
  if (config.uccs.empty()) throw std::invalid_argument("config has no UCC");
  const UccDefinition& u = config.uccs.front();
  const Address lo = static_cast<Address>(u.r_min - 2);
  const Address hi = static_cast<Address>(u.r_max + 2);
  const Address below = static_cast<Address>(s0 - 2);
  const Address above = static_cast<Address>(s0 + 2);
  const Address cr = config.cr_base;
  const std::vector<BusEffect> effects = {
      {false, std::nullopt, false, std::nullopt},  // idle
      {false, std::nullopt, false, hi},            // call, push not on the bus
      {true, cr, false, std::nullopt},             // CR write
      {true, above, false, std::nullopt},          // store above s0
      {true, s0, false, std::nullopt},             // store at s0
      {true, below, false, std::nullopt},          // store below s0
      {true, below, false, lo},                    // call
      {true, below, false, hi},                    // call
      {false, std::nullopt, true, std::nullopt},   // interrupt, no frame
      {true, below, true, hi},                     // interrupt entry
      {true, s0, true, lo},                        // interrupt entry
  };
  return build("default", config, s0, effects);
}

ReducedAlphabet full_alphabet(const UccConfig& config, Address s0) {
  if (config.uccs.empty()) throw std::invalid_argument("config has no UCC");
  const UccDefinition& u = config.uccs.front();
  const std::vector<std::optional<Address>> op_rets = {
      std::nullopt, static_cast<Address>(u.r_min - 2),
      static_cast<Address>(u.r_max + 2)};
  const std::vector<Address> data = {config.cr_base,
                                     static_cast<Address>(s0 - 2), s0,
                                     static_cast<Address>(s0 + 2)};
  std::vector<BusEffect> effects;
  for (bool irq : {false, true}) {
    for (const auto& op_ret : op_rets) {
      effects.push_back({false, std::nullopt, irq, op_ret});
      for (Address d : data) {
        effects.push_back({false, d, irq, op_ret});
        effects.push_back({true, d, irq, op_ret});
      }
    }
  }
  return build("full", config, s0, effects);
}

ReducedAlphabet alphabet_from_symbols(std::string name,
                                      std::vector<SignalSnapshot> symbols) {
  ReducedAlphabet a;
  a.name = std::move(name);
  for (const SignalSnapshot& s : symbols) {
    add_unique(a.pc_domain, s.pc);
    add_unique(a.sp_domain, s.sp);
    if (s.d_addr) add_unique(a.d_addr_domain, *s.d_addr);
    if (std::find(a.op_ret_domain.begin(), a.op_ret_domain.end(), s.op_ret) ==
        a.op_ret_domain.end()) {
      a.op_ret_domain.push_back(s.op_ret);
    }
  }
  a.symbols = std::move(symbols);
  return a;
}

}  // namespace ucca::verify
