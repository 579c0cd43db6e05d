//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <array>
#include <string>

#include "ucca/ltl.hpp"

namespace ucca::ltl {

namespace {

struct Template {
  int property;
  const char* name;
  const char* text;  // $U region, $R ret_exp register, $B bp register
  const char* note;
};

constexpr const char* kRetScope =
    "'| reset' is scoped inside the implication consequent, which is the "
    "body of W; the obligation lasts until the next in-UCC step";

constexpr std::array<Template, 12> kPerUcc = {{
    {2, "ret-latch-after-reset",
     "G(reset -> ((!(pc in $U) & X(pc) in $U -> (X($R) = op_ret | reset)) "
     "W (pc in $U)))",
     kRetScope},
    {3, "ret-latch-after-exit",
     "G(!(pc in $U) & Y(pc) in $U & !Y(irq_jmp) -> ((X(pc) in $U -> "
     "(X($R) = op_ret | reset)) W (pc in $U)))",
     kRetScope},
    {4, "ret-frozen-in-ucc",
     "G(pc in $U & !(Y(pc) in $U) -> ((X($R) = $R | reset) W !(pc in $U)))",
     ""},
    {5, "ret-frozen-in-irq",
     "G(!(pc in $U) & Y(pc) in $U & Y(irq_jmp) & !Y(reset) -> "
     "((X($R) = $R) W (pc in $U | reset)))",
     ""},
    {6, "ret-exit-match",
     "G(!reset & pc in $U & !(X(pc) in $U) & !irq_jmp -> "
     "(X(pc) = $R | X(reset)))",
     ""},
    {7, "bp-track-after-reset",
     "G(reset -> ((!(Y(pc) = pc) -> ($B = sp | reset)) W (pc in $U)))",
     "bp is compared with the current step's sp, which is sampled before "
     "the instruction executes"},
    {8, "bp-hold-on-entry",
     "G(!(pc in $U) & X(pc) in $U -> (X($B) = $B | reset))", ""},
    {9, "bp-track-after-exit",
     "G(!(pc in $U) & Y(pc) in $U & !Y(irq_jmp) -> ((!(Y(pc) = pc) -> "
     "($B = sp | reset)) W (pc in $U)))",
     "bp is compared with the current step's sp, which is sampled before "
     "the instruction executes"},
    {10, "bp-frozen-in-ucc",
     "G(pc in $U & !(Y(pc) in $U) -> ((X($B) = $B | reset) W !(pc in $U)))",
     ""},
    {11, "bp-frozen-in-irq",
     "G(!(pc in $U) & Y(pc) in $U & Y(irq_jmp) & !Y(reset) -> "
     "((X($B) = $B) W (pc in $U | reset)))",
     ""},
    {12, "stack-write-bound", "G(pc in $U & w_en & d_addr >= $B -> reset)",
     ""},
    {13, "sp-restored-on-exit",
     "G(!reset & pc in $U & !(X(pc) in $U) & !irq_jmp -> "
     "(X(sp) = $B | X(reset)))",
     ""},
}};

std::string instantiate(std::string text, std::size_t ucc) {
  const std::string idx = std::to_string(ucc);
  const std::pair<const char*, std::string> subst[] = {
      {"$U", "UCC" + idx}, {"$R", "ret_exp" + idx}, {"$B", "bp" + idx}};
  for (const auto& [key, value] : subst) {
    for (std::size_t p = text.find(key); p != std::string::npos;
         p = text.find(key, p + value.size())) {
      text.replace(p, 2, value);
    }
  }
  return text;
}

}  // namespace

std::vector<BuiltinSpec> builtin_specs(std::size_t n_ucc) {
  if (n_ucc == 0 || n_ucc > kMaxUccs) {
    throw std::invalid_argument("builtin_specs: n_ucc out of range");
  }
  std::vector<BuiltinSpec> out;
  BuiltinSpec cr;
  cr.id = 1;
  cr.property = 1;
  cr.name = "cr-immutable";
  cr.text = "G((d_addr in CR & w_en) -> reset)";
  cr.formula = parse_formula(cr.text, n_ucc);
  out.push_back(std::move(cr));
  for (std::size_t u = 0; u < n_ucc; ++u) {
    for (const Template& t : kPerUcc) {
      BuiltinSpec s;
      s.id = static_cast<int>(out.size()) + 1;
      s.property = t.property;
      s.ucc = static_cast<int>(u);
      s.name = t.name;
      s.text = instantiate(t.text, u);
      s.formula = parse_formula(s.text, n_ucc);
      s.note = t.note;
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace ucca::ltl
