//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "ucca/scenario.hpp"

namespace ucca::corpus {

namespace {

Expectation completes() { return {}; }

Expectation reset_at(CauseKind k, int ucc = 0) {
  return {false, {k, k == CauseKind::kCrIntegrity ? -1 : ucc}};
}

std::string marshal_source() {
  // Caller keeps a two-word record on its stack, hands the compartment a
  // heap copy, then copies the edited record back.
  std::string s = R"(
        .org 0xC000
start:  PUSH #5                 ; record.b
        PUSH #9                 ; record.a, record at 0x09FC
)";
  s += emit_marshal_stub(0x09FC, 0x0400, 4);
  s += R"(        MOV #0x0400, R4
        CALL #scale
)";
  s += emit_marshal_stub(0x0400, 0x09FC, 4);
  s += R"(        POP R7                  ; record.a
        POP R8                  ; record.b
        HALT

        .org 0xC100
scale:  MOV @R4, R6
        ADD #10, R6
        MOV R6, @R4             ; heap write, below bp
        MOV R4, R5
        ADD #2, R5
        MOV @R5, R6
        ADD R6, R6
        MOV R6, @R5
scale_end:
        RET
)";
  return s;
}

std::vector<Scenario> build() {
  std::vector<Scenario> v;

  v.push_back({"benign-call",
               "trusted caller invokes the compartment and uses its result",
               R"(
        .org 0xC000
start:  MOV #7, R4
        PUSH #0x1111            ; caller local
        CALL #triple
        POP R6
        HALT

        .org 0xC100
triple: PUSH R4
        ADD R4, R4
        POP R5
        ADD R5, R4
triple_end:
        RET
)",
               0x0100, {{"triple", "triple_end"}}, {}, completes()});

  v.push_back({"benign-marshal",
               "by-reference stack data is marshalled to the heap and back",
               marshal_source(), 0x0100, {{"scale", "scale_end"}}, {},
               completes()});

  v.push_back({"benign-interrupted",
               "an interrupt preempts the compartment, which then resumes",
               R"(
        .ivt 3, isr
        .org 0xC000
start:  MOV #0, R4
        CALL #accum
        MOV R4, &0x0200
        HALT
isr:    PUSH R10
        MOV &0x0300, R10
        ADD #1, R10
        MOV R10, &0x0300
        POP R10
        RETI

        .org 0xC100
accum:  MOV #4, R6
loop:   ADD #3, R4
        SUB #1, R6
        JZ done
        JMP loop
done:
accum_end:
        RET
)",
               0x0100, {{"accum", "accum_end"}}, {{6, 3}}, completes()});

  v.push_back({"benign-nested-ucc",
               "an outer compartment calls a compartment nested inside it",
               R"(
        .org 0xC000
start:  MOV #1, R5
        CALL #outer
        HALT

        .org 0xC100
outer:  PUSH R5
        CALL #inner
        POP R6
        ADD R6, R5
        JMP outer_ret
inner:  MOV #10, R5
inner_end:
        RET
outer_ret:
outer_end:
        RET
)",
               0x0100, {{"outer", "outer_end"}, {"inner", "inner_end"}}, {},
               completes()});

  v.push_back({"benign-arbitrary-entry",
               "the compartment is entered at an interior instruction",
               R"(
        .org 0xC000
start:  MOV #2, R4
        CALL #lib_mid
        HALT

        .org 0xC100
lib:    MOV #100, R4
lib_mid:
        ADD R4, R4
lib_end:
        RET
)",
               0x0100, {{"lib", "lib_end"}}, {}, completes()});

  v.push_back({"ret-hijack",
               "compartment overwrites its stacked return word, then returns",
               R"(
        .org 0xC000
start:  CALL #vuln
        HALT
evil:   MOV #0x0BAD, R9
        HALT

        .org 0xC100
vuln:   MOV #evil, R4
        MOV R4, &0x09FE         ; return slot, inside the frame
vuln_end:
        RET
)",
               0x0100, {{"vuln", "vuln_end"}}, {},
               reset_at(CauseKind::kRetIntegrity)});

  v.push_back({"rop-gadget",
               "an indirect-jump chain leaves the compartment at a trusted routine",
               R"(
        .org 0xC000
start:  CALL #vuln
        HALT
unlock: MOV #1, R9
        HALT

        .org 0xC100
vuln:   MOV #unlock, R8
        MOV #gadget, R7
        BR R7
        NOP
gadget: POP R6                  ; drop the return word, sp back at bp
vuln_end:
        BR R8
)",
               0x0100, {{"vuln", "vuln_end"}}, {},
               reset_at(CauseKind::kRetIntegrity)});

  v.push_back({"stack-smash",
               "compartment writes into its caller's stack frame",
               R"(
        .org 0xC000
start:  PUSH #0x5EC2            ; caller secret at 0x09FE
        CALL #vuln
        POP R4
        HALT

        .org 0xC100
vuln:   MOV #0xDEAD, R4
        MOV R4, &0x09FE
vuln_end:
        RET
)",
               0x0100, {{"vuln", "vuln_end"}}, {},
               reset_at(CauseKind::kStackIntegrity)});

  v.push_back({"sp-corrupt",
               "compartment returns correctly but with a shifted stack pointer",
               R"(
        .org 0xC000
start:  CALL #vuln
        HALT

        .org 0xC100
vuln:   POP R4
        PUSH #0
        PUSH R4
vuln_end:
        RET
)",
               0x0100, {{"vuln", "vuln_end"}}, {},
               reset_at(CauseKind::kStackIntegrity)});

  v.push_back({"code-inject",
               "compartment plants code in RAM and branches to it",
               R"(
        .org 0xC000
start:  CALL #vuln
        HALT
evil:   MOV #0x0BAD, R9
        HALT

        .org 0xC100
vuln:   MOV #0x3400, R4         ; JMP opcode word
        MOV R4, &0x0300
        MOV #evil, R4
        MOV R4, &0x0302
        MOV #0x0300, R4
vuln_end:
        BR R4
)",
               0x0100, {{"vuln", "vuln_end"}}, {},
               reset_at(CauseKind::kRetIntegrity)});

  v.push_back({"ivt-overwrite",
               "compartment redirects an interrupt vector",
               R"(
        .ivt 3, isr
        .org 0xC000
start:  CALL #vuln
        HALT
isr:    RETI
evil:   HALT

        .org 0xC100
vuln:   MOV #evil, R4
        MOV R4, &0xFFE6         ; vector 3
vuln_end:
        RET
)",
               0x0100, {{"vuln", "vuln_end"}}, {},
               reset_at(CauseKind::kStackIntegrity)});

  v.push_back({"cr-overwrite",
               "compartment tries to widen its own bounds in the CR",
               R"(
        .org 0xC000
start:  CALL #vuln
        HALT

        .org 0xC100
vuln:   MOV #0xC000, R4
        MOV R4, &0x0100         ; r_min of slot 0
vuln_end:
        RET
)",
               0x0100, {{"vuln", "vuln_end"}}, {},
               reset_at(CauseKind::kCrIntegrity)});

  v.push_back({"malicious-isr",
               "an ISR confined to its own compartment rewrites the stacked PC",
               R"(
        .ivt 3, isr
        .org 0xC000
start:  MOV #0, R4
spin:   ADD #1, R4
        CMP #20, R4
        JZ finish
        JMP spin
finish: HALT
evil:   MOV #0x0BAD, R9
        HALT

        .org 0xC100
helper: ADD #1, R5
helper_end:
        RET

        .org 0xC200
isr:    MOV #evil, R4
        MOV R4, @SP             ; stacked PC
isr_end:
        RETI
)",
               0x0100, {{"helper", "helper_end"}, {"isr", "isr_end"}},
               {{5, 3}}, reset_at(CauseKind::kRetIntegrity, 1)});

  v.push_back({"heap-partition",
               "compartment writes a heap portion placed below the stack",
               R"(
        .org 0xC000
start:  MOV #0x0900, SP         ; 0x0900..0x09FF becomes heap
        CALL #vuln
        HALT

        .org 0xC100
vuln:   MOV #0x4141, R4
        MOV R4, &0x0980
vuln_end:
        RET
)",
               0x0100, {{"vuln", "vuln_end"}}, {},
               reset_at(CauseKind::kStackIntegrity)});

  v.push_back({"irq-masked-escape",
               "an interrupt lands on the first instruction of a hijacked return",
               R"(
        .ivt 3, isr
        .org 0xC000
start:  CALL #vuln
        HALT
evil:   MOV #0x0BAD, R9
        HALT
isr:    RETI

        .org 0xC100
vuln:   MOV #evil, R4
        MOV R4, &0x09FE
vuln_end:
        RET
)",
               0x0100, {{"vuln", "vuln_end"}}, {{5, 3}},
               reset_at(CauseKind::kRetIntegrity)});

  return v;
}

}  // namespace

const std::vector<Scenario>& scenarios() {
  static const std::vector<Scenario> kCatalog = build();
  return kCatalog;
}

}  // namespace ucca::corpus
