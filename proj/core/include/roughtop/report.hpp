#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace roughtop {

enum class Verdict { pass, fail, not_applicable, error };

const char* to_string(Verdict v);

struct Clause {
  std::string name;
  Verdict verdict = Verdict::pass;
  // Counterexample on failure, the satisfying object on a successful search,
  // empty otherwise.
  std::string witness;
};

// Structured outcome of a check. Everything is kept in insertion order so
// that serialization is a pure function of the computation.
struct VerificationReport {
  std::string subject;
  Verdict verdict = Verdict::pass;
  std::vector<Clause> clauses;
  // Named results (approximations, enumerated objects, designated identity).
  std::vector<std::pair<std::string, std::string>> data;
  std::vector<std::pair<std::string, std::int64_t>> stats;
  // Conventions the verdict depends on.
  std::vector<std::string> notes;

  explicit VerificationReport(std::string subject_name = {}) : subject(std::move(subject_name)) {}

  bool passed() const { return verdict == Verdict::pass; }

  Clause& add(std::string name, Verdict v, std::string witness = {});
  Clause& pass(std::string name, std::string witness = {}) {
    return add(std::move(name), Verdict::pass, std::move(witness));
  }
  Clause& fail(std::string name, std::string witness) {
    return add(std::move(name), Verdict::fail, std::move(witness));
  }
  void put(std::string key, std::string value) { data.emplace_back(std::move(key), std::move(value)); }
  void stat(std::string key, std::int64_t value) { stats.emplace_back(std::move(key), value); }
  void note(std::string text) { notes.push_back(std::move(text)); }

  // Marks the whole report not applicable, recording the failed premise.
  void not_applicable(std::string premise);

  // Recomputes the overall verdict from the clauses: error beats fail beats
  // not-applicable beats pass.
  void settle();

  const Clause* first_failure() const;

  // Appends the clauses of `other` with `prefix` prepended to each name.
  void absorb(const VerificationReport& other, const std::string& prefix);
};

enum class ReportFormat { text, json };

std::string serialize_report(const VerificationReport& report, ReportFormat format);

// 0 pass, 1 fail, 2 not applicable, 3 error.
int exit_code(Verdict v);

}  // namespace roughtop
