#include "roughtop/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace roughtop {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::not_applicable:
      return "not-applicable";
    case Verdict::error:
      return "error";
  }
  return "error";
}

Clause& VerificationReport::add(std::string name, Verdict v, std::string witness) {
  clauses.push_back(Clause{std::move(name), v, std::move(witness)});
  settle();
  return clauses.back();
}

void VerificationReport::not_applicable(std::string premise) {
  clauses.push_back(Clause{"premise: " + std::move(premise), Verdict::not_applicable, {}});
  settle();
}

namespace {

int severity(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return 0;
    case Verdict::not_applicable:
      return 1;
    case Verdict::fail:
      return 2;
    case Verdict::error:
      return 3;
  }
  return 3;
}

}  // namespace

void VerificationReport::settle() {
  Verdict worst = Verdict::pass;
  for (const auto& c : clauses) {
    if (severity(c.verdict) > severity(worst)) worst = c.verdict;
  }
  verdict = worst;
}

const Clause* VerificationReport::first_failure() const {
  auto it = std::find_if(clauses.begin(), clauses.end(),
                         [](const Clause& c) { return c.verdict == Verdict::fail; });
  return it == clauses.end() ? nullptr : &*it;
}

void VerificationReport::absorb(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.clauses) clauses.push_back(Clause{prefix + c.name, c.verdict, c.witness});
  for (const auto& n : other.notes) {
    if (std::find(notes.begin(), notes.end(), n) == notes.end()) notes.push_back(n);
  }
  settle();
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return 0;
    case Verdict::fail:
      return 1;
    case Verdict::not_applicable:
      return 2;
    case Verdict::error:
      return 3;
  }
  return 3;
}

namespace {

std::string upper_case(std::string s) {
  for (auto& ch : s) {
    if (ch >= 'a' && ch <= 'z') ch = static_cast<char>(ch - 'a' + 'A');
  }
  return s;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << upper_case(to_string(r.verdict));
  if (!r.subject.empty()) out << ' ' << r.subject;
  out << '\n';
  for (const auto& c : r.clauses) {
    out << "  [" << to_string(c.verdict) << "] " << c.name << '\n';
    if (!c.witness.empty()) out << "    witness: " << c.witness << '\n';
  }
  for (const auto& [k, v] : r.data) out << "  " << k << ": " << v << '\n';
  for (const auto& [k, v] : r.stats) out << "  stat " << k << " = " << v << '\n';
  for (const auto& n : r.notes) out << "  note: " << n << '\n';
  return out.str();
}

std::string to_json(const VerificationReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["subject"] = r.subject;
  j["verdict"] = to_string(r.verdict);
  j["clauses"] = ordered_json::array();
  for (const auto& c : r.clauses) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["verdict"] = to_string(c.verdict);
    if (!c.witness.empty()) cj["witness"] = c.witness;
    j["clauses"].push_back(std::move(cj));
  }
  j["data"] = ordered_json::array();
  for (const auto& [k, v] : r.data) j["data"].push_back(ordered_json{{"key", k}, {"value", v}});
  j["stats"] = ordered_json::object();
  for (const auto& [k, v] : r.stats) j["stats"][k] = v;
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

}  // namespace

std::string serialize_report(const VerificationReport& report, ReportFormat format) {
  return format == ReportFormat::json ? to_json(report) : to_text(report);
}

}  // namespace roughtop
