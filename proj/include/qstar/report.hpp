#pragma once

#include <string>
#include <vector>

#include "qstar/types.hpp"

namespace qstar {

enum class Verdict { Pass, Fail, Inconclusive };

struct CheckEntry {
  std::string name;
  Verdict verdict = Verdict::Pass;
  double residual = 0.0;  // worst residual or margin backing the verdict
  std::string detail;
  bool warning = false;
  bool expected_failure = false;  // tagged counterexamples count as pass

  bool ok() const { return verdict == Verdict::Pass || expected_failure; }
};

struct Report {
  std::string title;
  std::vector<CheckEntry> entries;

  CheckEntry& add(std::string name, bool pass, double residual = 0.0, std::string detail = "") {
    entries.push_back({std::move(name), pass ? Verdict::Pass : Verdict::Fail, residual,
                       std::move(detail), false, false});
    return entries.back();
  }
  CheckEntry& add_verdict(std::string name, Verdict v, double residual = 0.0,
                          std::string detail = "") {
    entries.push_back({std::move(name), v, residual, std::move(detail), false, false});
    return entries.back();
  }
  void merge(const Report& other) {
    for (const auto& e : other.entries) {
      entries.push_back(e);
      entries.back().name = other.title.empty() ? e.name : other.title + "/" + e.name;
    }
  }

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.ok()) return false;
    return true;
  }
  bool any_inconclusive() const {
    for (const auto& e : entries)
      if (e.verdict == Verdict::Inconclusive && !e.expected_failure) return true;
    return false;
  }
  double worst_residual() const {
    double w = 0.0;
    for (const auto& e : entries) w = std::max(w, e.residual);
    return w;
  }
};

}  // namespace qstar
