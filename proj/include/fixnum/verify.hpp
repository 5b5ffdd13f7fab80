#pragma once

#include <string>
#include <vector>

namespace fixnum {

struct VerifyItem {
  std::string name;
  bool pass = false;
  // Known discrepancy with the published closed form; the computed value
  // is checked against an independent reduction instead and the item is
  // reported as "paper-mismatch, oracle-verified".
  bool paper_mismatch = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  int criterion = 0;
  std::vector<VerifyItem> items;
  bool passed() const;
};

// Suite names in criterion order (criterion i = names()[i-1]).
const std::vector<std::string>& verify_suite_names();

SuiteResult run_verify_suite(const std::string& suite);
std::vector<SuiteResult> run_all_verify_suites();

std::string verify_text(const std::vector<SuiteResult>& results);
std::string verify_json(const std::vector<SuiteResult>& results);

} // namespace fixnum
