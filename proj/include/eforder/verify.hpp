// verify.hpp -- the acceptance checks: every check compares engine
// output against the shipped golden tables or an independent oracle
// and reports one pass/fail result.  Shared by the CLI `verify`
// subcommand and the acceptance test binary.
#pragma once

#include "eforder/eigenposet.hpp"
#include "eforder/golden.hpp"
#include "eforder/oracle.hpp"

#include <memory>

namespace eforder {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // on failure: names the table, residue, m, s
};

class AcceptanceRunner {
 public:
  AcceptanceRunner(std::string data_dir = default_data_dir(), std::string cache_dir = "",
                   bool opt_in_e7 = false, int jobs = 1);

  static constexpr int kCriteria = 11;
  CriterionResult run(int id);
  std::vector<CriterionResult> run_many(const std::vector<int>& ids);

 private:
  CriterionResult ngm_tables();            // 1
  CriterionResult misprint_check();        // 2
  CriterionResult quasipoly_reconstruction();  // 3
  CriterionResult g2_eigen_machinery();    // 4
  CriterionResult f4_eigen_machinery();    // 5
  CriterionResult ng2ms_table();           // 6
  CriterionResult nf4ms_columns();         // 7
  CriterionResult oracle_equivalence();    // 8
  CriterionResult partition_identities();  // 9
  CriterionResult exactlin_random_suite(); // 10
  CriterionResult data_integrity();        // 11

  OrderCounter& counter(GroupType g);
  EigenCountEngine& engine(GroupType g);

  std::string data_dir_;
  std::string cache_dir_;
  bool opt_in_e7_;
  int jobs_;
  std::map<GroupType, std::unique_ptr<OrderCounter>> counters_;
  std::map<GroupType, std::unique_ptr<EigenCountEngine>> engines_;
};

}  // namespace eforder
