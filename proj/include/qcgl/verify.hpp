#pragma once

#include "qcgl/rewrite.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qcgl {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  bool skipped = false;
  std::vector<std::string> details;
  double seconds = 0;
  double limit_seconds = 0;
};

struct SuiteOptions {
  std::uint64_t seed = 20070101;
  // Restricts the size-dependent criteria to one algebra O_q(M_{m,n}).
  std::optional<std::pair<int, int>> size;
  int nilpotence_bound = 64;
  RewriteOptions rewrite;
  // Random samples for the homomorphism and rewriting criteria.
  int theta_pairs = 100;
  int rewriting_samples = 500;
  int identity_samples = 50;
};

// Each returns a result whose `passed` is the exact, zero-tolerance verdict
// and which also fails when the run exceeds its time limit.
CriterionResult check_height_one_normality(const SuiteOptions& opts);   // 1
CriterionResult check_determinant_centrality(const SuiteOptions& opts); // 2
CriterionResult check_cauchon_counts(const SuiteOptions& opts);         // 3
CriterionResult check_theta_homomorphism(const SuiteOptions& opts);     // 4
CriterionResult check_theta_expansions(const SuiteOptions& opts);       // 5
CriterionResult check_cgl_checker(const SuiteOptions& opts);            // 6
CriterionResult check_rewriting_soundness(const SuiteOptions& opts);    // 7
CriterionResult check_grassmannian(const SuiteOptions& opts);           // 8
CriterionResult check_torsionfree(const SuiteOptions& opts);            // 9

std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& opts);

// `[PASS] 4 theta is a homomorphism (0.31 s / 60 s)`
std::string format_result(const CriterionResult& r);

}  // namespace qcgl
