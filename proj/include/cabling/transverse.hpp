#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cabling/legendrian.hpp"

namespace cabling {

struct TransverseBranch {
  bool top_chain;
  std::string origin;  // generator label, or "top"
  Int sl_top;
  bool destabilizable;
  std::optional<Int> merge_sl;
};

struct TransverseClassification {
  CableSpec cable;
  Int max_sl;
  std::vector<TransverseBranch> branches;  // top chain first
  bool simple;
  std::vector<std::string> notes;
};

Int pushoff_sl(Int tb, Int rot, int sign);
Int max_sl(const CableSpec& cable);

// Orbits of the Legendrian class model under negative stabilization.
TransverseClassification quotient_transverse(const Classification& cl);

// Branch data computed from the closed-form statements alone.
TransverseClassification classify_transverse(const CableSpec& cable);

Int count_transverse(const TransverseClassification& tc, Int sl);

enum class QualSuite { qual1, qual2, qual4 };

struct ClaimResult {
  std::string claim;
  bool pass;
  std::string detail;
};

struct QualReport {
  QualSuite suite;
  CableSpec cable;
  std::vector<ClaimResult> claims;

  bool all_pass() const;
};

QualSuite parse_suite(const std::string& name);
std::string suite_name(QualSuite suite);

QualReport verify_qualitative(const TorusKnot& knot, QualSuite suite, Int k, Int m, Int n);

}  // namespace cabling
