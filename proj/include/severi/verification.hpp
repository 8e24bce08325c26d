#pragma once

#include "severi/exact_scalar.hpp"
#include "severi/quantity.hpp"
#include "severi/session.hpp"

#include <optional>
#include <string>
#include <vector>

namespace severi {

enum class Verdict { Match, Mismatch };

enum class ReportKind {
  Check,  // an oracle the engine must agree with
  Audit,  // a printed closed form compared for the record; mismatches are findings
};

struct OracleReport {
  std::string name;
  std::string inputs;
  ExactScalar expected;
  ExactScalar actual;
  Verdict verdict = Verdict::Match;
  ReportKind kind = ReportKind::Check;
  std::string note;
};

OracleReport make_report(std::string name, std::string inputs, ExactScalar expected, ExactScalar actual,
                         ReportKind kind = ReportKind::Check, std::string note = {});

/// Oracle comparisons relevant to one quantity (used by `--verify`).
std::vector<OracleReport> oracle_reports_for(Session& session, Quantity q);

/// Every oracle comparison plus the closed-form audits.
std::vector<OracleReport> run_oracle_suite(Session& session);

/// Compares the printed two-node degree polynomial against the recursion for
/// the given degrees; each report notes whether the printed value is even an
/// integer.
std::vector<OracleReport> printed_two_node_audit(Session& session, int d_from, int d_to);

/// True when no Check report mismatches.
bool all_checks_pass(const std::vector<OracleReport>& reports);

}  // namespace severi
