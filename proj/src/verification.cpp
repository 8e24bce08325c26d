#include "severi/verification.hpp"

#include "severi/moduli.hpp"
#include "severi/oracles.hpp"

namespace severi {

namespace {

std::string dk(int d, int delta) { return "d=" + std::to_string(d) + ", delta=" + std::to_string(delta); }

ExactScalar plain_value(Session& s, Quantity q, int d, int delta) {
  return s.engine().value(q, SeveriKey::plain(d, delta));
}

void nodal_checks(Session& s, std::vector<OracleReport>& out) {
  for (int d = 3; d <= 10; ++d)
    out.push_back(make_report("nodal-count", dk(d, 1), oracles::pencil_invariants(d).nodal,
                              plain_value(s, Quantity::SeveriDegree, d, 1)));
}

void kontsevich_checks(Session& s, std::vector<OracleReport>& out) {
  for (int d = 1; d <= 6; ++d) {
    const int delta = (d - 1) * (d - 2) / 2;
    out.push_back(make_report("kontsevich", dk(d, delta), oracles::kontsevich_rational(d),
                              s.irreducible().severi_degree_irr(d, delta)));
  }
}

void lambda_checks(Session& s, std::vector<OracleReport>& out) {
  for (int d = 3; d <= 8; ++d)
    out.push_back(make_report("pencil-lambda", dk(d, 0), oracles::pencil_invariants(d).lambda,
                              plain_value(s, Quantity::LambdaDegree, d, 0)));
  for (int d = 3; d <= 10; ++d)
    out.push_back(make_report("lambda-one-node", dk(d, 1), oracles::lambda_one_node(d),
                              plain_value(s, Quantity::LambdaDegree, d, 1)));
}

void b_checks(Session& s, std::vector<OracleReport>& out) {
  for (int d = 3; d <= 10; ++d)
    out.push_back(make_report("b-one-node", dk(d, 1), oracles::b_one_node(d),
                              plain_value(s, Quantity::BNumber, d, 1)));
}

void singularity_checks(Session& s, std::vector<OracleReport>& out) {
  for (int d = 3; d <= 9; ++d)
    out.push_back(
        make_report("cusps", dk(d, 1), oracles::cusp_locus_degree(d), singular_counts(s, d, 1).cusps));
  for (int d = 4; d <= 8; ++d)
    out.push_back(make_report("tacnodes", dk(d, 2), oracles::tacnode_locus_degree(d),
                              singular_counts(s, d, 2).tacnodes));
  for (int d = 4; d <= 8; ++d)
    out.push_back(make_report("triple-points", dk(d, 3), oracles::triple_point_locus_degree(d),
                              singular_counts(s, d, 3).triple_points));
}

void two_node_checks(Session& s, std::vector<OracleReport>& out) {
  for (int d = 3; d <= 8; ++d)
    out.push_back(make_report("two-node", dk(d, 2), oracles::two_node_degree(d),
                              plain_value(s, Quantity::SeveriDegree, d, 2)));
}

void lambda_two_node_audit(Session& s, std::vector<OracleReport>& out) {
  for (int d = 3; d <= 8; ++d)
    out.push_back(make_report("printed-lambda-two-node", dk(d, 2), oracles::printed_lambda_two_node(d),
                              plain_value(s, Quantity::LambdaDegree, d, 2), ReportKind::Audit));
}

}  // namespace

OracleReport make_report(std::string name, std::string inputs, ExactScalar expected, ExactScalar actual,
                         ReportKind kind, std::string note) {
  OracleReport r;
  r.verdict = expected == actual ? Verdict::Match : Verdict::Mismatch;
  r.name = std::move(name);
  r.inputs = std::move(inputs);
  r.expected = std::move(expected);
  r.actual = std::move(actual);
  r.kind = kind;
  r.note = std::move(note);
  return r;
}

std::vector<OracleReport> printed_two_node_audit(Session& session, int d_from, int d_to) {
  std::vector<OracleReport> out;
  for (int d = d_from; d <= d_to; ++d) {
    ExactScalar printed = oracles::printed_two_node_degree(d);
    std::string note = printed.is_integer() ? "" : "printed polynomial is not an integer here";
    out.push_back(make_report("printed-two-node", dk(d, 2), std::move(printed),
                              plain_value(session, Quantity::SeveriDegree, d, 2), ReportKind::Audit,
                              std::move(note)));
  }
  return out;
}

std::vector<OracleReport> oracle_reports_for(Session& session, Quantity q) {
  std::vector<OracleReport> out;
  switch (q) {
    case Quantity::SeveriDegree:
      nodal_checks(session, out);
      kontsevich_checks(session, out);
      two_node_checks(session, out);
      break;
    case Quantity::LambdaDegree: lambda_checks(session, out); break;
    case Quantity::BNumber: b_checks(session, out); break;
  }
  return out;
}

std::vector<OracleReport> run_oracle_suite(Session& session) {
  std::vector<OracleReport> out;
  nodal_checks(session, out);
  kontsevich_checks(session, out);
  lambda_checks(session, out);
  b_checks(session, out);
  singularity_checks(session, out);
  two_node_checks(session, out);
  auto audit = printed_two_node_audit(session, 3, 8);
  out.insert(out.end(), audit.begin(), audit.end());
  lambda_two_node_audit(session, out);
  return out;
}

bool all_checks_pass(const std::vector<OracleReport>& reports) {
  for (const auto& r : reports)
    if (r.kind == ReportKind::Check && r.verdict == Verdict::Mismatch) return false;
  return true;
}

}  // namespace severi
