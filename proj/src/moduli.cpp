#include "severi/moduli.hpp"

#include "severi/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <thread>

namespace severi {

namespace {

int binom2(int n) { return n * (n - 1) / 2; }

}  // namespace

GeometricInvariants geometric_invariants(int d, int delta) {
  if (d < 1) throw ValidationError("degree must be >= 1");
  const int g = binom2(d - 1) - delta;
  return GeometricInvariants{g, 3 * d + g - 1, 3 * d - 2 * g - 6};
}

ClassVector ClassVector::from_components(ExactScalar a, std::optional<ExactScalar> b, ExactScalar boundary,
                                         ExactScalar lambda) {
  ExactScalar c = ExactScalar(12) * lambda - boundary;
  return ClassVector(std::move(a), std::move(b), std::move(c), std::move(boundary), std::move(lambda));
}

ClassVector::ClassVector(ExactScalar a, std::optional<ExactScalar> b, ExactScalar c, ExactScalar boundary,
                         ExactScalar lambda)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), boundary_(std::move(boundary)),
      lambda_(std::move(lambda)) {
  if (c_ != ExactScalar(12) * lambda_ - boundary_)
    throw InternalConsistencyError("class vector violates C = 12 lambda - Delta: C = " + c_.str() +
                                   ", lambda = " + lambda_.str() + ", Delta = " + boundary_.str());
}

const ExactScalar& ClassVector::b() const {
  if (!b_) throw UnsupportedCombination("the B class is only available for the reducible-inclusive family");
  return *b_;
}

ClassVector class_vector(Session& session, int d, int delta, FamilyVariant variant) {
  if (variant == FamilyVariant::All) {
    const SeveriKey key = SeveriKey::plain(d, delta);
    key.validate();
    RecursionEngine& engine = session.engine();
    const std::vector<Request> batch{{Quantity::SeveriDegree, key},
                                     {Quantity::LambdaDegree, key},
                                     {Quantity::BNumber, key},
                                     {Quantity::SeveriDegree, SeveriKey::plain(d, delta + 1)}};
    engine.ensure(batch);
    ExactScalar boundary =
        ExactScalar(delta + 1) * engine.value(Quantity::SeveriDegree, SeveriKey::plain(d, delta + 1));
    return ClassVector::from_components(engine.value(Quantity::SeveriDegree, key),
                                        engine.value(Quantity::BNumber, key), std::move(boundary),
                                        engine.value(Quantity::LambdaDegree, key));
  }
  IrreducibleCalculator& irr = session.irreducible();
  ExactScalar lambda = irr.lambda_degree_irr(d, delta);
  ExactScalar boundary = irr.boundary_degree_irr(d, delta);
  return ClassVector::from_components(irr.severi_degree_irr(d, delta), std::nullopt, std::move(boundary),
                                      std::move(lambda));
}

SingularCounts singular_counts(Session& session, int d, int delta) {
  const ClassVector cv = class_vector(session, d, delta, FamilyVariant::All);
  const int g = binom2(d - 1) - delta;
  const ExactScalar& A = cv.a();
  const ExactScalar& B = cv.b();
  const ExactScalar& C = cv.c();
  const ExactScalar& D = cv.boundary();

  SingularCounts out;
  out.cusps = ExactScalar(3) * A + ExactScalar(3) * B + C - D;
  out.tacnodes = ExactScalar(3 * (d - 3) + 2 * g - 2) * A + ExactScalar(d - 9) * B - ExactScalar(5, 2) * C +
                 ExactScalar(3, 2) * D;
  out.triple_points = (ExactScalar(d * d - 6 * d + 8, 2) - ExactScalar(g - 1)) * A - ExactScalar(d - 6, 2) * B +
                      ExactScalar(2, 3) * C - ExactScalar(1, 3) * D;
  return out;
}

ExactScalar slope(Session& session, int d, int delta) {
  IrreducibleCalculator& irr = session.irreducible();
  const ExactScalar lambda = irr.lambda_degree_irr(d, delta);
  if (lambda.is_zero())
    throw UndefinedSlope("slope undefined for (d=" + std::to_string(d) + ", delta=" + std::to_string(delta) +
                         "): Hodge degree is zero");
  return irr.boundary_degree_irr(d, delta) / lambda;
}

ExactScalar brill_noether_slope(int g) {
  if (g < 0) throw ValidationError("genus must be non-negative");
  return ExactScalar(6) + ExactScalar(12, g + 1);
}

int select_degree(int g) {
  if (g < 0) throw ValidationError("genus must be non-negative");
  int d = 1;
  while (3 * d - 2 * g - 6 < -1 || binom2(d - 1) < g) ++d;
  return d;
}

std::vector<SlopeRow> slope_table(Session& session, int g_min, int g_max) {
  if (g_min < 2 || g_min > g_max)
    throw ValidationError("slope table needs 2 <= g_min <= g_max, got " + std::to_string(g_min) + ".." +
                          std::to_string(g_max));
  std::vector<SlopeRow> rows;
  for (int g = g_min; g <= g_max; ++g) {
    SlopeRow row;
    row.g = g;
    row.d = select_degree(g);
    row.delta = binom2(row.d - 1) - g;
    row.rho = geometric_invariants(row.d, row.delta).rho;
    rows.push_back(row);
  }

  const auto fill = [&](SlopeRow& row) {
    try {
      ExactScalar s = slope(session, row.d, row.delta);
      const ExactScalar bn = brill_noether_slope(row.g);
      row.bound = std::min(bn, s);
      row.slope = std::move(s);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  };

  // Rows of the largest degree dominate; evaluating them first lets the
  // smaller rows hit the memo store.
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rows[a].d > rows[b].d; });

  const std::size_t workers = std::min<std::size_t>(session.parallelism(), rows.size());
  if (workers <= 1) {
    for (std::size_t i : order) fill(rows[i]);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < order.size(); i = next++) fill(rows[order[i]]);
      });
  }
  return rows;
}

Polynomial::Polynomial(std::vector<ExactScalar> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

ExactScalar Polynomial::operator()(const ExactScalar& x) const {
  ExactScalar acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Polynomial::str(const std::string& var) const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const ExactScalar& c = coefficients_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const ExactScalar mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == ExactScalar(1);
    if (i == 0 || !unit) out += mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
    if (i >= 1) {
      if (!unit) out += "*";
      out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Polynomial interpolate(std::span<const std::pair<ExactScalar, ExactScalar>> points) {
  const std::size_t n = points.size();
  if (n == 0) return Polynomial{};
  std::set<ExactScalar> xs;
  for (const auto& p : points) xs.insert(p.first);
  if (xs.size() != n) throw ValidationError("interpolation abscissae must be distinct");

  // Divided-difference table, in place.
  std::vector<ExactScalar> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);

  // Horner-style expansion of the Newton form into monomial coefficients.
  std::vector<ExactScalar> coeffs;
  for (std::size_t k = n; k-- > 0;) {
    // coeffs <- coeffs * (x - x_k) + dd[k]
    std::vector<ExactScalar> next(coeffs.size() + 1);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= coeffs[j] * points[k].first;
    }
    next[0] += dd[k];
    coeffs = std::move(next);
  }
  return Polynomial(std::move(coeffs));
}

std::vector<ExactScalar> finite_differences(std::span<const ExactScalar> values, int order) {
  if (order < 0) throw ValidationError("difference order must be non-negative");
  std::vector<ExactScalar> cur(values.begin(), values.end());
  for (int k = 0; k < order; ++k) {
    if (cur.empty()) break;
    std::vector<ExactScalar> next;
    for (std::size_t i = 1; i < cur.size(); ++i) next.push_back(cur[i] - cur[i - 1]);
    cur = std::move(next);
  }
  return cur;
}

int expected_polynomial_degree(Quantity q, int delta) {
  switch (q) {
    case Quantity::SeveriDegree: return 2 * delta;
    case Quantity::LambdaDegree: return 2 * delta + 2;
    case Quantity::BNumber: return 2 * delta + 1;
  }
  return 0;
}

ExactScalar expected_lambda_leading(int delta) {
  if (delta < 0) throw ValidationError("delta must be non-negative");
  mpz_class pow3;
  mpz_ui_pow_ui(pow3.get_mpz_t(), 3, static_cast<unsigned long>(delta));
  return ExactScalar(mpq_class(pow3, 2 * big_factorial(delta)));
}

PolyfitResult polyfit_check(Session& session, int delta, Quantity q, std::span<const int> d_values) {
  if (delta < 0) throw ValidationError("delta must be non-negative");
  PolyfitResult result;
  result.expected_degree = expected_polynomial_degree(q, delta);
  if (static_cast<int>(d_values.size()) < result.expected_degree + 2)
    throw InsufficientPoints("degree-" + std::to_string(result.expected_degree) + " check needs at least " +
                             std::to_string(result.expected_degree + 2) + " points, got " +
                             std::to_string(d_values.size()));
  for (int d : d_values)
    if (d < 1) throw ValidationError("degrees must be >= 1");

  std::vector<Request> batch;
  for (int d : d_values) batch.push_back(Request{q, SeveriKey::plain(d, delta)});
  session.engine().ensure(batch);

  std::vector<std::pair<ExactScalar, ExactScalar>> points;
  for (int d : d_values) {
    ExactScalar v = session.engine().value(q, SeveriKey::plain(d, delta));
    result.d_values.push_back(d);
    result.values.push_back(v);
    points.emplace_back(ExactScalar(d), std::move(v));
  }
  result.fit = interpolate(points);
  result.degree_ok = result.fit.degree() == result.expected_degree;
  if (q == Quantity::LambdaDegree) {
    result.expected_leading = expected_lambda_leading(delta);
    result.leading_ok = result.degree_ok && result.fit.leading() == *result.expected_leading;
  }
  return result;
}

}  // namespace severi
