#pragma once

#include "severi/exact_scalar.hpp"
#include "severi/quantity.hpp"
#include "severi/session.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace severi {

struct GeometricInvariants {
  int genus = 0;      // binom(d-1,2) - delta
  int dimension = 0;  // 3d + g - 1
  int rho = 0;        // Brill-Noether number 3d - 2g - 6

  friend bool operator==(const GeometricInvariants&, const GeometricInvariants&) = default;
};

GeometricInvariants geometric_invariants(int d, int delta);

enum class FamilyVariant { All, Irreducible };

/// Intersection numbers of the one-parameter family C^{d,delta} with the
/// standard classes.
///
/// Naming follows how the classes are used in the cusp/tacnode/triple-point
/// formulas rather than their textbook definitions: A is the degree of the
/// family (A . C^{d,delta} = N^{d,delta}), B = pi_*(omega . D), and C is the
/// class satisfying Mumford's relation C = 12 lambda - Delta. With this
/// reading 3A + 3B + C - Delta reproduces the classical cuspidal count.
class ClassVector {
 public:
  /// Builds the vector with C taken from the Mumford relation.
  static ClassVector from_components(ExactScalar a, std::optional<ExactScalar> b, ExactScalar boundary,
                                     ExactScalar lambda);

  /// Throws InternalConsistencyError unless c == 12 lambda - boundary.
  ClassVector(ExactScalar a, std::optional<ExactScalar> b, ExactScalar c, ExactScalar boundary,
              ExactScalar lambda);

  const ExactScalar& a() const { return a_; }
  bool has_b() const { return b_.has_value(); }
  /// Throws UnsupportedCombination when B is not available for the variant.
  const ExactScalar& b() const;
  const ExactScalar& c() const { return c_; }
  const ExactScalar& boundary() const { return boundary_; }
  const ExactScalar& lambda() const { return lambda_; }

 private:
  ExactScalar a_;
  std::optional<ExactScalar> b_;
  ExactScalar c_;
  ExactScalar boundary_;
  ExactScalar lambda_;
};

/// All: reducible-inclusive family, 0 <= delta <= binom(d,2), boundary
/// (delta+1) N^{d,delta+1}. Irreducible: 0 <= delta <= binom(d-1,2), no B.
ClassVector class_vector(Session& session, int d, int delta, FamilyVariant variant);

struct SingularCounts {
  ExactScalar cusps;
  ExactScalar tacnodes;
  ExactScalar triple_points;
};

/// Numbers of members of C^{d,delta} with a cusp, a tacnode or a triple point.
SingularCounts singular_counts(Session& session, int d, int delta);

/// Boundary degree over Hodge degree of the irreducible family; throws
/// UndefinedSlope when the Hodge degree vanishes.
ExactScalar slope(Session& session, int d, int delta);

/// 6 + 12/(g+1), the slope of the Brill-Noether divisor.
ExactScalar brill_noether_slope(int g);

/// Smallest d with 3d - 2g - 6 >= -1 and binom(d-1,2) >= g.
int select_degree(int g);

struct SlopeRow {
  int g = 0;
  int d = 0;
  int delta = 0;
  int rho = 0;
  std::optional<ExactScalar> slope;
  std::optional<ExactScalar> bound;  // min(6 + 12/(g+1), slope)
  std::string error;
};

/// One row per genus; rows are evaluated concurrently over the session's
/// workers and returned in genus order.
std::vector<SlopeRow> slope_table(Session& session, int g_min, int g_max);

/// Dense polynomial with exact coefficients, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<ExactScalar> coefficients);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<ExactScalar>& coefficients() const { return coefficients_; }
  ExactScalar leading() const { return coefficients_.empty() ? ExactScalar{} : coefficients_.back(); }
  ExactScalar operator()(const ExactScalar& x) const;
  std::string str(const std::string& var = "d") const;

 private:
  std::vector<ExactScalar> coefficients_;
};

/// Unique polynomial of degree < n through n points with distinct abscissae
/// (Newton divided differences).
Polynomial interpolate(std::span<const std::pair<ExactScalar, ExactScalar>> points);

/// Forward differences of the given order over consecutive samples.
std::vector<ExactScalar> finite_differences(std::span<const ExactScalar> values, int order);

/// Degree of d -> Q^{d,delta} for fixed delta: 2 delta (N), 2 delta + 2 (L),
/// 2 delta + 1 (B).
int expected_polynomial_degree(Quantity q, int delta);

/// 3^delta / (2 delta!), the leading coefficient of d -> L^{d,delta}.
ExactScalar expected_lambda_leading(int delta);

struct PolyfitResult {
  std::vector<int> d_values;
  std::vector<ExactScalar> values;
  Polynomial fit;
  int expected_degree = 0;
  bool degree_ok = false;
  /// Only checked for the Hodge degree; empty otherwise.
  std::optional<bool> leading_ok;
  std::optional<ExactScalar> expected_leading;
};

/// Interpolates d -> Q^{d,delta} through every supplied point. degree_ok
/// holds when the interpolant has exactly the expected degree, which with at
/// least one surplus point means every extra point lies on the fit.
PolyfitResult polyfit_check(Session& session, int delta, Quantity q, std::span<const int> d_values);

}  // namespace severi
