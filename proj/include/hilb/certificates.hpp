#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hilb/groebner.hpp"
#include "hilb/hilbert.hpp"

namespace hilb {

using Point = std::vector<Rational>;

struct ClauseResult {
  std::string check;
  bool ok = false;
  std::string detail;
};

struct CertificateReport {
  std::string locus;
  std::string kind;
  std::vector<ClauseResult> clauses;

  bool passed() const;
  /// First failing clause name, empty when everything passed.
  std::string first_failure() const;
  void add(std::string check, bool ok, std::string detail = {});
};

struct FlatFamilyCertificate {
  Ideal family;
  Ideal special_fiber;
  std::vector<Point> witness_points;
  Rational witness_parameter{1};
  std::size_t degree = 11;
  std::string locus;
};

enum class CleavabilityVariant { general, union_of_line };

struct CleavabilityCertificate {
  Ideal ideal;
  std::size_t variable = 0;
  unsigned exponent = 1;
  CleavabilityVariant variant = CleavabilityVariant::general;
  /// Union-of-line variant: the two products x_v * x_j named by the certificate.
  std::vector<Polynomial> products;
  /// Also assemble the explicit cleaving family and verify it as a flat family.
  bool check_ray_family = false;
  std::string locus;
};

struct MonomialAxiom {};
struct GorensteinAxiom {};
using Justification = std::variant<MonomialAxiom, GorensteinAxiom, FlatFamilyCertificate, CleavabilityCertificate>;

struct SmoothPointCertificate {
  Ideal ideal;
  /// When present the ideal must equal the apolar ideal of these generators.
  std::optional<std::vector<Polynomial>> inverse_system;
  std::optional<HilbertSequence> hilbert_function;
  std::size_t expected_tangent = 33;
  Justification justification;
  std::string locus;
};

/// One generator of the fiber template: base + sum of coefficient * monomial.
struct TemplateGenerator {
  Polynomial base;
  std::vector<std::pair<std::string, Polynomial>> terms;
};

struct FiberParametrization {
  Ideal base_ideal;
  std::vector<std::string> coefficients;
  std::vector<std::string> free;
  /// Each equation reads "p = 0"; solved by back-substitution.
  std::vector<std::string> constraints;
  std::vector<TemplateGenerator> generators;
  unsigned truncation = 6;
  std::size_t degree = 11;
  unsigned trials = 20;
  std::uint64_t seed = 1;
  std::string locus;
};

using Certificate = std::variant<FlatFamilyCertificate, CleavabilityCertificate, SmoothPointCertificate,
                                 FiberParametrization>;

CertificateReport verify_flat_family(const FlatFamilyCertificate& cert);
CertificateReport verify_cleavability(const CleavabilityCertificate& cert);
CertificateReport verify_smooth_point(const SmoothPointCertificate& cert);
CertificateReport verify_fiber_sample(const FiberParametrization& fp, std::uint64_t seed, unsigned trials);
CertificateReport verify(const Certificate& cert);

/// Assignment of every coefficient from the free coordinates, solving the constraints
/// one unknown at a time. Throws when an equation cannot be solved this way.
std::map<std::string, Rational> solve_constraints(const FiberParametrization& fp,
                                                  const std::map<std::string, Rational>& free_values);
/// The ideal (template generators) + m^truncation at a coefficient assignment.
Ideal instantiate_fiber(const FiberParametrization& fp, const std::map<std::string, Rational>& values);

/// V(x^r - t x^(r-1) - q) + I(R u C) in Q[a,b,c,t] for the line C through the origin
/// along the given variable; returns the family with witnesses at t = 1.
FlatFamilyCertificate ray_family(const Ideal& ideal, std::size_t variable);

/// Every ideal the certificate mentions, for whole-corpus engine checks.
std::vector<Ideal> ideals_of(const Certificate& cert);
std::string kind_name(const Certificate& cert);
const std::string& locus_of(const Certificate& cert);

}  // namespace hilb
