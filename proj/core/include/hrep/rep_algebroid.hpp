#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hrep/algebroid.hpp"
#include "hrep/graded.hpp"

namespace hrep {

/// How an operator-valued form T of arity i and total degree t acts on a
/// form eta of arity k whose value has fiber degree q.
///  kFormsFirst:        (-1)^(k * (t - i)) * shuffle(T first, eta)
///  kArityTimesDegree:  (-1)^(i * (k + q)) * shuffle(T first, eta)
/// The connection part is the covariant exterior derivative in both.
enum class SignConvention { kFormsFirst, kArityTimesDegree };

inline constexpr SignConvention kDefaultConvention = SignConvention::kFormsFirst;

/// Forms of mixed arity, keyed by arity.
using MixedForm = std::map<int, AForm>;

/// Representation up to homotopy on a trivialized graded bundle, split as
/// del + nabla + omega_2 + omega_3 + ...
struct RepA {
  std::vector<int> degrees;        // degree of each fiber basis vector, non-decreasing
  PolyMatrix del;                  // degree +1
  std::vector<PolyMatrix> conn;    // nabla_{e_a} s = rho(e_a)(s) + conn[a] s
  std::map<int, AForm> omegas;     // arity i >= 2, degree 1 - i

  std::size_t dim() const { return degrees.size(); }
  GradedSpace fiber() const { return GradedSpace::from_basis_degrees(degrees); }
};

/// Throws std::invalid_argument on shape or degree inconsistencies.
void validate_rep(const AlgebroidModel& a, const RepA& e);

/// T wedge eta for an operator-valued form T of total degree t.
AForm operator_wedge(const AForm& t_form, int total_degree, const AForm& eta, const std::vector<int>& row_degrees,
                     SignConvention conv = kDefaultConvention);

/// D(eta) for eta of a single arity with values in E (any number of columns).
MixedForm apply_D(const AlgebroidModel& a, const RepA& e, const AForm& eta, SignConvention conv = kDefaultConvention);
MixedForm apply_D(const AlgebroidModel& a, const RepA& e, const MixedForm& eta,
                  SignConvention conv = kDefaultConvention);

void accumulate(MixedForm& into, const AForm& f);
void accumulate(MixedForm& into, const MixedForm& f);
bool is_zero(const MixedForm& f);

struct RepCheckFailure {
  int equation;                                 // arity of the failing component of D^2
  std::vector<int> indices;                     // frame multi-index of a witness component
  std::optional<std::vector<Rational>> point;   // first sample point where it is nonzero
};

struct RepCheck {
  std::vector<RepCheckFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// D^2 = 0 on the fiber frame, split by arity; equation 0 is del^2 = 0.
/// Identities are checked in polynomial normal form; sample points locate
/// the failure.
RepCheck check_rep(const AlgebroidModel& a, const RepA& e, const std::vector<std::vector<Rational>>& points = {},
                   SignConvention conv = kDefaultConvention);

/// Linear connection on A over the chart in frame form:
/// nabla_{d/dx_j} e_b = sum_c gamma[j](c, b) e_c.
struct TMConnection {
  std::vector<PolyMatrix> gamma;
  static TMConnection flat(const AlgebroidModel& a);
};

/// nabla_X(alpha) for the linear connection.
Section connection_apply(const AlgebroidModel& a, const TMConnection& conn, const VectorField& x,
                         const Section& alpha);
/// Basic connection on A: nabla_{rho beta} alpha + [alpha, beta].
Section basic_on_section(const AlgebroidModel& a, const TMConnection& conn, const Section& alpha,
                         const Section& beta);
/// Basic connection on TM: rho(nabla_X alpha) + [rho alpha, X].
VectorField basic_on_vector(const AlgebroidModel& a, const TMConnection& conn, const Section& alpha,
                            const VectorField& x);
/// Basic curvature K(alpha, beta)(X).
Section basic_curvature(const AlgebroidModel& a, const TMConnection& conn, const Section& alpha,
                        const Section& beta, const VectorField& x);

/// Adjoint representation on A (degree 0) + TM (degree 1).
RepA build_adjoint(const AlgebroidModel& a, const TMConnection& conn);

/// Components phi_i of arity i, each a dim(F) x dim(E) matrix-valued form.
struct MorphismA {
  std::map<int, AForm> phi;
  static MorphismA identity(const AlgebroidModel& a, const RepA& e);
};

/// Isomorphism ad_from -> ad_to: identity plus phi_1(alpha)(X) = (to_X - from_X)(alpha).
MorphismA adjoint_isomorphism(const AlgebroidModel& a, const TMConnection& from, const TMConnection& to);

MixedForm apply_morphism(const MorphismA& phi, const AForm& eta, const std::vector<int>& row_degrees,
                         SignConvention conv = kDefaultConvention);

struct MorphismCheck {
  std::vector<int> failing_equations;  // arities n where the n-th equation fails
  bool test_forms_ok = true;           // phi D_E = D_F phi on basis forms up to arity 3
  std::string witness;
  bool ok() const { return failing_equations.empty() && test_forms_ok; }
};

MorphismCheck check_morphism_A(const AlgebroidModel& a, const MorphismA& phi, const RepA& e, const RepA& f,
                               SignConvention conv = kDefaultConvention);

/// phi_0 induces isomorphisms on the fiber cohomology of (E, del) -> (F, del)
/// at every sample point (the single point for a point base).
bool quasi_iso_A(const AlgebroidModel& a, const MorphismA& phi, const RepA& e, const RepA& f,
                 const std::vector<std::vector<Rational>>& points);

/// Omega(A, E) over a point, flattened by total degree.
CochainComplex point_complex(const AlgebroidModel& a, const RepA& e, SignConvention conv = kDefaultConvention);

/// Cohomology of the adjoint representation of a Lie algebra.
CohomologyReport deformation_cohomology(const AlgebroidModel& a, int lo, int hi);

}  // namespace hrep
