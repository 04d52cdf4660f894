#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hrep/graded.hpp"
#include "hrep/groupoid.hpp"
#include "hrep/matrix.hpp"

namespace hrep {

/// Representation up to homotopy of a finite groupoid on a graded bundle
/// with the same fiber over every object. F[k][i] is F_k at the i-th
/// simplex of G_k (a matrix E_{s} -> E_{t} of degree 1 - k); missing k are
/// zero.
struct RepG {
  std::vector<int> degrees;  // fiber basis degrees, non-decreasing
  std::map<int, std::vector<RationalMatrix>> F;
  bool unital = true;

  std::size_t dim() const { return degrees.size(); }
  /// F_k at a simplex, or the zero matrix.
  RationalMatrix at(int k, std::size_t idx) const;
};

/// F_0 = del[x], F_1 = action[g], nothing else.
RepG genuine_rep(const Nerve& n, std::vector<int> degrees, std::vector<RationalMatrix> del,
                 std::vector<RationalMatrix> action);
/// Trivial rank-r representation in degree `degree`.
RepG trivial_rep(const Nerve& n, std::size_t rank, int degree = 0);

/// F~(eta) for a structure map of arity k and degree m (table over G_k),
/// acting on an arity-p cochain whose components have degrees `col_degrees`.
FiniteCochain tilde_F(const Nerve& n, int k, int m, const std::vector<RationalMatrix>& table,
                      const std::vector<int>& col_degrees, const FiniteCochain& eta);

using MixedCochain = std::map<int, FiniteCochain>;

/// D = sum_k F~_k applied to a cochain of one arity.
MixedCochain apply_D(const Nerve& n, const RepG& r, const FiniteCochain& eta);

struct RepGFailure {
  int equation;        // k of the failing structure equation, or -1 for unitality
  Tuple witness;       // simplex where it fails
  std::string detail;
};

struct RepGCheck {
  std::vector<RepGFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Structure equations for k <= bound, exhaustively over G_k; unitality if
/// the representation is flagged unital.
RepGCheck check_rep_G(const Nerve& n, const RepG& r, int bound);

/// Total complex in degrees lo..hi (differentials d_lo .. d_hi), normalized
/// or full.
CochainComplex build_D_G(const Nerve& n, const RepG& r, int lo, int hi, bool normalized = true);

/// Index of a basis element (arity, simplex, fiber index) in the flattened
/// total-degree basis used by build_D_G.
struct TotalBasis {
  struct Element {
    int arity;
    std::size_t simplex;
    std::size_t fiber;
  };
  std::map<int, std::vector<Element>> elements;  // by total degree
  /// position[arity][simplex * dim + fiber]: index within its total degree, -1 if excluded
  std::vector<std::vector<long>> position;
};

TotalBasis total_basis(const Nerve& n, const std::vector<int>& degrees, int lo, int hi, bool normalized);

/// Cohomology of the total complex through degree `max_degree`, starting at
/// the lowest nonempty degree.
CohomologyReport cohomology_G(const Nerve& n, const RepG& r, int max_degree, bool normalized = true);

/// Components phi_k (matrices E_s -> E'_t of degree -k) of a morphism.
struct MorphismG {
  std::map<int, std::vector<RationalMatrix>> phi;
  RationalMatrix at(int k, std::size_t idx, std::size_t rows, std::size_t cols) const;
};

MorphismG identity_morphism(const Nerve& n, const RepG& r);

struct MorphismGCheck {
  std::vector<RepGFailure> failures;  // equations for a map, by k
  bool chain_map = true;              // phi D = D' phi on normalized cochains, checked degrees
  bool ok() const { return failures.empty() && chain_map; }
};

/// Equations for a map for k <= bound, plus phi D = D' phi on the normalized
/// total complex in degrees lo..hi.
MorphismGCheck check_morphism_G(const Nerve& n, const MorphismG& phi, const RepG& e, const RepG& f, int bound,
                                int lo = 0, int hi = 2);

/// phi_0 induces isomorphisms on fiber cohomology (E_x, F_0) -> (E'_x, F'_0)
/// at every object.
bool quasi_iso_G(const Nerve& n, const MorphismG& phi, const RepG& e, const RepG& f);

/// Cochain map phi~ = sum_k phi~_k on the total complex.
SparseMatrix morphism_matrix(const Nerve& n, const MorphismG& phi, const RepG& e, const RepG& f, int degree,
                             bool normalized = true);

/// The unique F' making phi a morphism (E, F) -> (E, F'), solved through
/// arity `bound`. Throws std::domain_error if phi_0 is not invertible.
RepG gauge_transform(const Nerve& n, const RepG& r, const MorphismG& phi, int bound);

/// gamma^* E over the nerve of the source groupoid.
RepG pullback_rep(const Nerve& from, const Nerve& to, const GroupoidMorphism& gamma, const RepG& r);
/// gamma^* on cochains.
FiniteCochain pullback_cochain(const Nerve& from, const Nerve& to, const GroupoidMorphism& gamma,
                               const FiniteCochain& eta);

struct ElementaryQuasiIso {
  MorphismG phi;  // E -> pi^* iota^* E
  RepG target;
};

/// phi_k(g_1..g_k) = F_{k+1}(nu(g_1), g_1, .., g_k); the target has
/// F'_0(x) = F_0(iota pi x), F'_1 = id.
ElementaryQuasiIso elementary_quasi_iso(const Nerve& n, const ElementaryStructure& e, const RepG& r, int bound);

struct HomotopyCheck {
  bool ok = true;
  std::size_t checked = 0;  // basis vectors checked
  std::string witness;
};

/// b^* s^* + s^* b^* = id on C_m^{m+k} (cochains vanishing when one of the
/// first m arguments is a unit), with b^* = sum_{i} (-1)^i d_{i+m+1}^* and
/// s^* inserting a unit after the m-th argument.
HomotopyCheck flat_star_homotopy(const Nerve& n, std::size_t width, int m, int k);

}  // namespace hrep
