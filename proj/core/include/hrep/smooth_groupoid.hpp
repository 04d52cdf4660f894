#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hrep/algebroid.hpp"
#include "hrep/matrix.hpp"
#include "hrep/polynomial.hpp"

namespace hrep {

using Substitution = std::vector<Polynomial>;

/// Polynomial Lie groupoid. Cochains of arity k are polynomials in the
/// coordinates of G_k:
///  - MatrixGroup: a unipotent group of N x N matrices whose free entries sit at
///    the given strictly upper positions; slot i (1-based) of a k-tuple owns
///    variables (i-1)*m .. i*m-1, m = number of free entries. Base is a point.
///  - PairChart: pair groupoid of R^n; a k-tuple is its vertices x_0 .. x_k
///    (x_0 = t(g_1), x_i = s(g_i)) and vertex v owns variables v*n .. v*n+n-1.
class SmoothGroupoid {
 public:
  enum class Kind { kMatrixGroup, kPairChart };

  /// Throws std::invalid_argument if the positions are not strictly upper or
  /// the set of matrices is not closed under products.
  static SmoothGroupoid matrix_group(std::size_t n, std::vector<std::pair<int, int>> free_positions);
  /// 3x3 unipotent upper triangular matrices.
  static SmoothGroupoid heisenberg();
  /// (R^2, +) as the 3x3 matrices I + a E_01 + b E_02.
  static SmoothGroupoid abelian_plane();
  static SmoothGroupoid pair_chart(std::size_t n);

  Kind kind() const { return kind_; }
  bool is_matrix_group() const { return kind_ == Kind::kMatrixGroup; }
  /// Dimension of the base (0 for a matrix group).
  std::size_t base_dim() const { return kind_ == Kind::kPairChart ? n_ : 0; }
  /// Coordinates per arrow slot (matrix group) or per vertex (pair chart).
  std::size_t block() const { return kind_ == Kind::kPairChart ? n_ : positions_.size(); }
  /// Number of variables of G_k.
  std::size_t vars(int k) const;
  std::size_t matrix_size() const { return n_; }
  const std::vector<std::pair<int, int>>& positions() const { return positions_; }

  /// d_i as a substitution: arity k-1 variables in terms of arity k variables.
  Substitution face(int k, int i) const;
  /// (g_{a+1}, .., g_b) as a substitution into arity b-a variables.
  Substitution sub(int k, int a, int b) const;
  /// Arity k+1 variables in terms of arity k variables, a unit inserted at vertex j.
  Substitution degeneracy(int k, int j) const;

  /// The Lie algebroid: the Lie algebra with bracket [a, b] = b a - a b on
  /// the free entries (the bracket of right-invariant vector fields), or TR^n.
  AlgebroidModel algebroid() const;

  /// Matrix group: the element with the given free coordinates.
  PolyMatrix element(std::span<const Polynomial> coords) const;
  /// Matrix group: free coordinates of a matrix (other entries ignored).
  Substitution coordinates(const PolyMatrix& m) const;
  /// Matrix group: polynomial inverse.
  PolyMatrix inverse_element(const PolyMatrix& g) const;

 private:
  Kind kind_ = Kind::kPairChart;
  std::size_t n_ = 0;
  std::vector<std::pair<int, int>> positions_;
  Substitution product_;  // free coords of g h in terms of (g, h) coords
};

Polynomial pullback(const Polynomial& p, const Substitution& s);
PolyMatrix pullback(const PolyMatrix& m, const Substitution& s);

/// Cochain of arity k with values in a trivial bundle: one polynomial per
/// fiber coordinate, in the variables of G_k.
struct SmoothCochain {
  int arity = 0;
  std::vector<Polynomial> values;
  std::size_t width() const { return values.size(); }
  friend bool operator==(const SmoothCochain&, const SmoothCochain&) = default;
};

SmoothCochain operator+(const SmoothCochain& a, const SmoothCochain& b);
SmoothCochain operator-(const SmoothCochain& a, const SmoothCochain& b);
SmoothCochain scaled(const SmoothCochain& a, const Rational& s);
bool is_zero(const SmoothCochain& f);

SmoothCochain face_pullback(const SmoothGroupoid& g, const SmoothCochain& f, int i);
/// delta f = (-1)^k sum_i (-1)^i d_i^* f.
SmoothCochain delta(const SmoothGroupoid& g, const SmoothCochain& f);
/// (eta * f)(g_1..g_{p+k}) = (-1)^(kp) eta(g_1..g_p) f(g_{p+1}..); f scalar.
SmoothCochain star(const SmoothGroupoid& g, const SmoothCochain& eta, const SmoothCochain& f);
/// Vanishes whenever some argument is a unit.
bool is_normalized(const SmoothGroupoid& g, const SmoothCochain& f);
/// A normalized arity-k polynomial built from p. MatrixGroup: drops the
/// monomials that miss some slot. PairChart: multiplies p by
/// prod_i (x_i - x_{i-1})_{(i-1) mod n}.
Polynomial normalized_from(const SmoothGroupoid& g, int k, const Polynomial& p);
/// s^*(h) for a function h on the base: h(x_k) as an arity-k cochain.
SmoothCochain source_pullback(const SmoothGroupoid& g, const Polynomial& h, int k);
/// Value at a point of G_k.
std::vector<Rational> evaluate(const SmoothCochain& f, std::span<const Rational> point);

/// Matrix-valued cochain of arity k (an element of C^k_G(Hom(E, E'))).
struct SmoothMap {
  int arity = 0;
  PolyMatrix value;
};

/// (F o F')(g_1..g_{k+k'}) = F(g_1..g_k) F'(g_{k+1}..).
SmoothMap compose(const SmoothGroupoid& g, const SmoothMap& f, const SmoothMap& h);
SmoothMap face_pullback(const SmoothGroupoid& g, const SmoothMap& f, int i);
bool is_normalized(const SmoothGroupoid& g, const SmoothMap& f);

/// Representation up to homotopy with polynomial structure maps.
struct SmoothRepG {
  std::vector<int> degrees;
  std::map<int, PolyMatrix> F;  // F[k] in the variables of G_k
  bool unital = true;
  std::size_t dim() const { return degrees.size(); }
  PolyMatrix at(int k) const;
};

struct SmoothMorphismG {
  std::map<int, PolyMatrix> phi;  // phi[k] : E_s -> E'_t of degree -k, variables of G_k
  PolyMatrix at(int k, std::size_t rows, std::size_t cols) const;
};

struct SmoothCheck {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Structure equations for k <= bound as polynomial identities, plus
/// unitality when flagged.
SmoothCheck check_rep_G(const SmoothGroupoid& g, const SmoothRepG& r, int bound);
/// Equations for a map for k <= bound.
SmoothCheck check_morphism_G(const SmoothGroupoid& g, const SmoothMorphismG& phi, const SmoothRepG& e,
                             const SmoothRepG& f, int bound);

/// F~ for a structure map of arity k and fiber degree m on an arity-p cochain
/// whose components have degrees `col_degrees`.
SmoothCochain tilde_F(const SmoothGroupoid& g, int k, int m, const PolyMatrix& f, const std::vector<int>& col_degrees,
                      const SmoothCochain& eta);
/// D(eta) = sum_k F~_k(eta), keyed by arity.
std::map<int, SmoothCochain> apply_D(const SmoothGroupoid& g, const SmoothRepG& r, const SmoothCochain& eta);

/// F' with phi : (E, F) -> (E, F') a morphism, solved for k <= bound. phi_0
/// must be constant or unipotent; throws std::domain_error otherwise.
SmoothRepG gauge_transform(const SmoothGroupoid& g, const SmoothRepG& r, const SmoothMorphismG& phi, int bound);

/// Ehresmann connection. PairChart: sigma_(p,q)(v) = (lambda(p,q) v, v), with
/// lambda an n x n polynomial matrix in the arrow variables (p = x_0, q = x_1)
/// and lambda(x, x) = 1. A matrix group over a point has only the trivial one.
struct EhresmannConn {
  PolyMatrix lambda;
};

EhresmannConn trivial_connection(const SmoothGroupoid& g);

/// Ad_sigma on A + TM (A in degree 0, TM in degree 1): F_0 the anchor,
/// F_1 = lambda on both summands, F_2 = K_sigma : TM -> A. For a matrix group
/// only F_1 = conjugation remains. Throws std::invalid_argument if sigma is
/// not the natural splitting at units.
SmoothRepG build_Ad_sigma(const SmoothGroupoid& g, const EhresmannConn& sigma);

}  // namespace hrep
