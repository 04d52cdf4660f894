#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hrep/rational.hpp"

namespace hrep {

/// Finite groupoid given by tables. Composition g*h is defined iff
/// source(g) == target(h); comp[g][h] is -1 otherwise.
class FiniteGroupoid {
 public:
  FiniteGroupoid() = default;
  /// Throws std::invalid_argument if the tables violate the groupoid axioms.
  FiniteGroupoid(std::size_t objects, std::vector<int> source, std::vector<int> target,
                 std::vector<std::vector<int>> comp, std::vector<int> units, std::vector<int> inverses);

  /// Pair groupoid over n points; arrow (p, q) : q -> p has index p * n + q.
  static FiniteGroupoid pair(std::size_t n);
  /// Only identity arrows over n objects.
  static FiniteGroupoid units_only(std::size_t n);
  /// Z/n as a one-object groupoid; arrow i is the class of i.
  static FiniteGroupoid cyclic(std::size_t n);

  std::size_t num_objects() const { return objects_; }
  std::size_t num_arrows() const { return source_.size(); }
  int source(int g) const { return source_[g]; }
  int target(int g) const { return target_[g]; }
  int unit(int x) const { return units_[x]; }
  int inverse(int g) const { return inverses_[g]; }
  bool is_unit(int g) const { return units_[source_[g]] == g; }
  bool composable(int g, int h) const { return source_[g] == target_[h]; }
  /// g*h; throws std::invalid_argument if not composable.
  int compose(int g, int h) const;

  const std::vector<std::vector<int>>& composition_table() const { return comp_; }

 private:
  std::size_t objects_ = 0;
  std::vector<int> source_, target_;
  std::vector<std::vector<int>> comp_;
  std::vector<int> units_, inverses_;
};

/// Describes the first failed axiom, if any.
std::optional<std::string> check_groupoid_axioms(std::size_t objects, const std::vector<int>& source,
                                                 const std::vector<int>& target,
                                                 const std::vector<std::vector<int>>& comp,
                                                 const std::vector<int>& units, const std::vector<int>& inverses);

/// A k-simplex of the nerve: the arrows (g_1, ..., g_k) with
/// target(g_{i+1}) == source(g_i); a 0-simplex is stored as {object}.
using Tuple = std::vector<int>;

struct TupleHash {
  std::size_t operator()(const Tuple& t) const noexcept;
};

/// Levels G_0 .. G_max of the nerve, enumerated deterministically (level k+1
/// extends level k by appending arrows in index order).
class Nerve {
 public:
  Nerve(FiniteGroupoid g, int max_arity);

  const FiniteGroupoid& groupoid() const { return g_; }
  int max_arity() const { return static_cast<int>(levels_.size()) - 1; }
  const std::vector<Tuple>& level(int k) const;
  std::size_t size(int k) const { return level(k).size(); }
  /// Index of a tuple in its level; throws std::out_of_range if absent.
  std::size_t index(int k, const Tuple& t) const;
  /// True if some g_i is a unit (never for k = 0).
  bool degenerate(int k, std::size_t idx) const { return degenerate_[check(k)][idx] != 0; }

  /// Vertex x_a, 0 <= a <= k: x_0 = t(g_1), x_a = s(g_a).
  int vertex(int k, const Tuple& t, int a) const;
  /// d_i for 0 <= i <= k (k >= 1).
  Tuple face(int k, const Tuple& t, int i) const;
  /// (g_{a+1}, ..., g_b); an empty range is the 0-simplex {x_a}.
  Tuple sub(int k, const Tuple& t, int a, int b) const;
  /// (g_1, .., g_m, 1, g_{m+1}, ..) with the unit inserted at vertex x_m.
  Tuple insert_unit(int k, const Tuple& t, int m) const;

 private:
  int check(int k) const;

  FiniteGroupoid g_;
  std::vector<std::vector<Tuple>> levels_;
  std::vector<std::unordered_map<Tuple, std::size_t, TupleHash>> index_;
  std::vector<std::vector<char>> degenerate_;
};

/// Cochain of arity k with values in a trivialized bundle of rank `width`
/// (width 1 for scalar cochains): values[tuple_index * width + j].
struct FiniteCochain {
  int arity = 0;
  std::size_t width = 1;
  std::vector<Rational> values;

  Rational& at(std::size_t idx, std::size_t j = 0) { return values[idx * width + j]; }
  const Rational& at(std::size_t idx, std::size_t j = 0) const { return values[idx * width + j]; }
  friend bool operator==(const FiniteCochain&, const FiniteCochain&) = default;
};

FiniteCochain zero_cochain(const Nerve& n, int arity, std::size_t width = 1);
bool is_normalized(const Nerve& n, const FiniteCochain& f);
FiniteCochain operator+(const FiniteCochain& a, const FiniteCochain& b);
FiniteCochain operator-(const FiniteCochain& a, const FiniteCochain& b);
FiniteCochain scaled(const FiniteCochain& a, const Rational& s);
bool is_zero(const FiniteCochain& f);

/// delta f = (-1)^k sum_i (-1)^i d_i^* f, componentwise; delta f(g) = f(s g) - f(t g) for k = 0.
FiniteCochain delta(const Nerve& n, const FiniteCochain& f);
/// (eta * f)(g_1..g_{p+k}) = (-1)^(kp) eta(g_1..g_p) f(g_{p+1}..g_{p+k}); f scalar.
FiniteCochain star(const Nerve& n, const FiniteCochain& eta, const FiniteCochain& f);
/// d_i^* f as a cochain of arity k + 1.
FiniteCochain face_pullback(const Nerve& n, const FiniteCochain& f, int i);

/// Functor between finite groupoids given on objects and arrows.
struct GroupoidMorphism {
  std::vector<int> on_objects;
  std::vector<int> on_arrows;
  friend bool operator==(const GroupoidMorphism&, const GroupoidMorphism&) = default;
};

std::optional<std::string> check_groupoid_morphism(const FiniteGroupoid& from, const FiniteGroupoid& to,
                                                   const GroupoidMorphism& f);
GroupoidMorphism compose(const GroupoidMorphism& after, const GroupoidMorphism& before);
GroupoidMorphism identity_morphism(const FiniteGroupoid& g);
/// Image of a k-simplex.
Tuple apply(const GroupoidMorphism& f, int k, const Tuple& t);

/// G^(k): the action groupoid of G on G_{k+1}. Objects are G_{k+1}, arrows
/// are G_{k+2} with source d_0 and target d_1. k = -1 gives G itself.
struct ActionNerve {
  int k = -1;
  FiniteGroupoid groupoid;
  std::vector<Tuple> objects;  // simplex of G_{k+1} for each object
  std::vector<Tuple> arrows;   // simplex of G_{k+2} for each arrow
};

ActionNerve action_nerve_groupoid(const FiniteGroupoid& g, int k);
/// flat_i : G^(k) -> G^(k-1), d_{i+2} on arrows and d_{i+1} on objects, 0 <= i <= k.
GroupoidMorphism flat_map(const FiniteGroupoid& g, int k, int i);
/// pi : G^(k) -> G, (g_1, ..) -> g_1 on arrows and (g_1, ..) -> t(g_1) on objects.
GroupoidMorphism nerve_projection(const FiniteGroupoid& g, int k);

/// Data exhibiting G as M x_N M: a map objects -> base and a section.
struct ElementaryStructure {
  std::vector<int> base_of;  // per object
  std::vector<int> section;  // per base point, an object over it
};

/// Exactly one arrow between objects with the same base, none otherwise.
std::optional<std::string> check_elementary(const FiniteGroupoid& g, const ElementaryStructure& e);
/// Fibration d_0 : G_{k+1} -> G_k with the section b -> (1, b).
ElementaryStructure elementary_structure(const FiniteGroupoid& g, const ActionNerve& an);
/// nu(x): the unique arrow x -> section(base_of(x)).
std::vector<int> elementary_nu(const FiniteGroupoid& g, const ElementaryStructure& e);

}  // namespace hrep
