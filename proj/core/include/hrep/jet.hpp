#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hrep/matrix.hpp"
#include "hrep/polynomial.hpp"
#include "hrep/rational.hpp"

namespace hrep {

inline constexpr int kHardMaxGenerators = 8;

/// Generator cap for nilpotent jets: HOMOTOPY_REP_MAX_GENERATORS if set
/// (clamped to [1, 8]), otherwise 8.
int max_generators();

/// Element of C[eps_0, ..., eps_{m-1}] / (eps_i^2). Coefficients are indexed by
/// square-free generator subsets (bit masks). `universe` is the number of
/// declared generators; pure bodies have universe 0 and combine with anything.
template <class C>
class Jet {
 public:
  using Mask = std::uint16_t;
  using Term = std::pair<Mask, C>;

  Jet() = default;
  Jet(const C& body) {  // NOLINT(google-explicit-constructor)
    if (!is_zero_value(body)) terms_.emplace_back(Mask{0}, body);
  }
  template <class U = C, std::enable_if_t<!std::is_same_v<U, Rational>, int> = 0>
  Jet(const Rational& body) : Jet(C(body)) {}  // NOLINT(google-explicit-constructor)
  Jet(int body) : Jet(C(Rational(body))) {}    // NOLINT(google-explicit-constructor)

  static Jet generator(int index, int universe = max_generators()) {
    check_universe(universe);
    if (index < 0 || index >= universe) {
      throw std::out_of_range("jet generator " + std::to_string(index) + " outside universe of size " +
                              std::to_string(universe));
    }
    return monomial(static_cast<Mask>(1U << index), C(Rational(1)), universe);
  }

  static Jet monomial(Mask mask, const C& coeff, int universe = max_generators()) {
    check_universe(universe);
    if (mask >> universe) throw std::out_of_range("jet monomial uses generators outside the universe");
    Jet j;
    j.universe_ = mask == 0 ? 0 : universe;
    if (!is_zero_value(coeff)) j.terms_.emplace_back(mask, coeff);
    return j;
  }

  int universe() const { return universe_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_body_only() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

  C coefficient(Mask mask) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                               [](const Term& t, Mask m) { return t.first < m; });
    return (it != terms_.end() && it->first == mask) ? it->second : C(Rational(0));
  }
  C body() const { return coefficient(0); }

  /// Coefficient of the product of the listed generators. Throws for a
  /// generator outside this jet's universe (when it has one).
  C extract(std::initializer_list<int> generators) const { return coefficient(mask_of(generators)); }
  C extract(const std::vector<int>& generators) const { return coefficient(mask_of(generators)); }

  /// d/d eps_gen: keeps the terms containing eps_gen, with eps_gen removed.
  Jet derivative(int gen) const {
    const Mask bit = static_cast<Mask>(1U << gen);
    Jet out;
    out.universe_ = universe_;
    for (const auto& [m, c] : terms_) {
      if (m & bit) out.terms_.emplace_back(static_cast<Mask>(m & ~bit), c);
    }
    std::sort(out.terms_.begin(), out.terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    out.normalize_universe();
    return out;
  }

  /// Sets eps_gen = 0.
  Jet truncate(int gen) const {
    const Mask bit = static_cast<Mask>(1U << gen);
    Jet out;
    out.universe_ = universe_;
    for (const auto& t : terms_) {
      if (!(t.first & bit)) out.terms_.push_back(t);
    }
    out.normalize_universe();
    return out;
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using U = decltype(f(std::declval<const C&>()));
    Jet<U> out;
    std::map<Mask, U> acc;
    for (const auto& [m, c] : terms_) acc.emplace(m, f(c));
    return Jet<U>::from_map(acc, universe_);
  }

  static Jet from_map(const std::map<Mask, C>& acc, int universe) {
    Jet out;
    out.universe_ = universe;
    for (const auto& [m, c] : acc) {
      if (!is_zero_value(c)) out.terms_.emplace_back(m, c);
    }
    out.normalize_universe();
    return out;
  }

  friend Jet operator+(const Jet& a, const Jet& b) { return combine(a, b, 1); }
  friend Jet operator-(const Jet& a, const Jet& b) { return combine(a, b, -1); }
  Jet operator-() const {
    Jet out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }
  Jet& operator+=(const Jet& o) { return *this = *this + o; }
  Jet& operator-=(const Jet& o) { return *this = *this - o; }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    const int u = merged_universe(a, b);
    if (a.is_zero() || b.is_zero()) return Jet{};
    std::map<Mask, C> acc;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        if (ma & mb) continue;  // eps_i^2 = 0
        auto [it, inserted] = acc.try_emplace(static_cast<Mask>(ma | mb), ca * cb);
        if (!inserted) it->second = it->second + ca * cb;
      }
    }
    return from_map(acc, u);
  }
  friend Jet operator*(const Jet& a, const Rational& s) {
    if (s == 0) return Jet{};
    Jet out = a;
    for (auto& t : out.terms_) t.second = t.second * s;
    return out;
  }
  friend Jet operator*(const Rational& s, const Jet& a) { return a * s; }

  friend bool operator==(const Jet& a, const Jet& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + coeff_string(c) + ")";
      for (int g = 0; g < 16; ++g) {
        if (m & (1U << g)) out += "*e" + std::to_string(g);
      }
    }
    return out;
  }

 private:
  template <class U>
  friend class Jet;

  static void check_universe(int universe) {
    if (universe < 0 || universe > kHardMaxGenerators) {
      throw std::out_of_range("jet universe " + std::to_string(universe) + " exceeds hard cap " +
                              std::to_string(kHardMaxGenerators));
    }
  }

  static std::string coeff_string(const Rational& c) { return c.get_str(); }
  static std::string coeff_string(const Polynomial& c) { return c.to_string(); }

  template <class Range>
  Mask mask_of(const Range& generators) const {
    Mask m = 0;
    for (int g : generators) {
      if (g < 0 || g >= kHardMaxGenerators || (universe_ > 0 && g >= universe_)) {
        throw std::out_of_range("unknown jet generator " + std::to_string(g));
      }
      m = static_cast<Mask>(m | (1U << g));
    }
    return m;
  }

  static int merged_universe(const Jet& a, const Jet& b) {
    if (a.universe_ != 0 && b.universe_ != 0 && a.universe_ != b.universe_) {
      throw std::invalid_argument("jet generator-universe mismatch (" + std::to_string(a.universe_) + " vs " +
                                  std::to_string(b.universe_) + ")");
    }
    return std::max(a.universe_, b.universe_);
  }

  static Jet combine(const Jet& a, const Jet& b, int sign) {
    Jet out;
    out.universe_ = merged_universe(a, b);
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
        out.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        out.terms_.emplace_back(ib->first, sign > 0 ? ib->second : C(-ib->second));
        ++ib;
      } else {
        C c = sign > 0 ? C(ia->second + ib->second) : C(ia->second - ib->second);
        if (!is_zero_value(c)) out.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    out.normalize_universe();
    return out;
  }

  void normalize_universe() {
    if (is_body_only()) universe_ = 0;
  }

  std::vector<Term> terms_;
  int universe_ = 0;
};

template <class C>
inline bool is_zero_value(const Jet<C>& x) {
  return x.is_zero();
}

using JetScalar = Jet<Rational>;
using PolyJet = Jet<Polynomial>;
template <class C>
using JetVector = std::vector<Jet<C>>;
template <class C>
using JetMatrix = Matrix<Jet<C>>;

/// Evaluates `p` at a jet-valued point; nilpotency truncates automatically.
template <class C>
Jet<C> poly_eval_jet(const Polynomial& p, const JetVector<C>& point) {
  return p.evaluate<Jet<C>>(std::span<const Jet<C>>(point));
}

/// Rational value of a generator-free coefficient; throws if it depends on
/// base variables.
inline Rational constant_value(const Rational& x) { return x; }
inline Rational constant_value(const Polynomial& x) {
  if (!x.is_constant()) throw std::domain_error("expected a constant, got " + x.to_string());
  return x.constant_term();
}

template <class C>
Matrix<C> body_of(const JetMatrix<C>& m) {
  return m.map([](const Jet<C>& x) { return x.body(); });
}

/// Sum of m^k/k!. Requires the body of m to be zero; the series then stops
/// because every product of more than `universe` nilpotent entries vanishes.
template <class C>
JetMatrix<C> exp_nilpotent(const JetMatrix<C>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("exp_nilpotent: matrix is not square");
  for (const auto& x : m.data()) {
    if (!is_zero_value(x.body())) {
      throw std::domain_error("exp_nilpotent: nonzero body would need an infinite series");
    }
  }
  JetMatrix<C> result = JetMatrix<C>::identity(m.rows());
  JetMatrix<C> term = result;
  for (int k = 1; k <= kHardMaxGenerators + 1; ++k) {
    term = scaled(term * m, Rational(1, k));
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

/// Inverse of a jet matrix whose body is a constant invertible rational
/// matrix, via the terminating Neumann series around the body.
template <class C>
JetMatrix<C> inverse(const JetMatrix<C>& m) {
  const RationalMatrix body = body_of(m).map([](const C& x) { return constant_value(x); });
  const RationalMatrix body_inv = inverse(body);
  const auto lift = [](const RationalMatrix& r) { return r.map([](const Rational& x) { return Jet<C>(C(x)); }); };
  const JetMatrix<C> binv = lift(body_inv);
  const JetMatrix<C> nil = m - lift(body);
  const JetMatrix<C> x = -(binv * nil);
  JetMatrix<C> sum = JetMatrix<C>::identity(m.rows());
  JetMatrix<C> term = sum;
  for (int k = 1; k <= kHardMaxGenerators + 1; ++k) {
    term = term * x;
    if (term.is_zero()) break;
    sum += term;
  }
  return sum * binv;
}

template <class C>
JetMatrix<C> derivative(const JetMatrix<C>& m, int gen) {
  return m.map([gen](const Jet<C>& x) { return x.derivative(gen); });
}

template <class C>
JetVector<C> derivative(const JetVector<C>& v, int gen) {
  JetVector<C> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.derivative(gen));
  return out;
}

}  // namespace hrep
