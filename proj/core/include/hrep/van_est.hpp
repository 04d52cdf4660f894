#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hrep/algebroid.hpp"
#include "hrep/rep_algebroid.hpp"
#include "hrep/smooth_groupoid.hpp"

namespace hrep {

/// Section of the algebroid: free-entry coordinates of a Lie algebra element
/// (matrix group, constants only) or a polynomial vector field on R^n
/// (pair chart, A = TR^n).
using SmoothSection = std::vector<Polynomial>;

/// R_alpha(eta)(g_1..g_{k-1}) = d/deps eta(g_1, .., g_{k-1}, Phi_eps(s(g_{k-1}))^-1).
SmoothCochain R_alpha(const SmoothGroupoid& g, const SmoothCochain& eta, const SmoothSection& alpha);

/// R_{alphas.back()} .. R_{alphas[0]} eta, one jet generator per application.
/// Throws std::out_of_range past the generator cap.
SmoothCochain R_iterated(const SmoothGroupoid& g, const SmoothCochain& eta, const std::vector<SmoothSection>& alphas);

/// Psi(eta)(alpha_1..alpha_k), k = arity; degrees[c] is the fiber degree of
/// component c.
std::vector<Polynomial> Psi_on(const SmoothGroupoid& g, const SmoothCochain& eta, const std::vector<int>& degrees,
                               const std::vector<SmoothSection>& alphas);
/// Psi(eta) on the frame of the algebroid, as a column-valued form.
AForm Psi(const SmoothGroupoid& g, const SmoothCochain& eta, const std::vector<int>& degrees);
/// Trivial coefficients.
AForm Psi(const SmoothGroupoid& g, const SmoothCochain& f);

/// The frame section e_a.
SmoothSection frame_section(const SmoothGroupoid& g, std::size_t a);

struct ChainMapReport {
  struct Entry {
    int arity = 0;
    bool symbolic_ok = true;
    int samples_ok = 0;
    int samples = 0;
    std::string witness;
  };
  std::vector<Entry> entries;
  bool ok() const;
};

/// Psi(delta f) = d Psi(f) for each f: once as forms on the frame, and at
/// `samples` seeded random tuples of sections (plus a base point on a chart),
/// where Psi(delta f) is recomputed directly from the flows.
ChainMapReport check_chain_map(const SmoothGroupoid& g, const std::vector<SmoothCochain>& cochains, int samples,
                               unsigned seed);

/// R^_alpha(F) on a constant frame. With `guard`, the result is recomputed
/// with the section (1 + sum_c (c + 2) (y - x)_c) e_b and std::domain_error is
/// thrown if it changes (F not normalized).
SmoothMap hat_R_alpha(const SmoothGroupoid& g, const SmoothMap& f, const SmoothSection& alpha, bool guard = true);

/// Psi^(F) for F of arity k and degree m. Throws std::invalid_argument if F
/// is not normalized.
AForm hat_Psi(const SmoothGroupoid& g, const SmoothMap& f, int m);
PolyMatrix hat_Psi_on(const SmoothGroupoid& g, const SmoothMap& f, int m, const std::vector<SmoothSection>& alphas);

/// Psi-bar(F_1) in frame form: nabla_{e_a} = rho(e_a) + conn[a]. Throws
/// std::invalid_argument unless F_1 is the identity at units.
std::vector<PolyMatrix> bar_Psi(const SmoothGroupoid& g, const PolyMatrix& f1);

/// d_nabla on End(E)-valued forms: nabla o omega - (-1)^.. omega o nabla
/// plus the bracket terms.
AForm covariant_d_end(const AlgebroidModel& a, const std::vector<PolyMatrix>& conn, const AForm& omega);

/// Psi(E): del = F_0, connection Psi-bar(F_1), omega_k = Psi^(F_k).
/// Throws std::invalid_argument if E is not unital.
RepA differentiate_rep(const SmoothGroupoid& g, const SmoothRepG& e);
/// Psi(phi)_k = Psi^(phi_k) with phi_k of degree -k.
MorphismA differentiate_morphism(const SmoothGroupoid& g, const SmoothMorphismG& phi);

/// nabla_X alpha = [X^, alpha^] on the diagonal, with X^ the horizontal lift
/// and alpha^ the right invariant field. Pair chart only.
TMConnection induced_connection(const SmoothGroupoid& g, const EhresmannConn& sigma);

struct AdEqualsAdReport {
  struct Component {
    std::string name;
    bool symbolic_ok = true;
    bool samples_ok = true;
    std::string witness;
  };
  std::vector<Component> components;
  bool ok() const;
};

/// Psi(Ad_sigma) against ad_nabla componentwise: anchor, basic connection on
/// A and on TM, basic curvature, plus vanishing of higher terms. Symbolic
/// equality and equality at the given chart points.
AdEqualsAdReport check_Ad_equals_ad(const SmoothGroupoid& g, const EhresmannConn& sigma,
                                    const std::vector<std::vector<Rational>>& points);

}  // namespace hrep
