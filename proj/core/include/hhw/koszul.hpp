#pragma once

// Rank-one quantized algebras and their truncated Koszul complexes:
//   weyl   x^a p^b,  [x, p] = 1
//   trig   X^a p^b,  [X, p] = X,  a in Z
//   qweyl  X^a P^b,  XP = qPX,    a, b in Z, scalars in Q(q)
// Elements are kept in normal order (position variable left of momentum).

#include "hhw/linalg.hpp"
#include "hhw/rational_function.hpp"

#include <array>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hhw {

enum class RankOneKind { weyl, trig, qweyl };
enum class Twist { id, eps };

RankOneKind parse_rank_one_kind(std::string_view name);
std::string to_string(RankOneKind kind);

struct Monomial {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

bool in_domain(RankOneKind kind, Monomial m);
inline int total_degree(Monomial m) { return (m.a < 0 ? -m.a : m.a) + (m.b < 0 ? -m.b : m.b); }
/// All monomials of the kind with total degree <= n, in increasing order.
std::vector<Monomial> window_basis(RankOneKind kind, int n);

class RankOneElement {
public:
  explicit RankOneElement(RankOneKind kind) : kind_(kind) {}
  static RankOneElement monomial(RankOneKind kind, int a, int b, const RationalFunction& c = 1);
  static RankOneElement one(RankOneKind kind) { return monomial(kind, 0, 0); }

  RankOneKind kind() const { return kind_; }
  const std::map<Monomial, RationalFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(Monomial m, const RationalFunction& c);

  friend bool operator==(const RankOneElement&, const RankOneElement&) = default;
  friend RankOneElement operator+(RankOneElement x, const RankOneElement& y);
  friend RankOneElement operator-(RankOneElement x, const RankOneElement& y);
  friend RankOneElement operator*(const RationalFunction& c, RankOneElement x);

  /// e.g. "x p - 1", "X^-1 p^2", "(q - 1)/(q) X P".
  std::string to_string() const;

private:
  RankOneKind kind_;
  std::map<Monomial, RationalFunction> terms_;
};

/// Normal-ordered product. Throws std::invalid_argument on kind mismatch.
RankOneElement multiply(const RankOneElement& x, const RankOneElement& y);

/// The involution: x, p -> -x, -p (weyl); X, p -> X^-1, -p (trig);
/// X, P -> X^-1, P^-1 (qweyl).
RankOneElement epsilon(const RankOneElement& x);

/// Element of A^e = A (x) A^op, stored on pairs of monomials.
class EnvelopingElement {
public:
  explicit EnvelopingElement(RankOneKind kind) : kind_(kind) {}
  static EnvelopingElement pure(RankOneKind kind, Monomial l, Monomial r, const RationalFunction& c = 1);

  RankOneKind kind() const { return kind_; }
  const std::map<std::pair<Monomial, Monomial>, RationalFunction>& terms() const { return terms_; }
  void add_term(Monomial l, Monomial r, const RationalFunction& c);

  friend bool operator==(const EnvelopingElement&, const EnvelopingElement&) = default;
  friend EnvelopingElement operator+(EnvelopingElement x, const EnvelopingElement& y);
  friend EnvelopingElement operator-(EnvelopingElement x, const EnvelopingElement& y);
  friend EnvelopingElement operator*(const RationalFunction& c, EnvelopingElement x);

private:
  RankOneKind kind_;
  std::map<std::pair<Monomial, Monomial>, RationalFunction> terms_;
};

/// (a (x) b)(a' (x) b') = aa' (x) b'b.
EnvelopingElement multiply(const EnvelopingElement& x, const EnvelopingElement& y);
/// (l (x) r) . n = l n tau(r), tau = id or epsilon.
RankOneElement act(const EnvelopingElement& e, const RankOneElement& n, Twist twist);
/// (epsilon (x) epsilon) o swap, an anti-automorphism of A^e fixing u and w.
EnvelopingElement theta(const EnvelopingElement& x);

/// u = 1(x)x - x(x)1 (weyl), X(x)X^-1 - 1 (trig, qweyl).
EnvelopingElement koszul_u(RankOneKind kind);
/// w = 1(x)p - p(x)1 (weyl, trig), P(x)P^-1 - 1 (qweyl).
EnvelopingElement koszul_w(RankOneKind kind);

/// A cochain of Hom(K, A_tau): 1, 2 or 1 components at levels 0, 1, 2.
using Cochain = std::vector<RankOneElement>;

/// delta_0 n = (u.n, w.n), delta_1 (n1, n2) = w.n1 - u.n2.
Cochain koszul_differential(RankOneKind kind, Twist twist, int level, const Cochain& phi);

/// Action of the generator of Z_2 on cochains: the component at e_I goes to
/// epsilon(g_I . phi_I) for fixed elements g_I of A^e.
Cochain z2_action(RankOneKind kind, Twist twist, int level, const Cochain& phi);

using RfVector = SparseVector<RationalFunction>;

/// Coordinates of a cochain in a fixed monomial indexing.
RfVector flatten(const Cochain& phi);

struct CochainComplex {
  RankOneKind kind;
  Twist twist;
  int window;
  std::vector<Monomial> basis; ///< monomials of total degree <= window
  std::vector<RfVector> d0;    ///< one column per basis element
  std::vector<RfVector> d1;    ///< columns indexed (component, basis element)
  std::vector<RfVector> d1d0;  ///< composite, one column per basis element
};

/// Throws std::invalid_argument if window < 4.
CochainComplex build_cochain_complex(RankOneKind kind, Twist twist, int window);

using CohomologyDims = std::array<long, 3>;

/// Dimensions of HH^i(A, A_tau), i = 0..2, from ranks on the window: cycles
/// supported in degree <= N-2 modulo images of the full window. Throws
/// InstabilityError if the result differs at window N-2 (when N-2 >= 4).
CohomologyDims hh_cohomology_rank_one(RankOneKind kind, Twist twist, int window = 10);

/// Dimensions of the Z_2-invariant part of HH^i(A, A_tau).
CohomologyDims z2_invariant_cohomology(RankOneKind kind, Twist twist, int window = 10);

/// HH^*(Q[Z_2] x| A) = HH^*(A)^{Z_2} + HH^*(A, A_eps)^{Z_2}.
CohomologyDims crossed_z2_cohomology(RankOneKind kind, int window = 10);

struct DualityReport {
  bool passed = false;
  std::size_t checked = 0;
  std::string detail;
};

/// Checks on every A^e monomial of total degree <= window that theta carries
/// the dual differentials d0*, d1* onto the Koszul differentials d1, d0.
DualityReport duality_check(RankOneKind kind, int window = 6);

} // namespace hhw
