#include "hhw/koszul.hpp"

#include "hhw/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace hhw {

namespace {

constexpr int kRange = 4096;
constexpr Index kSide = 2 * kRange + 1;
constexpr Index kStride = kSide * kSide;

mpz_class binomial(long n, long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

void require_same(RankOneKind a, RankOneKind b) {
  if (a != b) throw std::invalid_argument("rank-one elements of different kinds");
}

// x^a p^b * x^c p^d in normal order.
void multiply_monomials(RankOneKind kind, Monomial m1, Monomial m2, const RationalFunction& coef,
                        RankOneElement& out) {
  const int a = m1.a, b = m1.b, c = m2.a, d = m2.b;
  switch (kind) {
  case RankOneKind::weyl:
    // p^b x^c = sum_j (-1)^j j! C(b,j) C(c,j) x^{c-j} p^{b-j}
    for (int j = 0; j <= std::min(b, c); ++j) {
      mpq_class k(factorial(j) * binomial(b, j) * binomial(c, j));
      if (j % 2) k = -k;
      out.add_term({a + c - j, b + d - j}, coef * RationalFunction(k));
    }
    break;
  case RankOneKind::trig: {
    // p^b X^c = X^c (p - c)^b
    mpz_class pow = 1; // (-c)^{b-i}, built from i = b downwards
    for (int i = b; i >= 0; --i) {
      out.add_term({a + c, i + d}, coef * RationalFunction(mpq_class(binomial(b, i) * pow)));
      pow *= -c;
    }
    break;
  }
  case RankOneKind::qweyl:
    // P^b X^c = q^{-bc} X^c P^b
    out.add_term({a + c, b + d}, coef * RationalFunction::q_power(-b * c));
    break;
  }
}

Monomial apply_eps(RankOneKind kind, Monomial m, RationalFunction& sign) {
  switch (kind) {
  case RankOneKind::weyl:
    if ((m.a + m.b) % 2) sign = -sign;
    return m;
  case RankOneKind::trig:
    if (m.b % 2) sign = -sign;
    return {-m.a, m.b};
  case RankOneKind::qweyl:
    return {-m.a, -m.b};
  }
  return m;
}

Index mono_index(Monomial m) {
  if (m.a < -kRange || m.a > kRange || m.b < -kRange || m.b > kRange)
    throw std::out_of_range("monomial exponent outside the indexable range");
  return static_cast<Index>(m.a + kRange) * kSide + static_cast<Index>(m.b + kRange);
}

Monomial index_mono(Index i) {
  return {static_cast<int>(i / kSide) - kRange, static_cast<int>(i % kSide) - kRange};
}

std::size_t components(int level) {
  if (level < 0 || level > 2) throw std::invalid_argument("Koszul level must be 0, 1 or 2");
  return level == 1 ? 2 : 1;
}

Cochain unflatten(RankOneKind kind, int level, const RfVector& v) {
  Cochain phi(components(level), RankOneElement(kind));
  for (const auto& [i, c] : v) phi[i / kStride].add_term(index_mono(i % kStride), c);
  return phi;
}

std::vector<Cochain> unit_cochains(RankOneKind kind, int level, const std::vector<Monomial>& basis) {
  std::vector<Cochain> out;
  const std::size_t comps = components(level);
  for (std::size_t c = 0; c < comps; ++c)
    for (Monomial m : basis) {
      Cochain phi(comps, RankOneElement(kind));
      phi[c] = RankOneElement::monomial(kind, m.a, m.b);
      out.push_back(std::move(phi));
    }
  return out;
}

EnvelopingElement central_x(RankOneKind kind) { return EnvelopingElement::pure(kind, {-1, 0}, {1, 0}); }
EnvelopingElement central_p(RankOneKind kind) { return EnvelopingElement::pure(kind, {0, -1}, {0, 1}); }

// g_I with epsilon(u) = g_1 u, epsilon(w) = g_2 w and g_12 w = g_2 w g_1.
EnvelopingElement z2_factor(RankOneKind kind, int level, std::size_t comp) {
  const EnvelopingElement one = EnvelopingElement::pure(kind, {0, 0}, {0, 0});
  const RationalFunction minus(-1);
  if (level == 0) return one;
  switch (kind) {
  case RankOneKind::weyl:
    return level == 1 ? minus * one : one;
  case RankOneKind::trig:
    if (level == 1) return comp == 0 ? minus * central_x(kind) : minus * one;
    return central_x(kind);
  case RankOneKind::qweyl:
    if (level == 1) return minus * (comp == 0 ? central_x(kind) : central_p(kind));
    return multiply(central_x(kind), central_p(kind));
  }
  return one;
}

CohomologyDims raw_dims(RankOneKind kind, Twist twist, int n, bool invariant) {
  const auto small = window_basis(kind, n - 2);
  const auto big = window_basis(kind, invariant ? n + 2 : n);
  CohomologyDims dims{};
  for (int level = 0; level <= 2; ++level) {
    const auto sources = unit_cochains(kind, level, small);
    std::vector<RfVector> cycles;
    if (level == 2) {
      for (const auto& s : sources) cycles.push_back(flatten(s));
    } else {
      Echelon<RationalFunction> e(true);
      for (Index j = 0; j < sources.size(); ++j) {
        auto rel = e.insert_tracked(flatten(koszul_differential(kind, twist, level, sources[j])), j);
        if (!rel) continue;
        RfVector z;
        for (const auto& [label, c] : *rel) axpy(z, c, flatten(sources[label]));
        cycles.push_back(std::move(z));
      }
    }
    Echelon<RationalFunction> e;
    if (level > 0)
      for (const auto& s : unit_cochains(kind, level - 1, big))
        e.insert(flatten(koszul_differential(kind, twist, level - 1, s)));
    const std::size_t base = e.rank();
    for (const auto& z : cycles) {
      if (!invariant) {
        e.insert(z);
        continue;
      }
      RfVector pz = z;
      axpy(pz, RationalFunction(1), flatten(z2_action(kind, twist, level, unflatten(kind, level, z))));
      e.insert(std::move(pz));
    }
    dims[level] = static_cast<long>(e.rank() - base);
  }
  return dims;
}

CohomologyDims stable_dims(RankOneKind kind, Twist twist, int window, bool invariant) {
  if (window < 4) throw std::invalid_argument("Koszul window must be at least 4");
  const CohomologyDims dims = raw_dims(kind, twist, window, invariant);
  if (window - 2 >= 4) {
    const CohomologyDims prev = raw_dims(kind, twist, window - 2, invariant);
    if (prev != dims) {
      std::ostringstream os;
      os << to_string(kind) << ": cohomology changes between windows " << window - 2 << " and " << window;
      throw InstabilityError(os.str());
    }
  }
  return dims;
}

std::string monomial_string(RankOneKind kind, Monomial m) {
  const bool weyl = kind == RankOneKind::weyl;
  std::string out;
  auto part = [&](const char* var, int e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  };
  part(weyl ? "x" : "X", m.a);
  part(kind == RankOneKind::qweyl ? "P" : "p", m.b);
  return out;
}

} // namespace

RankOneKind parse_rank_one_kind(std::string_view name) {
  if (name == "weyl") return RankOneKind::weyl;
  if (name == "trig") return RankOneKind::trig;
  if (name == "qweyl") return RankOneKind::qweyl;
  throw std::invalid_argument("unknown rank-one algebra: " + std::string(name));
}

std::string to_string(RankOneKind kind) {
  switch (kind) {
  case RankOneKind::weyl: return "weyl";
  case RankOneKind::trig: return "trig";
  case RankOneKind::qweyl: return "qweyl";
  }
  return "?";
}

bool in_domain(RankOneKind kind, Monomial m) {
  switch (kind) {
  case RankOneKind::weyl: return m.a >= 0 && m.b >= 0;
  case RankOneKind::trig: return m.b >= 0;
  case RankOneKind::qweyl: return true;
  }
  return false;
}

std::vector<Monomial> window_basis(RankOneKind kind, int n) {
  std::vector<Monomial> out;
  for (int a = -n; a <= n; ++a)
    for (int b = -n; b <= n; ++b) {
      const Monomial m{a, b};
      if (total_degree(m) <= n && in_domain(kind, m)) out.push_back(m);
    }
  return out;
}

// ---- RankOneElement ----

RankOneElement RankOneElement::monomial(RankOneKind kind, int a, int b, const RationalFunction& c) {
  RankOneElement x(kind);
  x.add_term({a, b}, c);
  return x;
}

void RankOneElement::add_term(Monomial m, const RationalFunction& c) {
  if (!in_domain(kind_, m)) throw std::invalid_argument("monomial outside the algebra's exponent domain");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

RankOneElement operator+(RankOneElement x, const RankOneElement& y) {
  require_same(x.kind_, y.kind_);
  for (const auto& [m, c] : y.terms_) x.add_term(m, c);
  return x;
}

RankOneElement operator-(RankOneElement x, const RankOneElement& y) {
  require_same(x.kind_, y.kind_);
  for (const auto& [m, c] : y.terms_) x.add_term(m, -c);
  return x;
}

RankOneElement operator*(const RationalFunction& c, RankOneElement x) {
  if (c.is_zero()) return RankOneElement(x.kind_);
  for (auto& [m, v] : x.terms_) v *= c;
  return x;
}

std::string RankOneElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest total degree first.
  std::vector<std::pair<Monomial, RationalFunction>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& x, const auto& y) { return total_degree(x.first) > total_degree(y.first); });
  for (const auto& [m, c] : sorted) {
    const std::string mono = monomial_string(kind_, m);
    std::string coef = c.to_string();
    bool neg = false;
    if (coef.find(' ') != std::string::npos) {
      if (coef.front() != '(') coef = "(" + coef + ")";
    } else if (coef.front() == '-') {
      neg = true;
      coef = coef.substr(1);
    }
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mono.empty())
      out += coef;
    else
      out += (coef == "1" ? "" : coef + " ") + mono;
  }
  return out;
}

RankOneElement multiply(const RankOneElement& x, const RankOneElement& y) {
  require_same(x.kind(), y.kind());
  RankOneElement out(x.kind());
  for (const auto& [m1, c1] : x.terms())
    for (const auto& [m2, c2] : y.terms()) multiply_monomials(x.kind(), m1, m2, c1 * c2, out);
  return out;
}

RankOneElement epsilon(const RankOneElement& x) {
  RankOneElement out(x.kind());
  for (const auto& [m, c] : x.terms()) {
    RationalFunction s = c;
    const Monomial e = apply_eps(x.kind(), m, s);
    out.add_term(e, s);
  }
  return out;
}

// ---- EnvelopingElement ----

EnvelopingElement EnvelopingElement::pure(RankOneKind kind, Monomial l, Monomial r, const RationalFunction& c) {
  EnvelopingElement x(kind);
  x.add_term(l, r, c);
  return x;
}

void EnvelopingElement::add_term(Monomial l, Monomial r, const RationalFunction& c) {
  if (!in_domain(kind_, l) || !in_domain(kind_, r))
    throw std::invalid_argument("monomial outside the algebra's exponent domain");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({l, r}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

EnvelopingElement operator+(EnvelopingElement x, const EnvelopingElement& y) {
  require_same(x.kind_, y.kind_);
  for (const auto& [k, c] : y.terms_) x.add_term(k.first, k.second, c);
  return x;
}

EnvelopingElement operator-(EnvelopingElement x, const EnvelopingElement& y) {
  require_same(x.kind_, y.kind_);
  for (const auto& [k, c] : y.terms_) x.add_term(k.first, k.second, -c);
  return x;
}

EnvelopingElement operator*(const RationalFunction& c, EnvelopingElement x) {
  if (c.is_zero()) return EnvelopingElement(x.kind_);
  for (auto& [k, v] : x.terms_) v *= c;
  return x;
}

EnvelopingElement multiply(const EnvelopingElement& x, const EnvelopingElement& y) {
  require_same(x.kind(), y.kind());
  const RankOneKind kind = x.kind();
  EnvelopingElement out(kind);
  for (const auto& [k1, c1] : x.terms())
    for (const auto& [k2, c2] : y.terms()) {
      RankOneElement left(kind), right(kind);
      multiply_monomials(kind, k1.first, k2.first, 1, left);
      multiply_monomials(kind, k2.second, k1.second, 1, right);
      const RationalFunction c = c1 * c2;
      for (const auto& [l, cl] : left.terms())
        for (const auto& [r, cr] : right.terms()) out.add_term(l, r, c * cl * cr);
    }
  return out;
}

RankOneElement act(const EnvelopingElement& e, const RankOneElement& n, Twist twist) {
  require_same(e.kind(), n.kind());
  const RankOneKind kind = e.kind();
  RankOneElement out(kind);
  for (const auto& [k, c] : e.terms()) {
    RankOneElement r = RankOneElement::monomial(kind, k.second.a, k.second.b);
    if (twist == Twist::eps) r = epsilon(r);
    out = out + c * multiply(multiply(RankOneElement::monomial(kind, k.first.a, k.first.b), n), r);
  }
  return out;
}

EnvelopingElement theta(const EnvelopingElement& x) {
  EnvelopingElement out(x.kind());
  for (const auto& [k, c] : x.terms()) {
    RationalFunction s = c;
    const Monomial l = apply_eps(x.kind(), k.second, s);
    const Monomial r = apply_eps(x.kind(), k.first, s);
    out.add_term(l, r, s);
  }
  return out;
}

EnvelopingElement koszul_u(RankOneKind kind) {
  if (kind == RankOneKind::weyl)
    return EnvelopingElement::pure(kind, {0, 0}, {1, 0}) - EnvelopingElement::pure(kind, {1, 0}, {0, 0});
  return EnvelopingElement::pure(kind, {1, 0}, {-1, 0}) - EnvelopingElement::pure(kind, {0, 0}, {0, 0});
}

EnvelopingElement koszul_w(RankOneKind kind) {
  if (kind == RankOneKind::qweyl)
    return EnvelopingElement::pure(kind, {0, 1}, {0, -1}) - EnvelopingElement::pure(kind, {0, 0}, {0, 0});
  return EnvelopingElement::pure(kind, {0, 0}, {0, 1}) - EnvelopingElement::pure(kind, {0, 1}, {0, 0});
}

Cochain koszul_differential(RankOneKind kind, Twist twist, int level, const Cochain& phi) {
  if (phi.size() != components(level)) throw std::invalid_argument("cochain has the wrong number of components");
  const EnvelopingElement u = koszul_u(kind), w = koszul_w(kind);
  switch (level) {
  case 0:
    return {act(u, phi[0], twist), act(w, phi[0], twist)};
  case 1:
    return {act(w, phi[0], twist) - act(u, phi[1], twist)};
  default:
    return {RankOneElement(kind)};
  }
}

Cochain z2_action(RankOneKind kind, Twist twist, int level, const Cochain& phi) {
  if (phi.size() != components(level)) throw std::invalid_argument("cochain has the wrong number of components");
  Cochain out;
  for (std::size_t c = 0; c < phi.size(); ++c) out.push_back(epsilon(act(z2_factor(kind, level, c), phi[c], twist)));
  return out;
}

RfVector flatten(const Cochain& phi) {
  RfVector v;
  for (std::size_t c = 0; c < phi.size(); ++c)
    for (const auto& [m, x] : phi[c].terms()) v.emplace_back(c * kStride + mono_index(m), x);
  return v;
}

CochainComplex build_cochain_complex(RankOneKind kind, Twist twist, int window) {
  if (window < 4) throw std::invalid_argument("Koszul window must be at least 4");
  CochainComplex cx{kind, twist, window, window_basis(kind, window), {}, {}, {}};
  for (const auto& phi : unit_cochains(kind, 0, cx.basis)) {
    const Cochain d = koszul_differential(kind, twist, 0, phi);
    cx.d0.push_back(flatten(d));
    cx.d1d0.push_back(flatten(koszul_differential(kind, twist, 1, d)));
  }
  for (const auto& phi : unit_cochains(kind, 1, cx.basis)) cx.d1.push_back(flatten(koszul_differential(kind, twist, 1, phi)));
  return cx;
}

CohomologyDims hh_cohomology_rank_one(RankOneKind kind, Twist twist, int window) {
  return stable_dims(kind, twist, window, false);
}

CohomologyDims z2_invariant_cohomology(RankOneKind kind, Twist twist, int window) {
  return stable_dims(kind, twist, window, true);
}

CohomologyDims crossed_z2_cohomology(RankOneKind kind, int window) {
  const CohomologyDims a = z2_invariant_cohomology(kind, Twist::id, window);
  const CohomologyDims b = z2_invariant_cohomology(kind, Twist::eps, window);
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

DualityReport duality_check(RankOneKind kind, int window) {
  if (window < 0) throw std::invalid_argument("duality_check: negative window");
  const EnvelopingElement u = koszul_u(kind), w = koszul_w(kind);
  DualityReport report;
  report.passed = theta(u) == u && theta(w) == w;
  if (!report.passed) report.detail = "theta does not fix u and w";
  const auto basis = window_basis(kind, window);
  for (Monomial l : basis)
    for (Monomial r : basis) {
      if (total_degree(l) + total_degree(r) > window) continue;
      const EnvelopingElement y = EnvelopingElement::pure(kind, l, r);
      const EnvelopingElement ty = theta(y);
      const RationalFunction minus(-1);
      // d0*(y) = (u y, w y); (z1, z2) -> (z2, -z1) after theta must give d1(a) = (a w, -a u) at a = theta(y).
      const bool d0_ok =
          theta(multiply(w, y)) == multiply(ty, w) && minus * theta(multiply(u, y)) == minus * multiply(ty, u);
      // d1*(y1, y2) = w y1 - u y2 at (y, 0) and (0, y); theta must give d0(a1, a2) = a1 u + a2 w at
      // (a1, a2) = (0, theta y) and (-theta y, 0).
      const bool d1_ok = theta(multiply(w, y)) == multiply(ty, w) &&
                         theta(minus * multiply(u, y)) == multiply(minus * ty, u);
      report.checked += 2;
      if ((!d0_ok || !d1_ok) && report.passed) {
        report.passed = false;
        report.detail = "mismatch at " + monomial_string(kind, l) + " (x) " + monomial_string(kind, r);
      }
    }
  return report;
}

} // namespace hhw
