#pragma once

#include "hhw/betti.hpp"
#include "hhw/partitions.hpp"
#include "hhw/series.hpp"

#include <string>
#include <string_view>

namespace hhw {

// Hochschild (co)homology of A(n) = C[S_n] x| A^{(x)n} from Betti data of A.

/// Homological table of A(n): sum over partitions lambda of n of
/// tensor_i S^{p_i(lambda)} HH_*(A). Cycles preserve the homological degree.
BettiTable hh_homology_wreath(const BettiTable& hom, int n);

/// Cohomological table of A(n) for A in VB(d), d even: each part of size i
/// contributes HH^*(A) shifted up by d(i-1) before taking super symmetric
/// powers over equal parts.
BettiTable hh_cohomology_wreath(const BettiTable& coh, int d, int n);

/// prod_{m=1}^{qb} prod_k (1 + (-1)^{k-1} q^m t^{k+d(m-1)})^{(-1)^{k-1} b_k},
/// truncated to q^qb, t^tb. The q^n coefficient is the Poincare polynomial
/// of HH^*(A(n)).
BiSeries generating_series_product(const BettiTable& coh, int d, int qb, int tb);

/// sum_n q^n P(HH^*(A(n)), t) assembled from hh_cohomology_wreath. Independent
/// route to generating_series_product.
BiSeries generating_series_sum(const BettiTable& coh, int d, int qb, int tb);

/// Literal closed-form products for the Weyl groups of type A and B acting on
/// the rational, trigonometric and q-Weyl algebras.
enum class ClosedForm { PA, PA_trig, PA_q, PB, PB_trig, PB_q };

/// Accepts "PA", "PA_trig", "PA_q", "PB", "PB_trig", "PB_q".
ClosedForm parse_closed_form(std::string_view label);
std::string to_string(ClosedForm label);

BiSeries closed_form(ClosedForm label, int qb, int tb);

/// prod_m (1 - q^m t^{2(m-1)})^{-1} (1 - q^m t^{2m})^{1 - nu} for a finite
/// subgroup of SL_2 with nu conjugacy classes.
BiSeries gamma_series(int nu, int qb, int tb);

/// Poincare polynomial (as a table of t-coefficients) of the orbifold
/// cohomology of S^n X for a surface X with the given Betti numbers.
BettiTable hilb_poincare(const BettiTable& surface_coh, int n);

/// dim HH^2(A(n)) read from hh_cohomology_wreath. Requires HH^0(A) = K and n >= 2.
long deformation_parameter_count(const BettiTable& coh, int d, int n);

/// b2 + b1(b1-1)/2 + [d == 2], the count predicted from HH^2(A) + Lambda^2 HH^1(A)
/// plus one extra parameter for surfaces.
long deformation_parameter_formula(const BettiTable& coh, int d);

} // namespace hhw
