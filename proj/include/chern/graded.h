#pragma once

// Symbol map R(T) -> Pol(h) and the graded invariants computed through it:
// gamma-filtration degree, leading classes, Chern classes, Chern character.
//
// The symbol map is the Chern character [a] -> exp(La), La = sum_i a_i x_i.
// R(T) is split, so Gamma^p = r^p, and ch sends r^p into degrees >= p and
// is injective; the filtration degree of x in ker(eps) is therefore the
// lowest degree of ch(x), and its class in Gamma^p / Gamma^{p+1} is the
// degree-p component.

#include "chern/char_ring.h"
#include "chern/polynomial.h"

#include <optional>
#include <vector>

namespace chern {

/** A homogeneous class in gr^p; `value` is zero or homogeneous of degree p. */
struct GradedClass
{
	int degree;
	SymbolicPolynomial value;

	bool operator==(GradedClass const &) const = default;
};

/** La = a_1 x1 + ... + a_n xn. */
SymbolicPolynomial linear_form(Weight const &a);

/** sum_a m_a sum_{k <= d} (La)^k / k! */
SymbolicPolynomial symbol_map(VirtualCharacter const &x, int d);

/** Degree-k homogeneous part of symbol_map: sum_a m_a (La)^k / k!. */
SymbolicPolynomial symbol_component(VirtualCharacter const &x, int k);

/**
 * Least p <= cap with nonzero degree-p part of symbol_map(x - eps(x)[0]);
 * 0 when eps(x) != 0; nullopt ("beyond cap") when every part up to cap
 * vanishes.
 */
std::optional<int> filtration_degree(VirtualCharacter const &x, int cap);

/** Class of x in Gamma^p / Gamma^{p+1}, p = filtration_degree(x, cap). */
GradedClass leading_class(VirtualCharacter const &x, int cap);

/** c_p(x) = gamma^p(x - eps(x)) in Gamma^p / Gamma^{p+1}; c_0 = 1. */
GradedClass chern_class(VirtualCharacter const &x, int p);

/** c_0(x), ..., c_d(x) from a single gamma-series expansion. */
std::vector<GradedClass> chern_classes(VirtualCharacter const &x, int d);

/** c_0(x) + ... + c_d(x). */
SymbolicPolynomial total_chern(VirtualCharacter const &x, int d);

/** ch(x) truncated at degree d; equal to symbol_map(x, d). */
SymbolicPolynomial chern_character(VirtualCharacter const &x, int d);

} // namespace chern
