#pragma once

// Weyl-invariant polynomials on the Cartan subalgebra and their expression
// in the classical generator systems I_1..I_l.
//
//   GL(n):          I_p = e_p(x1..xn)                          deg p
//   Sp(2l), SO(2l+1): I_p = e_{2p}(+-x1..+-xl) = (-1)^p e_p(x^2)  deg 2p
//   SO(2l):         I_p as above for p < l, I_l = x1*...*xl    deg l
//
// The SO(2l) Pfaffian generator is fixed with sign +1 in these coordinates.

#include "chern/polynomial.h"
#include "chern/weyl.h"

#include <string>
#include <vector>

namespace chern {

struct GeneratorDefinition
{
	std::string name; // "I1", "I2", ...
	SymbolicPolynomial polynomial;
	int degree;
};

/** Throws no_generators for tori. */
std::vector<GeneratorDefinition> generator_definitions(GroupSpec const &g);

/** Polynomial with rational coefficients in the formal generators I_1..I_l of g. */
class GeneratorExpression
{
  public:
	/** `terms` must have one variable per generator. */
	GeneratorExpression(GroupSpec group, SymbolicPolynomial terms);

	GroupSpec const &group() const { return group_; }
	/** Variable i of this polynomial stands for I_{i+1}. */
	SymbolicPolynomial const &terms() const { return terms_; }

	bool operator==(GeneratorExpression const &) const = default;

  private:
	GroupSpec group_;
	SymbolicPolynomial terms_;
};

/** (f o w)(x) = f(w.x). */
SymbolicPolynomial apply(SignedPermutation const &w, SymbolicPolynomial const &f);

bool is_invariant(SymbolicPolynomial const &f, GroupSpec const &g);

/** The unique E with evaluate(E) == f. Throws invariance for non-invariant f. */
GeneratorExpression rewrite(SymbolicPolynomial const &f, GroupSpec const &g);

/** Substitutes the generator polynomials into e. */
SymbolicPolynomial evaluate(GeneratorExpression const &e);

/** (1/|W|) sum_w f o w. */
SymbolicPolynomial symmetrize(SymbolicPolynomial const &f, GroupSpec const &g);

/**
 * Writes e_1..e_m of m variables as polynomials: returns R with
 * R(e_1(y), ..., e_m(y)) == f(y). Exposed for testing.
 */
SymbolicPolynomial reduce_symmetric(SymbolicPolynomial const &f);

/**
 * "1 + I1 + I2", ordered by ascending polynomial degree of each term and
 * descending lexicographic order within a degree.
 */
std::string to_string(GeneratorExpression const &e);

} // namespace chern
