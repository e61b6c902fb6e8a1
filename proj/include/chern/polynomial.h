#pragma once

#include "chern/numeric.h"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace chern {

using Exponents = std::vector<int>;

int total_degree(Exponents const &e);

/**
 * Print order: ascending total degree, and within one degree descending
 * lexicographic (x1 before x2). "1 + x1 + x2 + x1^2 + x1*x2 + x2^2".
 */
struct PrintOrder
{
	bool operator()(Exponents const &a, Exponents const &b) const;
};

/** Graded-lexicographic comparison with x1 > x2 > ... > xn. */
bool grlex_less(Exponents const &a, Exponents const &b);

/** Multivariate polynomial in x1..xn with exact rational coefficients. */
class SymbolicPolynomial
{
  public:
	using Terms = std::map<Exponents, Rational, PrintOrder>;

	explicit SymbolicPolynomial(int rank);

	static SymbolicPolynomial constant(int rank, Rational const &c);
	/** x_{i+1}; `i` is 0-based. */
	static SymbolicPolynomial variable(int rank, int i);
	static SymbolicPolynomial monomial(Exponents e, Rational const &c = 1);

	int rank() const { return rank_; }
	Terms const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	Rational coefficient(Exponents const &e) const;
	void add_term(Exponents const &e, Rational const &c);

	/** Highest total degree present; -1 for the zero polynomial. */
	int degree() const;
	/** Lowest total degree present; -1 for the zero polynomial. */
	int low_degree() const;
	bool is_homogeneous(int p) const;
	SymbolicPolynomial homogeneous_component(int p) const;
	SymbolicPolynomial truncated(int d) const;

	/** Largest exponent vector in graded-lex order. Requires nonzero. */
	std::pair<Exponents, Rational> leading_term() const;

	SymbolicPolynomial &operator+=(SymbolicPolynomial const &g);
	SymbolicPolynomial &operator-=(SymbolicPolynomial const &g);
	SymbolicPolynomial &operator*=(Rational const &c);

	friend SymbolicPolynomial operator+(SymbolicPolynomial f, SymbolicPolynomial const &g)
	{
		return f += g;
	}
	friend SymbolicPolynomial operator-(SymbolicPolynomial f, SymbolicPolynomial const &g)
	{
		return f -= g;
	}
	friend SymbolicPolynomial operator-(SymbolicPolynomial f) { return f *= -1; }
	friend SymbolicPolynomial operator*(Rational const &c, SymbolicPolynomial f)
	{
		return f *= c;
	}
	friend SymbolicPolynomial operator*(SymbolicPolynomial const &f,
	                                   SymbolicPolynomial const &g);

	bool operator==(SymbolicPolynomial const &) const = default;

  private:
	int rank_;
	Terms terms_;
};

SymbolicPolynomial pow(SymbolicPolynomial const &f, unsigned n);

/** Product truncated at total degree d, without forming higher terms. */
SymbolicPolynomial multiply_truncated(SymbolicPolynomial const &f,
                                      SymbolicPolynomial const &g, int d);

/** Elementary symmetric polynomial e_p of the given list of polynomials. */
SymbolicPolynomial elementary_symmetric(std::vector<SymbolicPolynomial> const &roots,
                                        int p, int rank);

/** Reduced fraction "a/b", or "a" when b == 1. */
std::string to_string(Rational const &c);

/** Joins (exponents, coefficient) terms in the given order. */
std::string format_terms(std::vector<std::pair<Exponents, Rational>> const &terms,
                         std::string_view prefix);

/**
 * Canonical text form, e.g. "1 + x1 + 1/2*x1^2". Variables are named
 * `prefix` followed by a 1-based index.
 */
std::string to_string(SymbolicPolynomial const &f, std::string_view prefix = "x");

} // namespace chern
