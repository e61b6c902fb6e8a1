#pragma once

// The lambda-ring R(T) = Z[X] of virtual characters of a torus.

#include "chern/numeric.h"
#include "chern/weyl.h"

#include <map>
#include <string>
#include <vector>

namespace chern {

/**
 * Finitely supported map Weight -> nonzero integer multiplicity. Terms are
 * kept in lexicographic order of the coordinate vectors, so equality and
 * text output are canonical.
 */
class VirtualCharacter
{
  public:
	using Terms = std::map<Weight, Integer>;

	explicit VirtualCharacter(int rank);

	/** The ring unit [0]. */
	static VirtualCharacter unit(int rank);
	/** The basis element [a]. */
	static VirtualCharacter basis(Weight const &a, Integer multiplicity = 1);

	int rank() const { return rank_; }
	Terms const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	Integer multiplicity(Weight const &a) const;
	/** True when every multiplicity is positive. */
	bool is_effective() const;

	void add_term(Weight const &a, Integer const &m);

	VirtualCharacter &operator+=(VirtualCharacter const &y);
	VirtualCharacter &operator-=(VirtualCharacter const &y);
	VirtualCharacter &operator*=(Integer const &k);

	friend VirtualCharacter operator+(VirtualCharacter x, VirtualCharacter const &y)
	{
		return x += y;
	}
	friend VirtualCharacter operator-(VirtualCharacter x, VirtualCharacter const &y)
	{
		return x -= y;
	}
	friend VirtualCharacter operator*(Integer const &k, VirtualCharacter x)
	{
		return x *= k;
	}
	friend VirtualCharacter operator-(VirtualCharacter x) { return x *= -1; }

	/** Convolution: coefficient of c is the sum of x(a) y(b) over a + b = c. */
	friend VirtualCharacter operator*(VirtualCharacter const &x,
	                                  VirtualCharacter const &y);

	bool operator==(VirtualCharacter const &) const = default;

  private:
	int rank_;
	Terms terms_;
};

VirtualCharacter pow(VirtualCharacter const &x, unsigned n);

/** Ring homomorphism to Z: sum of multiplicities. */
Integer augmentation(VirtualCharacter const &x);

/** psi^k as weight dilation [a] -> [k a]. */
VirtualCharacter adams(long k, VirtualCharacter const &x);

/** Canonical text form, e.g. "2[1,0] + [0,1] - 1[0,0]". */
std::string to_string(VirtualCharacter const &x);

/** Power series in t with VirtualCharacter coefficients, truncated at t^degree. */
class CharSeries
{
  public:
	CharSeries(int rank, int degree);

	/** 1 + 0 t + ... */
	static CharSeries one(int rank, int degree);

	int rank() const { return rank_; }
	int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
	std::vector<VirtualCharacter> const &coefficients() const { return coeffs_; }
	VirtualCharacter const &operator[](int p) const { return coeffs_.at(p); }
	VirtualCharacter &operator[](int p) { return coeffs_.at(p); }

	friend CharSeries operator*(CharSeries const &a, CharSeries const &b);

	/** Truncated inverse; requires constant coefficient [0]. */
	CharSeries inverse() const;
	/** d/dt, truncated one degree lower. */
	CharSeries derivative() const;
	/** Drop coefficients above t^d. */
	CharSeries truncated(int d) const;

	bool operator==(CharSeries const &) const = default;

  private:
	int rank_;
	std::vector<VirtualCharacter> coeffs_;
};

/**
 * lambda_t(x) = prod_a (1 + [a] t)^{m_a}, truncated at t^d. Factors with
 * negative multiplicity enter through the series inverse.
 */
CharSeries lambda_series(VirtualCharacter const &x, int d);

/**
 * psi^k(x) read off from
 *   sum_k psi^k(x) (-t)^{k-1} = lambda_t(x)^{-1} d/dt lambda_t(x).
 * Independent of adams(); the two must agree.
 */
VirtualCharacter adams_via_series(long k, VirtualCharacter const &x);

/** gamma_t(x) = lambda_{t/(1-t)}(x), truncated at t^d. */
CharSeries gamma_series(VirtualCharacter const &x, int d);

} // namespace chern
