#pragma once

// Hand-rolled generators for property tests. Every test seeds its own
// std::mt19937_64 so failures reproduce.

#include "chern/char_ring.h"
#include "chern/polynomial.h"
#include "chern/weyl.h"

#include <random>

namespace chern::testing {

inline int uniform(std::mt19937_64 &rng, int lo, int hi)
{
	return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational fraction(long num, long den)
{
	Rational q{Integer(num), Integer(den)};
	q.canonicalize();
	return q;
}

inline Weight random_weight(std::mt19937_64 &rng, int rank, int bound)
{
	Weight a = Weight::zero(rank);
	for (auto &c : a.coords)
		c = uniform(rng, -bound, bound);
	return a;
}

/** Up to `max_terms` weights, coordinates and multiplicities in [-bound, bound]. */
inline VirtualCharacter random_virtual(std::mt19937_64 &rng, int rank, int max_terms = 5,
                                       int bound = 2)
{
	VirtualCharacter x(rank);
	int terms = uniform(rng, 0, max_terms);
	for (int i = 0; i < terms; ++i)
		x.add_term(random_weight(rng, rank, bound), uniform(rng, -bound, bound));
	return x;
}

/** Multiset of 1..max_terms weights, all multiplicities positive. */
inline VirtualCharacter random_effective(std::mt19937_64 &rng, int rank, int max_terms = 4,
                                         int bound = 2)
{
	VirtualCharacter x(rank);
	int terms = uniform(rng, 1, max_terms);
	for (int i = 0; i < terms; ++i)
		x.add_term(random_weight(rng, rank, bound), uniform(rng, 1, 2));
	return x;
}

inline SymbolicPolynomial random_polynomial(std::mt19937_64 &rng, int rank, int max_degree,
                                            int max_terms = 4)
{
	SymbolicPolynomial f(rank);
	int terms = uniform(rng, 1, max_terms);
	for (int i = 0; i < terms; ++i)
	{
		Exponents e(rank, 0);
		int budget = uniform(rng, 0, max_degree);
		for (int j = 0; j < budget; ++j)
			++e[uniform(rng, 0, rank - 1)];
		f.add_term(e, fraction(uniform(rng, -5, 5), uniform(rng, 1, 3)));
	}
	return f;
}

inline GroupSpec random_group(std::mt19937_64 &rng, Family family, int max_rank)
{
	int lo = family == Family::SOeven ? 2 : 1;
	return GroupSpec(family, uniform(rng, lo, max_rank));
}

} // namespace chern::testing
