#include "chern/error.h"
#include "chern/polynomial.h"
#include "random_inputs.h"

#include <catch_amalgamated.hpp>

using namespace chern;
using testing::fraction;

namespace {

SymbolicPolynomial x(int rank, int i) { return SymbolicPolynomial::variable(rank, i - 1); }

/** e_p of the variables by summing over p-subsets directly. */
SymbolicPolynomial e_by_subsets(int rank, int p)
{
	SymbolicPolynomial r(rank);
	if (p > rank)
		return r;
	std::vector<bool> pick(rank, false);
	std::fill(pick.begin(), pick.begin() + p, true);
	do
	{
		Exponents e(rank, 0);
		for (int i = 0; i < rank; ++i)
			e[i] = pick[i] ? 1 : 0;
		r.add_term(e, 1);
	} while (std::prev_permutation(pick.begin(), pick.end()));
	return r;
}

} // namespace

TEST_CASE("polynomial text form")
{
	auto x1 = x(2, 1), x2 = x(2, 2);
	auto f = SymbolicPolynomial::constant(2, 1) + x1 + fraction(1, 2) * x1 * x1;
	CHECK(to_string(f) == "1 + x1 + 1/2*x1^2");
	CHECK(to_string(x2 * x2 + x1 * x2 + x1 * x1 + x2 + x1 + SymbolicPolynomial::constant(2, 1)) ==
	      "1 + x1 + x2 + x1^2 + x1*x2 + x2^2");
	CHECK(to_string(x1 - x2) == "x1 - x2");
	CHECK(to_string(-x1 * x1 * x2) == "-x1^2*x2");
	CHECK(to_string(fraction(-3, 4) * x2) == "-3/4*x2");
	CHECK(to_string(SymbolicPolynomial(3)) == "0");
	CHECK(to_string(x1 + x2, "I") == "I1 + I2");
	CHECK(to_string(fraction(6, 4)) == "3/2");
	CHECK(to_string(Rational(-5)) == "-5");
}

TEST_CASE("polynomial arithmetic")
{
	auto x1 = x(2, 1), x2 = x(2, 2);
	CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
	CHECK((x1 - x1).is_zero());
	CHECK(pow(x1 + x2, 3).coefficient({2, 1}) == 3);
	CHECK(pow(x1 + x2, 0) == SymbolicPolynomial::constant(2, 1));

	auto f = SymbolicPolynomial::constant(2, 2) + x1 + x1 * x2 * x2;
	CHECK(f.degree() == 3);
	CHECK(f.low_degree() == 0);
	CHECK(SymbolicPolynomial(2).degree() == -1);
	CHECK(f.homogeneous_component(3) == x1 * x2 * x2);
	CHECK(f.truncated(1) == SymbolicPolynomial::constant(2, 2) + x1);
	CHECK(f.homogeneous_component(3).is_homogeneous(3));
	CHECK_FALSE(f.is_homogeneous(3));
	CHECK(SymbolicPolynomial(2).is_homogeneous(4));

	CHECK_THROWS_AS(x1 + x(3, 1), Error);
	CHECK_THROWS_AS(SymbolicPolynomial(2).add_term({1, 0, 0}, 1), Error);
}

TEST_CASE("graded lex leading term")
{
	auto x1 = x(3, 1), x2 = x(3, 2), x3 = x(3, 3);
	auto f = x3 * x3 * x3 + x1 * x2 * x2 + x1 * x1;
	// degree 3: x1*x2^2 beats x3^3
	CHECK(f.leading_term().first == Exponents{1, 2, 0});
	CHECK(grlex_less({0, 0, 3}, {1, 2, 0}));
	CHECK(grlex_less({2, 0, 0}, {0, 0, 3}));
	CHECK_FALSE(grlex_less({1, 0, 0}, {1, 0, 0}));
}

TEST_CASE("truncated products")
{
	std::mt19937_64 rng(17);
	for (int trial = 0; trial < 100; ++trial)
	{
		int n = testing::uniform(rng, 1, 3);
		auto f = testing::random_polynomial(rng, n, 5);
		auto g = testing::random_polynomial(rng, n, 5);
		int d = testing::uniform(rng, 0, 8);
		CHECK(multiply_truncated(f, g, d) == (f * g).truncated(d));
		CHECK(f * g == g * f);
		CHECK((f + g).degree() <= std::max(f.degree(), g.degree()));
	}
}

TEST_CASE("elementary symmetric polynomials")
{
	for (int n = 1; n <= 4; ++n)
	{
		std::vector<SymbolicPolynomial> roots;
		for (int i = 1; i <= n; ++i)
			roots.push_back(x(n, i));
		for (int p = 0; p <= n + 1; ++p)
		{
			auto e = elementary_symmetric(roots, p, n);
			if (p == 0)
				CHECK(e == SymbolicPolynomial::constant(n, 1));
			else
				CHECK(e == e_by_subsets(n, p));
		}
		CHECK(elementary_symmetric(roots, -1, n).is_zero());
	}

	// roots +-x1, +-x2
	auto x1 = x(2, 1), x2 = x(2, 2);
	std::vector<SymbolicPolynomial> signed_roots{x1, -x1, x2, -x2};
	CHECK(elementary_symmetric(signed_roots, 2, 2) == -(x1 * x1 + x2 * x2));
	CHECK(elementary_symmetric(signed_roots, 4, 2) == x1 * x1 * x2 * x2);
	CHECK(elementary_symmetric(signed_roots, 1, 2).is_zero());
	CHECK(elementary_symmetric(signed_roots, 3, 2).is_zero());
}
