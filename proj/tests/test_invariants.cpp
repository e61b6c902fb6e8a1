#include "chern/error.h"
#include "chern/graded.h"
#include "chern/invariants.h"
#include "chern/reps.h"
#include "random_inputs.h"

#include <catch_amalgamated.hpp>

using namespace chern;
using testing::fraction;

namespace {

SymbolicPolynomial x(int rank, int i) { return SymbolicPolynomial::variable(rank, i - 1); }
SymbolicPolynomial one(int rank) { return SymbolicPolynomial::constant(rank, 1); }

ErrorCode error_code_of(auto &&f)
{
	try
	{
		f();
	}
	catch (Error const &e)
	{
		return e.code();
	}
	FAIL("expected an error");
	return ErrorCode::defect;
}

std::vector<GroupSpec> classical_groups(int max_rank)
{
	std::vector<GroupSpec> r;
	for (int l = 1; l <= max_rank; ++l)
	{
		r.emplace_back(Family::GL, l);
		r.emplace_back(Family::Sp, l);
		r.emplace_back(Family::SOodd, l);
		if (l >= 2)
			r.emplace_back(Family::SOeven, l);
	}
	return r;
}

/** f is fixed by every element of W, checked by full enumeration. */
bool invariant_by_enumeration(SymbolicPolynomial const &f, GroupSpec const &g)
{
	for (auto const &w : weyl_elements(g))
		if (!(apply(w, f) == f))
			return false;
	return true;
}

/** 1 + I1 + ... + I_l as a generator-space polynomial, optionally with I_l squared. */
GeneratorExpression sum_of_generators(GroupSpec const &g, bool last_squared, int sign)
{
	int l = g.rank();
	auto terms = one(l);
	for (int i = 1; i < l; ++i)
		terms += x(l, i);
	terms += last_squared ? Rational(sign) * x(l, l) * x(l, l) : x(l, l);
	return GeneratorExpression(g, terms);
}

} // namespace

TEST_CASE("invariance tests")
{
	auto gl2 = GroupSpec(Family::GL, 2), sp4 = GroupSpec(Family::Sp, 2);
	auto x1 = x(2, 1), x2 = x(2, 2);
	CHECK(is_invariant(x1 + x2, gl2));
	CHECK_FALSE(is_invariant(x1 - x2, gl2));
	CHECK_FALSE(is_invariant(x1 + x2, sp4));
	CHECK(is_invariant(x1 * x1 + x2 * x2, sp4));
	CHECK(is_invariant(x1 * x2, GroupSpec(Family::SOeven, 2)));
	CHECK_FALSE(is_invariant(x1 * x2, sp4));
	CHECK(is_invariant(x1, GroupSpec(Family::Torus, 2)));
	CHECK_THROWS_AS(is_invariant(x(3, 1), gl2), Error);
}

TEST_CASE("generator checks agree with full enumeration")
{
	std::mt19937_64 rng(21);
	for (auto const &g : classical_groups(3))
		for (int trial = 0; trial < 15; ++trial)
		{
			auto f = testing::random_polynomial(rng, g.rank(), 4);
			CHECK(is_invariant(f, g) == invariant_by_enumeration(f, g));
			auto s = symmetrize(f, g);
			CHECK(is_invariant(s, g) == invariant_by_enumeration(s, g));
		}
}

TEST_CASE("generator definitions")
{
	auto x1 = x(2, 1), x2 = x(2, 2);
	auto gl = generator_definitions(GroupSpec(Family::GL, 2));
	REQUIRE(gl.size() == 2);
	CHECK(gl[0].name == "I1");
	CHECK(gl[0].polynomial == x1 + x2);
	CHECK(gl[1].polynomial == x1 * x2);

	auto sp = generator_definitions(GroupSpec(Family::Sp, 2));
	CHECK(sp[0].polynomial == -(x1 * x1 + x2 * x2));
	CHECK(sp[1].polynomial == x1 * x1 * x2 * x2);

	auto so = generator_definitions(GroupSpec(Family::SOeven, 2));
	CHECK(so[0].polynomial == -(x1 * x1 + x2 * x2));
	CHECK(so[1].polynomial == x1 * x2);

	CHECK(error_code_of([] { generator_definitions(GroupSpec(Family::Torus, 2)); }) ==
	      ErrorCode::no_generators);

	for (int l = 1; l <= 4; ++l)
	{
		std::vector<int> deg_gl, deg_sp, deg_so;
		for (auto const &d : generator_definitions(GroupSpec(Family::GL, l)))
			deg_gl.push_back(d.degree);
		for (auto const &d : generator_definitions(GroupSpec(Family::SOodd, l)))
			deg_sp.push_back(d.degree);
		for (int p = 1; p <= l; ++p)
		{
			CHECK(deg_gl[p - 1] == p);
			CHECK(deg_sp[p - 1] == 2 * p);
		}
		if (l >= 2)
		{
			for (auto const &d : generator_definitions(GroupSpec(Family::SOeven, l)))
				deg_so.push_back(d.degree);
			for (int p = 1; p < l; ++p)
				CHECK(deg_so[p - 1] == 2 * p);
			CHECK(deg_so.back() == l);
		}
		for (auto const &g : classical_groups(l))
			for (auto const &d : generator_definitions(g))
			{
				CHECK(d.polynomial.is_homogeneous(d.degree));
				CHECK(is_invariant(d.polynomial, g));
			}
	}
}

TEST_CASE("signed generators are e_2p of the standard weights")
{
	for (int l = 1; l <= 4; ++l)
		for (auto family : {Family::Sp, Family::SOodd})
		{
			GroupSpec g(family, l);
			auto v = standard(g);
			std::vector<SymbolicPolynomial> roots;
			for (auto const &[a, m] : v.terms())
				roots.push_back(linear_form(a));
			auto defs = generator_definitions(g);
			for (int p = 1; p <= l; ++p)
				CHECK(defs[p - 1].polynomial == elementary_symmetric(roots, 2 * p, l));
		}
}

TEST_CASE("rewrite examples")
{
	auto gl2 = GroupSpec(Family::GL, 2);
	auto x1 = x(2, 1), x2 = x(2, 2);
	auto e = rewrite(x1 * x1 + x2 * x2, gl2);
	CHECK(to_string(e) == "I1^2 - 2*I2");
	CHECK(evaluate(e) == x1 * x1 + x2 * x2);

	auto sp4 = GroupSpec(Family::Sp, 2);
	CHECK(to_string(rewrite(total_chern(standard(sp4), 4), sp4)) == "1 + I1 + I2");

	auto so4 = GroupSpec(Family::SOeven, 2);
	CHECK(to_string(rewrite(x1 * x1 * x2 * x2, so4)) == "I2^2");
	CHECK(evaluate(GeneratorExpression(so4, x2 * x2)) == x1 * x1 * x2 * x2);
	CHECK(evaluate(GeneratorExpression(gl2, one(2) + x1)) == one(2) + x1 + x2);

	CHECK(error_code_of([&] { rewrite(x1, gl2); }) == ErrorCode::invariance);
	CHECK(error_code_of([&] { rewrite(x1 * x1, sp4); }) == ErrorCode::invariance);
	CHECK(error_code_of([&] { rewrite(x1 * x2, sp4); }) == ErrorCode::invariance);
	CHECK(error_code_of([&] { rewrite(x1, GroupSpec(Family::Torus, 2)); }) ==
	      ErrorCode::no_generators);
	CHECK(error_code_of([] { GeneratorExpression(GroupSpec(Family::GL, 2), one(3)); }) ==
	      ErrorCode::rank_mismatch);
}

TEST_CASE("reduce symmetric")
{
	// p_3 = e1^3 - 3 e1 e2 + 3 e3
	auto y1 = x(3, 1), y2 = x(3, 2), y3 = x(3, 3);
	auto r = reduce_symmetric(pow(y1, 3) + pow(y2, 3) + pow(y3, 3));
	CHECK(r == pow(y1, 3) - 3 * y1 * y2 + 3 * y3);
	CHECK(reduce_symmetric(SymbolicPolynomial(2)).is_zero());
	CHECK(error_code_of([&] { reduce_symmetric(y1); }) == ErrorCode::defect);
}

TEST_CASE("total chern class of the standard representation")
{
	for (int l = 1; l <= 4; ++l)
	{
		auto gl = GroupSpec(Family::GL, l);
		CHECK(rewrite(total_chern(standard(gl), l), gl) == sum_of_generators(gl, false, 1));
		for (auto family : {Family::Sp, Family::SOodd})
		{
			GroupSpec g(family, l);
			auto c = total_chern(standard(g), g.ambient_dimension());
			CHECK(rewrite(c, g) == sum_of_generators(g, false, 1));
			for (int q = 1; q <= g.ambient_dimension(); q += 2)
				CHECK(c.homogeneous_component(q).is_zero());
		}
		if (l >= 2)
		{
			// c_{2l} = prod(-x_i^2) = (-1)^l (x1...xl)^2 = (-1)^l I_l^2
			GroupSpec g(Family::SOeven, l);
			auto c = total_chern(standard(g), 2 * l);
			auto e = rewrite(c, g);
			CHECK(e == sum_of_generators(g, true, l % 2 ? -1 : 1));
			CHECK(evaluate(e) == c);
			for (int q = 1; q <= 2 * l; q += 2)
				CHECK(c.homogeneous_component(q).is_zero());
		}
	}
	auto so6 = GroupSpec(Family::SOeven, 3);
	CHECK(to_string(rewrite(total_chern(standard(so6), 6), so6)) == "1 + I1 + I2 - I3^2");
}

TEST_CASE("rewrite round trip on symmetrized polynomials")
{
	std::mt19937_64 rng(23);
	for (auto const &g : classical_groups(3))
		for (int trial = 0; trial < 25; ++trial)
		{
			auto f = symmetrize(testing::random_polynomial(rng, g.rank(), 6, 5), g);
			REQUIRE(is_invariant(f, g));
			auto e = rewrite(f, g);
			CHECK(evaluate(e) == f);
		}
}

TEST_CASE("rewrite of generator polynomials")
{
	// evaluate then rewrite recovers arbitrary generator expressions
	std::mt19937_64 rng(29);
	for (auto const &g : classical_groups(3))
		for (int trial = 0; trial < 10; ++trial)
		{
			GeneratorExpression e(g, testing::random_polynomial(rng, g.rank(), 3));
			CHECK(rewrite(evaluate(e), g) == e);
		}
}

TEST_CASE("symmetrize")
{
	auto x1 = x(2, 1), x2 = x(2, 2);
	CHECK(symmetrize(x1, GroupSpec(Family::GL, 2)) == fraction(1, 2) * (x1 + x2));
	CHECK(symmetrize(x1, GroupSpec(Family::Sp, 2)).is_zero());
	std::mt19937_64 rng(31);
	for (auto const &g : classical_groups(3))
		for (int trial = 0; trial < 10; ++trial)
		{
			auto s = symmetrize(testing::random_polynomial(rng, g.rank(), 5), g);
			CHECK(is_invariant(s, g));
			CHECK(symmetrize(s, g) == s);
		}
}

TEST_CASE("generator expression text")
{
	auto gl3 = GroupSpec(Family::GL, 3);
	auto i1 = x(3, 1), i2 = x(3, 2), i3 = x(3, 3);
	CHECK(to_string(GeneratorExpression(gl3, one(3) + i3 + i1 + i2)) == "1 + I1 + I2 + I3");
	// ordered by polynomial degree: I1^2 and I2 both have degree 2
	CHECK(to_string(GeneratorExpression(gl3, i2 + i1 * i1 + i3)) == "I1^2 + I2 + I3");
	auto so6 = GroupSpec(Family::SOeven, 3);
	// I3 has degree 3, I2 degree 4
	CHECK(to_string(GeneratorExpression(so6, i2 + i3)) == "I3 + I2");
}
