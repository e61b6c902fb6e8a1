#include "chern/error.h"
#include "chern/filtration_check.h"
#include "chern/reps.h"
#include "random_inputs.h"

#include <catch_amalgamated.hpp>

using namespace chern;

namespace {

VirtualCharacter w(Weight a, long m = 1) { return VirtualCharacter::basis(a, m); }

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

/** Partitions of q into at most k parts. */
long partitions(int q, int k)
{
	if (q == 0)
		return 1;
	if (q < 0 || k == 0)
		return 0;
	// either fewer than k parts, or k parts each >= 1
	return partitions(q, k - 1) + partitions(q - k, k);
}

/** dim of the W-invariant homogeneous polynomials of degree q on X (x) Q. */
long invariant_polynomials(GroupSpec const &g, int q)
{
	int l = g.rank();
	switch (g.family())
	{
	case Family::GL: return partitions(q, l);
	case Family::Sp:
	case Family::SOodd: return q % 2 ? 0 : partitions(q / 2, l);
	case Family::SOeven:
	{
		long r = q % 2 ? 0 : partitions(q / 2, l);
		if (q >= l && (q - l) % 2 == 0)
			r += partitions((q - l) / 2, l);
		return r;
	}
	case Family::Torus:
	{
		// all monomials of degree q in l variables
		Integer c = binomial(Integer(q + l - 1), q);
		return c.get_si();
	}
	}
	return -1;
}

/** Graded count of invariants in r^p / r^{d+1}. */
long invariant_dimension(GroupSpec const &g, int p, int d)
{
	long r = 0;
	for (int q = p; q <= d; ++q)
		r += invariant_polynomials(g, q);
	return r;
}

std::vector<GroupSpec> desk_groups()
{
	return {GroupSpec(Family::Torus, 1), GroupSpec(Family::Torus, 2),
	        GroupSpec(Family::GL, 1),    GroupSpec(Family::GL, 2),
	        GroupSpec(Family::GL, 3),    GroupSpec(Family::Sp, 1),
	        GroupSpec(Family::Sp, 2),    GroupSpec(Family::SOodd, 2),
	        GroupSpec(Family::SOeven, 2), GroupSpec(Family::SOeven, 3)};
}

Vector basis_vector(TruncatedAlgebra const &m, Exponents const &k)
{
	auto v = m.zero();
	v[m.index(k)] = 1;
	return v;
}

} // namespace

TEST_CASE("truncated model shape")
{
	auto t1 = truncated_model(GroupSpec(Family::Torus, 1), 3);
	CHECK(t1.dimension() == 4);
	CHECK(t1.basis() == std::vector<Exponents>{{0}, {1}, {2}, {3}});
	CHECK(truncated_model(GroupSpec(Family::GL, 2), 2).dimension() == 6);

	auto u = w({1}) - VirtualCharacter::unit(1);
	CHECK(t1.reduce(u) == basis_vector(t1, {1}));
	CHECK(t1.reduce(pow(u, 2)) == basis_vector(t1, {2}));
	CHECK(is_zero(t1.reduce(pow(u, 4))));
	// [-1] = 1 - z + z^2 - z^3 + ...
	CHECK(t1.reduce(w({-1})) == Vector{1, -1, 1, -1});

	CHECK(error_code_of([] { truncated_model(GroupSpec(Family::GL, 2), 0); }) ==
	      ErrorCode::invalid_argument);
	CHECK(error_code_of([] { truncated_model(GroupSpec(Family::GL, 5), 20); }) ==
	      ErrorCode::size_guard);
	CHECK_THROWS_AS(t1.reduce(Weight{1, 0}), Error);
}

TEST_CASE("model is consistent with the character ring")
{
	std::mt19937_64 rng(71);
	for (int trial = 0; trial < 40; ++trial)
	{
		int n = testing::uniform(rng, 1, 3);
		int d = testing::uniform(rng, 1, 4);
		auto m = truncated_model(GroupSpec(Family::Torus, n), d);
		auto x = testing::random_virtual(rng, n, 4, 2), y = testing::random_virtual(rng, n, 4, 2);
		CHECK(m.reduce(x * y) == m.multiply(m.reduce(x), m.reduce(y)));
		auto u = m.reduce(x);
		auto v = m.reduce(y);
		auto z = m.reduce(testing::random_virtual(rng, n));
		CHECK(m.multiply(m.multiply(u, v), z) == m.multiply(u, m.multiply(v, z)));
		CHECK(m.multiply(m.unit(), u) == u);
	}
}

TEST_CASE("weyl action on the model")
{
	std::mt19937_64 rng(73);
	for (auto const &g : desk_groups())
	{
		auto m = truncated_model(g, 3);
		auto elems = weyl_elements(g);
		for (int trial = 0; trial < 5; ++trial)
		{
			auto x = testing::random_virtual(rng, g.rank(), 3, 2);
			auto const &s = elems[testing::uniform(rng, 0, (int)elems.size() - 1)];
			CHECK(m.act(s, m.reduce(x)) == m.reduce(chern::act(s, x)));
		}
		auto inv = m.invariant_subspace();
		CHECK(inv.dimension() == (std::size_t)invariant_dimension(g, 0, 3));
		if (weyl_order(g) > 1)
		{
			CHECK(inv.contains(m.reduce(standard(g))));
			auto e1 = Weight::zero(g.rank());
			e1.coords[0] = 1;
			CHECK_FALSE(inv.contains(m.reduce(w(e1))));
		}
	}
}

TEST_CASE("ambient filtration meets the invariants")
{
	for (auto const &g : desk_groups())
		for (int d = 1; d <= 4; ++d)
		{
			if (g.rank() == 3 && d > 3)
				continue;
			auto m = truncated_model(g, d);
			CHECK(gamma_subspace_ambient_cap_invariant(g, 0, d) == m.invariant_subspace());
			CHECK(gamma_subspace_ambient_cap_invariant(g, d + 1, d).dimension() == 0);
			for (int p = 0; p <= d; ++p)
				CHECK(gamma_subspace_ambient_cap_invariant(g, p, d).dimension() ==
				      (std::size_t)invariant_dimension(g, p, d));
		}
}

TEST_CASE("gamma filtration of the invariant subring")
{
	auto t1 = GroupSpec(Family::Torus, 1);
	auto m1 = truncated_model(t1, 2);
	CHECK(gamma_subspace_invariant(t1, 0, 2) == Subspace::full(3));
	CHECK(gamma_subspace_invariant(t1, 1, 2) ==
	      Subspace::span(3, std::vector<Vector>{basis_vector(m1, {1}), basis_vector(m1, {2})}));

	auto gl2 = GroupSpec(Family::GL, 2);
	CHECK(gamma_subspace_invariant(gl2, 2, 3) == gamma_subspace_ambient_cap_invariant(gl2, 2, 3));
	auto sp4 = GroupSpec(Family::Sp, 2);
	CHECK(gamma_subspace_ambient_cap_invariant(sp4, 2, 4) == gamma_subspace_invariant(sp4, 2, 4));

	CHECK(error_code_of([] { gamma_subspace_invariant(GroupSpec(Family::GL, 2), -1, 2); }) ==
	      ErrorCode::invalid_argument);
	CHECK(error_code_of([] { invariant_augmentation_generators(GroupSpec(Family::GL, 2), -1); }) ==
	      ErrorCode::invalid_argument);
}

TEST_CASE("orbit generators")
{
	auto gens = invariant_augmentation_generators(GroupSpec(Family::GL, 2), 1);
	// orbits of nonzero weights in [-1,1]^2 under swapping: 8 weights, 5 orbits
	CHECK(gens.size() == 5);
	for (auto const &x : gens)
	{
		CHECK(augmentation(x) == 0);
		CHECK(assert_g_rep(x, GroupSpec(Family::GL, 2)));
	}
	CHECK(invariant_augmentation_generators(GroupSpec(Family::Sp, 2), 0).empty());
}

TEST_CASE("filtration properties")
{
	for (auto const &g : desk_groups())
	{
		int d = g.rank() >= 3 ? 3 : 4;
		auto m = truncated_model(g, d);
		auto gamma = gamma_filtration_invariant(m, d + 1, d);
		REQUIRE(gamma.size() == (std::size_t)d + 2);
		auto inv = m.invariant_subspace();
		for (int p = 0; p <= d + 1; ++p)
		{
			auto cap = intersect(m.ideal_power(p), inv);
			// inclusion must hold unconditionally
			CHECK(cap.contains(gamma[p]));
			if (p <= d)
				CHECK(gamma[p].contains(gamma[p + 1]));
			CHECK(m.ideal_power(p).contains(m.ideal_power(p + 1)));
		}
		CHECK(gamma[d + 1].dimension() == 0);
		for (int p = 1; p <= d; ++p)
			for (int q = 1; p + q <= d; ++q)
				for (auto const &u : gamma[p].basis())
					for (auto const &v : gamma[q].basis())
						CHECK(gamma[p + q].contains(m.multiply(u, v)));
	}
}

TEST_CASE("orbit bound is stable")
{
	for (auto const &g : desk_groups())
	{
		int d = g.rank() >= 3 ? 3 : 4;
		auto m = truncated_model(g, d);
		auto at_d = gamma_filtration_invariant(m, d, d);
		auto wider = gamma_filtration_invariant(m, d, d + 1);
		for (int p = 0; p <= d; ++p)
			CHECK(at_d[p] == wider[p]);
	}
}

TEST_CASE("verify_prop reports")
{
	auto torus = verify_prop(GroupSpec(Family::Torus, 2), 3, 3);
	CHECK(torus.pass);
	CHECK(torus.entries.size() == 4);
	for (auto const &e : torus.entries)
	{
		CHECK(e.equal);
		CHECK(e.included);
		CHECK(e.missing_from_gamma_S.empty());
		CHECK(e.basis_gamma_S.empty());
	}

	auto gl2 = verify_prop(GroupSpec(Family::GL, 2), 4, 4);
	CHECK(gl2.pass);
	CHECK(gl2.entries[0].dim_gamma_S == 9);
	CHECK(gl2.entries[4].dim_gamma_R_cap_S == 3);

	CHECK(verify_prop(GroupSpec(Family::Sp, 2), 3, 4).pass);
	CHECK(verify_prop(GroupSpec(Family::SOeven, 3), 3, 3).pass);

	// p beyond the truncation: both sides vanish
	auto past = verify_prop(GroupSpec(Family::GL, 1), 4, 2);
	CHECK(past.pass);
	CHECK(past.entries[3].dim_gamma_S == 0);
	CHECK(past.entries[4].dim_gamma_R_cap_S == 0);
}
