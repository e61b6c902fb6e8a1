#include "chern/reps.h"

#include "chern/error.h"

#include <fmt/format.h>

namespace chern {

VirtualCharacter standard(GroupSpec const &g)
{
	if (g.family() == Family::Torus)
		throw Error(ErrorCode::invalid_argument,
		            fmt::format("{} has no standard representation", g.name()));
	int n = g.rank();
	VirtualCharacter x(n);
	for (int i = 0; i < n; ++i)
	{
		auto e = Weight::zero(n);
		e.coords[i] = 1;
		x.add_term(e, 1);
		if (g.family() != Family::GL)
			x.add_term(-e, 1);
	}
	if (g.family() == Family::SOodd)
		x.add_term(Weight::zero(n), 1);
	return x;
}

VirtualCharacter exterior(VirtualCharacter const &x, int p)
{
	if (p < 0)
		throw Error(ErrorCode::invalid_argument, "exterior power must be >= 0");
	return lambda_series(x, p)[p];
}

VirtualCharacter symmetric(VirtualCharacter const &x, int p)
{
	if (p < 0)
		throw Error(ErrorCode::invalid_argument, "symmetric power must be >= 0");
	auto lam = lambda_series(x, p);
	for (int k = 1; k <= p; k += 2)
		lam[k] = -lam[k];
	return lam.inverse()[p];
}

VirtualCharacter dual(VirtualCharacter const &x)
{
	VirtualCharacter r(x.rank());
	for (auto const &[a, m] : x.terms())
		r.add_term(-a, m);
	return r;
}

VirtualCharacter act(SignedPermutation const &w, VirtualCharacter const &x)
{
	VirtualCharacter r(x.rank());
	for (auto const &[a, m] : x.terms())
		r.add_term(act(w, a), m);
	return r;
}

bool assert_g_rep(VirtualCharacter const &x, GroupSpec const &g)
{
	if (x.rank() != g.rank())
		throw Error(ErrorCode::rank_mismatch,
		            fmt::format("character of rank {} checked against {} (rank {})",
		                        x.rank(), g.name(), g.rank()));
	for (auto const &w : weyl_generators(g))
		if (act(w, x) != x)
			return false;
	return true;
}

} // namespace chern
