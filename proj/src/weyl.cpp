#include "chern/weyl.h"

#include "chern/error.h"
#include "chern/numeric.h"

#include <algorithm>
#include <cctype>
#include <fmt/format.h>
#include <limits>
#include <numeric>

namespace chern {

std::string_view code_name(ErrorCode code)
{
	switch (code)
	{
	case ErrorCode::dimension: return "dimension-error";
	case ErrorCode::rank_mismatch: return "rank-mismatch";
	case ErrorCode::enumeration_refused: return "enumeration-refused";
	case ErrorCode::invalid_argument: return "invalid-argument";
	case ErrorCode::augmentation: return "augmentation-error";
	case ErrorCode::cap: return "cap-error";
	case ErrorCode::invariance: return "invariance-error";
	case ErrorCode::no_generators: return "no-canonical-generators";
	case ErrorCode::defect: return "defect";
	case ErrorCode::size_guard: return "size-guard";
	case ErrorCode::syntax: return "syntax-error";
	}
	return "unknown";
}

Integer binomial(Integer const &n, long k)
{
	if (k < 0)
		return 0;
	Integer num = 1;
	for (long i = 0; i < k; ++i)
		num *= n - i;
	return num / factorial(k);
}

Integer factorial(long n)
{
	Integer r = 1;
	for (long i = 2; i <= n; ++i)
		r *= i;
	return r;
}

GroupSpec::GroupSpec(Family family, int rank) : family_(family), rank_(rank)
{
	if (rank < 1)
		throw Error(ErrorCode::invalid_argument,
		            fmt::format("group rank must be >= 1, got {}", rank));
}

GroupSpec GroupSpec::parse(std::string_view text)
{
	auto fail = [&] {
		return SyntaxError(0, fmt::format("invalid group spec '{}' (expected "
		                                  "GL<n>, Sp<2l>, SO<m>, T<n>)",
		                                  text));
	};
	std::size_t i = 0;
	while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])))
		++i;
	auto prefix = text.substr(0, i);
	auto digits = text.substr(i);
	if (digits.empty() || digits.size() > 6 || digits[0] == '0' ||
	    !std::all_of(digits.begin(), digits.end(),
	                 [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
		throw fail();
	int n = std::stoi(std::string(digits));

	if (prefix == "GL")
		return GroupSpec(Family::GL, n);
	if (prefix == "T")
		return GroupSpec(Family::Torus, n);
	if (prefix == "Sp")
	{
		if (n % 2 != 0)
			throw fail();
		return GroupSpec(Family::Sp, n / 2);
	}
	if (prefix == "SO")
	{
		if (n < 2)
			throw fail();
		if (n % 2 == 0)
			return GroupSpec(Family::SOeven, n / 2);
		return GroupSpec(Family::SOodd, (n - 1) / 2);
	}
	throw fail();
}

int GroupSpec::ambient_dimension() const
{
	switch (family_)
	{
	case Family::GL:
	case Family::Torus: return rank_;
	case Family::Sp:
	case Family::SOeven: return 2 * rank_;
	case Family::SOodd: return 2 * rank_ + 1;
	}
	return rank_;
}

std::string GroupSpec::name() const
{
	switch (family_)
	{
	case Family::GL: return fmt::format("GL{}", rank_);
	case Family::Torus: return fmt::format("T{}", rank_);
	case Family::Sp: return fmt::format("Sp{}", 2 * rank_);
	case Family::SOeven: return fmt::format("SO{}", 2 * rank_);
	case Family::SOodd: return fmt::format("SO{}", 2 * rank_ + 1);
	}
	return "?";
}

bool Weight::is_zero() const
{
	return std::all_of(coords.begin(), coords.end(),
	                   [](std::int64_t c) { return c == 0; });
}

Weight operator+(Weight const &a, Weight const &b)
{
	if (a.rank() != b.rank())
		throw Error(ErrorCode::dimension, "weight length mismatch");
	Weight r = a;
	for (int i = 0; i < a.rank(); ++i)
		r.coords[i] += b.coords[i];
	return r;
}

Weight operator-(Weight const &a)
{
	Weight r = a;
	for (auto &c : r.coords)
		c = -c;
	return r;
}

Weight operator*(std::int64_t k, Weight const &a)
{
	Weight r = a;
	for (auto &c : r.coords)
		c *= k;
	return r;
}

std::string to_string(Weight const &a)
{
	return fmt::format("[{}]", fmt::join(a.coords, ","));
}

SignedPermutation SignedPermutation::identity(int n)
{
	SignedPermutation w;
	w.perm.resize(n);
	std::iota(w.perm.begin(), w.perm.end(), 0);
	w.signs.assign(n, 1);
	return w;
}

int SignedPermutation::sign_product() const
{
	int s = 1;
	for (int x : signs)
		s *= x;
	return s;
}

SignedPermutation compose(SignedPermutation const &a, SignedPermutation const &b)
{
	if (a.size() != b.size())
		throw Error(ErrorCode::dimension, "signed permutation size mismatch");
	int n = a.size();
	SignedPermutation r;
	r.perm.resize(n);
	r.signs.resize(n);
	// b sends slot j to b.perm[j] with sign b.signs[b.perm[j]], then a sends
	// that slot k to a.perm[k] with sign a.signs[a.perm[k]].
	for (int j = 0; j < n; ++j)
	{
		int k = b.perm[j];
		int i = a.perm[k];
		r.perm[j] = i;
		r.signs[i] = a.signs[i] * b.signs[k];
	}
	return r;
}

SignedPermutation inverse(SignedPermutation const &w)
{
	int n = w.size();
	SignedPermutation r;
	r.perm.resize(n);
	r.signs.resize(n);
	// w: a[j] -> slot perm[j], times signs[perm[j]]. The inverse sends slot
	// perm[j] back to j and must undo that sign.
	for (int j = 0; j < n; ++j)
	{
		r.perm[w.perm[j]] = j;
		r.signs[j] = w.signs[w.perm[j]];
	}
	return r;
}

Weight act(SignedPermutation const &w, Weight const &a)
{
	if (w.size() != a.rank())
		throw Error(ErrorCode::dimension,
		            fmt::format("cannot act with a rank-{} Weyl element on a "
		                        "rank-{} weight",
		                        w.size(), a.rank()));
	Weight r = Weight::zero(a.rank());
	for (int j = 0; j < a.rank(); ++j)
		r.coords[w.perm[j]] = w.signs[w.perm[j]] * a.coords[j];
	return r;
}

std::uint64_t weyl_order(GroupSpec const &g)
{
	constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
	auto mul = [&](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
		if (a != 0 && b > cap / a)
			return cap;
		return a * b;
	};
	int n = g.rank();
	std::uint64_t order = 1;
	switch (g.family())
	{
	case Family::Torus: return 1;
	case Family::GL:
		for (int i = 2; i <= n; ++i)
			order = mul(order, i);
		return order;
	case Family::Sp:
	case Family::SOodd:
	case Family::SOeven:
		for (int i = 2; i <= n; ++i)
			order = mul(order, i);
		for (int i = 0; i < (g.family() == Family::SOeven ? n - 1 : n); ++i)
			order = mul(order, 2);
		return order;
	}
	return order;
}

namespace {

void check_enumerable(GroupSpec const &g)
{
	auto order = weyl_order(g);
	if (order > max_weyl_enumeration)
		throw Error(ErrorCode::enumeration_refused,
		            fmt::format("Weyl group of {} has {} elements; enumeration "
		                        "is limited to {}",
		                        g.name(), order, max_weyl_enumeration));
}

bool allows_signs(Family f)
{
	return f == Family::Sp || f == Family::SOodd || f == Family::SOeven;
}

} // namespace

std::vector<SignedPermutation> weyl_elements(GroupSpec const &g)
{
	check_enumerable(g);
	int n = g.rank();
	if (g.family() == Family::Torus)
		return {SignedPermutation::identity(n)};

	std::vector<SignedPermutation> out;
	out.reserve(weyl_order(g));
	std::vector<int> perm(n);
	std::iota(perm.begin(), perm.end(), 0);
	std::uint32_t patterns = allows_signs(g.family()) ? (1u << n) : 1u;
	do
	{
		for (std::uint32_t mask = 0; mask < patterns; ++mask)
		{
			SignedPermutation w{perm, std::vector<int>(n, 1)};
			for (int i = 0; i < n; ++i)
				if (mask & (1u << i))
					w.signs[i] = -1;
			if (g.family() == Family::SOeven && w.sign_product() != 1)
				continue;
			out.push_back(std::move(w));
		}
	} while (std::next_permutation(perm.begin(), perm.end()));
	return out;
}

std::vector<SignedPermutation> weyl_generators(GroupSpec const &g)
{
	int n = g.rank();
	std::vector<SignedPermutation> gens;
	if (g.family() == Family::Torus)
		return gens;
	for (int i = 0; i + 1 < n; ++i)
	{
		auto w = SignedPermutation::identity(n);
		std::swap(w.perm[i], w.perm[i + 1]);
		gens.push_back(w);
	}
	if (g.family() == Family::Sp || g.family() == Family::SOodd)
	{
		auto w = SignedPermutation::identity(n);
		w.signs[n - 1] = -1;
		gens.push_back(w);
	}
	if (g.family() == Family::SOeven && n >= 2)
	{
		auto w = SignedPermutation::identity(n);
		std::swap(w.perm[n - 2], w.perm[n - 1]);
		w.signs[n - 2] = -1;
		w.signs[n - 1] = -1;
		gens.push_back(w);
	}
	return gens;
}

std::set<Weight> orbit(GroupSpec const &g, Weight const &a)
{
	if (a.rank() != g.rank())
		throw Error(ErrorCode::dimension,
		            fmt::format("weight {} does not match torus rank {} of {}",
		                        to_string(a), g.rank(), g.name()));
	check_enumerable(g);
	auto gens = weyl_generators(g);
	std::set<Weight> seen{a};
	std::vector<Weight> todo{a};
	while (!todo.empty())
	{
		Weight b = std::move(todo.back());
		todo.pop_back();
		for (auto const &w : gens)
		{
			auto c = act(w, b);
			if (seen.insert(c).second)
				todo.push_back(std::move(c));
		}
	}
	return seen;
}

} // namespace chern
