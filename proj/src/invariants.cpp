#include "chern/invariants.h"

#include "chern/error.h"

#include <algorithm>
#include <fmt/format.h>
#include <map>

namespace chern {

namespace {

void check_rank(SymbolicPolynomial const &f, GroupSpec const &g)
{
	if (f.rank() != g.rank())
		throw Error(ErrorCode::rank_mismatch,
		            fmt::format("polynomial in {} variables, but {} has torus "
		                        "rank {}",
		                        f.rank(), g.name(), g.rank()));
}

/** Weights of the standard representation as linear forms. */
std::vector<SymbolicPolynomial> standard_roots(GroupSpec const &g)
{
	int n = g.rank();
	std::vector<SymbolicPolynomial> roots;
	for (int i = 0; i < n; ++i)
	{
		auto x = SymbolicPolynomial::variable(n, i);
		roots.push_back(x);
		if (g.family() != Family::GL)
			roots.push_back(-x);
	}
	return roots;
}

/** Lazily built products e_1^{b_1} ... e_m^{b_m} in m variables. */
class ElementaryPowers
{
  public:
	explicit ElementaryPowers(int m) : m_(m)
	{
		std::vector<SymbolicPolynomial> vars;
		for (int i = 0; i < m; ++i)
			vars.push_back(SymbolicPolynomial::variable(m, i));
		for (int p = 1; p <= m; ++p)
			e_.push_back(elementary_symmetric(vars, p, m));
	}

	SymbolicPolynomial const &product(Exponents const &b)
	{
		auto it = cache_.find(b);
		if (it != cache_.end())
			return it->second;
		// peel one factor off the last nonzero exponent
		auto r = SymbolicPolynomial::constant(m_, 1);
		auto last = std::find_if(b.rbegin(), b.rend(), [](int x) { return x > 0; });
		if (last != b.rend())
		{
			auto idx = static_cast<int>(std::distance(last, b.rend())) - 1;
			auto smaller = b;
			--smaller[idx];
			r = product(smaller) * e_[idx];
		}
		return cache_.emplace(b, std::move(r)).first->second;
	}

  private:
	int m_;
	std::vector<SymbolicPolynomial> e_;
	std::map<Exponents, SymbolicPolynomial> cache_;
};

long binomial_small(long n, long k)
{
	long r = 1;
	for (long i = 1; i <= k; ++i)
		r = r * (n - k + i) / i;
	return r;
}

} // namespace

std::vector<GeneratorDefinition> generator_definitions(GroupSpec const &g)
{
	if (g.family() == Family::Torus)
		throw Error(ErrorCode::no_generators,
		            fmt::format("{} has no canonical invariant generators", g.name()));
	int n = g.rank();
	auto roots = standard_roots(g);
	std::vector<GeneratorDefinition> defs;
	for (int p = 1; p <= n; ++p)
	{
		auto name = fmt::format("I{}", p);
		if (g.family() == Family::GL)
			defs.push_back({name, elementary_symmetric(roots, p, n), p});
		else if (g.family() == Family::SOeven && p == n)
		{
			Exponents all_ones(n, 1);
			defs.push_back({name, SymbolicPolynomial::monomial(all_ones), n});
		}
		else
			defs.push_back({name, elementary_symmetric(roots, 2 * p, n), 2 * p});
	}
	return defs;
}

GeneratorExpression::GeneratorExpression(GroupSpec group, SymbolicPolynomial terms)
    : group_(group), terms_(std::move(terms))
{
	if (group_.family() == Family::Torus)
		throw Error(ErrorCode::no_generators,
		            fmt::format("{} has no canonical invariant generators",
		                        group_.name()));
	if (terms_.rank() != group_.rank())
		throw Error(ErrorCode::rank_mismatch,
		            fmt::format("{} has {} generators, expression uses {}",
		                        group_.name(), group_.rank(), terms_.rank()));
}

SymbolicPolynomial apply(SignedPermutation const &w, SymbolicPolynomial const &f)
{
	if (w.size() != f.rank())
		throw Error(ErrorCode::dimension, "Weyl element and polynomial rank differ");
	int n = f.rank();
	SymbolicPolynomial r(n);
	Exponents e2(n);
	for (auto const &[e, c] : f.terms())
	{
		int sign = 1;
		for (int i = 0; i < n; ++i)
		{
			if (w.signs[i] < 0 && e[i] % 2 != 0)
				sign = -sign;
		}
		for (int j = 0; j < n; ++j)
			e2[j] = e[w.perm[j]];
		r.add_term(e2, sign == 1 ? c : Rational(-c));
	}
	return r;
}

bool is_invariant(SymbolicPolynomial const &f, GroupSpec const &g)
{
	check_rank(f, g);
	for (auto const &w : weyl_generators(g))
		if (apply(w, f) != f)
			return false;
	return true;
}

SymbolicPolynomial reduce_symmetric(SymbolicPolynomial const &f)
{
	int m = f.rank();
	ElementaryPowers powers(m);
	SymbolicPolynomial result(m);
	auto rest = f;
	// the leading term strictly decreases, so the number of monomials of
	// degree <= deg f bounds the iteration count
	long limit = binomial_small(std::max(f.degree(), 0) + m, m) + 1;
	for (long iter = 0; !rest.is_zero(); ++iter)
	{
		if (iter > limit)
			throw Error(ErrorCode::defect, "symmetric reduction did not terminate");
		auto [a, c] = rest.leading_term();
		Exponents b(m, 0);
		for (int i = 0; i < m; ++i)
		{
			int next = i + 1 < m ? a[i + 1] : 0;
			if (a[i] < next)
				throw Error(ErrorCode::defect,
				            "symmetric reduction met a non-partition leading term");
			b[i] = a[i] - next;
		}
		result.add_term(b, c);
		rest -= c * powers.product(b);
	}
	return result;
}

GeneratorExpression rewrite(SymbolicPolynomial const &f, GroupSpec const &g)
{
	check_rank(f, g);
	if (g.family() == Family::Torus)
		throw Error(ErrorCode::no_generators,
		            fmt::format("{} has no canonical invariant generators", g.name()));
	if (!is_invariant(f, g))
		throw Error(ErrorCode::invariance,
		            fmt::format("{} is not invariant under the Weyl group of {}",
		                        to_string(f), g.name()));
	int n = g.rank();
	if (g.family() == Family::GL)
		return GeneratorExpression(g, reduce_symmetric(f));

	// Sp / SO: reduce in y_i = x_i^2, then e_p(y) = (-1)^p I_p (p < l for
	// SO(2l), where e_l(y) = I_l^2 and odd monomials carry one factor I_l).
	bool even_type = g.family() == Family::SOeven;
	SymbolicPolynomial even_part(n), odd_part(n);
	for (auto const &[e, c] : f.terms())
	{
		bool all_even = std::all_of(e.begin(), e.end(), [](int x) { return x % 2 == 0; });
		bool all_odd = std::all_of(e.begin(), e.end(), [](int x) { return x % 2 != 0; });
		Exponents half(n);
		if (all_even)
		{
			for (int i = 0; i < n; ++i)
				half[i] = e[i] / 2;
			even_part.add_term(half, c);
		}
		else if (even_type && all_odd)
		{
			for (int i = 0; i < n; ++i)
				half[i] = (e[i] - 1) / 2;
			odd_part.add_term(half, c);
		}
		else
			throw Error(ErrorCode::invariance,
			            fmt::format("{} has a monomial of mixed parity; not "
			                        "invariant under {}",
			                        to_string(f), g.name()));
	}

	SymbolicPolynomial out(n);
	auto translate = [&](SymbolicPolynomial const &in_e, int pfaffian_extra) {
		for (auto const &[b, c] : in_e.terms())
		{
			Exponents ie = b;
			int sign_exp = 0;
			for (int p = 1; p <= n; ++p)
			{
				if (even_type && p == n)
					ie[p - 1] = 2 * b[p - 1] + pfaffian_extra;
				else
					sign_exp += p * b[p - 1];
			}
			out.add_term(ie, sign_exp % 2 == 0 ? c : Rational(-c));
		}
	};
	translate(reduce_symmetric(even_part), 0);
	if (!odd_part.is_zero())
		translate(reduce_symmetric(odd_part), 1);
	return GeneratorExpression(g, std::move(out));
}

SymbolicPolynomial evaluate(GeneratorExpression const &e)
{
	auto defs = generator_definitions(e.group());
	int n = e.group().rank();
	std::vector<std::vector<SymbolicPolynomial>> powers(n);
	auto power = [&](int i, int k) -> SymbolicPolynomial const & {
		auto &list = powers[i];
		if (list.empty())
			list.push_back(SymbolicPolynomial::constant(n, 1));
		while (static_cast<int>(list.size()) <= k)
			list.push_back(list.back() * defs[i].polynomial);
		return list[k];
	};
	SymbolicPolynomial r(n);
	for (auto const &[b, c] : e.terms().terms())
	{
		auto term = SymbolicPolynomial::constant(n, c);
		for (int i = 0; i < n; ++i)
			if (b[i] > 0)
				term = term * power(i, b[i]);
		r += term;
	}
	return r;
}

SymbolicPolynomial symmetrize(SymbolicPolynomial const &f, GroupSpec const &g)
{
	check_rank(f, g);
	auto elements = weyl_elements(g);
	SymbolicPolynomial r(f.rank());
	for (auto const &w : elements)
		r += apply(w, f);
	return Rational(Integer(1), Integer(static_cast<unsigned long>(elements.size()))) * r;
}

std::string to_string(GeneratorExpression const &e)
{
	std::vector<int> degrees;
	if (e.group().family() != Family::Torus)
		for (auto const &d : generator_definitions(e.group()))
			degrees.push_back(d.degree);
	auto weighted = [&](Exponents const &b) {
		int s = 0;
		for (std::size_t i = 0; i < b.size(); ++i)
			s += b[i] * degrees[i];
		return s;
	};
	std::vector<std::pair<Exponents, Rational>> terms(e.terms().terms().begin(),
	                                                  e.terms().terms().end());
	std::stable_sort(terms.begin(), terms.end(), [&](auto const &a, auto const &b) {
		int wa = weighted(a.first), wb = weighted(b.first);
		if (wa != wb)
			return wa < wb;
		return b.first < a.first;
	});
	return format_terms(terms, "I");
}

} // namespace chern
