#include "chern/polynomial.h"

#include "chern/error.h"

#include <algorithm>
#include <fmt/format.h>
#include <numeric>

namespace chern {

int total_degree(Exponents const &e)
{
	return std::accumulate(e.begin(), e.end(), 0);
}

bool PrintOrder::operator()(Exponents const &a, Exponents const &b) const
{
	int da = total_degree(a), db = total_degree(b);
	if (da != db)
		return da < db;
	return b < a;
}

bool grlex_less(Exponents const &a, Exponents const &b)
{
	int da = total_degree(a), db = total_degree(b);
	if (da != db)
		return da < db;
	return a < b;
}

SymbolicPolynomial::SymbolicPolynomial(int rank) : rank_(rank)
{
	if (rank < 0)
		throw Error(ErrorCode::invalid_argument, "negative polynomial rank");
}

SymbolicPolynomial SymbolicPolynomial::constant(int rank, Rational const &c)
{
	SymbolicPolynomial f(rank);
	f.add_term(Exponents(rank, 0), c);
	return f;
}

SymbolicPolynomial SymbolicPolynomial::variable(int rank, int i)
{
	Exponents e(rank, 0);
	e.at(i) = 1;
	return monomial(std::move(e));
}

SymbolicPolynomial SymbolicPolynomial::monomial(Exponents e, Rational const &c)
{
	SymbolicPolynomial f(static_cast<int>(e.size()));
	f.add_term(e, c);
	return f;
}

Rational SymbolicPolynomial::coefficient(Exponents const &e) const
{
	auto it = terms_.find(e);
	return it == terms_.end() ? Rational(0) : it->second;
}

void SymbolicPolynomial::add_term(Exponents const &e, Rational const &c)
{
	if (static_cast<int>(e.size()) != rank_)
		throw Error(ErrorCode::dimension,
		            fmt::format("exponent vector of length {} in a rank-{} "
		                        "polynomial",
		                        e.size(), rank_));
	if (c == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(e, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

int SymbolicPolynomial::degree() const
{
	return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
}

int SymbolicPolynomial::low_degree() const
{
	return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
}

bool SymbolicPolynomial::is_homogeneous(int p) const
{
	return std::all_of(terms_.begin(), terms_.end(),
	                   [p](auto const &t) { return total_degree(t.first) == p; });
}

SymbolicPolynomial SymbolicPolynomial::homogeneous_component(int p) const
{
	SymbolicPolynomial r(rank_);
	for (auto const &[e, c] : terms_)
		if (total_degree(e) == p)
			r.terms_.emplace_hint(r.terms_.end(), e, c);
	return r;
}

SymbolicPolynomial SymbolicPolynomial::truncated(int d) const
{
	SymbolicPolynomial r(rank_);
	for (auto const &[e, c] : terms_)
	{
		if (total_degree(e) > d)
			break;
		r.terms_.emplace_hint(r.terms_.end(), e, c);
	}
	return r;
}

std::pair<Exponents, Rational> SymbolicPolynomial::leading_term() const
{
	if (terms_.empty())
		throw Error(ErrorCode::invalid_argument, "zero polynomial has no leading term");
	auto best = terms_.begin();
	for (auto it = terms_.begin(); it != terms_.end(); ++it)
		if (grlex_less(best->first, it->first))
			best = it;
	return *best;
}

SymbolicPolynomial &SymbolicPolynomial::operator+=(SymbolicPolynomial const &g)
{
	if (g.rank_ != rank_)
		throw Error(ErrorCode::rank_mismatch, "polynomial rank mismatch");
	for (auto const &[e, c] : g.terms_)
		add_term(e, c);
	return *this;
}

SymbolicPolynomial &SymbolicPolynomial::operator-=(SymbolicPolynomial const &g)
{
	if (g.rank_ != rank_)
		throw Error(ErrorCode::rank_mismatch, "polynomial rank mismatch");
	for (auto const &[e, c] : g.terms_)
		add_term(e, -c);
	return *this;
}

SymbolicPolynomial &SymbolicPolynomial::operator*=(Rational const &c)
{
	if (c == 0)
		terms_.clear();
	else
		for (auto &[e, v] : terms_)
			v *= c;
	return *this;
}

SymbolicPolynomial operator*(SymbolicPolynomial const &f, SymbolicPolynomial const &g)
{
	if (f.rank_ != g.rank_)
		throw Error(ErrorCode::rank_mismatch, "polynomial rank mismatch");
	SymbolicPolynomial r(f.rank_);
	Exponents e(f.rank_);
	for (auto const &[a, c] : f.terms_)
		for (auto const &[b, d] : g.terms_)
		{
			for (int i = 0; i < f.rank_; ++i)
				e[i] = a[i] + b[i];
			r.add_term(e, c * d);
		}
	return r;
}

SymbolicPolynomial pow(SymbolicPolynomial const &f, unsigned n)
{
	auto r = SymbolicPolynomial::constant(f.rank(), 1);
	for (unsigned i = 0; i < n; ++i)
		r = r * f;
	return r;
}

SymbolicPolynomial multiply_truncated(SymbolicPolynomial const &f,
                                      SymbolicPolynomial const &g, int d)
{
	if (f.rank() != g.rank())
		throw Error(ErrorCode::rank_mismatch, "polynomial rank mismatch");
	SymbolicPolynomial r(f.rank());
	Exponents e(f.rank());
	for (auto const &[a, c] : f.terms())
	{
		int da = total_degree(a);
		if (da > d)
			break;
		for (auto const &[b, v] : g.terms())
		{
			if (da + total_degree(b) > d)
				break;
			for (int i = 0; i < f.rank(); ++i)
				e[i] = a[i] + b[i];
			r.add_term(e, c * v);
		}
	}
	return r;
}

SymbolicPolynomial elementary_symmetric(std::vector<SymbolicPolynomial> const &roots,
                                        int p, int rank)
{
	if (p < 0)
		return SymbolicPolynomial(rank);
	// e_k of the first j roots, built up one root at a time
	std::vector<SymbolicPolynomial> e(p + 1, SymbolicPolynomial(rank));
	e[0] = SymbolicPolynomial::constant(rank, 1);
	for (auto const &r : roots)
		for (int k = p; k >= 1; --k)
			e[k] += e[k - 1] * r;
	return e[p];
}

std::string to_string(Rational const &c)
{
	if (c.get_den() == 1)
		return c.get_num().get_str();
	return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string format_terms(std::vector<std::pair<Exponents, Rational>> const &terms,
                         std::string_view prefix)
{
	if (terms.empty())
		return "0";
	std::string out;
	bool first = true;
	for (auto const &[e, c] : terms)
	{
		if (c < 0)
			out += first ? "-" : " - ";
		else if (!first)
			out += " + ";
		Rational mag = abs(c);
		std::vector<std::string> factors;
		for (std::size_t i = 0; i < e.size(); ++i)
		{
			if (e[i] == 1)
				factors.push_back(fmt::format("{}{}", prefix, i + 1));
			else if (e[i] > 1)
				factors.push_back(fmt::format("{}{}^{}", prefix, i + 1, e[i]));
		}
		if (factors.empty())
			out += to_string(mag);
		else
		{
			if (mag != 1)
				out += to_string(mag) + "*";
			out += fmt::format("{}", fmt::join(factors, "*"));
		}
		first = false;
	}
	return out;
}

std::string to_string(SymbolicPolynomial const &f, std::string_view prefix)
{
	return format_terms({f.terms().begin(), f.terms().end()}, prefix);
}

} // namespace chern
