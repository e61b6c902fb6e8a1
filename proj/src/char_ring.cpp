#include "chern/char_ring.h"

#include "chern/error.h"

#include <fmt/format.h>

namespace chern {

namespace {

void check_rank(int a, int b)
{
	if (a != b)
		throw Error(ErrorCode::rank_mismatch,
		            fmt::format("characters of rank {} and {} cannot be combined",
		                        a, b));
}

void check_degree(int d)
{
	if (d < 0)
		throw Error(ErrorCode::invalid_argument,
		            fmt::format("truncation degree must be >= 0, got {}", d));
}

} // namespace

VirtualCharacter::VirtualCharacter(int rank) : rank_(rank) {}

VirtualCharacter VirtualCharacter::unit(int rank)
{
	return basis(Weight::zero(rank));
}

VirtualCharacter VirtualCharacter::basis(Weight const &a, Integer multiplicity)
{
	VirtualCharacter x(a.rank());
	x.add_term(a, multiplicity);
	return x;
}

Integer VirtualCharacter::multiplicity(Weight const &a) const
{
	auto it = terms_.find(a);
	return it == terms_.end() ? Integer(0) : it->second;
}

bool VirtualCharacter::is_effective() const
{
	for (auto const &[a, m] : terms_)
		if (m < 0)
			return false;
	return true;
}

void VirtualCharacter::add_term(Weight const &a, Integer const &m)
{
	if (a.rank() != rank_)
		throw Error(ErrorCode::dimension,
		            fmt::format("weight {} has length {}, expected {}",
		                        to_string(a), a.rank(), rank_));
	if (m == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(a, m);
	if (!inserted)
	{
		it->second += m;
		if (it->second == 0)
			terms_.erase(it);
	}
}

VirtualCharacter &VirtualCharacter::operator+=(VirtualCharacter const &y)
{
	check_rank(rank_, y.rank_);
	for (auto const &[a, m] : y.terms_)
		add_term(a, m);
	return *this;
}

VirtualCharacter &VirtualCharacter::operator-=(VirtualCharacter const &y)
{
	check_rank(rank_, y.rank_);
	for (auto const &[a, m] : y.terms_)
		add_term(a, -m);
	return *this;
}

VirtualCharacter &VirtualCharacter::operator*=(Integer const &k)
{
	if (k == 0)
		terms_.clear();
	else
		for (auto &[a, m] : terms_)
			m *= k;
	return *this;
}

VirtualCharacter operator*(VirtualCharacter const &x, VirtualCharacter const &y)
{
	check_rank(x.rank_, y.rank_);
	VirtualCharacter r(x.rank_);
	for (auto const &[a, m] : x.terms_)
		for (auto const &[b, n] : y.terms_)
			r.add_term(a + b, m * n);
	return r;
}

VirtualCharacter pow(VirtualCharacter const &x, unsigned n)
{
	auto r = VirtualCharacter::unit(x.rank());
	auto base = x;
	while (n)
	{
		if (n & 1)
			r = r * base;
		n >>= 1;
		if (n)
			base = base * base;
	}
	return r;
}

Integer augmentation(VirtualCharacter const &x)
{
	Integer s = 0;
	for (auto const &[a, m] : x.terms())
		s += m;
	return s;
}

VirtualCharacter adams(long k, VirtualCharacter const &x)
{
	if (k < 1)
		throw Error(ErrorCode::invalid_argument,
		            fmt::format("Adams operation index must be >= 1, got {}", k));
	VirtualCharacter r(x.rank());
	for (auto const &[a, m] : x.terms())
		r.add_term(k * a, m);
	return r;
}

std::string to_string(VirtualCharacter const &x)
{
	if (x.is_zero())
		return "0";
	std::string out;
	bool first = true;
	for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
	{
		auto const &[a, m] = *it;
		if (m < 0)
			out += first ? "-" : " - ";
		else if (!first)
			out += " + ";
		Integer mag = abs(m);
		if (m < 0 || mag != 1)
			out += mag.get_str();
		out += to_string(a);
		first = false;
	}
	return out;
}

CharSeries::CharSeries(int rank, int degree)
    : rank_(rank), coeffs_(degree + 1, VirtualCharacter(rank))
{
	check_degree(degree);
}

CharSeries CharSeries::one(int rank, int degree)
{
	CharSeries s(rank, degree);
	s.coeffs_[0] = VirtualCharacter::unit(rank);
	return s;
}

CharSeries operator*(CharSeries const &a, CharSeries const &b)
{
	check_rank(a.rank_, b.rank_);
	int d = std::min(a.degree(), b.degree());
	CharSeries r(a.rank_, d);
	for (int i = 0; i <= d; ++i)
	{
		if (a.coeffs_[i].is_zero())
			continue;
		for (int j = 0; i + j <= d; ++j)
			if (!b.coeffs_[j].is_zero())
				r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
	}
	return r;
}

CharSeries CharSeries::inverse() const
{
	if (coeffs_[0] != VirtualCharacter::unit(rank_))
		throw Error(ErrorCode::invalid_argument,
		            "series inverse requires constant coefficient [0]");
	// b_0 = 1, b_n = -sum_{k=1..n} a_k b_{n-k}
	CharSeries r(rank_, degree());
	r.coeffs_[0] = coeffs_[0];
	for (int n = 1; n <= degree(); ++n)
	{
		VirtualCharacter acc(rank_);
		for (int k = 1; k <= n; ++k)
			if (!coeffs_[k].is_zero() && !r.coeffs_[n - k].is_zero())
				acc += coeffs_[k] * r.coeffs_[n - k];
		r.coeffs_[n] = -acc;
	}
	return r;
}

CharSeries CharSeries::derivative() const
{
	CharSeries r(rank_, std::max(degree() - 1, 0));
	for (int p = 1; p <= degree(); ++p)
		r.coeffs_[p - 1] = Integer(p) * coeffs_[p];
	return r;
}

CharSeries CharSeries::truncated(int d) const
{
	check_degree(d);
	CharSeries r(rank_, d);
	for (int p = 0; p <= std::min(d, degree()); ++p)
		r.coeffs_[p] = coeffs_[p];
	return r;
}

namespace {

/** (1 + [a] t)^m for m >= 0, via the binomial theorem. */
CharSeries binomial_factor(Weight const &a, Integer const &m, int d)
{
	CharSeries s(a.rank(), d);
	for (long k = 0; k <= d; ++k)
	{
		auto c = binomial(m, k);
		if (c != 0)
			s[k] = VirtualCharacter::basis(static_cast<std::int64_t>(k) * a, c);
	}
	return s;
}

} // namespace

CharSeries lambda_series(VirtualCharacter const &x, int d)
{
	check_degree(d);
	auto positive = CharSeries::one(x.rank(), d);
	auto negative = CharSeries::one(x.rank(), d);
	for (auto const &[a, m] : x.terms())
	{
		if (m > 0)
			positive = positive * binomial_factor(a, m, d);
		else
			negative = negative * binomial_factor(a, -m, d);
	}
	return positive * negative.inverse();
}

VirtualCharacter adams_via_series(long k, VirtualCharacter const &x)
{
	if (k < 1)
		throw Error(ErrorCode::invalid_argument,
		            fmt::format("Adams operation index must be >= 1, got {}", k));
	int d = static_cast<int>(k);
	auto lam = lambda_series(x, d);
	auto log_derivative = lam.truncated(d - 1).inverse() * lam.derivative();
	auto const &c = log_derivative[d - 1];
	return (k % 2 == 1) ? c : -c;
}

CharSeries gamma_series(VirtualCharacter const &x, int d)
{
	auto lam = lambda_series(x, d);
	// t^p (1-t)^{-p} = sum_j C(p+j-1, j) t^{p+j}
	CharSeries r(x.rank(), d);
	r[0] = lam[0];
	for (int p = 1; p <= d; ++p)
	{
		if (lam[p].is_zero())
			continue;
		for (int j = 0; p + j <= d; ++j)
			r[p + j] += binomial(Integer(p + j - 1), j) * lam[p];
	}
	return r;
}

} // namespace chern
