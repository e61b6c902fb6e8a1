#include "chern/graded.h"

#include "chern/error.h"

#include <fmt/format.h>

namespace chern {

SymbolicPolynomial linear_form(Weight const &a)
{
	SymbolicPolynomial f(a.rank());
	for (int i = 0; i < a.rank(); ++i)
	{
		Exponents e(a.rank(), 0);
		e[i] = 1;
		f.add_term(e, Rational(a.coords[i]));
	}
	return f;
}

SymbolicPolynomial symbol_map(VirtualCharacter const &x, int d)
{
	if (d < 0)
		throw Error(ErrorCode::invalid_argument, "symbol_map degree must be >= 0");
	SymbolicPolynomial r(x.rank());
	for (auto const &[a, m] : x.terms())
	{
		auto la = linear_form(a);
		auto power = SymbolicPolynomial::constant(x.rank(), 1);
		Integer fact = 1;
		for (int k = 0; k <= d; ++k)
		{
			if (k > 0)
			{
				power = power * la;
				fact *= k;
			}
			Rational c(m, fact);
			c.canonicalize();
			r += c * power;
		}
	}
	return r;
}

SymbolicPolynomial symbol_component(VirtualCharacter const &x, int k)
{
	SymbolicPolynomial r(x.rank());
	Rational inv_fact(Integer(1), factorial(k));
	for (auto const &[a, m] : x.terms())
		r += Rational(inv_fact * m) * pow(linear_form(a), k);
	return r;
}

std::optional<int> filtration_degree(VirtualCharacter const &x, int cap)
{
	if (cap < 1)
		throw Error(ErrorCode::invalid_argument,
		            fmt::format("filtration cap must be >= 1, got {}", cap));
	auto eps = augmentation(x);
	if (eps != 0)
		return 0;
	// ch(x) already has no constant term, so x - eps(x)[0] = x here.
	auto image = symbol_map(x, cap);
	if (image.is_zero())
		return std::nullopt;
	return image.low_degree();
}

GradedClass leading_class(VirtualCharacter const &x, int cap)
{
	if (augmentation(x) != 0)
		throw Error(ErrorCode::augmentation,
		            fmt::format("leading_class needs eps(x) = 0, got {}",
		                        augmentation(x).get_str()));
	auto p = filtration_degree(x, cap);
	if (!p)
		throw Error(ErrorCode::cap,
		            fmt::format("filtration degree of {} exceeds cap {}",
		                        to_string(x), cap));
	return {*p, symbol_component(x, *p)};
}

std::vector<GradedClass> chern_classes(VirtualCharacter const &x, int d)
{
	if (d < 0)
		throw Error(ErrorCode::invalid_argument, "Chern degree must be >= 0");
	auto reduced = x - VirtualCharacter::basis(Weight::zero(x.rank()), augmentation(x));
	auto gamma = gamma_series(reduced, d);
	std::vector<GradedClass> out;
	out.push_back({0, SymbolicPolynomial::constant(x.rank(), 1)});
	// gamma^p(reduced) lies in Gamma^p, so its image in gr^p is the
	// degree-p part of its symbol.
	for (int p = 1; p <= d; ++p)
		out.push_back({p, symbol_component(gamma[p], p)});
	return out;
}

GradedClass chern_class(VirtualCharacter const &x, int p)
{
	return chern_classes(x, p).back();
}

SymbolicPolynomial total_chern(VirtualCharacter const &x, int d)
{
	SymbolicPolynomial r(x.rank());
	for (auto const &c : chern_classes(x, d))
		r += c.value;
	return r;
}

SymbolicPolynomial chern_character(VirtualCharacter const &x, int d)
{
	return symbol_map(x, d);
}

} // namespace chern
