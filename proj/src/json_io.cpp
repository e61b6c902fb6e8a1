#include "chern/json_io.h"

#include "chern/error.h"

namespace chern {

using nlohmann::json;

namespace {

json rational_terms(SymbolicPolynomial const &f)
{
	json out = json::array();
	for (auto const &[e, c] : f.terms())
		out.push_back({{"exponents", e},
		               {"numerator", c.get_num().get_str()},
		               {"denominator", c.get_den().get_str()}});
	return out;
}

json vectors(std::vector<Vector> const &rows)
{
	json out = json::array();
	for (auto const &v : rows)
	{
		json row = json::array();
		for (auto const &c : v)
			row.push_back(to_string(c));
		out.push_back(std::move(row));
	}
	return out;
}

Integer integer_field(json const &j)
{
	if (j.is_string())
		return Integer(j.get<std::string>());
	if (j.is_number_integer())
		return Integer(j.get<long>());
	throw Error(ErrorCode::syntax, "expected an integer (number or decimal string)");
}

} // namespace

json to_json(SymbolicPolynomial const &f)
{
	return rational_terms(f);
}

json to_json(GeneratorExpression const &e)
{
	return rational_terms(e.terms());
}

json to_json(VirtualCharacter const &x)
{
	json out = json::array();
	for (auto const &[a, m] : x.terms())
		out.push_back({{"weight", a.coords}, {"multiplicity", m.get_str()}});
	return out;
}

json to_json(PropReport const &report)
{
	json entries = json::array();
	for (auto const &e : report.entries)
	{
		json entry = {{"p", e.p},
		              {"dim_gamma_S", e.dim_gamma_S},
		              {"dim_gamma_R_cap_S", e.dim_gamma_R_cap_S},
		              {"equal", e.equal}};
		if (!e.included)
			entry["included"] = false;
		if (!e.equal)
		{
			entry["basis_gamma_S"] = vectors(e.basis_gamma_S);
			entry["basis_gamma_R_cap_S"] = vectors(e.basis_cap);
			entry["missing_from_gamma_S"] = vectors(e.missing_from_gamma_S);
			entry["missing_from_gamma_R_cap_S"] = vectors(e.missing_from_cap);
		}
		entries.push_back(std::move(entry));
	}
	return {{"group", report.group.name()},
	        {"d", report.degree},
	        {"entries", std::move(entries)},
	        {"pass", report.pass}};
}

SymbolicPolynomial polynomial_from_json(json const &j, int rank)
{
	SymbolicPolynomial f(rank);
	for (auto const &t : j)
	{
		Rational c(integer_field(t.at("numerator")), integer_field(t.at("denominator")));
		if (c.get_den() == 0)
			throw Error(ErrorCode::syntax, "zero denominator");
		c.canonicalize();
		f.add_term(t.at("exponents").get<Exponents>(), c);
	}
	return f;
}

VirtualCharacter character_from_json(json const &j, int rank)
{
	VirtualCharacter x(rank);
	for (auto const &t : j)
		x.add_term(Weight(t.at("weight").get<std::vector<std::int64_t>>()),
		           integer_field(t.at("multiplicity")));
	return x;
}

} // namespace chern
