#include "chern/filtration_check.h"

#include "chern/error.h"

#include <algorithm>
#include <fmt/format.h>
#include <set>

namespace chern {

namespace {

void enumerate_exponents(int n, int d, Exponents &cur, int pos, int remaining,
                         std::vector<Exponents> &out)
{
	if (pos == n)
	{
		out.push_back(cur);
		return;
	}
	for (int k = 0; k <= remaining; ++k)
	{
		cur[pos] = k;
		enumerate_exponents(n, d, cur, pos + 1, remaining - k, out);
	}
	cur[pos] = 0;
}

} // namespace

TruncatedAlgebra::TruncatedAlgebra(GroupSpec group, int d) : group_(group), degree_(d)
{
	if (d < 1)
		throw Error(ErrorCode::invalid_argument,
		            fmt::format("model truncation degree must be >= 1, got {}", d));
	int n = group.rank();
	Integer size = binomial(Integer(n + d), d);
	if (size > static_cast<unsigned long>(max_model_dimension))
		throw Error(ErrorCode::size_guard,
		            fmt::format("truncated model of {} at degree {} has dimension {} "
		                        "(limit {})",
		                        group.name(), d, size.get_str(), max_model_dimension));
	Exponents cur(n, 0);
	enumerate_exponents(n, d, cur, 0, d, basis_);
	std::stable_sort(basis_.begin(), basis_.end(), PrintOrder{});
	for (std::size_t i = 0; i < basis_.size(); ++i)
	{
		index_.emplace(basis_[i], i);
		basis_degree_.push_back(total_degree(basis_[i]));
	}
}

std::size_t TruncatedAlgebra::index(Exponents const &k) const
{
	auto it = index_.find(k);
	if (it == index_.end())
		throw Error(ErrorCode::dimension, "monomial outside the truncated model");
	return it->second;
}

Vector TruncatedAlgebra::unit() const
{
	auto v = zero();
	v[0] = 1;
	return v;
}

Vector TruncatedAlgebra::reduce(Weight const &a) const
{
	int n = group_.rank();
	if (a.rank() != n)
		throw Error(ErrorCode::dimension,
		            fmt::format("weight {} does not match model rank {}", to_string(a), n));
	// coefficient of z_i^k in (1 + z_i)^{a_i}
	std::vector<std::vector<Integer>> coeff(n);
	for (int i = 0; i < n; ++i)
		for (int k = 0; k <= degree_; ++k)
			coeff[i].push_back(binomial(Integer(static_cast<long>(a[i])), k));
	Vector v = zero();
	for (std::size_t b = 0; b < basis_.size(); ++b)
	{
		Integer c = 1;
		for (int i = 0; i < n && c != 0; ++i)
			c *= coeff[i][basis_[b][i]];
		v[b] = c;
	}
	return v;
}

Vector TruncatedAlgebra::reduce(VirtualCharacter const &x) const
{
	Vector v = zero();
	for (auto const &[a, m] : x.terms())
	{
		auto r = reduce(a);
		for (std::size_t i = 0; i < v.size(); ++i)
			if (r[i] != 0)
				v[i] += m * r[i];
	}
	return v;
}

Vector TruncatedAlgebra::multiply(Vector const &u, Vector const &v) const
{
	if (u.size() != dimension() || v.size() != dimension())
		throw Error(ErrorCode::dimension, "vector length does not match the model");
	Vector r = zero();
	int n = group_.rank();
	Exponents k(n);
	for (std::size_t i = 0; i < u.size(); ++i)
	{
		if (u[i] == 0)
			continue;
		for (std::size_t j = 0; j < v.size(); ++j)
		{
			if (basis_degree_[i] + basis_degree_[j] > degree_)
				break; // basis is sorted by degree
			if (v[j] == 0)
				continue;
			for (int t = 0; t < n; ++t)
				k[t] = basis_[i][t] + basis_[j][t];
			r[index(k)] += u[i] * v[j];
		}
	}
	return r;
}

std::vector<Vector> TruncatedAlgebra::action_matrix(SignedPermutation const &w) const
{
	int n = group_.rank();
	// w(z_i) = [w.e_i] - [0]
	std::vector<Vector> image_of_z;
	for (int i = 0; i < n; ++i)
	{
		auto e = Weight::zero(n);
		e.coords[i] = 1;
		auto v = reduce(chern::act(w, e));
		v[0] -= 1;
		image_of_z.push_back(std::move(v));
	}
	std::vector<Vector> columns(dimension());
	columns[0] = unit();
	for (std::size_t b = 1; b < basis_.size(); ++b)
	{
		auto k = basis_[b];
		int j = static_cast<int>(std::find_if(k.begin(), k.end(), [](int x) { return x > 0; }) -
		                         k.begin());
		--k[j];
		columns[b] = multiply(columns[index(k)], image_of_z[j]);
	}
	return columns;
}

Vector TruncatedAlgebra::act(SignedPermutation const &w, Vector const &v) const
{
	auto columns = action_matrix(w);
	Vector r = zero();
	for (std::size_t c = 0; c < v.size(); ++c)
		if (v[c] != 0)
			for (std::size_t i = 0; i < r.size(); ++i)
				r[i] += v[c] * columns[c][i];
	return r;
}

Subspace TruncatedAlgebra::ideal_power(int p) const
{
	Subspace s(dimension());
	for (std::size_t b = 0; b < basis_.size(); ++b)
		if (basis_degree_[b] >= p)
		{
			auto e = zero();
			e[b] = 1;
			s.insert(std::move(e));
		}
	return s;
}

Subspace TruncatedAlgebra::invariant_subspace() const
{
	std::size_t dim = dimension();
	std::vector<Vector> equations;
	for (auto const &w : weyl_generators(group_))
	{
		auto columns = action_matrix(w);
		for (std::size_t r = 0; r < dim; ++r)
		{
			Vector row(dim);
			for (std::size_t c = 0; c < dim; ++c)
				row[c] = columns[c][r];
			row[r] -= 1;
			if (!is_zero(row))
				equations.push_back(std::move(row));
		}
	}
	return kernel(equations, dim);
}

TruncatedAlgebra truncated_model(GroupSpec const &g, int d)
{
	return TruncatedAlgebra(g, d);
}

std::vector<VirtualCharacter> invariant_augmentation_generators(GroupSpec const &g,
                                                               int bound)
{
	if (bound < 0)
		throw Error(ErrorCode::invalid_argument, "orbit coordinate bound must be >= 0");
	int n = g.rank();
	std::set<Weight> seen;
	std::vector<VirtualCharacter> gens;
	Weight a = Weight::zero(n);
	for (auto &c : a.coords)
		c = -bound;
	while (true)
	{
		if (!a.is_zero() && !seen.contains(a))
		{
			auto orb = orbit(g, a);
			VirtualCharacter x(n);
			for (auto const &b : orb)
			{
				x.add_term(b, 1);
				seen.insert(b);
			}
			x.add_term(Weight::zero(n), -Integer(static_cast<unsigned long>(orb.size())));
			gens.push_back(std::move(x));
		}
		int i = n - 1;
		while (i >= 0 && a.coords[i] == bound)
			a.coords[i--] = -bound;
		if (i < 0)
			break;
		++a.coords[i];
	}
	return gens;
}

std::vector<Subspace> gamma_filtration_invariant(TruncatedAlgebra const &model, int p_max,
                                                 int bound)
{
	if (p_max < 0)
		throw Error(ErrorCode::invalid_argument, "filtration index must be >= 0");
	std::size_t dim = model.dimension();
	auto gens = invariant_augmentation_generators(model.group(), bound);

	// products of total gamma-degree > d vanish in the model
	int top = model.degree();

	// gamma^a(g) for a = 1..top, in the model
	std::vector<std::vector<Vector>> gamma_images;
	gamma_images.reserve(gens.size());
	for (auto const &g : gens)
	{
		auto series = gamma_series(g, top);
		std::vector<Vector> images(top + 1);
		for (int a = 1; a <= top; ++a)
			images[a] = model.reduce(series[a]);
		gamma_images.push_back(std::move(images));
	}

	// exact[q]: span of products of total gamma-degree exactly q
	std::vector<Subspace> exact;
	exact.push_back(Subspace::span(dim, std::vector<Vector>{model.unit()}));
	for (int q = 1; q <= top; ++q)
	{
		Subspace vq(dim);
		for (int a = 1; a <= q; ++a)
			for (auto const &images : gamma_images)
			{
				if (is_zero(images[a]))
					continue;
				for (auto const &b : exact[q - a].basis())
					vq.insert(model.multiply(images[a], b));
			}
		exact.push_back(std::move(vq));
	}

	std::vector<Subspace> cumulative(top + 2, Subspace(dim));
	for (int p = top; p >= 0; --p)
	{
		cumulative[p] = cumulative[p + 1];
		for (auto const &v : exact[p].basis())
			cumulative[p].insert(v);
	}
	std::vector<Subspace> filtration;
	for (int p = 0; p <= p_max; ++p)
		filtration.push_back(cumulative[std::min(p, top + 1)]);
	return filtration;
}

Subspace gamma_subspace_invariant(GroupSpec const &g, int p, int d, std::optional<int> bound)
{
	TruncatedAlgebra model(g, d);
	return gamma_filtration_invariant(model, p, bound.value_or(d)).back();
}

Subspace gamma_subspace_ambient_cap_invariant(GroupSpec const &g, int p, int d)
{
	if (p < 0)
		throw Error(ErrorCode::invalid_argument, "filtration index must be >= 0");
	TruncatedAlgebra model(g, d);
	return intersect(model.ideal_power(p), model.invariant_subspace());
}

PropReport verify_prop(GroupSpec const &g, int p_max, int d)
{
	TruncatedAlgebra model(g, d);
	auto gamma_s = gamma_filtration_invariant(model, p_max, d);
	auto invariant = model.invariant_subspace();

	PropReport report{g, d, {}, true};
	for (int p = 0; p <= p_max; ++p)
	{
		auto cap = intersect(model.ideal_power(p), invariant);
		auto const &gs = gamma_s[p];
		PropReportEntry entry;
		entry.p = p;
		entry.dim_gamma_S = gs.dimension();
		entry.dim_gamma_R_cap_S = cap.dimension();
		entry.included = cap.contains(gs);
		entry.equal = gs == cap;
		if (!entry.equal)
		{
			for (auto const &v : cap.basis())
				if (!gs.contains(v))
					entry.missing_from_gamma_S.push_back(v);
			for (auto const &v : gs.basis())
				if (!cap.contains(v))
					entry.missing_from_cap.push_back(v);
			entry.basis_gamma_S = gs.basis();
			entry.basis_cap = cap.basis();
		}
		report.pass = report.pass && entry.equal && entry.included;
		report.entries.push_back(std::move(entry));
	}
	return report;
}

} // namespace chern
