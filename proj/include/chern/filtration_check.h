#pragma once

// Desk-scale check that, inside the invariant subring S = R(T)^W, the
// gamma-filtration of S agrees rationally with the filtration induced from
// R = R(T).
//
// Everything happens in the finite-dimensional model
//   R (x) Q / r^{d+1}  =  Q[z_1..z_n] / (z)^{d+1},   z_i = [e_i] - [0],
// with basis the monomials z^k, |k| <= d. Since R is split, Gamma^p(R) = r^p
// maps onto the span of monomials of degree >= p.

#include "chern/char_ring.h"
#include "chern/linalg.h"
#include "chern/polynomial.h"
#include "chern/weyl.h"

#include <map>
#include <optional>
#include <vector>

namespace chern {

inline constexpr std::size_t max_model_dimension = 20000;

class TruncatedAlgebra
{
  public:
	/** Throws size_guard when binomial(n + d, d) > 20000. */
	TruncatedAlgebra(GroupSpec group, int d);

	GroupSpec const &group() const { return group_; }
	int degree() const { return degree_; }
	std::size_t dimension() const { return basis_.size(); }
	/** Basis monomials, ordered by ascending total degree. */
	std::vector<Exponents> const &basis() const { return basis_; }
	std::size_t index(Exponents const &k) const;

	Vector zero() const { return Vector(dimension(), 0); }
	Vector unit() const;

	/** Image of [a] = prod_i (1 + z_i)^{a_i}, negative a_i included. */
	Vector reduce(Weight const &a) const;
	Vector reduce(VirtualCharacter const &x) const;

	Vector multiply(Vector const &u, Vector const &v) const;

	/** Matrix action of w (a ring automorphism, [a] -> [w.a]). */
	Vector act(SignedPermutation const &w, Vector const &v) const;

	/** Span of basis monomials of degree >= p (image of r^p). */
	Subspace ideal_power(int p) const;

	/** Vectors fixed by every Weyl generator. */
	Subspace invariant_subspace() const;

  private:
	/** Columns: image of each basis monomial under w. */
	std::vector<Vector> action_matrix(SignedPermutation const &w) const;

	GroupSpec group_;
	int degree_;
	std::vector<Exponents> basis_;
	std::map<Exponents, std::size_t> index_;
	std::vector<int> basis_degree_;
};

TruncatedAlgebra truncated_model(GroupSpec const &g, int d);

/**
 * s-generators O(a) - |W a| [0], one per nonzero orbit with a representative
 * in [-bound, bound]^n.
 */
std::vector<VirtualCharacter> invariant_augmentation_generators(GroupSpec const &g,
                                                               int bound);

/**
 * Images of Gamma^0(S), ..., Gamma^{p_max}(S). Gamma^p(S) is spanned by
 * products gamma^{i_1}(g_1) ... gamma^{i_k}(g_k), sum i_j = p, g_j ranging
 * over invariant_augmentation_generators(g, bound). With E_q the span of
 * products of total degree exactly q (E_0 = Q),
 *   E_q = sum_{a = 1..q} gamma^a(generators) * E_{q-a},
 *   Gamma^p(S) = E_p + E_{p+1} + ... + E_d.
 */
std::vector<Subspace> gamma_filtration_invariant(TruncatedAlgebra const &model, int p_max,
                                                 int bound);

/** Image of Gamma^p(S). The orbit coordinate bound defaults to d. */
Subspace gamma_subspace_invariant(GroupSpec const &g, int p, int d,
                                  std::optional<int> bound = std::nullopt);

/** Image of Gamma^p(R) cap S: the W-invariant vectors of r^p. */
Subspace gamma_subspace_ambient_cap_invariant(GroupSpec const &g, int p, int d);

struct PropReportEntry
{
	int p;
	std::size_t dim_gamma_S;
	std::size_t dim_gamma_R_cap_S;
	bool equal;
	/** Gamma^p(S) inside Gamma^p(R) cap S; must always hold. */
	bool included;
	/** Basis vectors of one side missing from the other, for diagnosis. */
	std::vector<Vector> missing_from_gamma_S;
	std::vector<Vector> missing_from_cap;
	std::vector<Vector> basis_gamma_S;
	std::vector<Vector> basis_cap;
};

struct PropReport
{
	GroupSpec group;
	int degree;
	std::vector<PropReportEntry> entries;
	bool pass;
};

PropReport verify_prop(GroupSpec const &g, int p_max, int d);

} // namespace chern
