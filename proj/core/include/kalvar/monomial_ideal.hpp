#pragma once

#include <vector>

#include "kalvar/monomial.hpp"
#include "kalvar/rational.hpp"

namespace kalvar {

/// Minimal generating set of the monomial ideal spanned by gens: drops
/// duplicates and every monomial divisible by another generator.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Intersection of two monomial ideals via pairwise lcms, pruned to the
/// minimal generating set.
std::vector<Monomial> intersect_monomial_ideals(const std::vector<Monomial>& a,
                                                const std::vector<Monomial>& b);

/// Number of degree-t monomials in the given support variables that are
/// divisible by none of the generators. Variables outside the support are
/// the caller's business (series convolution).
Int standard_monomial_count(const std::vector<Monomial>& leading_monomials,
                            const std::vector<VarId>& support_vars, int t);

}  // namespace kalvar
