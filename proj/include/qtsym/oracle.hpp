#pragma once

#include "qtsym/characters.hpp"
#include "qtsym/partition.hpp"
#include "qtsym/symfunc.hpp"

namespace qtsym::oracle {

/// Littlewood-Richardson coefficient c^lambda_{mu nu} by counting skew
/// tableaux of shape lambda/mu, content nu, with lattice reverse reading word.
/// Throws std::invalid_argument when |lambda| != |mu| + |nu|.
long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Number of semistandard tableaux of shape lambda and content mu.
long kostka_number(const Partition& lambda, const Partition& mu);

/// Number of standard Young tableaux of shape lambda.
long syt_count(const Partition& lambda);

using qtsym::mn_character;

/// Modified Macdonald function determined by triangularity, orthogonality
/// for the q,t scalar product, and the normalization <H_mu, h_n> = t^{n(mu)}.
/// Solved exactly over Laurent polynomials; throws std::runtime_error when
/// the system is not of full rank or a coefficient is not polynomial.
SymF macdonald_axiomatic(const Partition& mu);

}  // namespace qtsym::oracle
