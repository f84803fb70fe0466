#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtsym/serialize.hpp"

namespace qtsym {

const std::vector<std::string>& verify_suites();

/// {"suite","max_n","pass","checks":[{"name","pass","cases","failures"}...]}
/// plus suite-specific sections. Throws std::invalid_argument for an
/// unknown suite name.
json run_verify(const std::string& suite, int max_n, int jobs = 1);

/// c with v(f) == c f, or nullopt when f is not an eigenfunction of v with
/// a Laurent polynomial eigenvalue.
std::optional<QTPoly> eigenvalue(const LinOp& v, const SymF& f);

/// Candidate closed forms for the eigenvalues of Dt(0) and Dts(0) on H_mu:
/// "product" (the product over all i >= 1, so with the vanishing factors of
/// the zero tail), "product_to_length" (product over i <= l(mu)), "sum"
/// (the sum over i of the same factors) and "sum_shifted" (that sum with the
/// power of t in each factor moved one step toward 1).
std::map<std::string, QTPoly> dtilde_eigen_readings(const Partition& mu);
std::map<std::string, QTPoly> dtilde_star_eigen_readings(const Partition& mu);

}  // namespace qtsym
