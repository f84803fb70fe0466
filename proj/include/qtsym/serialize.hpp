#pragma once

#include <string>

#include "json.hpp"
#include "qtsym/qt_bases.hpp"

namespace qtsym {

using json = nlohmann::json;

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

/// [{"c":"num/den","eq":..,"et":..}, ...] sorted by (eq, et).
json to_json(const QTPoly& p);
QTPoly qtpoly_from_json(const json& j);

/// {"basis":..,"terms":[{"lambda":[..],"coeff":[..]}]}, terms by degree,
/// then lexicographically decreasing partitions.
json to_json(const SymF& f);
SymF symf_from_json(const json& j);

json to_json(const KostkaTable& t);
KostkaTable kostka_from_json(const json& j);

/// Compact single-line dump; identical values give identical bytes.
std::string canonical(const json& j);

/// Human-readable sum: "s[1,1,1] + (t+t^2) s[2,1] + t^3 s[3]", partitions
/// lexicographically increasing.
std::string to_text(const SymF& f);
std::string to_latex(const QTPoly& p);
std::string to_latex(const SymF& f);
std::string to_text(const KostkaTable& t);
std::string to_latex(const KostkaTable& t);

}  // namespace qtsym
