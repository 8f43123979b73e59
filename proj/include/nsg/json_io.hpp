#pragma once

// JSON forms:
//   numerical set / semigroup  {"gaps":[...]}   ({"generators":[...]} accepted on input)
//   partition                  {"parts":[...]}
//   void poset                 {"void":[...], "relations":[[x,y],...], "hasse":[[x,y],...]}
//   anti-atom report           {"semigroup":{...}, "pa":n, "sizes":[...], "lambda_minimal":b, "witness_ideal":[...]}

#include "json.hpp"

#include "nsg/antiatom.hpp"
#include "nsg/core.hpp"
#include "nsg/partitions.hpp"
#include "nsg/voidposet.hpp"

namespace nsg {

nlohmann::json to_json(const NumericalSet& t);
nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const VoidPoset& poset);
nlohmann::json to_json(const AntiAtomSolution& sol);

/// Throws std::invalid_argument for missing keys or invalid contents.
NumericalSet numerical_set_from_json(const nlohmann::json& j);
/// Accepts either key; gap input must describe a semigroup.
NumericalSemigroup semigroup_from_json(const nlohmann::json& j);
Partition partition_from_json(const nlohmann::json& j);

}  // namespace nsg
