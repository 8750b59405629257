#pragma once

#include <string>

#include <json.hpp>

#include "cofin/emonoid.hpp"
#include "cofin/filt.hpp"
#include "cofin/ideal.hpp"
#include "cofin/upset.hpp"

namespace cofin {

// Canonical literal forms, re-parseable by the expression language:
//   {1,3,5}   finite          !{0,2}    cofinite
//   2k.. / 3k+1..  residue class       per(prefix;wheel)  general split
//   N         the naturals
std::string show(const UpSet& a);
std::string show(const SetClass& c);
// id / sigma{...} for cofinite images / u(<set>)
std::string show(const EnumMap& u);
// 0 / L / E / generator unions "P(..) | Alm(..)"
std::string show(const IdealExpr& ideal);
// discrete / indiscrete / frechet / U(..) / C(..) / phi(..;..)
std::string show(const FilterRep& f);
std::string show(const BornRep& b);
std::string show(const FiniteMap& f);

nlohmann::json to_json(const UpSet& a);   // {t, p, prefix, wheel}
UpSet upset_from_json(const nlohmann::json& j);

}  // namespace cofin
