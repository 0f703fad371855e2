#pragma once

#include <string>

#include <json.hpp>

#include "thetafree/enumerate.hpp"
#include "thetafree/spectral.hpp"
#include "thetafree/theta.hpp"
#include "thetafree/verify.hpp"

namespace thetafree {

using Json = nlohmann::ordered_json;

/// Serialises like Json::dump but prints every floating-point value with 17 significant
/// digits. indent < 0 gives the compact single-line form.
std::string dump_json(const Json& j, int indent = -1);

/// {"hubs":[a,b],"paths":[[...],[...],[...]]}
Json to_json(const ThetaWitness& w);
ThetaWitness witness_from_json(const Json& j);

/// {"lambda", "residual", "iterations", "perron"}
Json to_json(const SpectralResult& r);

Json to_json(const NosalReport& r);
Json to_json(const DecompositionReport& r);
Json to_json(const LemmaChecklist& lemmas);
Json to_json(const InequalityCheck& c);
Json to_json(const ExtremalRecord& rec);
Json to_json(const TableRow& row);

/// {graph6, m, lambda, bound, theta_free, witness?, ustar, ledger, components, lemmas,
///  inequality1, equality_case}; sections that did not run are null.
Json to_json(const Certificate& c);

}  // namespace thetafree
