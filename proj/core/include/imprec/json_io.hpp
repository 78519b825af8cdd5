#pragma once

#include <nlohmann/json.hpp>

#include "imprec/bridge.hpp"
#include "imprec/credal.hpp"
#include "imprec/imp.hpp"
#include "imprec/suites.hpp"

namespace imprec {

// Keys come out sorted (nlohmann stores objects in a std::map), and all
// numbers are exact "p/q" strings, so output is byte-stable for a fixed
// input and seed.

void to_json(nlohmann::json& j, const ProbVector& p);
void to_json(nlohmann::json& j, const StochMatrix& m);
void to_json(nlohmann::json& j, const Grade& g);
void to_json(nlohmann::json& j, const GradedMorphism& f);
void to_json(nlohmann::json& j, const CredalSet& s);
void to_json(nlohmann::json& j, const KlMorphism& f);
void to_json(nlohmann::json& j, const OplaxReport& r);
void to_json(nlohmann::json& j, const SuiteCounts& c);
void to_json(nlohmann::json& j, const LawSuiteReport& r);
void to_json(nlohmann::json& j, const OplaxSuiteReport& r);
void to_json(nlohmann::json& j, const KanSuiteReport& r);
void to_json(nlohmann::json& j, const FaithfulSuiteReport& r);

}  // namespace imprec
