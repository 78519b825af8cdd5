#include "imprec/json_io.hpp"

namespace imprec {

namespace {

nlohmann::json rat_array(const RatVector& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : v) a.push_back(to_string(r));
  return a;
}

}  // namespace

void to_json(nlohmann::json& j, const ProbVector& p) { j = rat_array(p.entries()); }

void to_json(nlohmann::json& j, const StochMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.cod_size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < m.dom_size(); ++k) row.push_back(to_string(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  j = {{"dom", m.dom_size()}, {"cod", m.cod_size()}, {"entries", std::move(rows)}};
}

void to_json(nlohmann::json& j, const Grade& g) {
  j = nlohmann::json::array();
  for (const auto& site : g.sites()) j.push_back({{"name", site.name}, {"arity", site.arity}});
}

void to_json(nlohmann::json& j, const GradedMorphism& f) {
  j = {{"grade", f.grade}, {"dom", f.dom.size}, {"cod", f.cod.size}, {"matrix", f.matrix}};
}

void to_json(nlohmann::json& j, const CredalSet& s) {
  nlohmann::json ext = nlohmann::json::array();
  for (const auto& e : s.extremes()) ext.push_back(rat_array(e.entries()));
  j = {{"dim", s.dim()}, {"extremes", std::move(ext)}};
}

void to_json(nlohmann::json& j, const KlMorphism& f) {
  j = {{"dom", f.dom.size}, {"cod", f.cod.size}, {"images", f.images}};
}

void to_json(nlohmann::json& j, const OplaxReport& r) {
  j = {{"lhs", r.lhs},
       {"rhs", r.rhs},
       {"pointwise_subset", r.pointwise_subset},
       {"strict", r.strict}};
}

void to_json(nlohmann::json& j, const SuiteCounts& c) {
  j = {{"pass", c.pass}, {"fail", c.fail}};
}

void to_json(nlohmann::json& j, const LawSuiteReport& r) {
  j = {{"seed", r.seed}, {"count", r.count}, {"laws", r.laws}, {"all_passed", r.all_passed()}};
}

void to_json(nlohmann::json& j, const OplaxSuiteReport& r) {
  j = {{"seed", r.seed},
       {"count", r.count},
       {"inclusion", r.inclusion},
       {"decoupled_image", r.decoupled_image},
       {"strict", r.strict},
       {"all_passed", r.all_passed()}};
}

void to_json(nlohmann::json& j, const KanSuiteReport& r) {
  j = {{"seed", r.seed},
       {"count", r.count},
       {"factorization", r.factorization},
       {"all_passed", r.all_passed()}};
}

void to_json(nlohmann::json& j, const FaithfulSuiteReport& r) {
  j = {{"seed", r.seed},
       {"count", r.count},
       {"roundtrip", r.roundtrip},
       {"all_passed", r.all_passed()}};
}

}  // namespace imprec
