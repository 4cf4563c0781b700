#include "cremona/report.hpp"

namespace cremona {

Json to_json(const HomogPoly &p) {
  Json terms = Json::array();
  for (const auto &[e, c] : p.terms())
    terms.push_back(Json::array({e.x, e.y, e.z, c.num().get_str(),
                                 c.den().get_str()}));
  return terms;
}

Json to_json(const BirMap &f) {
  return Json::array(
      {to_json(f.component(0)), to_json(f.component(1)), to_json(f.component(2))});
}

namespace {

Json big_to_json(const BigInt &v) {
  if (v.fits_slong_p())
    return Json(v.get_si());
  return Json(v.get_str());
}

} // namespace

Json to_json(const DegreeSequence &seq) {
  Json entries = Json::array();
  for (const auto &d : seq.entries)
    entries.push_back(big_to_json(d));
  Json j;
  j["entries"] = entries;
  j["truncated"] = seq.truncated == Truncation::DegreeCapHit ? "degree-cap-hit"
                                                             : "length-reached";
  if (seq.degree_cap >= 0)
    j["degree_cap"] = seq.degree_cap;
  return j;
}

Json to_json(const LambdaEstimate &est) {
  Json j;
  j["value"] = est.value;
  j["n_used"] = est.n_used;
  j["method"] = to_string(est.method);
  return j;
}

Json growth_report(const DegreeSequence &seq, const GrowthClass &cls,
                   const LambdaEstimate &est, const LehmerDiagnostic &gap) {
  Json evidence;
  if (cls.evidence.period)
    evidence["period"] = *cls.evidence.period;
  if (cls.evidence.difference_order)
    evidence["difference_order"] = *cls.evidence.difference_order;
  if (cls.evidence.difference_value)
    evidence["difference_value"] = big_to_json(*cls.evidence.difference_value);
  if (cls.evidence.tail_ratio)
    evidence["tail_ratio"] = *cls.evidence.tail_ratio;
  evidence["summary"] = cls.evidence.summary;

  Json j;
  j["sequence"] = to_json(seq);
  j["class"] = to_string(cls.kind);
  j["evidence"] = evidence;
  j["lambda"] = to_json(est);
  j["translation_length"] = translation_length(est);
  j["lehmer_status"] = to_string(gap.status);
  return j;
}

Json to_json(const QuadExtElem &e) {
  Json j;
  j["a"] = e.a().str();
  j["b"] = e.b().str();
  j["modulus"] = {{"t", e.modulus().t}, {"d", e.modulus().d}};
  j["text"] = e.str();
  return j;
}

Json to_json(const SpectralData &sd) {
  Json j;
  j["char_poly"] = {{"t", sd.char_poly.t}, {"d", sd.char_poly.d}};
  j["radius"] = to_json(sd.radius);
  if (sd.finite_order)
    j["finite_order"] = *sd.finite_order;
  if (sd.foliations) {
    auto form = [](const FoliationForm &f) {
      Json g;
      g["p_c"] = to_json(f.p_c);
      g["q_c"] = to_json(f.q_c);
      return g;
    };
    j["foliations"] = Json::array(
        {form(sd.foliations->first), form(sd.foliations->second)});
  }
  return j;
}

Json certificate_json(const Presentation &pres,
                      const LowerBoundCertificate &cert) {
  Json j;
  j["bound"] = cert.bound;
  j["witness_word"] = cert.witness ? cert.witness->str(pres) : "";
  j["witness_level"] = cert.witness_level;
  j["level_trace"] = cert.level_sizes;
  j["caps"] = {{"max_word_length", cert.caps.max_word_length},
               {"breadth", cert.caps.breadth},
               {"degree_cap", cert.caps.degree_cap}};
  j["breadth_exhausted"] = cert.breadth_exhausted;
  j["degree_cap_hit"] = cert.degree_cap_hit;
  return j;
}

Json to_json(const BsReport &rep) {
  Json j;
  j["n"] = rep.n;
  j["relation_holds"] = rep.relation_holds;
  j["lhs"] = rep.lhs;
  j["rhs"] = rep.rhs;
  Json gens = Json::array();
  for (const auto &g : rep.presentation.generators)
    gens.push_back({{"name", g.name},
                    {"map", g.map.str()},
                    {"inverse", g.inverse.str()}});
  j["generators"] = gens;
  return j;
}

Json report_envelope(const std::string &command, Json inputs, Json caps,
                     Json results) {
  Json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["caps"] = std::move(caps);
  j["results"] = std::move(results);
  j["version"] = kToolVersion;
  return j;
}

} // namespace cremona
