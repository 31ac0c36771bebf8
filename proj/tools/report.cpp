#include "report.hpp"

#include "nilspec/multilinear.hpp"

namespace nilspec::cli {

Json to_json(const QMat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Poly& p) { return p.to_coefficient_list(); }

Json to_json(const ExpansionVerdict& v) {
  Json j;
  j["verdict"] = to_string(v.verdict);
  j["reason"] = to_string(v.reason);
  j["inside"] = v.inside_count;
  j["on_circle"] = v.circle_count;
  j["outside"] = v.outside_count;
  j["squarefree"] = to_json(v.analysed);
  if (!v.circle_real_roots.empty()) j["circle_real_roots"] = v.circle_real_roots;
  if (!v.trace_intervals.empty()) {
    j["circle_factor"] = to_json(v.circle_factor);
    j["trace_poly"] = to_json(v.trace_poly);
    Json ivs = Json::array();
    for (const auto& iv : v.trace_intervals) ivs.push_back({to_string(iv.lo), to_string(iv.hi)});
    j["trace_intervals"] = std::move(ivs);
  }
  if (v.reason == VerdictReason::RootInsideDisk || v.reason == VerdictReason::DeterminantTooSmall) {
    j["reciprocal_factor"] = to_json(v.reciprocal_factor);
    j["schur_cohn_inside"] = v.schur_cohn_inside;
  }
  j["det_modulus"] = to_string(v.determinant_modulus);
  return j;
}

Json to_json(const BettiVector& b) { return b.values(); }

Json to_json(const ObstructionVerdict& v) {
  Json j;
  j["verdict"] = verdict_tag(v);
  if (const auto* c = std::get_if<Case1Contradiction>(&v)) {
    j["degree"] = c->degree;
    j["witness_degrees"] = c->witness_degrees;
    j["image_bound"] = c->gap.image_bound;
    j["target_dim"] = c->gap.target_dim;
    j["kernel_dim"] = c->gap.kernel_dim;
    j["relabelled"] = c->swapped;
  } else if (const auto* s = std::get_if<SphereForced>(&v)) {
    j["manifold_betti"] = to_json(s->manifold_betti);
    Json chain = Json::array();
    for (const auto& ineq : s->chain) chain.push_back(ineq.to_string());
    j["chain"] = std::move(chain);
  } else if (const auto* bad = std::get_if<InputInconsistent>(&v)) {
    j["reason"] = bad->reason;
    if (bad->degree) j["degree"] = *bad->degree;
  }
  return j;
}

Json to_json(const ExpansionCertificate& c) {
  Json j;
  j["automorphism"] = to_string(c.automorphism_verdict.verdict);
  j["betti"] = c.betti;
  j["alarm"] = c.alarm;
  Json degrees = Json::array();
  for (const auto& d : c.degrees) {
    Json dj;
    dj["degree"] = d.degree;
    dj["dim"] = d.dimension;
    dj["char_poly"] = to_json(d.char_poly);
    dj["verdict"] = to_string(d.verdict.verdict);
    dj["reason"] = to_string(d.verdict.reason);
    dj["spectrum"] = spectrum_string(d.char_poly);
    degrees.push_back(std::move(dj));
  }
  j["degrees"] = std::move(degrees);
  return j;
}

std::string spectrum_string(const Poly& char_poly) {
  if (char_poly.degree() <= 0) return "{}";
  const auto roots = rational_roots_if_split(char_poly);
  if (!roots) return "roots of " + char_poly.to_string();
  std::string out = "{";
  for (std::size_t k = 0; k < roots->size(); ++k) {
    if (k) out += ", ";
    out += to_string((*roots)[k]);
  }
  return out + "}";
}

std::string line(const Json& j) { return j.dump(); }

}  // namespace nilspec::cli
