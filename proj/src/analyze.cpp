#include "drg/analyze.hpp"

#include <sstream>

namespace drg {

AnalysisReport analyze(const Graph& g, const std::string& source, const Config& cfg) {
  AnalysisReport r;
  r.source = source;
  r.n = g.vertex_count();
  r.edges = g.edge_count();

  const DistanceData dd = distances(g);
  r.connected = dd.connected;
  r.diameter = dd.diameter;
  r.bipartite = is_bipartite(g);
  if (!dd.connected) {
    r.notes.push_back("graph is disconnected; analysis limited to basic facts");
    return r;
  }

  r.drg = check_distance_regular(g, dd);
  if (!r.drg.is_drg) {
    r.notes.push_back("not distance-regular: " + r.drg.witness->describe());
    return r;
  }
  if (dd.diameter != 4) {
    r.notes.push_back("diameter " + std::to_string(dd.diameter) +
                      " != 4; diameter-4 checks skipped");
    return r;
  }

  IntersectionArray ia;
  for (int i = 0; i < 4; ++i) {
    ia.b[i] = r.drg.b[i];
    ia.c[i] = r.drg.c[i];
  }
  r.array = ia;

  try {
    r.spectrum = spectrum_of(ia, cfg);
  } catch (const std::exception& e) {
    r.notes.push_back(std::string("spectrum computation failed: ") + e.what());
    r.consistency = false;
    return r;
  }
  const Spectrum& s = *r.spectrum;

  r.condition1 = sdrg_eigenvalue_condition(s, ia.b1(), cfg);
  r.condition2 = antipodal_eigenvalue_condition(s, ia.k(), ia.a1(), cfg);
  r.product_balance = sdrg_product_balance(s, cfg);
  r.antipodal_pattern = antipodal_multiplicity_pattern(s, cfg);
  r.bipartite_sdrg = bipartite_sdrg_check(ia, s, cfg);

  r.sdrg_direct = srg_params(distance_graph(g, dd, 4));
  r.antipodal_direct = antipodal_fibres(g, dd);

  // Cross-checks: each spectral verdict against the combinatorial oracle.
  const bool sdrg_oracle = r.sdrg_direct->ok();
  const bool anti_oracle = r.antipodal_direct->ok();
  bool consistent = true;
  consistent &= r.condition1->verdict == (sdrg_oracle ? Verdict::yes : Verdict::no);
  consistent &= r.product_balance->holds == (sdrg_oracle ? Verdict::yes : Verdict::no);
  consistent &= r.antipodal_pattern->verdict == (anti_oracle ? Verdict::yes : Verdict::no);
  if (anti_oracle && r.antipodal_pattern->verdict == Verdict::yes)
    consistent &= r.antipodal_pattern->r == r.antipodal_direct->r;
  if (r.condition1->verdict == Verdict::yes)
    consistent &= r.condition2->verdict == (anti_oracle ? Verdict::yes : Verdict::no);
  if (r.bipartite.bipartite && r.bipartite_sdrg->applicable)
    consistent &= r.bipartite_sdrg->verdict == (sdrg_oracle ? Verdict::yes : Verdict::no);
  r.consistency = consistent;
  if (!consistent)
    r.notes.push_back("spectral verdicts disagree with the direct oracles");
  return r;
}

std::string render_value(const Interval& v) {
  if (v.is_point() && denominator(v.lo()) == 1) {
    return numerator(v.lo()).str() + " exact";
  }
  if (v.is_point()) {
    return decimal_string(v.lo(), 12) + " exact";
  }
  return decimal_string(v.mid(), 12) + " [" + decimal_string(v.lo(), 17) + "," +
         decimal_string(v.hi(), 17) + "]";
}

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string opt_verdict(const std::optional<SdrgCondition>& c) {
  return c ? to_string(c->verdict) : "skipped";
}

void spectrum_lines(std::ostringstream& out, const AnalysisReport& r) {
  for (int i = 0; i < 5; ++i) {
    out << "lambda_" << i << " ";
    if (r.spectrum) {
      out << render_value(r.spectrum->eig(i)) << " multiplicity " << r.spectrum->mult[i]
          << " pi " << render_value(r.spectrum->pi[i]);
    } else {
      out << "none";
    }
    out << "\n";
  }
}

}  // namespace

std::string render_machine(const AnalysisReport& r) {
  std::ostringstream out;
  out << "report analysis\n";
  out << "source " << r.source << "\n";
  out << "n " << r.n << "\n";
  out << "edges " << r.edges << "\n";
  out << "connected " << yn(r.connected) << "\n";
  out << "diameter " << (r.connected ? std::to_string(r.diameter) : "none") << "\n";
  out << "bipartite " << yn(r.bipartite.bipartite) << "\n";
  out << "is_drg " << (r.connected ? yn(r.drg.is_drg) : "no") << "\n";
  out << "array " << (r.array ? r.array->to_string() : "none") << "\n";
  out << "k " << (r.array ? std::to_string(r.array->k()) : "none") << "\n";
  out << "a1 " << (r.array ? std::to_string(r.array->a1()) : "none") << "\n";
  out << "b1 " << (r.array ? std::to_string(r.array->b1()) : "none") << "\n";
  spectrum_lines(out, r);
  out << "condition1 " << opt_verdict(r.condition1) << "\n";
  out << "condition1_prod13 " << (r.condition1 ? render_value(r.condition1->prod13) : "none")
      << "\n";
  out << "condition1_prod24 " << (r.condition1 ? render_value(r.condition1->prod24) : "none")
      << "\n";
  out << "condition1_target "
      << (r.condition1 ? std::to_string(r.condition1->target) : "none") << "\n";
  out << "condition2 " << (r.condition2 ? to_string(r.condition2->verdict) : "skipped") << "\n";
  out << "condition2_disjunct " << (r.condition2 ? to_string(r.condition2->which) : "skipped")
      << "\n";
  out << "product_balance "
      << (r.product_balance ? to_string(r.product_balance->holds) : "skipped") << "\n";
  out << "product_balance_alpha "
      << (r.product_balance ? render_value(r.product_balance->alpha) : "none") << "\n";
  out << "product_balance_beta "
      << (r.product_balance ? render_value(r.product_balance->beta) : "none") << "\n";
  out << "antipodal_pattern "
      << (r.antipodal_pattern ? to_string(r.antipodal_pattern->verdict) : "skipped") << "\n";
  out << "antipodal_pattern_r "
      << (r.antipodal_pattern && r.antipodal_pattern->verdict == Verdict::yes
              ? std::to_string(r.antipodal_pattern->r)
              : "none")
      << "\n";
  out << "bipartite_sdrg "
      << (r.bipartite_sdrg
              ? (r.bipartite_sdrg->applicable ? to_string(r.bipartite_sdrg->verdict)
                                              : "not-applicable")
              : "skipped")
      << "\n";
  out << "sdrg_direct " << (r.sdrg_direct ? yn(r.sdrg_direct->ok()) : "skipped") << "\n";
  if (r.sdrg_direct && r.sdrg_direct->ok()) {
    const auto& p = r.sdrg_direct->params;
    out << "sdrg_direct_params " << p.n << " " << p.k << " " << p.lambda << " " << p.mu << "\n";
  } else {
    out << "sdrg_direct_params none\n";
  }
  if (r.sdrg_direct && !r.sdrg_direct->ok() && r.sdrg_direct->witness) {
    out << "sdrg_direct_witness " << r.sdrg_direct->witness->first << " "
        << r.sdrg_direct->witness->second << "\n";
  } else {
    out << "sdrg_direct_witness none\n";
  }
  out << "antipodal_direct " << (r.antipodal_direct ? yn(r.antipodal_direct->ok()) : "skipped")
      << "\n";
  out << "antipodal_r "
      << (r.antipodal_direct && r.antipodal_direct->ok()
              ? std::to_string(r.antipodal_direct->r)
              : "none")
      << "\n";
  out << "consistency " << yn(r.consistency) << "\n";
  return out.str();
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "== analysis of " << r.source << " ==\n";
  out << "vertices " << r.n << ", edges " << r.edges << ", "
      << (r.connected ? "connected, diameter " + std::to_string(r.diameter) : "disconnected")
      << ", " << (r.bipartite.bipartite ? "bipartite" : "not bipartite") << "\n";
  for (const auto& note : r.notes) out << "note: " << note << "\n";
  if (r.connected) {
    out << "distance-regular: " << yn(r.drg.is_drg);
    if (r.drg.is_drg && r.array) out << ", intersection array {" << r.array->to_string() << "}";
    out << "\n";
  }
  if (r.spectrum) {
    out << "spectrum:\n";
    for (int i = 0; i < 5; ++i) {
      out << "  lambda_" << i << " = " << render_value(r.spectrum->eig(i)) << "  multiplicity "
          << r.spectrum->mult[i] << "  pi " << render_value(r.spectrum->pi[i]) << "\n";
    }
  }
  if (r.condition1) {
    out << "eigenvalue condition (1+l1)(1+l3) = (1+l2)(1+l4) = -b1: "
        << to_string(r.condition1->verdict) << "\n";
    out << "  (1+l1)(1+l3) = " << render_value(r.condition1->prod13) << "\n";
    out << "  (1+l2)(1+l4) = " << render_value(r.condition1->prod24) << "\n";
    out << "  -b1 = " << r.condition1->target << "\n";
  }
  if (r.condition2) {
    out << "antipodality condition (l1*l3 = -k or l1+l3 = a1): "
        << to_string(r.condition2->verdict) << " (disjunct: " << to_string(r.condition2->which)
        << ")\n";
    out << "  l1*l3 = " << render_value(r.condition2->product) << "\n";
    out << "  l1+l3 = " << render_value(r.condition2->sum) << "\n";
  }
  if (r.product_balance) {
    out << "multiplicity-gap products constant (odd/even): "
        << to_string(r.product_balance->holds) << ", alpha = "
        << render_value(r.product_balance->alpha)
        << ", beta = " << render_value(r.product_balance->beta) << "\n";
  }
  if (r.antipodal_pattern) {
    out << "antipodal multiplicity pattern: " << to_string(r.antipodal_pattern->verdict);
    if (r.antipodal_pattern->verdict == Verdict::yes)
      out << " (r = " << r.antipodal_pattern->r << ")";
    else if (r.antipodal_pattern->fail_index >= 0)
      out << " (fails at index " << r.antipodal_pattern->fail_index << ")";
    out << "\n";
  }
  if (r.bipartite_sdrg && r.bipartite_sdrg->applicable) {
    out << "bipartite sqrt(k) condition: " << to_string(r.bipartite_sdrg->verdict);
    if (r.bipartite_sdrg->verdict == Verdict::yes)
      out << " (predicted multiplicities match: " << yn(r.bipartite_sdrg->spectrum_matches)
          << ")";
    out << "\n";
  }
  if (r.sdrg_direct)
    out << "direct oracle, distance-4 graph strongly regular: " << r.sdrg_direct->describe()
        << "\n";
  if (r.antipodal_direct)
    out << "direct oracle, antipodal fibres: " << r.antipodal_direct->describe() << "\n";
  out << "consistency " << yn(r.consistency) << "\n";
  return out.str();
}

}  // namespace drg
