#include "render.hpp"

#include <algorithm>

#include "sparse_ramsey/graph6.hpp"

namespace sparse_ramsey::cli {

void Table::print(std::ostream& out) const {
  std::vector<std::size_t> width(header_.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  };
  widen(header_);
  for (const auto& r : rows_) widen(r);
  auto line = [&](const std::vector<std::string>& row) {
    std::string s;
    for (std::size_t i = 0; i < row.size(); ++i) {
      s += row[i];
      if (i + 1 < row.size()) s += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << s << '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_field(fields[i]);
  }
  out << '\n';
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json profile_json(const SparsityProfile& p) {
  return Json{{"n", p.n},
              {"e", p.e},
              {"excess", p.excess},
              {"connected", p.connected},
              {"is_star", p.is_star},
              {"leaf_count", p.leaf_count},
              {"p", p.p},
              {"max_susp", p.max_susp},
              {"cycle_component", p.cycle_component}};
}

Json bounds_json(const SparsityProfile& p, const std::vector<int>& s_values) {
  Json out = Json::array();
  for (int s : s_values) {
    if (s < 2 || p.n < s + 1) continue;
    const LeafBounds b = leaf_bounds(p, s);
    out.push_back(Json{{"s", s},
                       {"premise_met", p.connected && !p.is_star && p.max_susp <= s},
                       {"bound1", b.by_supports},
                       {"bound2", to_string(b.by_count)},
                       {"leaf_count", p.leaf_count}});
  }
  return out;
}

namespace {

Json set_json(const VertexSet& s) { return Json(s.to_vector()); }

}  // namespace

Json trace_json(const ReductionTrace& t) {
  Json steps = Json::array();
  for (const auto& step : t.steps) {
    if (const auto* pc = std::get_if<PathContraction>(&step)) {
      steps.push_back(Json{{"op", "contract"}, {"internal", pc->internal}, {"u", pc->u}, {"v", pc->v}});
    } else {
      const auto& cl = std::get<CycleLoop>(step);
      steps.push_back(Json{{"op", "loop"}, {"cycle", cl.cycle}, {"anchor", cl.anchor}});
    }
  }
  return Json{{"g1_vertices", t.g1_labels},
              {"A", set_json(t.a)},
              {"B", set_json(t.b)},
              {"C", set_json(t.c)},
              {"steps", steps},
              {"g2_vertices", t.g2_labels},
              {"g2_edges", t.g2.edge_count()},
              {"g2_loops", t.g2.loop_count()},
              {"excess", t.excess}};
}

Json prediction_json(const GoodnessPrediction& p) {
  Json terms = Json::object();
  Json hypotheses = Json::array();
  if (p.target == TargetKind::kPath) {
    terms["path_half"] = p.term_path_half;
    terms["alpha"] = p.term_alpha;
    terms["alpha_prime"] = p.alpha_prime;
    terms["gamma"] = p.gamma;
    hypotheses.push_back(Json{{"statement", "n >= 3424k^4"}, {"met", p.regime_met}});
    hypotheses.push_back(Json{{"statement", "e <= (1+1/(144k^2))n"}, {"met", p.sparsity_met}});
  } else {
    terms["two_n_minus_one"] = p.value;
    hypotheses.push_back(Json{{"statement", "k odd"}, {"met", p.parity_met}});
    hypotheses.push_back(Json{{"statement", "n >= 1833k^4"}, {"met", p.regime_met}});
    hypotheses.push_back(Json{{"statement", "e <= (1+1/(117k^2))n"}, {"met", p.sparsity_met}});
  }
  Json flags = Json::array();
  flags.push_back(Json{{"name", "regime_met"}, {"value", p.regime_met}});
  flags.push_back(Json{{"name", "sparsity_met"}, {"value", p.sparsity_met}});
  if (p.target == TargetKind::kCycle) flags.push_back(Json{{"name", "parity_met"}, {"value", p.parity_met}});
  return Json{{"target", std::string(p.target == TargetKind::kPath ? "P:" : "C:") + std::to_string(p.k)},
              {"n", p.n},
              {"value", p.value},
              {"terms", terms},
              {"flags", flags},
              {"hypotheses", hypotheses},
              {"warnings", p.warnings}};
}

Json bound_json(const BoundReport& b) {
  Json hyps = Json::array();
  for (const auto& h : b.hypotheses)
    hyps.push_back(Json{{"statement", h.statement}, {"met", h.met}, {"reason", h.reason}});
  return Json{{"name", b.name}, {"value", to_string(b.value)}, {"all_met", b.all_met()}, {"hypotheses", hyps}};
}

namespace {

Json check_json(const CheckResult& c) {
  return Json{{"passed", c.passed}, {"method", c.method}, {"detail", c.detail}, {"budget_exceeded", c.budget_exceeded}};
}

}  // namespace

Json witness_json(const WitnessColoring& w) {
  Json out{{"construction", to_string(w.construction)},
           {"params", w.params},
           {"part_sizes", w.part_sizes},
           {"host_order", w.host.order()},
           {"claimed_bound", w.claimed_bound},
           {"host_graph6", to_graph6(w.host)}};
  if (w.validation) {
    out["validation"] = Json{{"passed", w.validation->passed()},
                             {"red", check_json(w.validation->red)},
                             {"blue", check_json(w.validation->blue)}};
  }
  return out;
}

Json certificate_json(const RamseyCertificate& c, const CertificateCheck* check) {
  Json out{{"pattern_graph6", to_graph6(c.pattern)},
           {"target", c.target.to_string()},
           {"determined", c.determined},
           {"value", c.determined ? Json(c.value) : Json()},
           {"lower_bound", c.lower_bound},
           {"lower_witness_graph6", to_graph6(c.lower_witness)},
           {"upper_attestation",
            Json{{"orders_searched", c.orders_searched},
                 {"graphs_examined", c.graphs_examined},
                 {"method", to_string(c.method)}}}};
  if (check) {
    out["verification"] = Json{{"passed", check->passed()},
                               {"witness_ok", check->witness_ok},
                               {"upper_checked", check->upper_checked},
                               {"upper_ok", check->upper_ok},
                               {"detail", check->detail}};
  }
  return out;
}

Json sweep_json(const SweepReport& r, bool rows) {
  auto row_json = [](const SweepRow& row) {
    return Json{{"graph6", row.graph6}, {"params", row.params}, {"ok", row.ok}, {"detail", row.detail}};
  };
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(row_json(v));
  Json out{{"name", r.name},
           {"graphs", r.graphs},
           {"instances", r.instances},
           {"violations", violations},
           {"notes", r.notes}};
  if (rows) {
    Json all = Json::array();
    for (const auto& row : r.rows) all.push_back(row_json(row));
    out["rows"] = all;
  }
  return out;
}

}  // namespace sparse_ramsey::cli
