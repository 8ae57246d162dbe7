#include "app.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "inputs.hpp"
#include "render.hpp"
#include "sparse_ramsey/containment.hpp"
#include "sparse_ramsey/enumeration.hpp"
#include "sparse_ramsey/errors.hpp"
#include "sparse_ramsey/goodness.hpp"
#include "sparse_ramsey/graph6.hpp"
#include "sparse_ramsey/parallel.hpp"
#include "sparse_ramsey/ramsey.hpp"
#include "sparse_ramsey/structure.hpp"
#include "sparse_ramsey/sweeps.hpp"
#include "sparse_ramsey/target.hpp"
#include "sparse_ramsey/witness.hpp"

namespace sparse_ramsey::cli {

namespace {

/// A failure with a chosen exit code and a one-line diagnostic.
struct Failure {
  int code;
  std::string message;
};

struct Common {
  std::string format = "table";
  std::string out_path;
  int threads = 0;  // 0: environment default
  std::uint64_t seed = 1;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  sub->add_option("--out", c.out_path, "Write the report to this file");
  sub->add_option("--threads", c.threads, "Worker threads (default: SPARSE_RAMSEY_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "Seed for gnp:n,p random inputs")->capture_default_str();
}

int threads_of(const Common& c) { return c.threads > 0 ? c.threads : default_thread_count(); }

Json envelope(const std::string& command) { return Json{{"schema", kSchemaVersion}, {"command", command}}; }

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
      throw InputError("'" + s + "' is not an integer or p/q rational");
    return v;
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  const std::int64_t den = parse_int(std::string_view(s).substr(slash + 1));
  if (den == 0) throw InputError("'" + s + "' has a zero denominator");
  return Rational(parse_int(std::string_view(s).substr(0, slash)), den);
}

// ---------------------------------------------------------------- profile

struct ProfileArgs {
  Common common;
  std::vector<std::string> graphs;
  std::vector<int> s_values;
};

int cmd_profile(const ProfileArgs& a, std::ostream& out, std::ostream& err) {
  const auto graphs = load_graphs(a.graphs, a.common.seed);
  Json items = Json::array();
  Table table({"graph", "n", "e", "excess", "connected", "star", "leaves", "p", "max_susp"});
  if (a.common.format == "csv")
    write_csv_row(out, {"graph", "graph6", "n", "e", "excess", "connected", "is_star", "leaf_count", "p", "max_susp"});
  for (const auto& [label, g] : graphs) {
    const SparsityProfile p = profile(g);
    if (!p.connected) err << "warning: " << label << " is disconnected\n";
    std::vector<int> s_values = a.s_values;
    if (s_values.empty()) s_values.push_back(std::max(2, p.max_susp));

    Json item{{"label", label}, {"graph6", to_graph6(g)}};
    item.update(profile_json(p));
    item["bounds"] = bounds_json(p, s_values);
    Json steps = Json::array();
    Json trace;
    std::string trace_note;
    try {
      const ReductionTrace t = dichotomy_reduce(g);
      trace = trace_json(t);
      steps = trace["steps"];
    } catch (const PremiseError& e) {
      trace_note = e.what();
    }
    item["steps"] = steps;
    item["trace"] = trace;
    if (!trace_note.empty()) item["trace_note"] = trace_note;
    items.push_back(item);

    table.add({label, std::to_string(p.n), std::to_string(p.e), std::to_string(p.excess), yes_no(p.connected),
               yes_no(p.is_star), std::to_string(p.leaf_count), std::to_string(p.p), std::to_string(p.max_susp)});
    if (a.common.format == "csv")
      write_csv_row(out, {label, to_graph6(g), std::to_string(p.n), std::to_string(p.e), std::to_string(p.excess),
                          yes_no(p.connected), yes_no(p.is_star), std::to_string(p.leaf_count), std::to_string(p.p),
                          std::to_string(p.max_susp)});
  }
  if (a.common.format == "json") {
    Json doc = envelope("profile");
    doc["graphs"] = items;
    out << doc.dump(2) << '\n';
  } else if (a.common.format == "table") {
    table.print(out);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- predict

struct TargetArgs {
  Common common;
  std::string target;
  std::vector<std::string> graphs;
};

int cmd_predict(const TargetArgs& a, std::ostream& out, std::ostream& err) {
  const Target target = parse_target(a.target);
  if (target.kind == Target::Kind::kClique) throw InputError("predict supports P:k and C:k targets");
  const auto graphs = load_graphs(a.graphs, a.common.seed);
  Json items = Json::array();
  Table table({"graph", "target", "value", "terms", "regime", "sparse", "parity"});
  if (a.common.format == "csv")
    write_csv_row(out, {"graph", "target", "value", "path_half", "alpha", "alpha_prime", "gamma", "regime_met",
                        "sparsity_met", "parity_met"});
  for (const auto& [label, g] : graphs) {
    const GoodnessPrediction p =
        target.kind == Target::Kind::kPath ? predict_path(g, target.k) : predict_cycle(g, target.k);
    for (const auto& w : p.warnings) err << "warning: " << label << ": " << w << '\n';
    Json item{{"label", label}};
    item.update(prediction_json(p));
    items.push_back(item);
    const bool path = target.kind == Target::Kind::kPath;
    std::string terms = path ? "max(" + std::to_string(p.term_path_half) + ", " + std::to_string(p.term_alpha) +
                                   ") alpha'=" + std::to_string(p.alpha_prime) + " gamma=" + std::to_string(p.gamma)
                             : "2n-1";
    table.add({label, target.to_string(), std::to_string(p.value), terms, yes_no(p.regime_met),
               yes_no(p.sparsity_met), yes_no(p.parity_met)});
    if (a.common.format == "csv")
      write_csv_row(out, {label, target.to_string(), std::to_string(p.value),
                          path ? std::to_string(p.term_path_half) : "", path ? std::to_string(p.term_alpha) : "",
                          path ? std::to_string(p.alpha_prime) : "", path ? std::to_string(p.gamma) : "",
                          yes_no(p.regime_met), yes_no(p.sparsity_met), yes_no(p.parity_met)});
  }
  if (a.common.format == "json") {
    Json doc = envelope("predict");
    doc["predictions"] = items;
    out << doc.dump(2) << '\n';
  } else if (a.common.format == "table") {
    table.print(out);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- bound

struct BoundArgs {
  Common common;
  std::string name;
  std::vector<std::string> args;
};

int cmd_bound(const BoundArgs& a, std::ostream& out, std::ostream&) {
  std::vector<Rational> values;
  for (const auto& s : a.args) values.push_back(parse_rational(s));
  BoundReport r;
  try {
    r = evaluate_bound(a.name, values);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (a.common.format == "json") {
    Json doc = envelope("bound");
    doc["bound"] = bound_json(r);
    out << doc.dump(2) << '\n';
  } else if (a.common.format == "csv") {
    write_csv_row(out, {"name", "value", "statement", "met", "reason"});
    for (const auto& h : r.hypotheses)
      write_csv_row(out, {r.name, to_string(r.value), h.statement, yes_no(h.met), h.reason});
  } else {
    out << r.name << " = " << to_string(r.value) << '\n';
    Table t({"hypothesis", "met", "reason"});
    for (const auto& h : r.hypotheses) t.add({h.statement, yes_no(h.met), h.reason});
    t.print(out);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- witness

struct WitnessArgs {
  Common common;
  std::string target;
  std::string construction = "auto";
  std::uint64_t budget = kDefaultWitnessBudget;
  std::vector<std::string> graphs;
};

int cmd_witness(const WitnessArgs& a, std::ostream& out, std::ostream& err) {
  const Target target = parse_target(a.target);
  const auto graphs = load_graphs(a.graphs, a.common.seed);
  Json items = Json::array();
  Table table({"graph", "construction", "host", "claimed", "red", "blue", "result"});
  if (a.common.format == "csv")
    write_csv_row(out, {"graph", "construction", "host_order", "claimed_bound", "red", "blue", "result", "host_graph6"});
  int code = kExitOk;
  for (const auto& [label, g] : graphs) {
    const bool gamma = a.construction == "gamma" || (a.construction == "auto" && target.kind == Target::Kind::kPath);
    WitnessColoring w;
    try {
      if (gamma) {
        if (target.kind != Target::Kind::kPath) throw InputError("the gamma construction needs a P:k target");
        const int ap = alpha_prime(g);
        w = build_gamma(g.order(), target.k, ap, gamma_term(g.order(), target.k, ap));
      } else {
        const ChromaticData cd = chromatic_data(target.graph());
        w = build_burr_cliques(cd.chi, cd.s_min, g.order());
      }
    } catch (const InfeasibleConstruction& e) {
      throw Failure{kExitInfeasible, label + ": infeasible construction: " + e.what()};
    }
    const ValidationReport v = validate_witness(w, g, target, a.budget);
    const std::string result = v.passed() ? "PASS" : "FAIL";
    if (!v.passed()) {
      const bool budget = v.red.budget_exceeded || v.blue.budget_exceeded;
      err << label << ": witness " << (budget ? "undecided, search budget exhausted" : "failed validation") << '\n';
      code = std::max(code, budget ? int{kExitBudget} : int{kExitViolation});
    }
    Json item{{"label", label}, {"target", target.to_string()}};
    item.update(witness_json(w));
    items.push_back(item);
    table.add({label, to_string(w.construction), to_graph6(w.host), std::to_string(w.claimed_bound),
               v.red.method + (v.red.passed ? " ok" : " FAIL"), v.blue.method + (v.blue.passed ? " ok" : " FAIL"),
               result});
    if (a.common.format == "csv")
      write_csv_row(out, {label, to_string(w.construction), std::to_string(w.host.order()),
                          std::to_string(w.claimed_bound), v.red.method + ": " + v.red.detail,
                          v.blue.method + ": " + v.blue.detail, result, to_graph6(w.host)});
  }
  if (a.common.format == "json") {
    Json doc = envelope("witness");
    doc["witnesses"] = items;
    out << doc.dump(2) << '\n';
  } else if (a.common.format == "table") {
    table.print(out);
  }
  return code;
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
  Common common;
  std::string target;
  std::string graph;
  int n_max = kEnumerationCap;
  std::string method = "hereditary";
  bool allow_order_ten = false;
  bool verify = false;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out, std::ostream& err) {
  const Target target = parse_target(a.target);
  const auto graphs = load_graphs({a.graph}, a.common.seed);
  const Graph& g = graphs.front().graph;
  RamseyOptions ro;
  ro.n_max = a.n_max;
  ro.threads = threads_of(a.common);
  ro.allow_order_ten = a.allow_order_ten;
  ro.method = a.method == "atlas" ? RamseyMethod::kAtlasScan : RamseyMethod::kHereditaryExtension;
  const int cap = a.allow_order_ten ? kEnumerationOverrideCap : kEnumerationCap;
  if (a.n_max < 1 || a.n_max > cap)
    throw InputError("--nmax must lie in 1.." + std::to_string(cap) +
                     (a.allow_order_ten ? "" : " (use --allow-order-ten for 10)"));
  const RamseyCertificate cert = ramsey_number(g, target, ro);
  std::optional<CertificateCheck> check;
  if (a.verify) check = verify_certificate(cert, ro.threads);

  const std::string summary =
      cert.determined ? "r(" + graphs.front().label + ", " + target.to_string() + ") = " + std::to_string(cert.value)
                      : "budget exhausted at " + std::to_string(a.n_max) + "; lower bound ≥ " +
                            std::to_string(cert.lower_bound) + " witnessed";
  if (a.common.format == "json") {
    Json doc = envelope("oracle");
    doc["label"] = graphs.front().label;
    doc["certificate"] = certificate_json(cert, check ? &*check : nullptr);
    out << doc.dump(2) << '\n';
  } else if (a.common.format == "csv") {
    write_csv_row(out, {"graph", "target", "determined", "value", "lower_bound", "lower_witness", "graphs_examined",
                        "method"});
    write_csv_row(out, {graphs.front().label, target.to_string(), yes_no(cert.determined),
                        cert.determined ? std::to_string(cert.value) : "", std::to_string(cert.lower_bound),
                        to_graph6(cert.lower_witness), std::to_string(cert.graphs_examined), to_string(cert.method)});
  } else {
    out << summary << '\n';
    out << "lower witness (" << cert.lower_witness.order() << " vertices): " << to_graph6(cert.lower_witness) << '\n';
    out << "classes examined: " << cert.graphs_examined << " over orders 1.." << cert.orders_searched << " ("
        << to_string(cert.method) << ")\n";
    if (check) out << "verification: " << (check->passed() ? "PASS" : "FAIL") << " (" << check->detail << ")\n";
  }
  if (check && !check->passed()) {
    err << "certificate verification failed: " << check->detail << '\n';
    return kExitViolation;
  }
  if (!cert.determined) {
    err << summary << '\n';
    return kExitBudget;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- turan

struct TuranArgs {
  Common common;
  int n = 0;
  int k = 0;
};

int cmd_turan(const TuranArgs& a, std::ostream& out, std::ostream&) {
  if (a.n < 1 || a.n > kEnumerationCap) throw InputError("turan needs 1 <= n <= 9");
  if (a.k < 2) throw InputError("turan needs k >= 2");
  const TuranResult r = turan_number(a.n, a.k);
  const std::string bound = to_string(Rational((a.k - 2) * a.n, 2));
  if (a.common.format == "json") {
    Json doc = envelope("turan");
    doc["n"] = a.n;
    doc["k"] = a.k;
    doc["ex"] = r.value;
    doc["bound"] = bound;
    doc["extremal_graph6"] = to_graph6(r.extremal);
    out << doc.dump(2) << '\n';
  } else if (a.common.format == "csv") {
    write_csv_row(out, {"n", "k", "ex", "bound", "extremal_graph6"});
    write_csv_row(out, {std::to_string(a.n), std::to_string(a.k), std::to_string(r.value), bound,
                        to_graph6(r.extremal)});
  } else {
    out << "ex(" << a.n << ", P_" << a.k << ") = " << r.value << " (bound (k-2)n/2 = " << bound << ")\n";
    out << "extremal: " << to_graph6(r.extremal) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  Common common;
  std::string name;
  int max_n = kEnumerationCap;
  std::vector<int> s_values;
  bool rows = false;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  SweepOptions so;
  so.max_n = a.max_n;
  so.threads = threads_of(a.common);
  so.record_rows = a.rows;
  if (so.max_n < 1 || so.max_n > kEnumerationCap) throw InputError("--max-n must lie in 1..9");
  std::vector<int> s_values = a.s_values.empty() ? std::vector<int>{2, 3, 4} : a.s_values;
  for (int s : s_values)
    if (s < 2) throw InputError("--s values must be >= 2");
  std::vector<SweepReport> reports;
  try {
    reports = run_sweep(a.name, so, s_values);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  bool violated = false;
  for (const auto& r : reports) violated = violated || !r.passed();

  if (a.common.format == "json") {
    Json doc = envelope("sweep");
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(sweep_json(r, a.rows));
    doc["sweeps"] = list;
    out << doc.dump(2) << '\n';
  } else if (a.common.format == "csv") {
    if (a.rows) {
      write_csv_row(out, {"sweep", "graph6", "params", "ok", "detail"});
      for (const auto& r : reports)
        for (const auto& row : r.rows) write_csv_row(out, {r.name, row.graph6, row.params, yes_no(row.ok), row.detail});
    } else {
      write_csv_row(out, {"sweep", "graphs", "instances", "violations"});
      for (const auto& r : reports)
        write_csv_row(out, {r.name, std::to_string(r.graphs), std::to_string(r.instances),
                            std::to_string(r.violations.size())});
    }
  } else {
    Table t({"sweep", "graphs", "instances", "violations"});
    for (const auto& r : reports)
      t.add({r.name, std::to_string(r.graphs), std::to_string(r.instances), std::to_string(r.violations.size())});
    t.print(out);
    for (const auto& r : reports) {
      for (const auto& n : r.notes) out << r.name << ": " << n << '\n';
      for (const auto& v : r.violations)
        out << r.name << " violation: " << v.graph6 << " " << v.params << " " << v.detail << '\n';
      if (a.rows)
        for (const auto& row : r.rows)
          out << r.name << " " << row.graph6 << " " << row.params << " " << (row.ok ? "ok" : "VIOLATION") << " "
              << row.detail << '\n';
    }
  }
  if (violated) {
    err << "sweep found violations\n";
    return kExitViolation;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
  Common common;
  int n = 0;
  std::string shard = "0/1";
  bool allow_order_ten = false;
  bool count_only = false;
};

Shard parse_shard(const std::string& s) {
  const auto slash = s.find('/');
  Shard shard;
  if (slash == std::string::npos) throw InputError("--shard takes index/stride");
  auto num = [&](std::string_view part) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
      throw InputError("--shard takes index/stride");
    return v;
  };
  shard.index = num(std::string_view(s).substr(0, slash));
  shard.stride = num(std::string_view(s).substr(slash + 1));
  if (shard.stride < 1 || shard.index < 0 || shard.index >= shard.stride)
    throw InputError("--shard needs 0 <= index < stride");
  return shard;
}

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream&) {
  const int cap = a.allow_order_ten ? kEnumerationOverrideCap : kEnumerationCap;
  if (a.n < 1 || a.n > cap)
    throw InputError("enumeration order must lie in 1.." + std::to_string(cap) +
                     (a.allow_order_ten ? "" : " (use --allow-order-ten for 10)"));
  const Shard shard = parse_shard(a.shard);
  const EnumerationStream stream = enumerate(a.n, shard, {a.allow_order_ten, threads_of(a.common)});
  std::vector<std::uint64_t> codes;
  codes.reserve(stream.size());
  for (std::size_t i = 0; i < stream.size(); ++i) codes.push_back(stream.code(i));
  const std::uint64_t checksum = codes_checksum(codes);
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(checksum));

  if (a.common.format == "json") {
    Json doc = envelope("enumerate");
    doc["n"] = a.n;
    doc["shard"] = Json{{"index", shard.index}, {"stride", shard.stride}};
    doc["count"] = stream.size();
    doc["checksum"] = hex;
    if (!a.count_only) {
      Json list = Json::array();
      for (std::size_t i = 0; i < stream.size(); ++i) list.push_back(to_graph6(stream.graph(i)));
      doc["graphs"] = list;
    }
    out << doc.dump(2) << '\n';
  } else if (a.count_only) {
    if (a.common.format == "csv") {
      write_csv_row(out, {"n", "shard", "count", "checksum"});
      write_csv_row(out, {std::to_string(a.n), a.shard, std::to_string(stream.size()), hex});
    } else {
      out << stream.size() << " classes on " << a.n << " vertices (shard " << a.shard << ", checksum " << hex << ")\n";
    }
  } else {
    for (std::size_t i = 0; i < stream.size(); ++i) out << to_graph6(stream.graph(i)) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- peel

struct PeelArgs {
  Common common;
  std::string threshold;
  std::vector<std::string> graphs;
};

int cmd_peel(const PeelArgs& a, std::ostream& out, std::ostream&) {
  const Rational d = parse_rational(a.threshold);
  if (d <= 0) throw InputError("--threshold must be positive");
  const auto graphs = load_graphs(a.graphs, a.common.seed);
  Json items = Json::array();
  Table table({"graph", "n", "e", "kept", "steps", "max_degree_kept", "removed"});
  if (a.common.format == "csv") write_csv_row(out, {"graph", "n", "e", "kept", "steps", "max_degree_kept", "removed"});
  for (const auto& [label, g] : graphs) {
    const PeelResult r = peel_high_degree(g, d);
    const int kept_delta = induced_subgraph(g, r.kept).max_degree();
    std::string removed;
    for (int v : r.removed) removed += (removed.empty() ? "" : " ") + std::to_string(v);
    items.push_back(Json{{"label", label},
                         {"n", g.order()},
                         {"e", g.size()},
                         {"threshold", to_string(d)},
                         {"kept", r.kept.to_vector()},
                         {"steps", r.steps()},
                         {"removed", r.removed},
                         {"max_degree_kept", kept_delta}});
    std::vector<std::string> row{label,
                                 std::to_string(g.order()),
                                 std::to_string(g.size()),
                                 std::to_string(r.kept.size()),
                                 std::to_string(r.steps()),
                                 std::to_string(kept_delta),
                                 removed};
    if (a.common.format == "csv") write_csv_row(out, row);
    table.add(std::move(row));
  }
  if (a.common.format == "json") {
    Json doc = envelope("peel");
    doc["graphs"] = items;
    out << doc.dump(2) << '\n';
  } else if (a.common.format == "table") {
    table.print(out);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramsey numbers of sparse graphs versus paths and cycles: profiles, predictions, witnesses, "
               "exact small-order oracle and exhaustive lemma sweeps.",
               "sparse-ramsey"};
  app.require_subcommand(1);

  ProfileArgs profile_args;
  auto* profile_cmd = app.add_subcommand("profile", "Sparsity profile, leaf bounds and reduction trace");
  add_common(profile_cmd, profile_args.common);
  profile_cmd->add_option("--s", profile_args.s_values, "Suspended-path parameters for the leaf bounds");
  profile_cmd->add_option("graphs", profile_args.graphs, "graph6, family spec or @file")->required();

  TargetArgs predict_args;
  auto* predict_cmd = app.add_subcommand("predict", "Closed-form Ramsey value with regime flags");
  add_common(predict_cmd, predict_args.common);
  predict_cmd->add_option("--target", predict_args.target, "P:k or C:k")->required();
  predict_cmd->add_option("graphs", predict_args.graphs, "graph6, family spec or @file")->required();

  BoundArgs bound_args;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate a named bound with its hypotheses");
  add_common(bound_cmd, bound_args.common);
  bound_cmd->add_option("name", bound_args.name, "Bound name")->required()->check(CLI::IsMember(bound_names()));
  bound_cmd->add_option("args", bound_args.args, "Integer or p/q arguments");

  WitnessArgs witness_args;
  auto* witness_cmd = app.add_subcommand("witness", "Build and validate a lower-bound colouring");
  add_common(witness_cmd, witness_args.common);
  witness_cmd->add_option("--target", witness_args.target, "P:k, C:k or K:k")->required();
  witness_cmd->add_option("--construction", witness_args.construction, "auto, gamma or burr")
      ->check(CLI::IsMember({"auto", "gamma", "burr"}))
      ->capture_default_str();
  witness_cmd->add_option("--budget", witness_args.budget, "Node budget for the exact red check")
      ->capture_default_str();
  witness_cmd->add_option("graphs", witness_args.graphs, "graph6, family spec or @file")->required();

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact small Ramsey number with certificate");
  add_common(oracle_cmd, oracle_args.common);
  oracle_cmd->add_option("--target", oracle_args.target, "P:k, C:k or K:k")->required();
  oracle_cmd->add_option("--nmax", oracle_args.n_max, "Largest order searched")->capture_default_str();
  oracle_cmd->add_option("--method", oracle_args.method, "hereditary or atlas")
      ->check(CLI::IsMember({"hereditary", "atlas"}))
      ->capture_default_str();
  oracle_cmd->add_flag("--allow-order-ten", oracle_args.allow_order_ten, "Permit --nmax 10");
  oracle_cmd->add_flag("--verify", oracle_args.verify, "Re-check the certificate independently");
  oracle_cmd->add_option("graph", oracle_args.graph, "graph6 or family spec")->required();

  TuranArgs turan_args;
  auto* turan_cmd = app.add_subcommand("turan", "Exact ex(n, P_k) for n <= 9");
  add_common(turan_cmd, turan_args.common);
  turan_cmd->add_option("n", turan_args.n, "Vertices")->required();
  turan_cmd->add_option("k", turan_args.k, "Path vertices")->required();

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Exhaustive lemma sweeps over all small graphs");
  add_common(sweep_cmd, sweep_args.common);
  std::vector<std::string> sweep_choices = sweep_names();
  sweep_choices.push_back("all");
  sweep_cmd->add_option("name", sweep_args.name, "Sweep name")->required()->check(CLI::IsMember(sweep_choices));
  sweep_cmd->add_option("--max-n", sweep_args.max_n, "Largest order swept")->capture_default_str();
  sweep_cmd->add_option("--s", sweep_args.s_values, "Suspended-path parameters (dichotomy)");
  sweep_cmd->add_flag("--rows", sweep_args.rows, "Report every checked instance");

  EnumerateArgs enum_args;
  auto* enum_cmd = app.add_subcommand("enumerate", "One canonical graph per isomorphism class");
  add_common(enum_cmd, enum_args.common);
  enum_cmd->add_option("n", enum_args.n, "Vertices")->required();
  enum_cmd->add_option("--shard", enum_args.shard, "index/stride")->capture_default_str();
  enum_cmd->add_flag("--allow-order-ten", enum_args.allow_order_ten, "Permit n = 10");
  enum_cmd->add_flag("--count-only", enum_args.count_only, "Print only the count and checksum");

  PeelArgs peel_args;
  auto* peel_cmd = app.add_subcommand("peel", "Repeatedly delete a vertex of degree at least the threshold");
  add_common(peel_cmd, peel_args.common);
  peel_cmd->add_option("--threshold", peel_args.threshold, "Positive integer or p/q")->required();
  peel_cmd->add_option("graphs", peel_args.graphs, "graph6, family spec or @file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const Common* common = nullptr;
  for (const auto& [cmd, c] : std::initializer_list<std::pair<CLI::App*, const Common*>>{
           {profile_cmd, &profile_args.common},
           {predict_cmd, &predict_args.common},
           {bound_cmd, &bound_args.common},
           {witness_cmd, &witness_args.common},
           {oracle_cmd, &oracle_args.common},
           {turan_cmd, &turan_args.common},
           {sweep_cmd, &sweep_args.common},
           {enum_cmd, &enum_args.common},
           {peel_cmd, &peel_args.common}})
    if (cmd == chosen) common = c;

  std::ofstream file;
  if (!common->out_path.empty()) {
    file.open(common->out_path);
    if (!file) {
      err << "error: cannot write '" << common->out_path << "'\n";
      return kExitInputError;
    }
  }
  std::ostream& sink = common->out_path.empty() ? out : file;

  try {
    if (chosen == profile_cmd) return cmd_profile(profile_args, sink, err);
    if (chosen == predict_cmd) return cmd_predict(predict_args, sink, err);
    if (chosen == bound_cmd) return cmd_bound(bound_args, sink, err);
    if (chosen == witness_cmd) return cmd_witness(witness_args, sink, err);
    if (chosen == oracle_cmd) return cmd_oracle(oracle_args, sink, err);
    if (chosen == turan_cmd) return cmd_turan(turan_args, sink, err);
    if (chosen == sweep_cmd) return cmd_sweep(sweep_args, sink, err);
    if (chosen == enum_cmd) return cmd_enumerate(enum_args, sink, err);
    return cmd_peel(peel_args, sink, err);
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const InputError& e) {
    err << "error: " << e.what();
    if (e.position() != InputError::npos) err << " (byte " << e.position() << ")";
    err << '\n';
    return kExitInputError;
  } catch (const PremiseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InfeasibleConstruction& e) {
    err << "error: infeasible construction: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace sparse_ramsey::cli
