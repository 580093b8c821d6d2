// discordq: command-line front end over the C API.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "discordq/discordq.h"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kPartialScan = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(dq_status st, const std::string& context) {
  if (st == DQ_OK) return;
  std::string msg = context + ": " + dq_status_string(st) + ": " + dq_last_error();
  if (st == DQ_TRUNCATION_ERROR) msg += " (try a larger --fock-dim)";
  throw UsageError(msg);
}

struct RunConfig {
  std::string method;
  double threshold = DQ_DEFAULT_THRESHOLD;
  int fock_dim = DQ_DEFAULT_FOCK_DIM;
  std::string output = "human";
  std::string out_path;
};

// ---------------------------------------------------------------------------
// Formatting

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string json_number(double v) { return std::isfinite(v) ? fmt17(v) : "null"; }

// Builds one JSON object with keys in insertion order.
class JsonObject {
 public:
  JsonObject& num(const std::string& k, double v) { return raw(k, json_number(v)); }
  JsonObject& integer(const std::string& k, long long v) { return raw(k, std::to_string(v)); }
  JsonObject& boolean(const std::string& k, bool v) { return raw(k, v ? "true" : "false"); }
  JsonObject& str(const std::string& k, const std::string& v) { return raw(k, json_string(v)); }
  JsonObject& raw(const std::string& k, const std::string& v) {
    fields_.emplace_back(k, v);
    return *this;
  }
  std::string dump() const {
    std::string out = "{";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      if (i) out += ",";
      out += json_string(fields_[i].first) + ":" + fields_[i].second;
    }
    return out + "}";
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::string json_array(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += items[i];
  }
  return out + "]";
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + cfg.out_path + " for writing");
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// Reports

// A report row. Closed forms for non-Gaussian families give q only.
struct Row {
  std::string label;  // closed | general | fock
  std::string method;
  double q = 0.0;
  std::optional<double> term1, term2;
  std::optional<dq_report> full;
};

Row from_report(const std::string& label, const dq_report& r) {
  return {label, dq_method_string(r.method), r.q, r.term1, r.term2, r};
}

Row closed_value(double q) { return {"closed", "ClosedForm", q, std::nullopt, std::nullopt, std::nullopt}; }

std::string meta_json(const dq_report& r) {
  JsonObject m;
  switch (r.method) {
    case DQ_METHOD_GENERAL_WIGNER:
      m.num("max_condition", r.max_condition)
          .integer("tuple_count", static_cast<long long>(r.tuple_count))
          .integer("monomial_count", static_cast<long long>(r.monomial_count))
          .num("imag_residue", r.imag_residue);
      break;
    case DQ_METHOD_FOCK_ORACLE:
      m.integer("fock_dim_a", r.fock_dim_a).integer("fock_dim_b", r.fock_dim_b).num("trace_deficit", r.trace_deficit);
      break;
    case DQ_METHOD_CLOSED_GAUSSIAN:
      break;
  }
  return m.dump();
}

std::string meta_human(const dq_report& r) {
  switch (r.method) {
    case DQ_METHOD_GENERAL_WIGNER:
      return "tuples=" + std::to_string(r.tuple_count) + " monomials=" + std::to_string(r.monomial_count) +
             " cond=" + fmt6(r.max_condition);
    case DQ_METHOD_FOCK_ORACLE:
      return "dims=" + std::to_string(r.fock_dim_a) + "x" + std::to_string(r.fock_dim_b) +
             " deficit=" + fmt6(r.trace_deficit);
    case DQ_METHOD_CLOSED_GAUSSIAN:
      break;
  }
  return "";
}

struct Outcome {
  std::string subject;
  std::vector<Row> rows;
  std::vector<std::string> notes;
};

std::string render(const RunConfig& cfg, const Outcome& o) {
  if (o.rows.empty()) throw UsageError("no method produced a result");
  int nonzero = 0;
  check(dq_classify(o.rows.front().q, cfg.threshold, &nonzero), "classify");
  const std::string verdict = nonzero ? "Nonzero" : "Zero";

  std::vector<std::string> deltas;
  std::vector<std::string> delta_lines;
  for (std::size_t i = 0; i < o.rows.size(); ++i) {
    for (std::size_t j = i + 1; j < o.rows.size(); ++j) {
      const double d = std::abs(o.rows[i].q - o.rows[j].q);
      deltas.push_back(JsonObject()
                           .str("a", o.rows[i].label)
                           .str("b", o.rows[j].label)
                           .num("abs", d)
                           .dump());
      delta_lines.push_back("|" + o.rows[i].label + " - " + o.rows[j].label + "| = " + fmt6(d));
    }
  }

  if (cfg.output == "json") {
    std::vector<std::string> reports;
    for (const auto& r : o.rows) {
      JsonObject j;
      j.num("q", r.q);
      j.raw("term1", r.term1 ? json_number(*r.term1) : "null");
      j.raw("term2", r.term2 ? json_number(*r.term2) : "null");
      j.str("method", r.method);
      j.raw("meta", r.full ? meta_json(*r.full) : "{}");
      reports.push_back(j.dump());
    }
    JsonObject root;
    root.str("subject", o.subject);
    root.raw("reports", json_array(reports));
    root.raw("verdict", JsonObject().str("verdict", verdict).num("q", o.rows.front().q).num("threshold", cfg.threshold).dump());
    if (o.rows.size() > 1) root.raw("deltas", json_array(deltas));
    std::vector<std::string> notes;
    for (const auto& n : o.notes) notes.push_back(json_string(n));
    if (!notes.empty()) root.raw("notes", json_array(notes));
    return root.dump() + "\n";
  }

  if (cfg.output == "csv") {
    std::string out = "method,q,term1,term2,verdict\n";
    for (const auto& r : o.rows) {
      out += r.method + "," + fmt17(r.q) + "," + (r.term1 ? fmt17(*r.term1) : "") + "," +
             (r.term2 ? fmt17(*r.term2) : "") + "," + verdict + "\n";
    }
    return out;
  }

  std::ostringstream os;
  os << o.subject << "\n";
  char line[256];
  std::snprintf(line, sizeof line, "  %-15s %-13s %-13s %-13s %s\n", "method", "q", "term1", "term2", "");
  os << line;
  for (const auto& r : o.rows) {
    std::snprintf(line, sizeof line, "  %-15s %-13s %-13s %-13s %s\n", r.method.c_str(), fmt6(r.q).c_str(),
                  r.term1 ? fmt6(*r.term1).c_str() : "-", r.term2 ? fmt6(*r.term2).c_str() : "-",
                  r.full ? meta_human(*r.full).c_str() : "");
    os << line;
  }
  for (const auto& d : delta_lines) os << "  " << d << "\n";
  for (const auto& n : o.notes) os << "  note: " << n << "\n";
  os << "verdict: " << verdict << " (q " << (nonzero ? "> " : "<= ") << fmt6(cfg.threshold) << ")\n";
  return os.str();
}

bool wants(const RunConfig& cfg, const std::string& m) { return cfg.method == m || cfg.method == "all"; }

void unavailable(const RunConfig& cfg, Outcome& o, const std::string& method, const std::string& why) {
  if (cfg.method == method) throw UsageError(method + " method is not available: " + why);
  o.notes.push_back(method + " skipped: " + why);
}

std::string violations_text(const dq_validation& v) {
  std::string out;
  for (int i = 0; i < v.count; ++i) {
    if (i) out += "; ";
    out += std::string(dq_violation_string(v.kinds[i])) + " (margin " + fmt6(v.margins[i]) + ")";
  }
  return out;
}

// RAII holders for the opaque handles.
struct State {
  dq_state* p = nullptr;
  ~State() { dq_state_free(p); }
};
struct Fock {
  dq_fock_state* p = nullptr;
  ~Fock() { dq_fock_free(p); }
};

Row run_general(const dq_state* s) {
  dq_report r;
  check(dq_q_general(s, &r), "general evaluator");
  return from_report("general", r);
}

Row run_fock(const dq_fock_state* s) {
  dq_report r;
  check(dq_fock_q(s, &r), "Fock oracle");
  return from_report("fock", r);
}

// ---------------------------------------------------------------------------
// Commands

struct GaussianArgs {
  double a = 0, b = 0, c1 = 0, c2 = 0;
};

int cmd_gaussian(const GaussianArgs& g, const RunConfig& cfg) {
  const dq_params p{g.a, g.b, g.c1, g.c2};
  dq_validation v;
  check(dq_validate_params(&p, &v), "validation");
  if (!v.valid) throw UsageError("invalid parameters: " + violations_text(v));
  dq_covariance cov;
  check(dq_params_covariance(&p, &cov), "covariance");
  check(dq_validate_covariance(&cov, &v), "validation");
  if (!v.valid) throw UsageError("non-physical parameters: " + violations_text(v));

  Outcome o;
  o.subject = "gaussian a=" + fmt6(g.a) + " b=" + fmt6(g.b) + " c1=" + fmt6(g.c1) + " c2=" + fmt6(g.c2);
  if (wants(cfg, "closed")) {
    dq_report r;
    check(dq_q_gaussian_closed(&p, &r), "closed form");
    o.rows.push_back(from_report("closed", r));
  }
  if (wants(cfg, "general")) {
    State s;
    check(dq_state_gaussian(&p, &s.p), "state");
    o.rows.push_back(run_general(s.p));
  }
  if (wants(cfg, "fock")) unavailable(cfg, o, "fock", "only the named families have Fock-basis builders");
  emit(cfg, render(cfg, o));
  return kOk;
}

struct FamilyArgs {
  std::string name;
  double k = 0.5, n = 0.0, r = 0.0;
  std::string state_file;
  std::string dump_state;
};

int cmd_family(const FamilyArgs& f, const RunConfig& cfg) {
  Outcome o;
  State s;
  const double max_deficit = DQ_DEFAULT_MAX_DEFICIT;
  const std::string& name = f.name;

  if (name != "photon-mixed" && name != "custom" && f.n < 0.0) throw UsageError("n must be nonnegative");
  if ((name == "photon-mixed" || name == "gaussian-vacuum-mix") && !(f.k >= 0.0 && f.k <= 1.0)) {
    throw UsageError("k must lie in [0, 1]");
  }

  if (name == "squeezed-thermal") {
    o.subject = "squeezed-thermal n=" + fmt6(f.n) + " r=" + fmt6(f.r);
    dq_params p;
    check(dq_squeezed_thermal_params(f.n, f.r, &p), "parameters");
    if (wants(cfg, "closed")) {
      dq_report r;
      check(dq_q_gaussian_closed(&p, &r), "closed form");
      o.rows.push_back(from_report("closed", r));
    }
    check(dq_state_squeezed_thermal(f.n, f.r, &s.p), "state");
    if (wants(cfg, "general")) o.rows.push_back(run_general(s.p));
    if (wants(cfg, "fock")) {
      Fock fs;
      check(dq_fock_squeezed_thermal(f.n, f.r, cfg.fock_dim, max_deficit, &fs.p), "Fock state");
      o.rows.push_back(run_fock(fs.p));
    }
  } else if (name == "photon-mixed") {
    o.subject = "photon-mixed k=" + fmt6(f.k);
    if (wants(cfg, "closed")) {
      double q;
      check(dq_q_photon_mixed_closed(f.k, &q), "closed form");
      o.rows.push_back(closed_value(q));
    }
    check(dq_state_photon_mixed(f.k, &s.p), "state");
    if (wants(cfg, "general")) o.rows.push_back(run_general(s.p));
    if (wants(cfg, "fock")) {
      Fock fs;
      check(dq_fock_photon_mixed(f.k, &fs.p), "Fock state");
      o.rows.push_back(run_fock(fs.p));
    }
  } else if (name == "gaussian-vacuum-mix") {
    o.subject = "gaussian-vacuum-mix k=" + fmt6(f.k) + " n=" + fmt6(f.n) + " r=" + fmt6(f.r);
    dq_params p;
    check(dq_squeezed_thermal_params(f.n, f.r, &p), "parameters");
    if (wants(cfg, "closed")) {
      double q;
      check(dq_q_mixture_closed(f.k, &p, &q), "closed form");
      o.rows.push_back(closed_value(q));
    }
    check(dq_state_gaussian_vacuum_mix(f.k, &p, &s.p), "state");
    if (wants(cfg, "general")) o.rows.push_back(run_general(s.p));
    if (wants(cfg, "fock")) {
      Fock fs;
      check(dq_fock_gaussian_vacuum_mix(f.k, f.n, f.r, cfg.fock_dim, max_deficit, &fs.p), "Fock state");
      o.rows.push_back(run_fock(fs.p));
    }
  } else if (name == "photon-added") {
    o.subject = "photon-added n=" + fmt6(f.n) + " r=" + fmt6(f.r);
    if (wants(cfg, "closed")) {
      if (f.n == 0.0) {
        double q;
        check(dq_q_photon_added_n0(f.r, &q), "closed form");
        o.rows.push_back(closed_value(q));
      } else {
        unavailable(cfg, o, "closed", "the closed form covers n = 0 only");
      }
    }
    check(dq_state_photon_added(f.n, f.r, &s.p), "state");
    if (wants(cfg, "general")) o.rows.push_back(run_general(s.p));
    if (wants(cfg, "fock")) {
      Fock fs;
      check(dq_fock_photon_added(f.n, f.r, cfg.fock_dim, max_deficit, &fs.p), "Fock state");
      o.rows.push_back(run_fock(fs.p));
    }
  } else if (name == "custom") {
    if (f.state_file.empty()) throw UsageError("custom family needs --state FILE");
    o.subject = "custom " + f.state_file;
    check(dq_state_from_json(read_file(f.state_file).c_str(), &s.p), "state file");
    if (wants(cfg, "closed")) unavailable(cfg, o, "closed", "no closed form for a custom state");
    if (wants(cfg, "general")) o.rows.push_back(run_general(s.p));
    if (wants(cfg, "fock")) unavailable(cfg, o, "fock", "no Fock-basis builder for a custom state");
  } else {
    throw UsageError("unknown family '" + name + "'");
  }

  if (!f.dump_state.empty()) {
    char* text = nullptr;
    check(dq_state_to_json(s.p, &text), "state serialization");
    std::ofstream out(f.dump_state, std::ios::binary);
    const bool ok = static_cast<bool>(out << text << "\n");
    dq_string_free(text);
    if (!ok) throw UsageError("cannot write " + f.dump_state);
  }
  emit(cfg, render(cfg, o));
  return kOk;
}

int cmd_reduce(const std::string& path, const RunConfig& cfg) {
  dq_covariance cov;
  check(dq_covariance_from_json(read_file(path).c_str(), &cov), path);
  dq_validation v;
  check(dq_validate_covariance(&cov, &v), "validation");
  if (!v.valid) throw UsageError("invalid covariance matrix: " + violations_text(v));
  dq_params p;
  check(dq_standard_form_reduce(&cov, &p), "reduction");

  std::string text;
  if (cfg.output == "json") {
    text = JsonObject().num("a", p.a).num("b", p.b).num("c1", p.c1).num("c2", p.c2).boolean("physical", true).dump() +
           "\n";
  } else if (cfg.output == "csv") {
    text = "a,b,c1,c2\n" + fmt17(p.a) + "," + fmt17(p.b) + "," + fmt17(p.c1) + "," + fmt17(p.c2) + "\n";
  } else {
    text = "a  = " + fmt6(p.a) + "\nb  = " + fmt6(p.b) + "\nc1 = " + fmt6(p.c1) + "\nc2 = " + fmt6(p.c2) +
           "\nphysical: yes\n";
  }
  emit(cfg, text);
  return kOk;
}

struct ScanArgs {
  std::string family = "photon-added";
  std::string n_grid, r_grid;
  unsigned threads = 0;
};

int cmd_scan(const ScanArgs& a, const RunConfig& cfg) {
  dq_grid ng, rg;
  check(dq_grid_parse(a.n_grid.c_str(), &ng), "--n");
  check(dq_grid_parse(a.r_grid.c_str(), &rg), "--r");
  std::vector<dq_scan_row> rows(ng.count * rg.count);
  std::size_t count = 0;
  check(dq_scan_photon_added(&ng, &rg, a.threads, rows.data(), rows.size(), &count), "scan");
  rows.resize(count);

  bool all_ok = true;
  std::string text;
  if (cfg.output == "json") {
    std::vector<std::string> items;
    for (const auto& r : rows) {
      all_ok = all_ok && r.ok;
      JsonObject j;
      j.num("n", r.n).num("r", r.r).num("q", r.q).num("log10_q", r.log10_q);
      j.str("status", r.ok ? "ok" : dq_status_string(r.error));
      if (!r.ok) j.str("message", r.message);
      items.push_back(j.dump());
    }
    text = JsonObject().str("family", a.family).raw("rows", json_array(items)).dump() + "\n";
  } else {
    text = "n,r,log10_q,status\n";
    for (const auto& r : rows) {
      all_ok = all_ok && r.ok;
      text += fmt17(r.n) + "," + fmt17(r.r) + "," + (r.ok ? fmt17(r.log10_q) : "") + "," +
              (r.ok ? "ok" : dq_status_string(r.error)) + "\n";
      if (!r.ok) std::cerr << "row n=" << fmt6(r.n) << " r=" << fmt6(r.r) << ": " << r.message << "\n";
    }
  }
  emit(cfg, text);
  return all_ok ? kOk : kPartialScan;
}

struct VerifyState {
  bool human;
  std::vector<std::string> json_rows;
  std::vector<std::string> failed;
  std::string table;
};

void on_check(const dq_check_result* r, void* user) {
  auto* st = static_cast<VerifyState*>(user);
  if (!r->passed) st->failed.push_back(r->name);
  if (st->human) {
    char line[512];
    std::snprintf(line, sizeof line, "%s  %-62s %7.2fs  %s\n", r->passed ? "PASS" : "FAIL", r->name, r->seconds,
                  r->detail);
    st->table += line;
  } else {
    st->json_rows.push_back(JsonObject()
                                .str("name", r->name)
                                .boolean("passed", r->passed)
                                .str("detail", r->detail)
                                .dump());
  }
}

int cmd_verify(unsigned threads, const RunConfig& cfg) {
  dq_verify_config vc;
  dq_verify_config_default(&vc);
  vc.threshold = cfg.threshold;
  vc.fock_dim = cfg.fock_dim;
  vc.threads = threads;
  VerifyState st{cfg.output == "human", {}, {}, {}};
  int all = 0;
  check(dq_verify(&vc, on_check, &st, &all), "verify");
  if (st.human) {
    st.table += all ? "all checks passed\n" : std::to_string(st.failed.size()) + " check(s) failed\n";
    emit(cfg, st.table);
  } else {
    // Timings are left out so that repeated runs produce identical output.
    emit(cfg, JsonObject().raw("checks", json_array(st.json_rows)).boolean("passed", all != 0).dump() + "\n");
  }
  for (const auto& name : st.failed) std::cerr << "failed: " << name << "\n";
  return all ? kOk : kVerifyFailed;
}

void add_common(CLI::App* sub, RunConfig& cfg, std::string* method) {
  if (method) {
    sub->add_option("--method", *method, "Evaluator")
        ->check(CLI::IsMember({"closed", "general", "fock", "all"}))
        ->capture_default_str();
  }
  sub->add_option("--threshold", cfg.threshold, "Verdict threshold on q")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--fock-dim", cfg.fock_dim, "Fock truncation per mode")->check(CLI::Range(4, 64))->capture_default_str();
  sub->add_option("--output", cfg.output, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  sub->add_option("--out", cfg.out_path, "Write output to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-discord marker Q for two-mode continuous-variable states"};
  app.require_subcommand(1);
  app.set_version_flag("--version", dq_version());

  RunConfig cfg;
  std::string gaussian_method = "closed";
  std::string family_method = "general";

  GaussianArgs ga;
  auto* gaussian = app.add_subcommand("gaussian", "Gaussian state in standard form (a, b, c1, c2)");
  gaussian->add_option("--a", ga.a)->required();
  gaussian->add_option("--b", ga.b)->required();
  gaussian->add_option("--c1", ga.c1)->required();
  gaussian->add_option("--c2", ga.c2)->required();
  add_common(gaussian, cfg, &gaussian_method);

  FamilyArgs fa;
  auto* family = app.add_subcommand("family", "Named state family");
  family->add_option("name", fa.name, "Family")
      ->required()
      ->check(CLI::IsMember({"squeezed-thermal", "photon-mixed", "gaussian-vacuum-mix", "photon-added", "custom"}));
  family->add_option("--k", fa.k, "Mixing weight")->capture_default_str();
  family->add_option("--n", fa.n, "Thermal photon number")->capture_default_str();
  family->add_option("--r", fa.r, "Squeezing parameter")->capture_default_str();
  family->add_option("--state", fa.state_file, "Wigner state JSON (custom family)");
  family->add_option("--dump-state", fa.dump_state, "Write the Wigner state as JSON");
  add_common(family, cfg, &family_method);

  std::string cov_file;
  auto* reduce = app.add_subcommand("reduce", "Reduce a covariance matrix to standard form");
  reduce->add_option("cov_file", cov_file, "JSON file {\"V\": 4x4}")->required();
  add_common(reduce, cfg, nullptr);

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "Parameter scan written as CSV");
  scan->add_option("--family", sa.family)->check(CLI::IsMember({"photon-added"}))->capture_default_str();
  scan->add_option("--n", sa.n_grid, "start:stop:count")->required();
  scan->add_option("--r", sa.r_grid, "start:stop:count")->required();
  scan->add_option("--threads", sa.threads, "Worker threads (0 = all)")->capture_default_str();
  add_common(scan, cfg, nullptr);

  unsigned verify_threads = 0;
  auto* verify = app.add_subcommand("verify", "Run the cross-evaluator checks");
  verify->add_option("--threads", verify_threads, "Worker threads for the scan check")->capture_default_str();
  add_common(verify, cfg, nullptr);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (gaussian->parsed()) {
      cfg.method = gaussian_method;
      return cmd_gaussian(ga, cfg);
    }
    if (family->parsed()) {
      cfg.method = family_method;
      return cmd_family(fa, cfg);
    }
    if (reduce->parsed()) return cmd_reduce(cov_file, cfg);
    if (scan->parsed()) return cmd_scan(sa, cfg);
    if (verify->parsed()) return cmd_verify(verify_threads, cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
