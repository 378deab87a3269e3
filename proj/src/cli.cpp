#include "gralg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gralg/bounds.hpp"
#include "gralg/io.hpp"
#include "gralg/resolution.hpp"
#include "gralg/veronese.hpp"

namespace gralg {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string input;
  long long characteristic = -1;
  int cutoff_n = -1;
  int cutoff_d = -1;
  std::string format = "text";
  bool strict = false;
  bool raw = false;
  int c = 1;
  int s = -1; // -1: take the session's s
  int d = 0;
  std::string ineq;
  std::string corpus_file;
  bool corrupt = false;
};

struct Session {
  SessionSpec spec;
  std::shared_ptr<const QuotientRing> ring;
};

// command-line misuse, as opposed to bad input data
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Session load(const Options& o) {
  if (o.input.empty()) throw UsageError("no --input session file");
  Session s;
  s.spec = load_session(o.input);
  if (o.characteristic > 0) s.spec.characteristic = o.characteristic;
  if (o.cutoff_n >= 0) s.spec.cutoff_n = o.cutoff_n;
  if (o.cutoff_d >= 0) s.spec.cutoff_d = o.cutoff_d;
  s.ring = build_ring(s.spec);
  return s;
}

struct Resolved {
  SessionModule mod;
  BettiTable table;
  int N = 0;
  int D = 0;
  bool windowed = false;
};

Resolved resolve_session(const Session& s) {
  Resolved r;
  r.N = s.spec.cutoff_n >= 0 ? s.spec.cutoff_n : 6;
  r.D = s.spec.cutoff_d >= 0 ? s.spec.cutoff_d : session_window(s.spec, s.ring, r.N);
  r.mod = build_session_module(s.spec, s.ring, r.D);
  ResolveEngine engine = s.spec.kind == ModuleKind::veronese_piece
                             ? ResolveEngine::windowed
                             : ResolveEngine::groebner;
  r.table = resolve_minimal(r.mod.pres, r.N, r.D, engine, false).second;
  r.windowed = !r.mod.gens_complete;
  for (bool full : r.table.column_complete) r.windowed = r.windowed || !full;
  return r;
}

std::vector<int> incomplete_columns(const BettiTable& B) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(B.column_complete.size()); ++i)
    if (!B.column_complete[i]) out.push_back(i);
  return out;
}

std::string pad_left(const std::string& s, size_t n) {
  return std::string(n - s.size(), ' ') + s;
}

// conventional grid: column i, row j - i
std::string betti_text(const BettiTable& B) {
  int nc = B.hom_cutoff + 1;
  long long lo = 0, hi = -1;
  bool any = false;
  for (int i = 0; i < nc && i < static_cast<int>(B.beta.size()); ++i)
    for (const auto& [j, v] : B.beta[i]) {
      if (!v) continue;
      long long row = static_cast<long long>(j) - i;
      lo = any ? std::min(lo, row) : row;
      hi = any ? std::max(hi, row) : row;
      any = true;
    }
  if (!any) return "(zero module)\n";

  size_t nrows = static_cast<size_t>(hi - lo + 1);
  std::vector<std::vector<std::string>> cells(nrows, std::vector<std::string>(nc, "."));
  std::vector<std::string> totals(nc, ".");
  for (int i = 0; i < nc && i < static_cast<int>(B.beta.size()); ++i) {
    long long tot = 0;
    for (const auto& [j, v] : B.beta[i]) {
      if (!v) continue;
      cells[static_cast<size_t>(j - i - lo)][i] = std::to_string(v);
      tot += v;
    }
    if (tot) totals[i] = std::to_string(tot);
  }

  std::vector<std::string> labels;
  for (long long r = lo; r <= hi; ++r) labels.push_back(std::to_string(r) + ":");
  labels.push_back("total:");
  size_t labw = 0;
  for (const auto& l : labels) labw = std::max(labw, l.size());
  std::vector<size_t> w(nc);
  for (int i = 0; i < nc; ++i) {
    w[i] = std::to_string(i).size();
    for (const auto& row : cells) w[i] = std::max(w[i], row[i].size());
    w[i] = std::max(w[i], totals[i].size());
  }

  std::ostringstream os;
  os << std::string(labw, ' ');
  for (int i = 0; i < nc; ++i) os << "  " << pad_left(std::to_string(i), w[i]);
  os << "\n";
  for (size_t r = 0; r < nrows; ++r) {
    os << labels[r] << std::string(labw - labels[r].size(), ' ');
    for (int i = 0; i < nc; ++i) os << "  " << pad_left(cells[r][i], w[i]);
    os << "\n";
  }
  os << labels.back() << std::string(labw - labels.back().size(), ' ');
  for (int i = 0; i < nc; ++i) os << "  " << pad_left(totals[i], w[i]);
  os << "\n";
  return os.str();
}

ordered_json betti_json(const Resolved& r) {
  ordered_json j;
  j["betti"] = ordered_json::array();
  for (int i = 0; i <= r.N && i < static_cast<int>(r.table.beta.size()); ++i)
    for (const auto& [deg, v] : r.table.beta[i])
      if (v) j["betti"].push_back({i, deg, v});
  j["t"] = ordered_json::array();
  for (const auto& t : t_values(r.table)) j["t"].push_back(to_string(t));
  j["reg"] = to_string(regularity_truncated(r.table));
  j["rate"] = to_string(rate_truncated(r.table));
  j["cutoffs"] = ordered_json{{"n", r.N}, {"d", r.D}};
  j["window_limited_columns"] = incomplete_columns(r.table);
  j["gens_complete"] = r.mod.gens_complete;
  return j;
}

int strict_exit(const Options& o, bool windowed) {
  return o.strict && windowed ? 3 : 0;
}

int cmd_resolve(const Options& o, std::ostream& out) {
  Session s = load(o);
  Resolved r = resolve_session(s);
  if (o.raw) {
    for (int i = 0; i <= r.N && i < static_cast<int>(r.table.beta.size()); ++i)
      for (const auto& [j, v] : r.table.beta[i])
        if (v) out << i << " " << j << " " << v << "\n";
    return strict_exit(o, r.windowed);
  }
  if (o.format == "json") {
    out << betti_json(r).dump(2) << "\n";
    return strict_exit(o, r.windowed);
  }
  out << betti_text(r.table);
  out << "t:";
  for (const auto& t : t_values(r.table)) out << " " << to_string(t);
  out << "\n";
  out << "reg: " << to_string(regularity_truncated(r.table)) << "\n";
  out << "rate: " << to_string(rate_truncated(r.table)) << "\n";
  out << "window: columns <= " << r.N << ", degrees <= " << r.D << "\n";
  std::vector<int> inc = incomplete_columns(r.table);
  if (!inc.empty()) {
    out << "window-limited columns:";
    for (int i : inc) out << " " << i;
    out << "\n";
  }
  if (!r.mod.gens_complete) out << "generators window-limited\n";
  return strict_exit(o, r.windowed);
}

int cmd_rate(const Options& o, std::ostream& out) {
  Session s = load(o);
  Resolved r = resolve_session(s);
  if (o.format == "json") {
    ordered_json j;
    j["rate"] = to_string(rate_truncated(r.table));
    j["cutoffs"] = ordered_json{{"n", r.N}, {"d", r.D}};
    j["window_limited"] = r.windowed;
    out << j.dump(2) << "\n";
  } else {
    out << to_string(rate_truncated(r.table)) << "\n";
  }
  return strict_exit(o, r.windowed);
}

int cmd_rat(const Options& o, std::ostream& out) {
  Session s = load(o);
  int N = s.spec.cutoff_n >= 0 ? s.spec.cutoff_n : 6;
  int D = s.spec.cutoff_d >= 0 ? s.spec.cutoff_d : 3 * (N + 1);
  bool tr = false;
  ExtRational v = rat_of_ring(s.ring, N, D, &tr);
  if (o.format == "json") {
    ordered_json j;
    j["rat"] = to_string(v);
    j["cutoffs"] = ordered_json{{"n", N}, {"d", D}};
    j["window_limited"] = tr;
    out << j.dump(2) << "\n";
  } else {
    out << to_string(v) << "\n";
  }
  return strict_exit(o, tr);
}

std::string count_of_degree(int deg, int k) {
  const char* base = nullptr;
  switch (deg) {
    case 2: base = "quadric"; break;
    case 3: base = "cubic"; break;
    case 4: base = "quartic"; break;
    case 5: base = "quintic"; break;
  }
  if (!base) return std::to_string(k) + " of degree " + std::to_string(deg);
  return std::to_string(k) + " " + base + (k == 1 ? "" : "s");
}

int cmd_veronese_ring(const Options& o, std::ostream& out) {
  Session s = load(o);
  if (o.c < 1) throw std::invalid_argument("veronese-ring needs c >= 1");
  int ycap = s.spec.cutoff_d >= 0 ? s.spec.cutoff_d : 8;
  VeroneseMap v = veronese_ring(s.ring, o.c, ycap);
  const PolyRing& Y = v.target->ring();
  const PolyRing& X = s.ring->ring();

  std::map<int, int> by_degree;
  for (const auto& g : v.target->ideal_gens()) ++by_degree[*homogeneous_degree(Y, g)];

  if (o.format == "json") {
    ordered_json j;
    j["variables"] = Y.var_names();
    j["reps"] = ordered_json::array();
    for (const auto& m : v.reps) j["reps"].push_back(to_string(X, m));
    j["relations"] = ordered_json::array();
    for (const auto& g : v.target->ideal_gens()) j["relations"].push_back(to_string(Y, g));
    j["complete"] = !v.truncated;
    j["complete_to"] = v.complete_to;
    out << j.dump(2) << "\n";
    return strict_exit(o, v.truncated);
  }

  out << Y.nvars() << (Y.nvars() == 1 ? " variable" : " variables");
  if (by_degree.empty()) {
    out << ", no relations";
  } else {
    for (const auto& [deg, k] : by_degree) out << ", " << count_of_degree(deg, k);
  }
  out << "\n";
  for (int k = 0; k < Y.nvars(); ++k)
    out << Y.var_name(k) << " = " << to_string(X, v.reps[k]) << "\n";
  if (!v.target->ideal_gens().empty()) {
    out << "relations:\n";
    for (const auto& g : v.target->ideal_gens()) out << "  " << to_string(Y, g) << "\n";
  }
  if (v.truncated)
    out << "window-limited: relations certified through degree " << v.complete_to << "\n";
  return strict_exit(o, v.truncated);
}

int cmd_veronese_module(const Options& o, std::ostream& out) {
  Session s = load(o);
  SessionSpec vp = s.spec;
  vp.kind = ModuleKind::veronese_piece;
  vp.c = o.c;
  vp.d = o.d;
  vp.twist = 0;
  vp.matrix.clear();
  vp.shifts.clear();
  int dcap = s.spec.cutoff_d >= 0 ? s.spec.cutoff_d : 6;
  SessionModule m = build_session_module(vp, s.ring, dcap);

  std::vector<int> gdeg = m.pres.shifted_degrees();
  std::vector<int> rdeg;
  const PolyRing& Y = m.pres.ring->ring();
  for (const auto& rel : m.pres.relations)
    rdeg.push_back(internal_degree(Y, m.pres.gens, rel));
  std::sort(rdeg.begin(), rdeg.end());
  bool windowed = !m.gens_complete || !m.pres.relations_complete;

  if (o.format == "json") {
    ordered_json j;
    j["module"] = m.label;
    j["gen_degrees"] = gdeg;
    j["relation_degrees"] = rdeg;
    j["gens_complete"] = m.gens_complete;
    j["relations_complete"] = m.pres.relations_complete;
    j["relations_complete_to"] = m.pres.relations_complete_to;
    out << j.dump(2) << "\n";
    return strict_exit(o, windowed);
  }

  auto list = [&out](const std::vector<int>& v) {
    out << " (degrees";
    for (int a : v) out << " " << a;
    out << ")";
  };
  out << m.label << " over the level-" << o.c << " veronese subring\n";
  out << "generators: " << gdeg.size();
  if (!gdeg.empty()) list(gdeg);
  out << "\n";
  out << "relations: " << rdeg.size();
  if (!rdeg.empty()) list(rdeg);
  out << "\n";
  if (m.pres.relations_complete)
    out << "relations complete\n";
  else
    out << "relations complete through degree " << m.pres.relations_complete_to << "\n";
  if (!m.gens_complete) out << "generators window-limited\n";
  return strict_exit(o, windowed);
}

bool veronese_family(const std::string& name) {
  return name == "mainthm" || name == "mainthm-power" || name == "versyz" ||
         name == "backelin" || name == "aramova" || name == "reg-zero";
}

std::string report_line(const BoundReport& r) {
  std::string s = r.inequality + " on " + r.ring_label;
  if (!r.module_label.empty()) s += ", module " + r.module_label;
  if (veronese_family(r.inequality)) s += ", c=" + std::to_string(r.c);
  if (r.s > 0) s += ", s=" + std::to_string(r.s);
  if (r.d >= 0) s += ", d=" + std::to_string(r.d);
  s += ": ";
  s += to_string(r.verdict);
  s += " (lhs " + to_string(r.lhs) + ", rhs " + to_string(r.rhs);
  if (r.slack) s += ", slack " + to_string(*r.slack);
  s += ")";
  if (r.lhs_truncated) s += " [lhs window-limited]";
  if (r.rhs_truncated) s += " [rhs window-limited]";
  return s;
}

ordered_json report_json(const BoundReport& r) {
  ordered_json j;
  j["inequality"] = r.inequality;
  j["ring"] = r.ring_label;
  j["module"] = r.module_label;
  j["c"] = r.c;
  j["s"] = r.s;
  j["d"] = r.d;
  j["lhs"] = to_string(r.lhs);
  j["rhs"] = to_string(r.rhs);
  j["verdict"] = to_string(r.verdict);
  j["slack"] = r.slack ? ordered_json(to_string(*r.slack)) : ordered_json(nullptr);
  j["cutoffs"] = ordered_json{{"n", r.hom_cutoff}, {"d", r.degree_cutoff}};
  j["flags"] =
      ordered_json{{"lhs_window", r.lhs_truncated}, {"rhs_window", r.rhs_truncated}};
  return j;
}

CorpusSummary tally(const std::vector<BoundReport>& reports) {
  CorpusSummary sum;
  for (const auto& r : reports) {
    switch (r.verdict) {
      case Verdict::satisfied: ++sum.satisfied; break;
      case Verdict::violated: ++sum.violated; break;
      case Verdict::inconclusive: ++sum.inconclusive; break;
    }
    sum.any_truncation = sum.any_truncation || r.lhs_truncated || r.rhs_truncated;
  }
  return sum;
}

int cmd_check(const Options& o, std::ostream& out) {
  Session s = load(o);
  CheckRequest q;
  q.inequality = o.ineq;
  q.ring = s.ring;
  q.ring_label = ring_label(s.spec);
  q.c = o.c;
  q.d = o.d;
  q.hom_cutoff = s.spec.cutoff_n >= 0 ? s.spec.cutoff_n : 4;
  q.degree_cutoff = s.spec.cutoff_d;
  q.s = o.s >= 0 ? o.s
                 : (s.spec.kind == ModuleKind::max_ideal_power ? s.spec.s : 1);

  // only these read the module spec; anything the session cannot hand over
  // as a plain spec is built here and passed through
  bool reads_module =
      o.ineq == "mainthm" || o.ineq == "aramova" || o.ineq == "ratineq";
  if (reads_module &&
      (s.spec.kind == ModuleKind::coker || s.spec.kind == ModuleKind::veronese_piece ||
       s.spec.twist != 0)) {
    if (s.spec.kind == ModuleKind::veronese_piece)
      throw std::invalid_argument(
          "check works over the session ring; a veronese-piece module has no "
          "presentation over it");
    int w = s.spec.cutoff_d >= 0 ? s.spec.cutoff_d
                                 : 3 * q.hom_cutoff + 2 * std::max(1, q.s) + 2;
    SessionModule m = build_session_module(s.spec, s.ring, w);
    q.mspec = ModuleSpec::given;
    q.module = std::move(m.pres);
    q.module_label = m.label;
  } else {
    switch (s.spec.kind) {
      case ModuleKind::residue_field: q.mspec = ModuleSpec::residue_field; break;
      case ModuleKind::max_ideal_power: q.mspec = ModuleSpec::power; break;
      default: q.mspec = ModuleSpec::none; break;
    }
  }

  BoundReport r = check_inequality(q);
  if (o.format == "json")
    out << report_json(r).dump(2) << "\n";
  else
    out << report_line(r) << "\n";
  return corpus_exit_code(tally({r}), o.strict);
}

std::vector<CheckRequest> parse_corpus_file(const std::string& path, coeff_t p,
                                            bool corrupt) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file '" + path + "'");
  auto rings = corpus_rings(p);
  std::vector<CheckRequest> cases;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string where = "corpus line " + std::to_string(lineno) + ": ";
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ss(line);
    std::string ineq, label;
    if (!(ss >> ineq)) continue;
    if (!(ss >> label)) throw std::invalid_argument(where + "missing ring label");

    CheckRequest q;
    q.inequality = ineq;
    q.hom_cutoff = 3;
    q.corrupt_rhs = corrupt;
    for (const auto& [l, r] : rings) {
      if (l == label) {
        q.ring = r;
        q.ring_label = l;
      }
    }
    if (!q.ring) {
      std::string known;
      for (const auto& [l, r] : rings) known += " " + l;
      throw std::invalid_argument(where + "unknown ring '" + label +
                                  "'; known rings:" + known);
    }
    if (ineq == "mainthm" || ineq == "aramova" || ineq == "ratineq")
      q.mspec = ModuleSpec::residue_field;

    std::string kv;
    while (ss >> kv) {
      size_t eq = kv.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument(where + "expected key=value, got '" + kv + "'");
      std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
      auto ival = [&] {
        try {
          size_t used = 0;
          int n = std::stoi(v, &used);
          if (used != v.size()) throw std::invalid_argument("");
          return n;
        } catch (...) {
          throw std::invalid_argument(where + "key '" + k + "' needs an integer");
        }
      };
      if (k == "c")
        q.c = ival();
      else if (k == "s")
        q.s = ival();
      else if (k == "d")
        q.d = ival();
      else if (k == "n")
        q.hom_cutoff = ival();
      else if (k == "D")
        q.degree_cutoff = ival();
      else if (k == "twist")
        q.twist_j = ival();
      else if (k == "module") {
        if (v == "K")
          q.mspec = ModuleSpec::residue_field;
        else if (v == "power")
          q.mspec = ModuleSpec::power;
        else if (v == "twist")
          q.mspec = ModuleSpec::ring_twist;
        else
          throw std::invalid_argument(where + "unknown module '" + v +
                                      "' (K | power | twist)");
      } else {
        throw std::invalid_argument(where + "unknown key '" + k + "'");
      }
    }
    cases.push_back(std::move(q));
  }
  return cases;
}

int cmd_corpus(const Options& o, std::ostream& out) {
  coeff_t p = o.characteristic > 0 ? static_cast<coeff_t>(o.characteristic) : 32003;
  std::vector<CheckRequest> cases = o.corpus_file.empty()
                                        ? corpus_cases(p, o.corrupt)
                                        : parse_corpus_file(o.corpus_file, p, o.corrupt);
  auto [reports, sum] = corpus_run(cases);
  if (o.format == "json") {
    ordered_json j;
    j["reports"] = ordered_json::array();
    for (const auto& r : reports) j["reports"].push_back(report_json(r));
    j["summary"] = ordered_json{{"satisfied", sum.satisfied},
                                {"violated", sum.violated},
                                {"inconclusive", sum.inconclusive},
                                {"truncation", sum.any_truncation}};
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << report_line(r) << "\n";
    out << "summary: " << sum.satisfied << " satisfied, " << sum.violated
        << " violated, " << sum.inconclusive << " inconclusive";
    if (sum.any_truncation) out << ", window-limited results present";
    out << "\n";
  }
  return corpus_exit_code(sum, o.strict);
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  Options o;
  CLI::App app{"graded quotient rings: resolutions, veronese subrings, rate bounds",
               "gralg"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--input", o.input, "session file");
  app.add_option("--char", o.characteristic, "field characteristic override");
  app.add_option("--cutoff-n", o.cutoff_n, "homological window");
  app.add_option("--cutoff-d", o.cutoff_d, "degree window");
  app.add_option("--format", o.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--strict", o.strict, "exit 3 when results are window-limited");

  CLI::App* resolve =
      app.add_subcommand("resolve", "betti numbers of the session module");
  resolve->add_flag("--raw", o.raw, "print (i, j, count) triples");
  CLI::App* rate =
      app.add_subcommand("rate", "resolution slope of the session module");
  CLI::App* rat = app.add_subcommand("rat", "backelin rate of the session ring");
  CLI::App* vring =
      app.add_subcommand("veronese-ring", "presentation of the veronese subring");
  vring->add_option("--c", o.c, "veronese level")->required();
  CLI::App* vmod =
      app.add_subcommand("veronese-module", "one veronese piece of the ring");
  vmod->add_option("--c", o.c, "veronese level")->required();
  vmod->add_option("--d", o.d, "piece index")->required();
  CLI::App* check = app.add_subcommand("check", "verify one inequality");
  check->add_option("--ineq", o.ineq, "inequality name")->required();
  check->add_option("--c", o.c, "veronese level");
  check->add_option("--s", o.s, "power of the maximal ideal");
  check->add_option("--d", o.d, "veronese piece index");
  CLI::App* corpus =
      app.add_subcommand("corpus", "run the bundled (or a custom) case list");
  corpus->add_option("--file", o.corpus_file, "case list, one check per line");
  corpus->add_flag("--corrupt", o.corrupt, "self-test: report rhs - 1");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "gralg: " << e.what() << "\n" << app.help();
    return 64;
  }

  try {
    if (resolve->parsed()) return cmd_resolve(o, out);
    if (rate->parsed()) return cmd_rate(o, out);
    if (rat->parsed()) return cmd_rat(o, out);
    if (vring->parsed()) return cmd_veronese_ring(o, out);
    if (vmod->parsed()) return cmd_veronese_module(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (corpus->parsed()) return cmd_corpus(o, out);
  } catch (const UsageError& e) {
    err << "gralg: " << e.what() << "\n" << app.help();
    return 64;
  } catch (const ParseError& e) {
    err << "gralg: " << e.what() << " (offset " << e.offset() << ")\n";
    return 65;
  } catch (const std::exception& e) {
    err << "gralg: " << e.what() << "\n";
    return 65;
  }
  err << "gralg: no command\n";
  return 64;
}

} // namespace gralg
