#include "gralg/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "gralg/veronese.hpp"

namespace gralg {

Polynomial parse_polynomial(const PolyRing& R, const std::string& text) {
  const coeff_t p = R.field().p();
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto at_digit = [&] {
    return i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]));
  };
  auto at_ident = [&] {
    return i < text.size() &&
           (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_');
  };

  skip();
  if (i == text.size()) throw ParseError("empty polynomial expression", i);

  std::vector<Term> terms;
  bool negative = false;
  while (true) {
    skip();
    if (!at_digit() && !at_ident())
      throw ParseError("expected a coefficient or variable", i);
    coeff_t c = 1;
    if (at_digit()) {
      c = 0;
      while (at_digit()) c = (c * 10 + (text[i++] - '0')) % p;
    }
    std::vector<int> exps(R.nvars(), 0);
    while (true) {
      skip();
      bool star = false;
      if (i < text.size() && text[i] == '*') {
        star = true;
        ++i;
        skip();
      }
      if (!at_ident()) {
        if (star) throw ParseError("expected a variable after '*'", i);
        break;
      }
      size_t start = i;
      ++i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      std::string name = text.substr(start, i - start);
      int v = R.variable_index(name);
      if (v < 0) throw ParseError("unknown variable '" + name + "'", start);
      int e = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        if (!at_digit()) throw ParseError("malformed exponent", i);
        long long ev = 0;
        while (at_digit()) {
          ev = ev * 10 + (text[i++] - '0');
          if (ev > 1000000) throw ParseError("exponent out of range", start);
        }
        e = static_cast<int>(ev);
      }
      exps[v] += e;
    }
    if (negative) c = R.field().neg(c);
    terms.push_back(Term{c, Monomial(std::move(exps))});
    skip();
    if (i == text.size()) break;
    if (text[i] == '+')
      negative = false;
    else if (text[i] == '-')
      negative = true;
    else
      throw ParseError("expected '+' or '-'", i);
    ++i;
  }
  return Polynomial::make(R, std::move(terms));
}

const char* to_string(ModuleKind k) {
  switch (k) {
    case ModuleKind::residue_field: return "residue-field";
    case ModuleKind::max_ideal_power: return "max-ideal-power";
    case ModuleKind::coker: return "coker";
    case ModuleKind::veronese_piece: return "veronese-piece";
  }
  return "?";
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// split on the separator, trimming each piece
std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string::npos ? pos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

// whitespace- or comma-separated tokens
std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      if (!cur.empty()) {
        out.push_back(cur);
        cur.clear();
      }
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

bool identifier_shaped(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

long long to_ll(const std::string& s, const std::string& key, int lineno, size_t off) {
  size_t used = 0;
  long long v = 0;
  bool ok = !s.empty();
  if (ok) {
    try {
      v = std::stoll(s, &used);
      ok = used == s.size();
    } catch (...) {
      ok = false;
    }
  }
  if (!ok)
    throw ParseError("line " + std::to_string(lineno) + ": key '" + key +
                         "' needs an integer, got '" + s + "'",
                     off);
  return v;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

void check_piece_params(const SessionSpec& spec) {
  if (spec.c < 1) throw std::invalid_argument("veronese-piece needs c >= 1");
  if (spec.d < 0 || spec.d >= spec.c)
    throw std::invalid_argument("veronese-piece needs 0 <= d < c");
}

// reattach the expression to errors raised while scanning it
Polynomial parse_named(const PolyRing& R, const std::string& text) {
  try {
    return parse_polynomial(R, text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()) + " in '" + text + "'", e.offset());
  }
}

} // namespace

SessionSpec parse_session(const std::string& text) {
  SessionSpec spec;
  std::set<std::string> seen;
  size_t pos = 0;
  int lineno = 0;

  // which kind each module parameter belongs to, enforced after the scan
  const std::vector<std::pair<std::string, ModuleKind>> owners = {
      {"module.s", ModuleKind::max_ideal_power},
      {"module.c", ModuleKind::veronese_piece},
      {"module.d", ModuleKind::veronese_piece},
      {"module.matrix", ModuleKind::coker},
      {"module.shifts", ModuleKind::coker},
  };

  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string line =
        text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
    size_t off = pos;
    ++lineno;
    pos = eol == std::string::npos ? text.size() + 1 : eol + 1;

    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;

    size_t eq = line.find('=');
    std::string key = eq == std::string::npos ? "" : trim(line.substr(0, eq));
    if (key.empty())
      throw ParseError("line " + std::to_string(lineno) + ": expected key = value", off);
    std::string val = trim(line.substr(eq + 1));
    if (!seen.insert(key).second)
      throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'",
                       off);

    auto integer = [&] { return to_ll(val, key, lineno, off); };
    auto bounded_int = [&](long long lo, long long hi) {
      long long v = integer();
      if (v < lo || v > hi)
        throw ParseError("line " + std::to_string(lineno) + ": key '" + key +
                             "' out of range",
                         off);
      return static_cast<int>(v);
    };

    if (key == "char") {
      spec.characteristic = integer();
    } else if (key == "vars") {
      spec.vars = words(val);
      std::set<std::string> uniq;
      for (const auto& v : spec.vars) {
        if (!identifier_shaped(v))
          throw ParseError(
              "line " + std::to_string(lineno) + ": bad variable name '" + v + "'", off);
        if (!uniq.insert(v).second)
          throw ParseError(
              "line " + std::to_string(lineno) + ": duplicate variable '" + v + "'", off);
      }
    } else if (key == "ideal") {
      if (!val.empty()) {
        spec.ideal = split(val, ',');
        for (const auto& e : spec.ideal)
          if (e.empty())
            throw ParseError(
                "line " + std::to_string(lineno) + ": empty expression in ideal", off);
      }
    } else if (key == "module.kind") {
      if (val == "residue-field")
        spec.kind = ModuleKind::residue_field;
      else if (val == "max-ideal-power")
        spec.kind = ModuleKind::max_ideal_power;
      else if (val == "coker")
        spec.kind = ModuleKind::coker;
      else if (val == "veronese-piece")
        spec.kind = ModuleKind::veronese_piece;
      else
        throw ParseError("line " + std::to_string(lineno) + ": unknown module kind '" +
                             val +
                             "' (residue-field | max-ideal-power | coker | "
                             "veronese-piece)",
                         off);
    } else if (key == "module.s") {
      spec.s = bounded_int(1, 1 << 20);
    } else if (key == "module.c") {
      spec.c = bounded_int(1, 1 << 20);
    } else if (key == "module.d") {
      spec.d = bounded_int(0, 1 << 20);
    } else if (key == "module.matrix") {
      if (!val.empty()) {
        for (const auto& row : split(val, ';')) {
          spec.matrix.push_back(split(row, ','));
          for (const auto& e : spec.matrix.back())
            if (e.empty())
              throw ParseError(
                  "line " + std::to_string(lineno) + ": empty matrix entry", off);
        }
      }
    } else if (key == "module.shifts") {
      for (const auto& w : words(val))
        spec.shifts.push_back(static_cast<int>(to_ll(w, key, lineno, off)));
    } else if (key == "twist") {
      spec.twist = bounded_int(-(1 << 20), 1 << 20);
    } else if (key == "cutoffs.n") {
      spec.cutoff_n = bounded_int(0, 1 << 20);
    } else if (key == "cutoffs.d") {
      spec.cutoff_d = bounded_int(0, 1 << 20);
    } else if (key == "cutoffs.g") {
      spec.cutoff_g = bounded_int(0, 1 << 20);
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'",
                       off);
    }
  }

  for (const auto& [key, kind] : owners)
    if (seen.count(key) && spec.kind != kind)
      throw ParseError("key '" + key + "' is only meaningful for module.kind = " +
                           std::string(to_string(kind)),
                       0);
  return spec;
}

SessionSpec load_session(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open session file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_session(ss.str());
}

std::string serialize_session(const SessionSpec& spec) {
  std::string out;
  out += "char = " + std::to_string(spec.characteristic) + "\n";
  out += "vars = " + join(spec.vars, " ") + "\n";
  if (!spec.ideal.empty()) out += "ideal = " + join(spec.ideal, ", ") + "\n";
  out += "module.kind = " + std::string(to_string(spec.kind)) + "\n";
  switch (spec.kind) {
    case ModuleKind::residue_field: break;
    case ModuleKind::max_ideal_power:
      out += "module.s = " + std::to_string(spec.s) + "\n";
      break;
    case ModuleKind::veronese_piece:
      out += "module.c = " + std::to_string(spec.c) + "\n";
      out += "module.d = " + std::to_string(spec.d) + "\n";
      break;
    case ModuleKind::coker: {
      if (!spec.matrix.empty()) {
        std::vector<std::string> rows;
        for (const auto& row : spec.matrix) rows.push_back(join(row, ", "));
        out += "module.matrix = " + join(rows, " ; ") + "\n";
      }
      std::vector<std::string> shifts;
      for (int a : spec.shifts) shifts.push_back(std::to_string(a));
      if (!shifts.empty()) out += "module.shifts = " + join(shifts, " ") + "\n";
      break;
    }
  }
  if (spec.twist != 0) out += "twist = " + std::to_string(spec.twist) + "\n";
  if (spec.cutoff_n >= 0) out += "cutoffs.n = " + std::to_string(spec.cutoff_n) + "\n";
  if (spec.cutoff_d >= 0) out += "cutoffs.d = " + std::to_string(spec.cutoff_d) + "\n";
  if (spec.cutoff_g >= 0) out += "cutoffs.g = " + std::to_string(spec.cutoff_g) + "\n";
  return out;
}

std::string ring_label(const SessionSpec& spec) {
  std::string s = "K[" + join(spec.vars, ",") + "]";
  if (!spec.ideal.empty()) s += "/(" + join(spec.ideal, ",") + ")";
  return s;
}

std::shared_ptr<const QuotientRing> build_ring(const SessionSpec& spec) {
  if (spec.vars.empty()) throw std::invalid_argument("session declares no variables");
  PrimeField F(spec.characteristic);
  PolyRing S(F, spec.vars);
  std::vector<Polynomial> gens;
  for (const auto& e : spec.ideal) {
    Polynomial f = parse_named(S, e);
    if (f.is_zero()) continue;
    if (!is_homogeneous(S, f))
      throw std::invalid_argument("inhomogeneous ideal generator '" + e + "'");
    if (*homogeneous_degree(S, f) == 0)
      throw std::invalid_argument("constant ideal generator '" + e + "'");
    gens.push_back(std::move(f));
  }
  return make_ring(std::move(S), std::move(gens));
}

int session_window(const SessionSpec& spec,
                   const std::shared_ptr<const QuotientRing>& R, int N) {
  int top = 0;
  switch (spec.kind) {
    case ModuleKind::residue_field:
    case ModuleKind::max_ideal_power: break;
    case ModuleKind::coker:
      for (int a : spec.shifts) top = std::max(top, a);
      break;
    case ModuleKind::veronese_piece:
      check_piece_params(spec);
      top = spec.cutoff_g >= 0 ? spec.cutoff_g
                               : default_generation_cap(ring_as_module(R), spec.c);
      break;
  }
  return 3 * N + std::max(0, top - spec.twist);
}

SessionModule build_session_module(const SessionSpec& spec,
                                   const std::shared_ptr<const QuotientRing>& R,
                                   int window) {
  // windowed constructions need their untwisted degrees through window + twist
  int cap = std::max(0, window + spec.twist);
  SessionModule out;
  switch (spec.kind) {
    case ModuleKind::residue_field:
      out.pres = residue_field_module(R);
      out.label = "K";
      break;
    case ModuleKind::max_ideal_power:
      if (spec.s < 1) throw std::invalid_argument("max-ideal-power needs s >= 1");
      out.pres = power_ideal_module(R, spec.s, cap);
      out.label = "m^" + std::to_string(spec.s) + "(" + std::to_string(spec.s) + ")";
      break;
    case ModuleKind::coker: {
      if (spec.shifts.empty())
        throw std::invalid_argument("coker needs module.shifts");
      size_t ncols = spec.matrix.empty() ? 0 : spec.matrix[0].size();
      if (!spec.matrix.empty() && spec.matrix.size() != spec.shifts.size())
        throw std::invalid_argument("coker matrix needs one row per generator shift");
      const PolyRing& S = R->ring();
      GradedFreeModule F{spec.shifts, 0};
      std::vector<FreeVector> rels;
      for (size_t j = 0; j < ncols; ++j) {
        FreeVector v;
        for (size_t k = 0; k < spec.matrix.size(); ++k) {
          if (spec.matrix[k].size() != ncols)
            throw std::invalid_argument("coker matrix rows differ in length");
          Polynomial f = parse_named(S, spec.matrix[k][j]);
          if (!is_homogeneous(S, f))
            throw std::invalid_argument("inhomogeneous matrix entry '" +
                                        spec.matrix[k][j] + "'");
          v = add(S, F, v, unit_vector(S, F, static_cast<int>(k), f));
        }
        if (!is_homogeneous(S, F, v))
          throw std::invalid_argument(
              "matrix column " + std::to_string(j + 1) +
              " is not homogeneous against the generator shifts");
        v = R->reduce(F, v);
        if (!v.is_zero()) rels.push_back(std::move(v));
      }
      out.pres = ModulePresentation{R, std::move(F), std::move(rels)};
      validate_presentation(out.pres);
      out.label = "coker";
      break;
    }
    case ModuleKind::veronese_piece: {
      check_piece_params(spec);
      ModulePresentation M0 = ring_as_module(R);
      int gcap = spec.cutoff_g >= 0 ? spec.cutoff_g
                                    : default_generation_cap(M0, spec.c);
      VeroneseMap v = veronese_ring(R, spec.c, cap + 1);
      if (v.truncated && v.complete_to < cap + 1)
        throw std::runtime_error(
            "veronese presentation window too small; raise the cutoff");
      VeroneseModule vm = veronese_module(M0, v, spec.d, gcap, cap);
      out.pres = std::move(vm.pres);
      out.gens_complete = vm.gens_complete;
      out.label =
          "R^(" + std::to_string(spec.c) + "," + std::to_string(spec.d) + ")";
      break;
    }
  }
  if (spec.twist != 0) {
    out.pres = twisted(std::move(out.pres), spec.twist);
    out.label += "(" + std::to_string(spec.twist) + ")";
  }
  return out;
}

} // namespace gralg
