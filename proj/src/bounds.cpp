#include "gralg/bounds.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <type_traits>

#include "gralg/resolution.hpp"
#include "gralg/veronese.hpp"

namespace gralg {

ExtRational complex_degree_bound(const std::vector<std::vector<ExtRational>>& t, int n) {
  if (n < 0) throw std::invalid_argument("complex_degree_bound: negative index");
  ExtRational out = ExtRational::minus_infinity();
  for (int i = 0; i <= n; ++i) {
    if (i >= static_cast<int>(t.size())) continue;
    int k = n - i;
    if (k >= static_cast<int>(t[i].size())) continue;
    out = ExtRational::max(out, t[i][k]);
  }
  return out;
}

long long versyz_rhs(int n, int c, const std::vector<ExtRational>& tm) {
  if (n < 0 || c < 1) throw std::invalid_argument("versyz_rhs: bad parameters");
  if (n == 0) return 0;
  if (static_cast<int>(tm.size()) <= n)
    throw std::invalid_argument("versyz_rhs: t-sequence shorter than n");
  std::vector<long long> ca(n + 1, 0);
  for (int a = 1; a <= n; ++a) {
    if (tm[a].is_minus_infinity())
      throw std::invalid_argument("versyz_rhs: t-sequence has a minus-infinity entry");
    ca[a] = tm[a].div_pos(c).ceil_ll();
  }
  // max over compositions of n into positive parts of the part-wise ceilings;
  // the max only depends on the multiset, so fill degree by degree
  std::vector<long long> best(n + 1, 0);
  for (int m = 1; m <= n; ++m) {
    long long b = ca[m];
    for (int a = 1; a < m; ++a) b = std::max(b, ca[a] + best[m - a]);
    best[m] = b;
  }
  return best[n];
}

ExtRational mainthm_rhs(const ExtRational& rate_m, const ExtRational& rat_r, long long t0,
                        int c) {
  if (c < 1) throw std::invalid_argument("mainthm_rhs: c must be positive");
  ExtRational b = ExtRational::max(rate_m, rat_r);
  if (b.is_minus_infinity()) return b;
  long long t0term = std::max(0LL, Rational(t0, c).ceil_ll());
  return ExtRational(Rational(b.div_pos(c).ceil_ll() + t0term));
}

long long backelin_rhs(const Rational& rat_r, int c) {
  if (c < 1) throw std::invalid_argument("backelin_rhs: c must be positive");
  return (rat_r / Rational(c)).ceil_ll();
}

ExtRational surjection_rate_rhs(const ExtRational& rate_s_m, const ExtRational& rate_s_r,
                                long long t0) {
  ExtRational m = ExtRational::max(rate_s_m, rate_s_r);
  return m.sub(Rational(-std::max(0LL, t0)));
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::satisfied: return "satisfied";
    case Verdict::violated: return "violated";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

const std::vector<std::string>& inequality_names() {
  static const std::vector<std::string> names = {
      "mainthm", "mainthm-power", "maxi",    "versyz",
      "backelin", "aramova",       "reg-zero", "ratineq"};
  return names;
}

namespace {

struct HarnessCache {
  std::map<std::string, VeroneseMap> rings;
  std::map<std::string, std::pair<ExtRational, bool>> rats;
  std::map<std::string, std::pair<BettiTable, bool>> pieces;
};

std::string cat() { return ""; }
template <typename T, typename... Rest>
std::string cat(const T& head, const Rest&... rest) {
  std::string out;
  if constexpr (std::is_same_v<T, std::string> || std::is_convertible_v<T, const char*>)
    out = head;
  else
    out = std::to_string(head);
  return out + "|" + cat(rest...);
}

bool any_uncertified(const BettiTable& B, int from, int to) {
  to = std::min<int>(to, static_cast<int>(B.column_complete.size()) - 1);
  for (int i = from; i <= to; ++i)
    if (!B.column_complete[i]) return true;
  return false;
}

ExtRational rat_cached(HarnessCache* cache, const std::shared_ptr<const QuotientRing>& R,
                       const std::string& label, int N, int D, ResolveEngine engine,
                       bool& truncated) {
  std::string key = cat("rat", label, N, D, static_cast<int>(engine));
  if (cache) {
    auto it = cache->rats.find(key);
    if (it != cache->rats.end()) {
      truncated = it->second.second;
      return it->second.first;
    }
  }
  bool tr = false;
  ExtRational value = rat_of_ring(R, N, D, &tr, engine);
  truncated = tr;
  if (cache) cache->rats.emplace(std::move(key), std::make_pair(value, tr));
  return value;
}

VeroneseMap cached_veronese(HarnessCache* cache, const std::shared_ptr<const QuotientRing>& R,
                            const std::string& label, int c, int ycap) {
  std::string key = cat("ver", label, c);
  if (cache) {
    auto it = cache->rings.find(key);
    if (it != cache->rings.end() &&
        (!it->second.truncated || it->second.complete_to >= ycap))
      return it->second;
  }
  VeroneseMap v = veronese_ring(R, c, ycap);
  if (v.truncated && v.complete_to < ycap)
    throw std::runtime_error("veronese presentation window too small; raise the cutoff");
  if (cache) cache->rings.insert_or_assign(std::move(key), v);
  return v;
}

struct PieceResolution {
  BettiTable table;
  bool gens_complete = true;
};

long long top_degree(const ModulePresentation& M) {
  long long t0 = 0;
  for (int a : M.shifted_degrees()) t0 = std::max<long long>(t0, a);
  return t0;
}

// rate_window >= 0 shrinks the resolve window to what detecting a rate above
// that scale needs: gens of column i past degree i*scale sit no deeper than
// N*scale + t0 + 1 with t0 the piece's actual top generator degree
PieceResolution resolved_piece(HarnessCache* cache, const std::string& ring_label,
                               const std::string& module_label, const ModulePresentation& M,
                               const VeroneseMap& v, int c, int d, int gen_cap, int N, int D,
                               long long rate_window = -1) {
  std::string key = cat("piece", ring_label, module_label, c, d, gen_cap, N, D, rate_window);
  if (cache) {
    auto it = cache->pieces.find(key);
    if (it != cache->pieces.end()) return {it->second.first, it->second.second};
  }
  VeroneseModule vm = veronese_module(M, v, d, gen_cap, D);
  int Dres = D;
  if (rate_window >= 0) {
    long long t0 = top_degree(vm.pres);
    Dres = static_cast<int>(std::min<long long>(D, rate_window * N + t0 + 1));
  }
  PieceResolution out;
  out.gens_complete = vm.gens_complete;
  out.table = resolve_minimal(vm.pres, N, Dres, ResolveEngine::windowed, false).second;
  if (cache) cache->pieces.emplace(std::move(key), std::make_pair(out.table, out.gens_complete));
  return out;
}

struct VeroneseRate {
  ExtRational rate = ExtRational::minus_infinity();
  bool truncated = false;
  bool sound = true;
};

VeroneseRate veronese_rate(HarnessCache* cache, const std::string& ring_label,
                           const std::string& module_label, const ModulePresentation& M,
                           const VeroneseMap& v, int c, int gen_cap, int N, int D,
                           long long rate_window) {
  VeroneseRate out;
  for (int d = 0; d < c; ++d) {
    PieceResolution pr =
        resolved_piece(cache, ring_label, module_label, M, v, c, d, gen_cap, N, D, rate_window);
    out.rate = ExtRational::max(out.rate, rate_truncated(pr.table));
    out.truncated = out.truncated || any_uncertified(pr.table, 1, N);
    out.sound = out.sound && pr.gens_complete;
  }
  return out;
}

struct BuiltModule {
  ModulePresentation pres;
  std::string label;
};

BuiltModule build_module(const CheckRequest& req, int relation_floor) {
  switch (req.mspec) {
    case ModuleSpec::given:
      if (!req.module) throw std::invalid_argument("check: module spec says given but none set");
      return {*req.module, req.module_label.empty() ? "M" : req.module_label};
    case ModuleSpec::residue_field:
      return {residue_field_module(req.ring), "K"};
    case ModuleSpec::power: {
      if (req.s < 1) throw std::invalid_argument("check: power module needs s >= 1");
      std::string l = "m^" + std::to_string(req.s) + "(" + std::to_string(req.s) + ")";
      return {power_ideal_module(req.ring, req.s, relation_floor), std::move(l)};
    }
    case ModuleSpec::ring_twist: {
      std::string l = "R(" + std::to_string(-req.twist_j) + ")";
      return {twisted(ring_as_module(req.ring), -req.twist_j), std::move(l)};
    }
    case ModuleSpec::none: break;
  }
  throw std::invalid_argument("check: inequality " + req.inequality + " needs a module");
}

long long window_scale(const ExtRational& rhs) {
  if (rhs.is_minus_infinity()) return 1;
  return std::max(1LL, rhs.ceil_ll());
}

void finish(BoundReport& r, bool lhs_sound) {
  if (r.lhs.is_minus_infinity()) {
    r.verdict = Verdict::satisfied;
    return;
  }
  if (!r.rhs.is_minus_infinity()) r.slack = r.rhs.value() - r.lhs.value();
  if (r.lhs <= r.rhs) {
    r.verdict = Verdict::satisfied;
    return;
  }
  r.verdict = (r.rhs_truncated || !lhs_sound) ? Verdict::inconclusive : Verdict::violated;
}

BoundReport check_impl(const CheckRequest& req, HarnessCache* cache) {
  if (!req.ring) throw std::invalid_argument("check: no ring");
  if (req.c < 1) throw std::invalid_argument("check: c must be positive");
  const auto& names = inequality_names();
  if (std::find(names.begin(), names.end(), req.inequality) == names.end())
    throw std::invalid_argument("check: unknown inequality " + req.inequality);

  const auto& R = req.ring;
  const std::string& name = req.inequality;
  int N = req.hom_cutoff;
  if (N < 1) throw std::invalid_argument("check: cutoff-n must be positive");

  BoundReport r;
  r.inequality = name;
  r.ring_label = req.ring_label;
  r.c = req.c;
  r.hom_cutoff = N;
  bool lhs_sound = true;

  int nrat = std::max(N, 3);
  int drat = 3 * (nrat + 1);

  if (name == "mainthm" || name == "aramova" || name == "mainthm-power") {
    bool rat_tr = false;
    ExtRational ratR =
        rat_cached(cache, R, req.ring_label, nrat, drat, ResolveEngine::groebner, rat_tr);

    CheckRequest mreq = req;
    if (name == "mainthm-power") mreq.mspec = ModuleSpec::power;
    int floor1 = 3 * N + 2 * std::max(0, req.s) + 2;
    BuiltModule bm = build_module(mreq, floor1);
    r.module_label = bm.label;
    if (name == "mainthm-power") r.s = req.s;
    ModulePresentation mmin = minimalize_presentation(bm.pres);
    long long t0 = top_degree(mmin);

    // slope of the syzygy strands the bound allows, without the generator
    // offset term; the resolve window follows the slope, the offset is
    // carried by each piece's own generator degrees
    ExtRational strand = ExtRational::minus_infinity();
    if (name == "mainthm-power") {
      r.rhs = ratR.is_minus_infinity() ? ratR : ExtRational(Rational(backelin_rhs(ratR.value(), req.c)));
      r.rhs_truncated = rat_tr;
      strand = r.rhs;
    } else {
      BettiTable BR = resolve_minimal(bm.pres, N, default_degree_cutoff(N, bm.pres),
                                      ResolveEngine::groebner, false)
                          .second;
      ExtRational rateRM = rate_truncated(BR);
      r.rhs_truncated = rat_tr || any_uncertified(BR, 1, N);
      if (name == "aramova") {
        for (int a : mmin.shifted_degrees())
          if (a != 0)
            throw std::invalid_argument("aramova needs a module generated in degree zero");
        if (!ratR.is_minus_infinity() && Rational(req.c) < ratR.value())
          throw std::invalid_argument("aramova needs c >= rat of the ring");
        long long core = rateRM.is_minus_infinity() ? 1 : rateRM.div_pos(req.c).ceil_ll();
        r.rhs = ExtRational(Rational(std::max(1LL, core)));
        strand = r.rhs;
      } else {
        r.rhs = mainthm_rhs(rateRM, ratR, t0, req.c);
        ExtRational b = ExtRational::max(rateRM, ratR);
        if (!b.is_minus_infinity())
          strand = ExtRational(Rational(b.div_pos(req.c).ceil_ll()));
      }
    }

    int gcap = default_generation_cap(bm.pres, req.c);
    long long w = window_scale(strand);
    int D = req.degree_cutoff >= 0 ? req.degree_cutoff
                                   : static_cast<int>(w) * N + gcap + 1;
    r.degree_cutoff = D;
    int probe = D * req.c + req.c + std::max(0, req.s) + 1;
    ModulePresentation probed = bm.pres;
    if (mreq.mspec == ModuleSpec::power && floor1 < probe)
      probed = power_ideal_module(R, req.s, probe);
    VeroneseMap v = cached_veronese(cache, R, req.ring_label, req.c, D + 1);
    VeroneseRate L =
        veronese_rate(cache, req.ring_label, bm.label, probed, v, req.c, gcap, N, D, w);
    r.lhs = L.rate;
    r.lhs_truncated = L.truncated;
    lhs_sound = L.sound;
  } else if (name == "maxi") {
    if (req.s < 1) throw std::invalid_argument("maxi needs s >= 1");
    r.s = req.s;
    int D = req.degree_cutoff >= 0 ? req.degree_cutoff : 3 * N;
    r.degree_cutoff = D;
    ModulePresentation Ms = power_ideal_module(R, req.s, D);
    ModulePresentation M1 = power_ideal_module(R, 1, D);
    BettiTable Bs = resolve_minimal(Ms, N, D, ResolveEngine::groebner, false).second;
    BettiTable B1 = resolve_minimal(M1, N, D, ResolveEngine::groebner, false).second;
    std::vector<ExtRational> ts = t_values(Bs);
    std::vector<ExtRational> t1 = t_values(B1);
    r.module_label = "m^" + std::to_string(req.s) + "(" + std::to_string(req.s) + ")";
    r.rhs = ExtRational(0);
    r.rhs_truncated = any_uncertified(B1, 0, N);
    r.lhs_truncated = any_uncertified(Bs, 0, N);
    bool gap = false;
    ExtRational lhs = ExtRational::minus_infinity();
    for (int i = 0; i <= N; ++i) {
      if (ts[i].is_minus_infinity()) continue;
      if (t1[i].is_minus_infinity()) {
        gap = true;
        lhs = ExtRational::max(lhs, ts[i]);
        continue;
      }
      lhs = ExtRational::max(lhs, ts[i].sub(t1[i].value()));
    }
    if (gap) lhs = ExtRational::max(lhs, ExtRational(1));
    r.lhs = lhs;
  } else if (name == "versyz") {
    if (req.d < 0 || req.d >= req.c) throw std::invalid_argument("versyz needs 0 <= d < c");
    r.d = req.d;
    r.module_label = "R^(" + std::to_string(req.c) + "," + std::to_string(req.d) + ")";
    int dm = 3 * N;
    ModulePresentation M1 = power_ideal_module(R, 1, dm);
    BettiTable Bm = resolve_minimal(M1, N, dm, ResolveEngine::groebner, false).second;
    std::vector<ExtRational> tm = t_values(Bm);
    r.rhs = ExtRational(Rational(versyz_rhs(N, req.c, tm)));
    r.rhs_truncated = any_uncertified(Bm, 0, N);
    int D = req.degree_cutoff >= 0
                ? req.degree_cutoff
                : static_cast<int>(std::max<long long>(r.rhs.ceil_ll() + 2, N + 1));
    r.degree_cutoff = D;
    ModulePresentation M = ring_as_module(R);
    int gcap = default_generation_cap(M, req.c);
    VeroneseMap v = cached_veronese(cache, R, req.ring_label, req.c, D + 1);
    PieceResolution pr =
        resolved_piece(cache, req.ring_label, "R", M, v, req.c, req.d, gcap, N, D);
    r.lhs = t_values(pr.table)[N];
    r.lhs_truncated = any_uncertified(pr.table, 1, N);
    lhs_sound = pr.gens_complete;
  } else if (name == "backelin") {
    bool rat_tr = false;
    ExtRational ratR =
        rat_cached(cache, R, req.ring_label, nrat, drat, ResolveEngine::groebner, rat_tr);
    r.rhs = ratR.is_minus_infinity()
                ? ratR
                : ExtRational(Rational(backelin_rhs(ratR.value(), req.c)));
    r.rhs_truncated = rat_tr;
    long long w = window_scale(r.rhs);
    int D = req.degree_cutoff >= 0 ? req.degree_cutoff
                                   : static_cast<int>(w) * (N + 1) + 1;
    r.degree_cutoff = D;
    VeroneseMap v = cached_veronese(cache, R, req.ring_label, req.c, D + 1);
    std::string vlabel = req.ring_label + "^(" + std::to_string(req.c) + ")";
    bool lhs_tr = false;
    r.lhs = rat_cached(cache, v.target, vlabel, N, D, ResolveEngine::windowed, lhs_tr);
    r.lhs_truncated = lhs_tr;
  } else if (name == "reg-zero") {
    if (req.d < 0 || req.d >= req.c) throw std::invalid_argument("reg-zero needs 0 <= d < c");
    r.d = req.d;
    r.module_label = "R^(" + std::to_string(req.c) + "," + std::to_string(req.d) + ")";
    bool rat_tr = false;
    ExtRational ratR =
        rat_cached(cache, R, req.ring_label, nrat, drat, ResolveEngine::groebner, rat_tr);
    if (!ratR.is_minus_infinity() && Rational(req.c) < ratR.value())
      throw std::invalid_argument("reg-zero needs c >= rat of the ring");
    r.rhs = ExtRational(0);
    r.rhs_truncated = rat_tr;
    int D = req.degree_cutoff >= 0 ? req.degree_cutoff : N + 2;
    r.degree_cutoff = D;
    ModulePresentation M = ring_as_module(R);
    int gcap = default_generation_cap(M, req.c);
    VeroneseMap v = cached_veronese(cache, R, req.ring_label, req.c, D + 1);
    PieceResolution pr =
        resolved_piece(cache, req.ring_label, "R", M, v, req.c, req.d, gcap, N, D);
    r.lhs = regularity_truncated(pr.table);
    r.lhs_truncated = any_uncertified(pr.table, 1, N);
    lhs_sound = pr.gens_complete;
  } else { // ratineq
    int floor1 = 3 * N + 2 * std::max(0, req.s) + 2;
    BuiltModule bm = build_module(req, floor1);
    r.module_label = bm.label;
    int D = req.degree_cutoff >= 0 ? req.degree_cutoff : default_degree_cutoff(N, bm.pres);
    r.degree_cutoff = D;
    BettiTable BR = resolve_minimal(bm.pres, N, D, ResolveEngine::groebner, false).second;
    r.lhs = rate_truncated(BR);
    r.lhs_truncated = any_uncertified(BR, 1, N);
    ModulePresentation mmin = minimalize_presentation(bm.pres);
    long long t0 = top_degree(mmin);
    ExtRational rate_s_m = rate_truncated(resolve_over_cover(bm.pres));
    ExtRational rate_s_r = rate_truncated(resolve_over_cover(ring_as_module(R)));
    r.rhs = surjection_rate_rhs(rate_s_m, rate_s_r, t0);
    r.rhs_truncated = !bm.pres.relations_complete;
  }

  if (req.corrupt_rhs && !r.rhs.is_minus_infinity()) r.rhs = r.rhs.sub(Rational(1));
  finish(r, lhs_sound);
  return r;
}

} // namespace

BoundReport check_inequality(const CheckRequest& req) { return check_impl(req, nullptr); }

std::vector<std::pair<std::string, std::shared_ptr<const QuotientRing>>> corpus_rings(
    coeff_t p) {
  PrimeField F(p);
  auto mono = [](const PolyRing& S, std::vector<int> e) {
    return poly_monomial(S, 1, Monomial(std::move(e)));
  };
  std::vector<std::pair<std::string, std::shared_ptr<const QuotientRing>>> out;

  {
    PolyRing S(F, {"x"});
    out.emplace_back("K[x]/(x^3)", make_ring(S, {mono(S, {3})}));
  }
  {
    PolyRing S(F, {"x"});
    out.emplace_back("K[x]/(x^4)", make_ring(S, {mono(S, {4})}));
  }
  {
    PolyRing S(F, {"x", "y"});
    out.emplace_back("K[x,y]/(x^2)", make_ring(S, {mono(S, {2, 0})}));
  }
  {
    PolyRing S(F, {"x", "y"});
    out.emplace_back("K[x,y]/(x^3)", make_ring(S, {mono(S, {3, 0})}));
  }
  {
    PolyRing S(F, {"x", "y"});
    out.emplace_back("K[x,y]/(x^2,xy)", make_ring(S, {mono(S, {2, 0}), mono(S, {1, 1})}));
  }
  {
    PolyRing S(F, {"x", "y"});
    out.emplace_back("K[x,y]/(x^2,y^3)", make_ring(S, {mono(S, {2, 0}), mono(S, {0, 3})}));
  }
  {
    PolyRing S(F, {"x", "y", "z"});
    Polynomial f = Polynomial::make(
        S, {Term{1, Monomial({2, 0, 0})}, Term{1, Monomial({0, 1, 1})}});
    out.emplace_back("K[x,y,z]/(x^2+yz)", make_ring(S, {std::move(f)}));
  }
  {
    PolyRing S(F, {"x", "y"});
    out.emplace_back("K[x,y]/(xy)", make_ring(S, {mono(S, {1, 1})}));
  }
  return out;
}

std::pair<std::vector<BoundReport>, CorpusSummary> corpus_run(
    const std::vector<CheckRequest>& cases) {
  HarnessCache cache;
  std::vector<BoundReport> reports;
  CorpusSummary sum;
  reports.reserve(cases.size());
  for (const auto& req : cases) {
    BoundReport r = check_impl(req, &cache);
    switch (r.verdict) {
      case Verdict::satisfied: ++sum.satisfied; break;
      case Verdict::violated: ++sum.violated; break;
      case Verdict::inconclusive: ++sum.inconclusive; break;
    }
    sum.any_truncation = sum.any_truncation || r.lhs_truncated || r.rhs_truncated;
    reports.push_back(std::move(r));
  }
  return {std::move(reports), sum};
}

std::vector<CheckRequest> corpus_cases(coeff_t p, bool corrupt) {
  auto rings = corpus_rings(p);
  std::vector<CheckRequest> cases;

  auto base = [&](int idx, const char* ineq) {
    CheckRequest q;
    q.inequality = ineq;
    q.ring = rings[idx].second;
    q.ring_label = rings[idx].first;
    q.corrupt_rhs = corrupt;
    return q;
  };

  // c just above the Backelin rate of each ring, for the threshold checks
  const int regzero_c[8] = {2, 3, 2, 2, 2, 2, 2, 2};

  for (int i = 0; i < 8; ++i) {
    bool big = rings[i].second->ring().nvars() >= 3;

    for (int s : {2, 3}) {
      CheckRequest q = base(i, "maxi");
      q.s = s;
      q.hom_cutoff = 4;
      cases.push_back(std::move(q));
    }
    {
      CheckRequest q = base(i, "mainthm-power");
      q.s = 1;
      q.c = 2;
      q.hom_cutoff = big ? 3 : 4;
      cases.push_back(std::move(q));
    }
    {
      CheckRequest q = base(i, "mainthm");
      q.mspec = ModuleSpec::ring_twist;
      q.twist_j = 2;
      q.c = 2;
      q.hom_cutoff = 3;
      cases.push_back(std::move(q));
    }
    {
      CheckRequest q = base(i, "aramova");
      q.mspec = ModuleSpec::residue_field;
      q.c = (i == 1) ? 3 : 2; // c stays at or above the ring's rate
      q.hom_cutoff = big ? 3 : 4;
      cases.push_back(std::move(q));
    }
    {
      CheckRequest q = base(i, "backelin");
      q.c = 2;
      q.hom_cutoff = big ? 2 : 3;
      cases.push_back(std::move(q));
    }
    {
      CheckRequest q = base(i, "versyz");
      q.c = 2;
      q.d = 1;
      q.hom_cutoff = big ? 2 : 3;
      cases.push_back(std::move(q));
    }
    for (int d = 0; d < regzero_c[i]; ++d) {
      CheckRequest q = base(i, "reg-zero");
      q.c = regzero_c[i];
      q.d = d;
      q.hom_cutoff = 3;
      cases.push_back(std::move(q));
    }
    {
      CheckRequest q = base(i, "ratineq");
      q.mspec = ModuleSpec::residue_field;
      q.hom_cutoff = 4;
      cases.push_back(std::move(q));
    }
  }
  return cases;
}

int corpus_exit_code(const CorpusSummary& s, bool strict) {
  if (s.violated > 0) return 2;
  if (strict && (s.inconclusive > 0 || s.any_truncation)) return 3;
  return 0;
}

} // namespace gralg
