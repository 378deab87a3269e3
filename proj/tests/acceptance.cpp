// End-to-end acceptance checks: one pass/fail line per criterion, nonzero
// exit when anything fails. Values are pinned from hand-checked small cases;
// sweeps run over the reference rings from corpus_rings().
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gralg/bounds.hpp"
#include "gralg/cli.hpp"
#include "gralg/io.hpp"
#include "gralg/presentation.hpp"
#include "gralg/resolution.hpp"
#include "gralg/veronese.hpp"

using namespace gralg;

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

std::string str(const ExtRational& x) { return to_string(x); }

bool fail(std::string& note, std::string text) {
  note = std::move(text);
  return false;
}

std::shared_ptr<const QuotientRing> hypersurface(int d) {
  PolyRing S(PrimeField(32003), {"x"});
  return make_ring(S, {parse_polynomial(S, "x^" + std::to_string(d))});
}

// ceil(rat) per reference ring, from a window wide enough for these rings
long long rat_ceiling(const std::shared_ptr<const QuotientRing>& R) {
  ExtRational rat = rat_of_ring(R, 3, 12);
  return rat.is_minus_infinity() ? 1 : rat.value().ceil_ll();
}

bool koszul_over_polynomial_rings(std::string& note) {
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::string> vars;
    for (int i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i));
    auto R = make_ring(PolyRing(PrimeField(32003), vars), {});
    BettiTable B =
        resolve_minimal(residue_field_module(R), n, n + 2, ResolveEngine::groebner, false)
            .second;
    std::vector<ExtRational> t = t_values(B);
    for (int i = 0; i <= n; ++i) {
      if (!B.column_complete[i])
        return fail(note, "n=" + std::to_string(n) + ": column " + std::to_string(i) +
                              " not certified");
      std::map<int, int> want{{i, static_cast<int>(binomial(n, i))}};
      if (B.beta[i] != want)
        return fail(note, "n=" + std::to_string(n) + ": column " + std::to_string(i) +
                              " is not a single entry of " + std::to_string(binomial(n, i)) +
                              " in degree " + std::to_string(i));
      if (t[i] != ExtRational(i))
        return fail(note, "n=" + std::to_string(n) + ": t_" + std::to_string(i) + " = " +
                              str(t[i]));
    }
  }
  return true;
}

bool hypersurface_syzygy_degrees(std::string& note) {
  for (int d = 2; d <= 4; ++d) {
    auto R = hypersurface(d);
    BettiTable B =
        resolve_minimal(residue_field_module(R), 5, 2 * d + 2, ResolveEngine::groebner, false)
            .second;
    std::vector<ExtRational> t = t_values(B);
    const int want[6] = {0, 1, d, d + 1, 2 * d, 2 * d + 1};
    for (int i = 0; i <= 5; ++i) {
      if (!B.column_complete[i])
        return fail(note, "d=" + std::to_string(d) + ": column " + std::to_string(i) +
                              " not certified");
      if (t[i] != ExtRational(want[i]))
        return fail(note, "d=" + std::to_string(d) + ": t_" + std::to_string(i) + " = " +
                              str(t[i]) + ", expected " + std::to_string(want[i]));
    }
    bool tr = false;
    ExtRational rat = rat_of_ring(R, 5, 3 * d + 2, &tr);
    if (tr) return fail(note, "d=" + std::to_string(d) + ": rat window not certified");
    if (rat != ExtRational(d - 1))
      return fail(note, "d=" + std::to_string(d) + ": rat = " + str(rat) + ", expected " +
                            std::to_string(d - 1));
  }
  return true;
}

bool second_syzygy_matches_ideal(std::string& note) {
  for (const auto& [label, R] : corpus_rings()) {
    BettiTable B =
        resolve_minimal(residue_field_module(R), 2, 8, ResolveEngine::groebner, false).second;
    if (!B.column_complete[2]) return fail(note, label + ": t_2 not certified");
    ExtRational t2 = t_values(B)[2];
    ExtRational m = max_ideal_degree(*R);
    if (t2 != m)
      return fail(note, label + ": t_2 = " + str(t2) + ", top ideal degree " + str(m));
    ExtRational rat = rat_of_ring(R, 3, 12);
    if (rat < ExtRational(m.value() - Rational(1)))
      return fail(note, label + ": rat = " + str(rat) + " below " + str(m) + " - 1");
  }
  return true;
}

bool veronese_presentations_and_hilbert(std::string& note) {
  auto P = make_ring(PolyRing(PrimeField(32003), {"x", "y"}), {});
  for (auto [c, want] : {std::pair<int, int>{2, 1}, {3, 3}}) {
    VeroneseMap v = veronese_ring(P, c, 8);
    int quadrics = 0;
    for (const Polynomial& f : v.target->ideal_gens())
      if (homogeneous_degree(v.target->ring(), f) == 2) ++quadrics;
    if (quadrics != want)
      return fail(note, "K[x,y], c=" + std::to_string(c) + ": " + std::to_string(quadrics) +
                            " quadrics, expected " + std::to_string(want));
  }
  for (const auto& [label, R] : corpus_rings())
    for (int c = 1; c <= 3; ++c) {
      VeroneseMap v = veronese_ring(R, c, 10);
      if (v.truncated && v.complete_to < 8)
        return fail(note, label + ", c=" + std::to_string(c) + ": presentation window");
      for (int i = 0; i <= 8; ++i)
        if (v.target->hilbert(i) != R->hilbert(i * c))
          return fail(note, label + ", c=" + std::to_string(c) + ": HF(" + std::to_string(i) +
                                ") = " + std::to_string(v.target->hilbert(i)) + " vs " +
                                std::to_string(R->hilbert(i * c)));
    }
  return true;
}

bool run_all_satisfied(const std::vector<CheckRequest>& cases, std::string& note) {
  auto [reports, sum] = corpus_run(cases);
  for (const BoundReport& r : reports) {
    if (r.verdict == Verdict::satisfied) continue;
    return fail(note, r.inequality + " on " + r.ring_label +
                          (r.module_label.empty() ? "" : ", module " + r.module_label) +
                          ", c=" + std::to_string(r.c) + ", s=" + std::to_string(r.s) +
                          ": " + to_string(r.verdict) + " (lhs " + str(r.lhs) + ", rhs " +
                          str(r.rhs) + ")");
  }
  return sum.violated == 0 && sum.inconclusive == 0;
}

bool power_modules_stay_below_the_ideal(std::string& note) {
  std::vector<CheckRequest> cases;
  for (const auto& [label, R] : corpus_rings())
    for (int s = 1; s <= 3; ++s) {
      CheckRequest q;
      q.inequality = "maxi";
      q.ring = R;
      q.ring_label = label;
      q.s = s;
      q.hom_cutoff = 4;
      cases.push_back(q);
    }
  return run_all_satisfied(cases, note);
}

bool piece_syzygies_under_composition_bound(std::string& note) {
  std::vector<CheckRequest> cases;
  for (const auto& [label, R] : corpus_rings())
    for (int c = 1; c <= 3; ++c)
      for (int d = 0; d < c; ++d)
        for (int n = 1; n <= 4; ++n) {
          CheckRequest q;
          q.inequality = "versyz";
          q.ring = R;
          q.ring_label = label;
          q.c = c;
          q.d = d;
          q.hom_cutoff = n;
          cases.push_back(q);
        }
  return run_all_satisfied(cases, note);
}

bool composite_rate_bounds(std::string& note) {
  std::vector<CheckRequest> cases;
  for (const auto& [label, R] : corpus_rings()) {
    for (int c = 2; c <= 3; ++c) {
      CheckRequest base;
      base.ring = R;
      base.ring_label = label;
      base.c = c;
      base.hom_cutoff = 4;

      CheckRequest q = base;
      q.inequality = "mainthm";
      q.mspec = ModuleSpec::residue_field;
      cases.push_back(q);
      for (int s = 1; s <= 2; ++s) {
        q = base;
        q.inequality = "mainthm";
        q.mspec = ModuleSpec::power;
        q.s = s;
        cases.push_back(q);
      }
      q = base;
      q.inequality = "mainthm";
      q.mspec = ModuleSpec::ring_twist;
      q.twist_j = 2;
      cases.push_back(q);
      for (int s = 1; s <= 2; ++s) {
        q = base;
        q.inequality = "mainthm-power";
        q.s = s;
        cases.push_back(q);
      }
    }
    CheckRequest a;
    a.inequality = "aramova";
    a.ring = R;
    a.ring_label = label;
    a.mspec = ModuleSpec::residue_field;
    a.c = static_cast<int>(std::max(2LL, rat_ceiling(R)));
    a.hom_cutoff = 4;
    cases.push_back(a);
  }
  return run_all_satisfied(cases, note);
}

bool rate_collapse_and_piece_regularity(std::string& note) {
  CheckRequest q;
  q.inequality = "backelin";
  auto rings = corpus_rings();
  q.ring = rings[1].second; // K[x]/(x^4)
  q.ring_label = rings[1].first;
  q.c = 3;
  q.hom_cutoff = 5;
  BoundReport r = check_inequality(q);
  if (r.lhs != ExtRational(1) || r.rhs != ExtRational(1) || !r.slack ||
      *r.slack != Rational(0) || r.verdict != Verdict::satisfied)
    return fail(note, "level-3 rate of K[x]/(x^4): lhs " + str(r.lhs) + ", rhs " + str(r.rhs));

  std::vector<CheckRequest> cases;
  for (const auto& [label, R] : rings) {
    long long lo = std::max(1LL, rat_ceiling(R));
    for (int c = static_cast<int>(lo); c <= 4; ++c)
      for (int d = 0; d < c; ++d) {
        CheckRequest z;
        z.inequality = "reg-zero";
        z.ring = R;
        z.ring_label = label;
        z.c = c;
        z.d = d;
        z.hom_cutoff = 3;
        cases.push_back(z);
      }
  }
  return run_all_satisfied(cases, note);
}

bool corruption_and_strictness_flagged(std::string& note) {
  auto [bad, badsum] = corpus_run(corpus_cases(32003, true));
  if (badsum.violated == 0) return fail(note, "corrupted sweep reported no violation");
  if (corpus_exit_code(badsum, false) != 2)
    return fail(note, "corrupted sweep did not exit 2");

  auto [good, goodsum] = corpus_run(corpus_cases(32003, false));
  if (goodsum.violated != 0) return fail(note, "clean sweep reported a violation");
  if (corpus_exit_code(goodsum, false) != 0) return fail(note, "clean sweep did not exit 0");
  if (!goodsum.any_truncation)
    return fail(note, "clean sweep carries no window flags to escalate");
  if (corpus_exit_code(goodsum, true) != 3)
    return fail(note, "strict mode did not escalate window flags to exit 3");
  return true;
}

bool machine_reports_reproducible(std::string& note) {
  std::ostringstream out1, err1, out2, err2;
  int c1 = run_command({"corpus", "--format", "json"}, out1, err1);
  int c2 = run_command({"corpus", "--format", "json"}, out2, err2);
  if (c1 != 0 || c2 != 0) return fail(note, "corpus sweep failed");
  if (out1.str().empty()) return fail(note, "empty report");
  if (out1.str() != out2.str()) return fail(note, "reports differ between runs");
  return true;
}

struct Criterion {
  const char* name;
  double limit_s; // 0: no per-criterion limit
  bool (*check)(std::string&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"koszul resolutions over polynomial rings", 5.0, koszul_over_polynomial_rings},
      {"hypersurface syzygy degrees and slope", 5.0, hypersurface_syzygy_degrees},
      {"second syzygy degree matches the ideal", 60.0, second_syzygy_matches_ideal},
      {"veronese presentations and hilbert functions", 60.0,
       veronese_presentations_and_hilbert},
      {"ideal powers resolve no slower than the ideal", 0.0,
       power_modules_stay_below_the_ideal},
      {"piece syzygies under the composition bound", 0.0,
       piece_syzygies_under_composition_bound},
      {"composite rate bounds across the module sweep", 0.0, composite_rate_bounds},
      {"rate collapse and piece regularity", 0.0, rate_collapse_and_piece_regularity},
      {"corruption and strictness are flagged", 0.0, corruption_and_strictness_flagged},
      {"machine reports are reproducible", 0.0, machine_reports_reproducible},
  };

  int failures = 0;
  double total = 0.0;
  int index = 0;
  for (const Criterion& cr : criteria) {
    ++index;
    std::string note;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = cr.check(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    total += elapsed;
    if (ok && cr.limit_s > 0 && elapsed > cr.limit_s) {
      ok = false;
      note = "exceeded the " + std::to_string(static_cast<int>(cr.limit_s)) + "s limit";
    }
    std::printf("[%2d] %s  %-46s (%.2fs)\n", index, ok ? "PASS" : "FAIL", cr.name, elapsed);
    if (!ok) {
      ++failures;
      if (!note.empty()) std::printf("     %s\n", note.c_str());
    }
  }
  bool in_budget = total < 600.0;
  std::printf("acceptance: %d/10 passed in %.1fs%s\n", 10 - failures, total,
              in_budget ? "" : " (over the 600s budget)");
  return failures + (in_budget ? 0 : 1);
}
