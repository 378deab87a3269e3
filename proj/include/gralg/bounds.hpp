#ifndef GRALG_BOUNDS_HPP
#define GRALG_BOUNDS_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gralg/presentation.hpp"
#include "gralg/rational.hpp"

namespace gralg {

// Degree bound transported through an acyclic complex: max of t[i][n - i]
// over 0 <= i <= n. Missing or minus-infinity entries contribute nothing.
ExtRational complex_degree_bound(const std::vector<std::vector<ExtRational>>& t, int n);

// Max over compositions a_0 + ... + a_u = n into positive parts of
// sum_j ceil(tm[a_j] / c), where tm[a] is the top generator degree of the
// a-th syzygy module of the maximal ideal. Throws if a needed tm[a] is
// minus-infinity. versyz_rhs(0, c, tm) = 0.
long long versyz_rhs(int n, int c, const std::vector<ExtRational>& tm);

// ceil(max{rate_m, rat_r} / c) + max{0, ceil(t0 / c)}; minus-infinity when
// both rates are.
ExtRational mainthm_rhs(const ExtRational& rate_m, const ExtRational& rat_r, long long t0,
                        int c);

long long backelin_rhs(const Rational& rat_r, int c);

// max{rate_s_m, rate_s_r} + max{0, t0}, for a surjection from a cover ring.
ExtRational surjection_rate_rhs(const ExtRational& rate_s_m, const ExtRational& rate_s_r,
                                long long t0);

enum class Verdict { satisfied, violated, inconclusive };

const char* to_string(Verdict v);

// A violated verdict is sound even under truncation: windowed left-hand
// sides only ever underestimate, so exceeding the right-hand side is final
// unless the right-hand side itself rests on truncated input.
struct BoundReport {
  std::string inequality;
  std::string ring_label;
  std::string module_label;
  int c = 1;
  int s = 0;
  int d = -1; // -1 when the check is not about a single piece
  int hom_cutoff = 0;
  int degree_cutoff = 0; // window used for the left-hand side
  ExtRational lhs = ExtRational::minus_infinity();
  ExtRational rhs = ExtRational::minus_infinity();
  bool lhs_truncated = false; // lhs is a window value and could still grow
  bool rhs_truncated = false; // rhs inputs were windowed and could still grow
  Verdict verdict = Verdict::satisfied;
  std::optional<Rational> slack; // rhs - lhs when both are finite
};

// How the module under test is obtained. Checks that take no module ignore
// this; `given` uses the presentation stored in the request.
enum class ModuleSpec { none, given, residue_field, power, ring_twist };

struct CheckRequest {
  std::string inequality; // mainthm | mainthm-power | maxi | versyz |
                          // backelin | aramova | reg-zero | ratineq
  std::shared_ptr<const QuotientRing> ring;
  std::string ring_label;
  ModuleSpec mspec = ModuleSpec::none;
  std::optional<ModulePresentation> module; // for ModuleSpec::given
  std::string module_label;
  int twist_j = 0; // ring_twist: the module R(-j)
  int c = 1;
  int s = 1;
  int d = 0;
  int hom_cutoff = 4;
  int degree_cutoff = -1; // -1: per-inequality window policy
  bool corrupt_rhs = false; // self-test: report rhs - 1 instead
};

const std::vector<std::string>& inequality_names();

BoundReport check_inequality(const CheckRequest& req);

// The eight reference rings the suite exercises, as (label, ring) pairs.
std::vector<std::pair<std::string, std::shared_ptr<const QuotientRing>>> corpus_rings(
    coeff_t p = 32003);

struct CorpusSummary {
  int satisfied = 0;
  int violated = 0;
  int inconclusive = 0;
  bool any_truncation = false;
};

// Runs the cases in order, reusing Veronese presentations and resolutions
// across cases. Deterministic: same input, same reports.
std::pair<std::vector<BoundReport>, CorpusSummary> corpus_run(
    const std::vector<CheckRequest>& cases);

// The default sweep over corpus_rings(); corrupt flips every case into the
// rhs - 1 self-test.
std::vector<CheckRequest> corpus_cases(coeff_t p = 32003, bool corrupt = false);

// 0 all satisfied; 2 some violation; 3 inconclusive results or truncation
// flags when strict is set.
int corpus_exit_code(const CorpusSummary& s, bool strict);

} // namespace gralg

#endif
