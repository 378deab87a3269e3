#ifndef GRALG_IO_HPP
#define GRALG_IO_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gralg/presentation.hpp"

namespace gralg {

// parse failure carrying the byte offset into the offending text
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  size_t offset() const { return offset_; }

private:
  size_t offset_;
};

// expr := term (('+'|'-') term)*
// term := coeff? ('*'? var ('^' nat)?)*
// Whitespace is insignificant, juxtaposition multiplies, coefficients are
// folded mod p while scanning. Errors carry the byte offset.
Polynomial parse_polynomial(const PolyRing& R, const std::string& text);

enum class ModuleKind { residue_field, max_ideal_power, coker, veronese_piece };

const char* to_string(ModuleKind k);

// One session file: a ring, the module under study, cutoff overrides.
// Expression strings are kept verbatim so serialization round-trips.
struct SessionSpec {
  long long characteristic = 32003;
  std::vector<std::string> vars;
  std::vector<std::string> ideal;
  ModuleKind kind = ModuleKind::residue_field;
  int s = 1; // max-ideal-power
  int c = 1; // veronese-piece
  int d = 0; // veronese-piece
  std::vector<std::vector<std::string>> matrix; // coker: one row per generator
  std::vector<int> shifts;                      // coker: generator shifts
  int twist = 0;
  int cutoff_n = -1; // -1 leaves the command default in charge
  int cutoff_d = -1;
  int cutoff_g = -1;

  bool operator==(const SessionSpec&) const = default;
};

// key = value lines, # comments; keys: char, vars, ideal, module.kind,
// module.s, module.c, module.d, module.matrix, module.shifts, twist,
// cutoffs.n, cutoffs.d, cutoffs.g. Keys of module parameters the kind does
// not use are rejected, so parse(serialize(spec)) == spec for parsed specs.
SessionSpec parse_session(const std::string& text);
SessionSpec load_session(const std::string& path);
std::string serialize_session(const SessionSpec& spec);

// display name, K[vars]/(ideal) style
std::string ring_label(const SessionSpec& spec);

// parses and validates the ideal (homogeneous, nonconstant) and builds S/I
std::shared_ptr<const QuotientRing> build_ring(const SessionSpec& spec);

struct SessionModule {
  ModulePresentation pres; // pres.ring is the veronese target for pieces
  std::string label;
  bool gens_complete = true; // veronese pieces: generator hunt saw every piece
};

// degree window a resolve of this module defaults to: 3N plus (a bound on)
// the top generator degree after the twist
int session_window(const SessionSpec& spec,
                   const std::shared_ptr<const QuotientRing>& R, int N);

// builds the module the spec describes, with relations known through the
// twisted degree `window` wherever the construction is windowed
SessionModule build_session_module(const SessionSpec& spec,
                                   const std::shared_ptr<const QuotientRing>& R,
                                   int window);

} // namespace gralg

#endif
