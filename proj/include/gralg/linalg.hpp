#ifndef GRALG_LINALG_HPP
#define GRALG_LINALG_HPP

#include <cstdint>
#include <vector>

#include "gralg/field.hpp"

namespace gralg {

// Incremental row space over F_p with membership queries. Rows are kept in
// echelon form with unit pivots, pivot columns strictly increasing per row
// insertion order is not preserved.
class RowSpace {
public:
  RowSpace(const PrimeField& K, int ncols) : K_(&K), ncols_(ncols) {}

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // reduce v against the stored rows in place
  void reduce(std::vector<coeff_t>& v) const;

  // reduce, then insert the remainder; true if the rank grew
  bool insert(std::vector<coeff_t> v);

  bool contains(std::vector<coeff_t> v) const;

private:
  const PrimeField* K_;
  int ncols_;
  std::vector<std::vector<std::uint32_t>> rows_; // canonical residues, p < 2^31
  std::vector<int> pivots_;
};

// Kernel of the matrix (as a map on column vectors): returns a basis of
// {x : A x = 0} in reduced canonical form, one vector per free column,
// ordered by ascending free column index.
std::vector<std::vector<coeff_t>> nullspace(const PrimeField& K,
                                            std::vector<std::vector<coeff_t>> A,
                                            int ncols);

} // namespace gralg

#endif
