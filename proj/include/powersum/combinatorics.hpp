#pragma once

#include <span>
#include <vector>

#include "powersum/number.hpp"

namespace powersum {

// Largest k any table-building operation accepts. Defaults to 1000 and can
// be raised up to kHardCeiling.
inline constexpr unsigned kDefaultCeiling = 1000;
inline constexpr unsigned kHardCeiling = 10000;

unsigned resource_ceiling();
/// Throws PreconditionError for values above kHardCeiling.
void set_resource_ceiling(unsigned ceiling);
/// Throws CeilingError when k exceeds the current ceiling.
void enforce_ceiling(unsigned k, const char* what);

/// Triangle of Stirling numbers of the second kind S(k, j), 0 <= j <= k <= kmax,
/// built eagerly from S(k, j) = j S(k-1, j) + S(k-1, j-1). Immutable once built.
class StirlingTable {
 public:
  explicit StirlingTable(unsigned kmax);

  unsigned kmax() const { return static_cast<unsigned>(rows_.size() - 1); }
  const Integer& entry(unsigned k, unsigned j) const;
  /// S(k, 0..k).
  std::span<const Integer> row(unsigned k) const;

 private:
  std::vector<std::vector<Integer>> rows_;
};

StirlingTable stirling_table(unsigned kmax);

/// S(k, j) = (1/j!) sum_i (-1)^(j-i) C(j, i) i^k, independent of the recurrence.
Integer stirling_explicit(unsigned k, unsigned j);

/// a_{k,j} = 1/(j+1) sum_{i=0..j} (-1)^i i^k / (i! (j-i)!).
Rational coeff_direct(unsigned k, unsigned j);

/// a_{k,j} = (-1)^j S(k, j) / (j+1).
Rational coeff_via_stirling(unsigned k, unsigned j, const StirlingTable& table);

struct CoefficientRow {
  unsigned k = 0;
  std::vector<Rational> coefficients;  // position j holds a_{k,j}

  /// a_{k,k} = (-1)^k/(k+1); for k >= 1 also a_{k,1} = -1/2 and a_{k,0} = 0.
  bool satisfies_special_values() const;
};

CoefficientRow coeff_row(unsigned k);

}  // namespace powersum
