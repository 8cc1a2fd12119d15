#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ovp {

using Int = boost::multiprecision::cpp_int;

namespace qseries {

/// Truncated formal power series in q with exact integer coefficients.
///
/// A Series of order N stores the coefficients of q^0..q^N and every
/// operation is exact modulo q^{N+1}. Values are immutable once built, so
/// they can be shared freely across threads.
class Series {
 public:
  explicit Series(int order);
  Series(int order, std::vector<Int> coeffs);

  static Series constant(int order, Int value);
  /// value * q^degree; degrees beyond the order truncate to zero.
  static Series monomial(int order, int degree, Int value = 1);

  int order() const { return order_; }
  const Int& coeff(int n) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// Index of the first nonzero coefficient; empty for the zero series.
  std::optional<int> valuation() const;

  Series operator-() const;
  friend Series operator+(const Series& lhs, const Series& rhs);
  friend Series operator-(const Series& lhs, const Series& rhs);
  friend Series operator*(const Series& lhs, const Series& rhs);
  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series& operator*=(const Series& rhs);

  Series scaled(const Int& factor) const;
  /// Multiplication by q^delta.
  Series shifted(int delta) const;
  /// Multiplicative inverse; the constant coefficient must be +1 or -1.
  Series inverted() const;

  bool operator==(const Series& rhs) const;
  bool operator!=(const Series& rhs) const { return !(*this == rhs); }
  /// Smallest index where the two series disagree.
  std::optional<int> first_difference(const Series& rhs) const;

  std::string str() const;

 private:
  void require_same_order(const Series& rhs) const;

  int order_ = 0;
  std::vector<Int> coeffs_;
};

/// Factor family (1 + sign*q^(start + i*step)) for i = 0,1,2,...  `count`
/// is the number of factors; nullopt runs the product to infinity (factors
/// past the truncation order are identically 1). Covers every Pochhammer
/// symbol used here: (q;q)_n, (q^2;q^2)_n, (-q;q)_n, (q;q^2)_n,
/// (-q^{n+1};q)_inf, and friends.
struct PochSpec {
  int sign = -1;                    // +1 or -1
  int start = 1;                    // >= 1
  int step = 1;                     // >= 1
  std::optional<long long> count;   // nullopt = infinite
};

Series pochhammer(const PochSpec& spec, int order);

/// One summand of a series family: the series plus a caller-declared lower
/// bound on its valuation. The declared bound is what makes termination of
/// a family sum a checkable contract.
struct FamilyTerm {
  long long valuation;
  Series series;
};

/// Sums a family of series. The generator is pulled at indices 0,1,2,...
/// until it returns nullopt or a term whose declared valuation exceeds the
/// order. Declared valuations must be nondecreasing and each term must be
/// zero below its declared valuation; a violation throws std::logic_error
/// with a diagnostic instead of silently producing a wrong sum.
Series sum_family(const std::function<std::optional<FamilyTerm>(std::size_t)>& next, int order);

}  // namespace qseries
}  // namespace ovp
