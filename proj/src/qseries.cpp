#include "ovp/qseries.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace ovp::qseries {

Series::Series(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Int(0));
}

Series::Series(int order, std::vector<Int> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  if (coeffs_.size() != static_cast<std::size_t>(order) + 1)
    throw std::invalid_argument("series needs exactly order+1 coefficients");
}

Series Series::constant(int order, Int value) {
  Series s(order);
  s.coeffs_[0] = std::move(value);
  return s;
}

Series Series::monomial(int order, int degree, Int value) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  Series s(order);
  if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = std::move(value);
  return s;
}

const Int& Series::coeff(int n) const {
  if (n < 0 || n > order_) throw std::out_of_range("coefficient index out of range");
  return coeffs_[static_cast<std::size_t>(n)];
}

bool Series::is_zero() const {
  for (const Int& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<int> Series::valuation() const {
  for (int n = 0; n <= order_; ++n)
    if (coeffs_[static_cast<std::size_t>(n)] != 0) return n;
  return std::nullopt;
}

void Series::require_same_order(const Series& rhs) const {
  if (order_ != rhs.order_) throw std::invalid_argument("series order mismatch");
}

Series Series::operator-() const {
  Series out(order_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
  return out;
}

Series& Series::operator+=(const Series& rhs) {
  require_same_order(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  require_same_order(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Series& Series::operator*=(const Series& rhs) {
  *this = *this * rhs;
  return *this;
}

Series operator+(const Series& lhs, const Series& rhs) {
  Series out = lhs;
  out += rhs;
  return out;
}

Series operator-(const Series& lhs, const Series& rhs) {
  Series out = lhs;
  out -= rhs;
  return out;
}

Series operator*(const Series& lhs, const Series& rhs) {
  lhs.require_same_order(rhs);
  Series out(lhs.order_);
  for (int i = 0; i <= lhs.order_; ++i) {
    const Int& a = lhs.coeffs_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    for (int j = 0; i + j <= lhs.order_; ++j) {
      const Int& b = rhs.coeffs_[static_cast<std::size_t>(j)];
      if (b == 0) continue;
      out.coeffs_[static_cast<std::size_t>(i + j)] += a * b;
    }
  }
  return out;
}

Series Series::scaled(const Int& factor) const {
  Series out(order_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] * factor;
  return out;
}

Series Series::shifted(int delta) const {
  if (delta < 0) throw std::invalid_argument("shift must be nonnegative");
  Series out(order_);
  for (int n = delta; n <= order_; ++n)
    out.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n - delta)];
  return out;
}

Series Series::inverted() const {
  const Int& c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1)
    throw std::domain_error("series inversion requires constant coefficient +1 or -1");
  // 1/c0 == c0 for a unit constant, so t_n = -c0 * sum_{j=1..n} c_j t_{n-j}.
  Series out(order_);
  out.coeffs_[0] = c0;
  for (int n = 1; n <= order_; ++n) {
    Int acc = 0;
    for (int j = 1; j <= n; ++j) {
      const Int& cj = coeffs_[static_cast<std::size_t>(j)];
      if (cj == 0) continue;
      acc += cj * out.coeffs_[static_cast<std::size_t>(n - j)];
    }
    out.coeffs_[static_cast<std::size_t>(n)] = -c0 * acc;
  }
  return out;
}

bool Series::operator==(const Series& rhs) const {
  require_same_order(rhs);
  return coeffs_ == rhs.coeffs_;
}

std::optional<int> Series::first_difference(const Series& rhs) const {
  require_same_order(rhs);
  for (int n = 0; n <= order_; ++n)
    if (coeffs_[static_cast<std::size_t>(n)] != rhs.coeffs_[static_cast<std::size_t>(n)]) return n;
  return std::nullopt;
}

std::string Series::str() const {
  std::ostringstream os;
  bool first = true;
  for (int n = 0; n <= order_; ++n) {
    const Int& c = coeffs_[static_cast<std::size_t>(n)];
    if (c == 0) continue;
    if (!first) os << " + ";
    os << c.str();
    if (n > 0) os << "*q^" << n;
    first = false;
  }
  if (first) os << "0";
  os << " + O(q^" << order_ + 1 << ")";
  return os.str();
}

Series pochhammer(const PochSpec& spec, int order) {
  if (spec.sign != 1 && spec.sign != -1) throw std::invalid_argument("pochhammer sign must be +1 or -1");
  if (spec.start < 1) throw std::invalid_argument("pochhammer start must be >= 1");
  if (spec.step < 1) throw std::invalid_argument("pochhammer step must be >= 1");
  if (spec.count && *spec.count < 0) throw std::invalid_argument("pochhammer count must be nonnegative");

  std::vector<Int> c(static_cast<std::size_t>(order) + 1, Int(0));
  c[0] = 1;
  for (long long i = 0; !spec.count || i < *spec.count; ++i) {
    long long e = spec.start + i * spec.step;
    if (e > order) break;  // remaining factors are 1 mod q^{order+1}
    // multiply in place by (1 + sign*q^e): descending index keeps reads fresh
    for (int n = order; n >= static_cast<int>(e); --n) {
      const Int& low = c[static_cast<std::size_t>(n - e)];
      if (low == 0) continue;
      if (spec.sign > 0)
        c[static_cast<std::size_t>(n)] += low;
      else
        c[static_cast<std::size_t>(n)] -= low;
    }
  }
  return Series(order, std::move(c));
}

Series sum_family(const std::function<std::optional<FamilyTerm>(std::size_t)>& next, int order) {
  constexpr std::size_t kMaxPulls = 1'000'000;
  Series acc(order);
  long long prev_bound = 0;
  for (std::size_t idx = 0;; ++idx) {
    if (idx >= kMaxPulls)
      throw std::logic_error("sum_family: generator did not exceed the order after 1e6 terms");
    std::optional<FamilyTerm> term = next(idx);
    if (!term) break;
    if (idx > 0 && term->valuation < prev_bound) {
      std::ostringstream os;
      os << "sum_family: declared valuations not nondecreasing at index " << idx << " ("
         << term->valuation << " < " << prev_bound << ")";
      throw std::logic_error(os.str());
    }
    prev_bound = term->valuation;
    if (term->valuation > order) break;
    if (term->series.order() != order)
      throw std::logic_error("sum_family: term order differs from target order");
    auto val = term->series.valuation();
    if (val && *val < term->valuation) {
      std::ostringstream os;
      os << "sum_family: term " << idx << " declares valuation >= " << term->valuation
         << " but has nonzero coefficient at q^" << *val;
      throw std::logic_error(os.str());
    }
    acc += term->series;
  }
  return acc;
}

}  // namespace ovp::qseries
