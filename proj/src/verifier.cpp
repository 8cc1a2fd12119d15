#include "ovp/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ovp/classes.hpp"
#include "ovp/counting.hpp"
#include "ovp/partitions.hpp"

namespace ovp::verifier {

using qseries::FamilyTerm;
using qseries::PochSpec;
using qseries::Series;
using qseries::pochhammer;
using qseries::sum_family;

namespace {

// ---- building blocks -----------------------------------------------------

Series qq_n(int order, long long n) { return pochhammer({-1, 1, 1, n}, order); }          // (q;q)_n
Series qq_inf(int order) { return pochhammer({-1, 1, 1, std::nullopt}, order); }          // (q;q)_inf
Series negq_n(int order, long long n) { return pochhammer({1, 1, 1, n}, order); }         // (-q;q)_n
Series negq_inf(int order) { return pochhammer({1, 1, 1, std::nullopt}, order); }         // (-q;q)_inf
Series q2q2_n(int order, long long n) { return pochhammer({-1, 2, 2, n}, order); }        // (q^2;q^2)_n
Series q2q2_inf(int order) { return pochhammer({-1, 2, 2, std::nullopt}, order); }        // (q^2;q^2)_inf
Series qq2_inf(int order) { return pochhammer({-1, 1, 2, std::nullopt}, order); }         // (q;q^2)_inf
Series qq2_n(int order, long long n) { return pochhammer({-1, 1, 2, n}, order); }         // (q;q^2)_n
Series one(int order) { return Series::constant(order, 1); }
Series q_pow(int order, long long e, Int c = 1) {
  return e > order ? Series(order) : Series::monomial(order, static_cast<int>(e), std::move(c));
}

using TermFn = std::function<std::optional<FamilyTerm>(std::size_t)>;

long long binom2(long long n) { return n * (n - 1) / 2; }  // C(n,2)

// Generating function of a class built from its actual basis elements:
// (1 when the empty overpartition belongs) + sum_m b(m)/(q;q)_m.
Series class_gf_from_basis(classes::ClassId c, int order) {
  const bool has_empty = c == classes::ClassId::gno || c == classes::ClassId::eno;
  TermFn gen = [c, order](std::size_t idx) -> std::optional<FamilyTerm> {
    const long long m = static_cast<long long>(idx) + 1;
    if (m > order) return FamilyTerm{m, Series(order)};
    Series poly(order);
    for (const Overpartition& b : classes::basis(c, static_cast<int>(m)))
      poly += q_pow(order, b.weight());
    return FamilyTerm{m, poly * qq_n(order, m).inverted()};
  };
  Series total = sum_family(gen, order);
  if (has_empty) total += one(order);
  return total;
}

struct Comparison {
  Series lhs;
  Series rhs;
};

using BuildFn = std::function<std::vector<Comparison>(int order)>;

struct IdentityEntry {
  std::string id;
  int default_order;
  BuildFn build;
};

// ---- the identity registry ------------------------------------------------

std::vector<IdentityEntry> make_identities() {
  std::vector<IdentityEntry> reg;
  const int kDef = kDefaultIdentityOrder;
  const int kCls = kClassicalIdentityOrder;

  reg.push_back({"I-GNO", kDef, [](int N) {
    return std::vector<Comparison>{{class_gf_from_basis(classes::ClassId::gno, N),
                                    negq_inf(N) * negq_inf(N)}};
  }});

  reg.push_back({"I-ENO", kDef, [](int N) {
    Series rhs = negq_inf(N) * negq_inf(N) + qq_inf(N).inverted() - negq_inf(N);
    return std::vector<Comparison>{{class_gf_from_basis(classes::ClassId::eno, N), std::move(rhs)}};
  }});

  // sum over the smallest overlined part n paired with the largest plain part n
  reg.push_back({"I-EONeq", kDef, [](int N) {
    TermFn gen = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long n = static_cast<long long>(idx) + 1;
      if (2 * n > N) return FamilyTerm{2 * n, Series(N)};
      Series term = q_pow(N, 2 * n) * pochhammer({1, static_cast<int>(n) + 1, 1, std::nullopt}, N) *
                    qq_n(N, n).inverted();
      return FamilyTerm{2 * n, std::move(term)};
    };
    return std::vector<Comparison>{{sum_family(gen, N), qq_inf(N).inverted() - negq_inf(N)}};
  }});

  reg.push_back({"I-GON-sep", kDef, [](int N) {
    TermFn formula = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long m = static_cast<long long>(idx) + 1;
      if (m > N) return FamilyTerm{m, Series(N)};
      Series poly(N);
      for (long long k = 0; k <= m - 1; ++k) poly += q_pow(N, (k + 1) * m - binom2(k + 1));
      return FamilyTerm{m, poly * qq_n(N, m).inverted()};
    };
    return std::vector<Comparison>{
        {class_gf_from_basis(classes::ClassId::gon, N), sum_family(formula, N)}};
  }});

  reg.push_back({"I-EON-sep", kDef, [](int N) {
    TermFn formula = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long m = static_cast<long long>(idx) + 1;
      if (m > N) return FamilyTerm{m, Series(N)};
      Series poly = q_pow(N, m);
      for (long long k = 1; k <= m - 1; ++k) poly += q_pow(N, k * m - binom2(k));
      return FamilyTerm{m, poly * qq_n(N, m).inverted()};
    };
    return std::vector<Comparison>{
        {class_gf_from_basis(classes::ClassId::eon, N), sum_family(formula, N)}};
  }});

  // shared by I-GON-new / I-EON-new: 1/(q;q)_inf * sum_{n>=1} q^n (q^2;q^2)_{n-1}
  auto form_a = [](int N) {
    TermFn gen = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long n = static_cast<long long>(idx) + 1;
      if (n > N) return FamilyTerm{n, Series(N)};
      return FamilyTerm{n, q_pow(N, n) * q2q2_n(N, n - 1)};
    };
    return qq_inf(N).inverted() * sum_family(gen, N);
  };
  // (-q;q)_inf * sum_{n>=0} q^{2n+1} / ((1-q^{2n+1}) (q^2;q^2)_n)
  auto form_b = [](int N) {
    TermFn gen = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long n = static_cast<long long>(idx);
      const long long e = 2 * n + 1;
      if (e > N) return FamilyTerm{e, Series(N)};
      Series term = q_pow(N, e) * pochhammer({-1, static_cast<int>(e), 1, 1}, N).inverted() *
                    q2q2_n(N, n).inverted();
      return FamilyTerm{e, std::move(term)};
    };
    return negq_inf(N) * sum_family(gen, N);
  };

  reg.push_back({"I-GON-new", kDef, [form_a, form_b](int N) {
    Series a = form_a(N);
    return std::vector<Comparison>{{class_gf_from_basis(classes::ClassId::gon, N), a},
                                   {a, form_b(N)}};
  }});

  reg.push_back({"I-EON-new", kDef, [form_b](int N) {
    Series rhs = form_b(N) + qq_inf(N).inverted() - negq_inf(N);
    return std::vector<Comparison>{{class_gf_from_basis(classes::ClassId::eon, N), std::move(rhs)}};
  }});

  // sum over the smallest plain part n paired with the largest overlined part n
  reg.push_back({"I-ENOeq", kDef, [](int N) {
    TermFn gen = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long n = static_cast<long long>(idx) + 1;
      if (2 * n > N) return FamilyTerm{2 * n, Series(N)};
      Series term = q_pow(N, 2 * n) * negq_n(N, n - 1) *
                    pochhammer({-1, static_cast<int>(n), 1, std::nullopt}, N).inverted();
      return FamilyTerm{2 * n, std::move(term)};
    };
    return std::vector<Comparison>{{sum_family(gen, N), qq_inf(N).inverted() - negq_inf(N)}};
  }});

  reg.push_back({"I-COHEN", kCls, [](int N) {
    TermFn lhs = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long n = static_cast<long long>(idx) + 1;
      if (n > N) return FamilyTerm{n, Series(N)};
      return FamilyTerm{n, q_pow(N, n) * q2q2_n(N, n - 1)};
    };
    TermFn rhs = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long n = static_cast<long long>(idx) + 1;
      const long long e = n * n;
      if (e > N) return FamilyTerm{e, Series(N)};
      return FamilyTerm{e, q_pow(N, e, n % 2 == 1 ? 1 : -1) * qq2_n(N, n).inverted()};
    };
    return std::vector<Comparison>{{sum_family(lhs, N), sum_family(rhs, N)}};
  }});

  // sum of largest parts minus sum of maximal excludants, by enumeration
  reg.push_back({"I-CHERN", kDef, [](int N) {
    std::vector<Int> coeffs(static_cast<std::size_t>(N) + 1, Int(0));
    for (int n = 1; n <= N; ++n)
      coeffs[static_cast<std::size_t>(n)] =
          counting::sigma_largest(n) - counting::sigma_maex(n);
    TermFn gen = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long n = static_cast<long long>(idx) + 1;
      if (n > N) return FamilyTerm{n, Series(N)};
      return FamilyTerm{n, q_pow(N, n) * q2q2_n(N, n - 1)};
    };
    Series rhs = qq_inf(N).inverted() * sum_family(gen, N);
    return std::vector<Comparison>{{Series(N, std::move(coeffs)), std::move(rhs)}};
  }});

  reg.push_back({"I-EULER1", kCls, [](int N) {
    TermFn t_q = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long n = static_cast<long long>(idx);
      if (n > N) return FamilyTerm{n, Series(N)};
      return FamilyTerm{n, q_pow(N, n) * qq_n(N, n).inverted()};
    };
    TermFn t_q2 = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long n = static_cast<long long>(idx);
      if (2 * n > N) return FamilyTerm{2 * n, Series(N)};
      return FamilyTerm{2 * n, q_pow(N, 2 * n) * qq_n(N, n).inverted()};
    };
    return std::vector<Comparison>{
        {sum_family(t_q, N), qq_inf(N).inverted()},
        {sum_family(t_q2, N), pochhammer({-1, 2, 1, std::nullopt}, N).inverted()}};
  }});

  reg.push_back({"I-EULER2", kCls, [](int N) {
    TermFn gen = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long n = static_cast<long long>(idx);
      const long long e = n + binom2(n);
      if (e > N) return FamilyTerm{e, Series(N)};
      return FamilyTerm{e, q_pow(N, e) * qq_n(N, n).inverted()};
    };
    return std::vector<Comparison>{{sum_family(gen, N), negq_inf(N)}};
  }});

  reg.push_back({"I-EULER3", kCls, [](int N) {
    return std::vector<Comparison>{{qq2_inf(N).inverted(), negq_inf(N)}};
  }});

  reg.push_back({"I-CHANG1", kDef, [](int N) {
    TermFn gen = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long n = static_cast<long long>(idx);
      if (n > N) return FamilyTerm{n, Series(N)};
      return FamilyTerm{n, q_pow(N, n) * q2q2_n(N, n).inverted()};
    };
    return std::vector<Comparison>{{sum_family(gen, N), qq2_inf(N).inverted()}};
  }});

  reg.push_back({"I-CHANG2", kDef, [](int N) {
    TermFn gen = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long n = static_cast<long long>(idx);
      if (2 * n > N) return FamilyTerm{2 * n, Series(N)};
      return FamilyTerm{2 * n, q_pow(N, 2 * n) * q2q2_n(N, n).inverted()};
    };
    return std::vector<Comparison>{{sum_family(gen, N), q2q2_inf(N).inverted()}};
  }});

  reg.push_back({"I-GAUSS", kCls, [](int N) {
    TermFn gen = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long n = static_cast<long long>(idx);
      const long long e = binom2(n + 1);
      if (e > N) return FamilyTerm{e, Series(N)};
      return FamilyTerm{e, q_pow(N, e)};
    };
    return std::vector<Comparison>{{sum_family(gen, N), q2q2_inf(N) * qq2_inf(N).inverted()}};
  }});

  reg.push_back({"I-HEINE-SPEC", kCls, [](int N) {
    TermFn lhs = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long n = static_cast<long long>(idx);
      if (n > N) return FamilyTerm{n, Series(N)};
      return FamilyTerm{n, q_pow(N, n) * q2q2_n(N, n)};
    };
    TermFn rhs = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long n = static_cast<long long>(idx);
      if (2 * n > N) return FamilyTerm{2 * n, Series(N)};
      Series term = q_pow(N, 2 * n) * q2q2_n(N, n).inverted() *
                    pochhammer({-1, static_cast<int>(2 * n) + 1, 1, 1}, N).inverted();
      return FamilyTerm{2 * n, std::move(term)};
    };
    return std::vector<Comparison>{{sum_family(lhs, N), q2q2_inf(N) * sum_family(rhs, N)}};
  }});

  for (int k = 0; k <= 10; ++k) {
    std::ostringstream id;
    id << "I-LEM31-" << k;
    reg.push_back({id.str(), kDef, [k](int N) {
      TermFn gen = [k, N](std::size_t idx) -> std::optional<FamilyTerm> {
        const long long m = k + 1 + static_cast<long long>(idx);
        if (m > N) return FamilyTerm{m, Series(N)};
        return FamilyTerm{m, q_pow(N, m) * qq_n(N, m).inverted()};
      };
      return std::vector<Comparison>{
          {sum_family(gen, N), qq_inf(N).inverted() - qq_n(N, k).inverted()}};
    }});
  }

  reg.push_back({"I-DISTINCT", kDef, [](int N) {
    TermFn t_one = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long n = static_cast<long long>(idx) + 1;
      if (n > N) return FamilyTerm{n, Series(N)};
      return FamilyTerm{n, q_pow(N, n) * negq_n(N, n - 1)};
    };
    TermFn t_minus = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long n = static_cast<long long>(idx) + 1;
      if (2 * n > N) return FamilyTerm{2 * n, Series(N)};
      return FamilyTerm{2 * n, q_pow(N, 2 * n, -1) * q2q2_n(N, n - 1)};
    };
    return std::vector<Comparison>{{sum_family(t_one, N), negq_inf(N) - one(N)},
                                   {sum_family(t_minus, N), q2q2_inf(N) - one(N)}};
  }});

  // signed count over the smallest overlined part, against the partition
  // boundary-parity series
  reg.push_back({"I-EXCESS1", kDef, [](int N) {
    TermFn lhs_tail = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long n = static_cast<long long>(idx) + 1;
      if (n > N) return FamilyTerm{n, Series(N)};
      Series term = q_pow(N, n) * pochhammer({1, static_cast<int>(n) + 1, 1, std::nullopt}, N) *
                    qq_n(N, n - 1).inverted() *
                    pochhammer({1, static_cast<int>(n), 1, std::nullopt}, N).inverted();
      return FamilyTerm{n, std::move(term)};
    };
    Series lhs = negq_inf(N).inverted() + sum_family(lhs_tail, N);
    TermFn even_largest = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long n = static_cast<long long>(idx) + 1;
      if (2 * n > N) return FamilyTerm{2 * n, Series(N)};
      return FamilyTerm{2 * n, q_pow(N, 2 * n) * qq_n(N, 2 * n).inverted()};
    };
    TermFn even_smallest = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long e = 2 * static_cast<long long>(idx) + 2;
      if (e > N) return FamilyTerm{e, Series(N)};
      Series term = q_pow(N, e) * pochhammer({-1, static_cast<int>(e), 1, std::nullopt}, N).inverted();
      return FamilyTerm{e, std::move(term)};
    };
    Series rhs = one(N) + (sum_family(even_largest, N) - sum_family(even_smallest, N)).scaled(2);
    return std::vector<Comparison>{{std::move(lhs), std::move(rhs)}};
  }});

  // signed count over the smallest plain part vs the all-plain-parts-equal
  // generating function
  reg.push_back({"I-HPRIME", kDef, [](int N) {
    TermFn lhs = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long n = static_cast<long long>(idx) + 1;
      if (n > N) return FamilyTerm{n, Series(N)};
      Series term = q_pow(N, n) * negq_n(N, n) *
                    pochhammer({-1, static_cast<int>(n) + 1, 1, std::nullopt}, N) *
                    pochhammer({-1, static_cast<int>(n), 1, std::nullopt}, N).inverted();
      return FamilyTerm{n, std::move(term)};
    };
    TermFn rhs = [N](std::size_t idx) -> std::optional<FamilyTerm> {
      const long long n = static_cast<long long>(idx) + 1;
      if (n > N) return FamilyTerm{n, Series(N)};
      Series term = q_pow(N, n) * negq_n(N, n) *
                    pochhammer({-1, static_cast<int>(n), 1, 1}, N).inverted();
      return FamilyTerm{n, std::move(term)};
    };
    return std::vector<Comparison>{{sum_family(lhs, N), sum_family(rhs, N)}};
  }});

  return reg;
}

const std::vector<IdentityEntry>& identity_registry() {
  static const std::vector<IdentityEntry> reg = make_identities();
  return reg;
}

// ---- the theorem registry ---------------------------------------------------

struct TheoremEntry {
  std::string id;
  std::function<std::optional<FirstFailure>(int n)> check;
};

std::optional<FirstFailure> fail_at(int n, long long lhs, const std::string& rhs) {
  return FirstFailure{n, std::to_string(lhs), rhs};
}

std::vector<TheoremEntry> make_theorems() {
  using counting::AbVariant;
  std::vector<TheoremEntry> reg;

  reg.push_back({"T-PARITY", [](int n) -> std::optional<FirstFailure> {
    const long long d = counting::ab_difference(AbVariant::n_ge_o, n);
    if (d % 2 != 0) return fail_at(n, d, "an even value");
    if (d < 0) return fail_at(n, d, ">= 0");
    if (n >= 3 && d == 0) return fail_at(n, d, "> 0 for n >= 3");
    return std::nullopt;
  }});

  reg.push_back({"T-2PE", [](int n) -> std::optional<FirstFailure> {
    const long long d = counting::ab_difference(AbVariant::n_gt_o, n);
    const long long expect = 2 * counting::p_even_length(n);
    if (d != expect) return fail_at(n, d, std::to_string(expect));
    if (n >= 2 && d <= 0) return fail_at(n, d, "> 0 for n >= 2");
    return std::nullopt;
  }});

  reg.push_back({"T-D", [](int n) -> std::optional<FirstFailure> {
    const long long d = counting::ab_difference(AbVariant::o_ge_n, n);
    const long long expect = counting::count_distinct(n);
    if (d != expect) return fail_at(n, d, std::to_string(expect));
    if (d <= 0) return fail_at(n, d, "> 0");
    return std::nullopt;
  }});

  reg.push_back({"T-HPRIME", [](int n) -> std::optional<FirstFailure> {
    const long long d = counting::ab_difference(AbVariant::o_gt_n, n);
    const long long expect = counting::hprime_on(n);
    if (d != expect) return fail_at(n, d, std::to_string(expect));
    if (d <= 0) return fail_at(n, d, "> 0");
    return std::nullopt;
  }});

  reg.push_back({"T-EXCESS1", [](int n) -> std::optional<FirstFailure> {
    const long long d = counting::ab_difference(AbVariant::n_ge_o, n);
    const long long expect = 2 * (counting::p_even_largest_odd_smallest(n) -
                                  counting::p_odd_largest_even_smallest(n));
    if (d != expect) return fail_at(n, d, std::to_string(expect));
    return std::nullopt;
  }});

  reg.push_back({"T-EXCESS2", [](int n) -> std::optional<FirstFailure> {
    const long long eo = counting::p_even_largest_odd_smallest(n);
    const long long oe = counting::p_odd_largest_even_smallest(n);
    if (eo < oe) return fail_at(n, eo - oe, ">= 0");
    if (n >= 3 && eo == oe) return fail_at(n, eo - oe, "> 0 for n >= 3");
    if (n <= 2 && (eo != 0 || oe != 0)) return fail_at(n, eo + oe, "0 for n in {1,2}");
    return std::nullopt;
  }});

  reg.push_back({"T-SIGMAMEX", [](int n) -> std::optional<FirstFailure> {
    const long long smex = counting::sigma_mex(n);
    const long long d2 = counting::count_distinct_pairs(n);
    const long long gno = counting::class_count(classes::ClassId::gno, n);
    if (smex != d2) return fail_at(n, smex, std::to_string(d2) + " (pair count)");
    if (d2 != gno) return fail_at(n, d2, std::to_string(gno) + " (gno count)");
    return std::nullopt;
  }});

  reg.push_back({"T-COR22", [](int n) -> std::optional<FirstFailure> {
    const long long lhs = counting::cor22_count(n);
    const long long rhs = counting::class_count(classes::ClassId::gon, n);
    if (lhs != rhs) return fail_at(n, lhs, std::to_string(rhs));
    return std::nullopt;
  }});

  reg.push_back({"T-CHERN-COUNT", [](int n) -> std::optional<FirstFailure> {
    const long long lhs = counting::sigma_largest(n) - counting::sigma_maex(n);
    const long long rhs = counting::class_count(classes::ClassId::gon, n);
    if (lhs != rhs) return fail_at(n, lhs, std::to_string(rhs));
    return std::nullopt;
  }});

  return reg;
}

const std::vector<TheoremEntry>& theorem_registry() {
  static const std::vector<TheoremEntry> reg = make_theorems();
  return reg;
}

double ms_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::optional<FirstFailure> compare(const Series& lhs, const Series& rhs) {
  const auto idx = lhs.first_difference(rhs);
  if (!idx) return std::nullopt;
  return FirstFailure{*idx, lhs.coeff(*idx).str(), rhs.coeff(*idx).str()};
}

}  // namespace

std::vector<std::string> identity_ids() {
  std::vector<std::string> ids;
  for (const auto& entry : identity_registry()) ids.push_back(entry.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<std::string> theorem_ids() {
  std::vector<std::string> ids;
  for (const auto& entry : theorem_registry()) ids.push_back(entry.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool is_identity_id(const std::string& id) {
  for (const auto& entry : identity_registry())
    if (entry.id == id) return true;
  return false;
}

bool is_theorem_id(const std::string& id) {
  for (const auto& entry : theorem_registry())
    if (entry.id == id) return true;
  return false;
}

int default_identity_order(const std::string& id) {
  for (const auto& entry : identity_registry())
    if (entry.id == id) return entry.default_order;
  throw std::invalid_argument("unknown identity id '" + id + "'");
}

VerificationReport verify_identity(const std::string& id, std::optional<int> order) {
  const IdentityEntry* entry = nullptr;
  for (const auto& e : identity_registry())
    if (e.id == id) entry = &e;
  if (!entry) throw std::invalid_argument("unknown identity id '" + id + "'");
  const int N = order.value_or(entry->default_order);
  if (N < 1) throw std::invalid_argument("identity order must be >= 1");

  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport report{id, N, true, std::nullopt, 0.0};
  for (const Comparison& cmp : entry->build(N)) {
    if (auto failure = compare(cmp.lhs, cmp.rhs)) {
      report.pass = false;
      report.first_failure = failure;
      break;
    }
  }
  report.elapsed_ms = ms_since(t0);
  return report;
}

VerificationReport verify_theorem(const std::string& id, int n_max) {
  const TheoremEntry* entry = nullptr;
  for (const auto& e : theorem_registry())
    if (e.id == id) entry = &e;
  if (!entry) throw std::invalid_argument("unknown theorem id '" + id + "'");
  if (n_max < 1) throw std::invalid_argument("theorem bound must be >= 1");

  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport report{id, n_max, true, std::nullopt, 0.0};
  for (int n = 1; n <= n_max; ++n) {
    if (auto failure = entry->check(n)) {
      report.pass = false;
      report.first_failure = failure;
      break;
    }
  }
  report.elapsed_ms = ms_since(t0);
  return report;
}

VerificationReport crosscheck_enumeration(int n_max) {
  if (n_max < 0) throw std::invalid_argument("crosscheck bound must be >= 0");
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport report{kCrosscheckId, n_max, true, std::nullopt, 0.0};

  const int N = n_max;
  const Series gno_series = negq_inf(N) * negq_inf(N);
  const Series eno_series = negq_inf(N) * negq_inf(N) + qq_inf(N).inverted() - negq_inf(N);
  TermFn gon_formula = [N](std::size_t idx) -> std::optional<FamilyTerm> {
    const long long m = static_cast<long long>(idx) + 1;
    if (m > N) return FamilyTerm{m, Series(N)};
    Series poly(N);
    for (long long k = 0; k <= m - 1; ++k) poly += q_pow(N, (k + 1) * m - binom2(k + 1));
    return FamilyTerm{m, poly * qq_n(N, m).inverted()};
  };
  TermFn eon_formula = [N](std::size_t idx) -> std::optional<FamilyTerm> {
    const long long m = static_cast<long long>(idx) + 1;
    if (m > N) return FamilyTerm{m, Series(N)};
    Series poly = q_pow(N, m);
    for (long long k = 1; k <= m - 1; ++k) poly += q_pow(N, k * m - binom2(k));
    return FamilyTerm{m, poly * qq_n(N, m).inverted()};
  };
  const Series gon_series = N >= 1 ? sum_family(gon_formula, N) : Series(N);
  const Series eon_series = N >= 1 ? sum_family(eon_formula, N) : Series(N);
  const Series e_series = qq_inf(N).inverted() - negq_inf(N);

  for (int n = 0; n <= n_max && report.pass; ++n) {
    const counting::CountRecord rec = counting::count_record(n);
    const std::pair<std::string, std::pair<long long, Int>> checks[] = {
        {"gno", {rec.gno, gno_series.coeff(n)}},
        {"eno", {rec.eno, eno_series.coeff(n)}},
        {"gon", {rec.gon, gon_series.coeff(n)}},
        {"eon", {rec.eon, eon_series.coeff(n)}},
        {"e_on", {rec.e_on, e_series.coeff(n)}},
        {"e_no", {rec.e_no, e_series.coeff(n)}},
    };
    for (const auto& [label, values] : checks) {
      if (Int(values.first) != values.second) {
        report.pass = false;
        report.first_failure = FirstFailure{n, label + " enumerated " + std::to_string(values.first),
                                            label + " series " + values.second.str()};
        break;
      }
    }
  }
  report.elapsed_ms = ms_since(t0);
  return report;
}

std::vector<VerificationReport> verify_all(std::optional<int> order, std::optional<int> n_max) {
  std::vector<VerificationReport> reports;
  for (const auto& entry : identity_registry())
    reports.push_back(verify_identity(entry.id, order));
  for (const auto& entry : theorem_registry())
    reports.push_back(verify_theorem(entry.id, n_max.value_or(kDefaultTheoremBound)));
  reports.push_back(crosscheck_enumeration(n_max.value_or(kDefaultCrosscheckBound)));
  std::sort(reports.begin(), reports.end(),
            [](const VerificationReport& a, const VerificationReport& b) { return a.id < b.id; });
  return reports;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json j{{"id", report.id},
                   {"bound", report.bound},
                   {"verdict", report.pass ? "pass" : "fail"},
                   {"first_failure", nullptr},
                   {"ms", report.elapsed_ms}};
  if (report.first_failure) {
    j["first_failure"] = nlohmann::json{{"index", report.first_failure->index},
                                        {"lhs", report.first_failure->lhs},
                                        {"rhs", report.first_failure->rhs}};
  }
  return j;
}

}  // namespace ovp::verifier
