#include "ovp/bijections.hpp"

#include <algorithm>
#include <stdexcept>

#include "ovp/classes.hpp"

namespace ovp::bijections {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::domain_error(what);
}

void ensure(bool cond, const char* what) {
  if (!cond) throw std::logic_error(what);
}

// lambda_i = |pi_i| - (k-i+1) on the k overlined parts, lambda_i = pi_i on
// the plain ones; trailing zeros (possible only when every part is
// overlined) are dropped.
std::vector<int> strip_staircase(const Overpartition& op, int k) {
  std::vector<int> lam;
  const auto& entries = op.entries();
  for (int i = 1; i <= op.part_count(); ++i) {
    const OverEntry& e = entries[static_cast<std::size_t>(i - 1)];
    const int v = e.overlined ? e.size - (k - i + 1) : e.size;
    ensure(v >= 0, "staircase subtraction went negative");
    lam.push_back(v);
  }
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  return lam;
}

}  // namespace

SylvesterSteps sylvester_forward_steps(const Overpartition& op) {
  require(!op.empty(), "sylvester: the empty overpartition is out of domain");
  require(classes::contains(classes::ClassId::gno, op), "sylvester: overpartition not in gno");
  SylvesterSteps st;
  st.k = op.overline_count();
  const int k = st.k;
  st.lambda = Partition(strip_staircase(op, k));
  st.lambda_conjugate = conjugate(st.lambda);

  // largest s with lambda_s >= k+s; s = 0 via the lambda_0 = +inf convention
  int s = 0;
  for (int i = st.lambda.length(); i >= 1; --i) {
    if (st.lambda.part_at(i) >= k + i) {
      s = i;
      break;
    }
  }
  st.s = s;
  st.second_case = s >= 1 && st.lambda.part_at(s) == k + s;

  std::vector<int> mu;
  for (int i = 1; i <= k + s; ++i) mu.push_back(st.lambda_conjugate.part_at(i) + k - i + 1);
  std::vector<int> nu;
  const int nu_len = st.second_case ? s - 1 : s;
  for (int i = 1; i <= nu_len; ++i) nu.push_back(st.lambda.part_at(i) - k - i);

  for (int v : mu) ensure(v >= 1, "sylvester: mu has a nonpositive part");
  for (int v : nu) ensure(v >= 1, "sylvester: nu has a nonpositive part");
  if (st.second_case) {
    st.pair.alpha = Partition(std::move(nu));
    st.pair.beta = Partition(std::move(mu));
  } else {
    st.pair.alpha = Partition(std::move(mu));
    st.pair.beta = Partition(std::move(nu));
  }
  ensure(st.pair.alpha.has_distinct_parts() && st.pair.beta.has_distinct_parts(),
         "sylvester: image is not a pair of distinct partitions");
  ensure(st.pair.alpha.weight() + st.pair.beta.weight() == op.weight(),
         "sylvester: weight not preserved");
  const int diff = st.pair.alpha.length() - st.pair.beta.length();
  ensure(diff == k || diff == -k - 1, "sylvester: length difference out of range");
  return st;
}

DistinctPair sylvester_forward(const Overpartition& op) {
  return sylvester_forward_steps(op).pair;
}

Overpartition sylvester_inverse(const DistinctPair& pair, int k) {
  require(k >= 0, "sylvester inverse: k must be nonnegative");
  require(pair.alpha.has_distinct_parts() && pair.beta.has_distinct_parts(),
          "sylvester inverse: parts must be distinct");
  const int diff = pair.alpha.length() - pair.beta.length();
  bool second_case;
  if (diff == k)
    second_case = false;
  else if (diff == -k - 1)
    second_case = true;
  else
    throw std::domain_error("sylvester inverse: length difference must be k or -k-1");
  require(!pair.alpha.empty() || !pair.beta.empty() || k > 0,
          "sylvester inverse: the empty pair with k = 0 has no preimage");

  std::vector<int> mu, nu;
  int s;
  if (second_case) {
    mu = pair.beta.parts();
    s = pair.alpha.length() + 1;
    nu = pair.alpha.parts();
    nu.push_back(0);
  } else {
    mu = pair.alpha.parts();
    s = pair.beta.length();
    nu = pair.beta.parts();
  }
  ensure(static_cast<int>(mu.size()) == k + s, "sylvester inverse: mu length mismatch");

  // first s rows from nu, the rest from the first k+s column heights
  std::vector<int> lam;
  for (int i = 1; i <= s; ++i) lam.push_back(nu[static_cast<std::size_t>(i - 1)] + k + i);
  std::vector<int> heights;
  for (int i = 1; i <= k + s; ++i) {
    const int h = mu[static_cast<std::size_t>(i - 1)] - k + i - 1;
    ensure(h >= s, "sylvester inverse: column height below the split");
    heights.push_back(h);
  }
  const int hmax = heights.empty() ? 0 : heights.front();
  for (int row = s + 1; row <= hmax; ++row) {
    int len = 0;
    for (int h : heights) {
      if (h < row) break;  // heights descend
      ++len;
    }
    if (len == 0) break;
    lam.push_back(len);
  }
  for (std::size_t i = 1; i < lam.size(); ++i)
    ensure(lam[i - 1] >= lam[i], "sylvester inverse: reconstructed rows not monotone");

  const int m = std::max(static_cast<int>(lam.size()), k);
  std::vector<OverEntry> entries;
  for (int i = 1; i <= m; ++i) {
    const int lam_i = i <= static_cast<int>(lam.size()) ? lam[static_cast<std::size_t>(i - 1)] : 0;
    if (i <= k)
      entries.push_back({lam_i + (k - i + 1), true});
    else
      entries.push_back({lam_i, false});
  }
  Overpartition result{std::move(entries)};
  ensure(classes::contains(classes::ClassId::gno, result), "sylvester inverse: result not in gno");
  ensure(result.overline_count() == k, "sylvester inverse: overline count mismatch");
  ensure(result.weight() == pair.alpha.weight() + pair.beta.weight(),
         "sylvester inverse: weight not preserved");
  return result;
}

Partition mex_embed(const Overpartition& op) {
  require(classes::contains(classes::ClassId::gno, op), "mex_embed: overpartition not in gno");
  const int k = op.overline_count();
  std::vector<int> parts = strip_staircase(op, k);
  for (int t = 1; t <= k; ++t) parts.push_back(t);
  Partition mu{std::move(parts)};
  ensure(mex(mu) >= k + 1, "mex_embed: mex too small");
  ensure(mu.weight() == op.weight(), "mex_embed: weight not preserved");
  return mu;
}

Overpartition mex_embed_inverse(const Partition& mu, int k) {
  require(k >= 0, "mex_embed inverse: k must be nonnegative");
  require(k <= mex(mu) - 1, "mex_embed inverse: k exceeds mex - 1");
  std::vector<int> lam = mu.parts();
  for (int t = k; t >= 1; --t) {
    auto it = std::find(lam.begin(), lam.end(), t);
    ensure(it != lam.end(), "mex_embed inverse: expected part missing");
    lam.erase(it);
  }
  const int m = std::max(static_cast<int>(lam.size()), k);
  std::vector<OverEntry> entries;
  for (int i = 1; i <= m; ++i) {
    const int lam_i = i <= static_cast<int>(lam.size()) ? lam[static_cast<std::size_t>(i - 1)] : 0;
    if (i <= k)
      entries.push_back({lam_i + (k - i + 1), true});
    else
      entries.push_back({lam_i, false});
  }
  Overpartition result{std::move(entries)};
  ensure(classes::contains(classes::ClassId::gno, result), "mex_embed inverse: result not in gno");
  ensure(result.overline_count() == k, "mex_embed inverse: overline count mismatch");
  return result;
}

Overpartition involution(const Overpartition& op) {
  require(!op.empty(), "involution: the empty overpartition is out of domain");
  const BoundaryStats st = boundary_stats(op);
  std::vector<OverEntry> entries = op.entries();
  if (st.ln > st.lo) {
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const OverEntry& e) { return !e.overlined && e.size == st.ln; });
    ensure(it != entries.end(), "involution: largest plain part vanished");
    it->overlined = true;
  } else {
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const OverEntry& e) { return e.overlined && e.size == st.lo; });
    ensure(it != entries.end(), "involution: largest overlined part vanished");
    it->overlined = false;
  }
  return Overpartition(std::move(entries));
}

Partition phi_on(const Overpartition& op) {
  const BoundaryStats st = boundary_stats(op);
  require(st.so >= 1 && st.so == st.ln, "phi_on: expects SO = LN >= 1");
  Partition out = op.stripped();
  ensure(!out.has_distinct_parts(), "phi_on: image has no repeated part");
  return out;
}

Overpartition psi_on(const Partition& p) {
  // largest size occurring at least twice
  int k = 0;
  for (std::size_t i = 1; i < p.parts().size(); ++i) {
    if (p.parts()[i] == p.parts()[i - 1]) {
      k = p.parts()[i];
      break;  // parts descend, the first repeat is the largest
    }
  }
  require(k >= 1, "psi_on: partition has no repeated part");
  std::vector<OverEntry> entries;
  bool k_marked = false;
  for (int part : p.parts()) {
    if (part > k) {
      entries.push_back({part, true});
    } else if (part == k && !k_marked) {
      entries.push_back({part, true});
      k_marked = true;
    } else {
      entries.push_back({part, false});
    }
  }
  Overpartition result{std::move(entries)};
  const BoundaryStats st = boundary_stats(result);
  ensure(st.so >= 1 && st.so == st.ln, "psi_on: image misses SO = LN");
  return result;
}

Partition phi_no(const Overpartition& op) {
  const BoundaryStats st = boundary_stats(op);
  require(st.sn >= 1 && st.sn == st.lo, "phi_no: expects SN = LO >= 1");
  Partition out = op.stripped();
  ensure(!out.has_distinct_parts(), "phi_no: image has no repeated part");
  return out;
}

Overpartition psi_no(const Partition& p) {
  // smallest size occurring at least twice
  int k = 0;
  for (std::size_t i = p.parts().size(); i > 1; --i) {
    if (p.parts()[i - 1] == p.parts()[i - 2]) {
      k = p.parts()[i - 1];
      break;  // scanning upward, the first repeat is the smallest
    }
  }
  require(k >= 1, "psi_no: partition has no repeated part");
  std::vector<OverEntry> entries;
  bool k_marked = false;
  for (int part : p.parts()) {
    if (part < k) {
      entries.push_back({part, true});
    } else if (part == k && !k_marked) {
      entries.push_back({part, true});
      k_marked = true;
    } else {
      entries.push_back({part, false});
    }
  }
  Overpartition result{std::move(entries)};
  const BoundaryStats st = boundary_stats(result);
  ensure(st.sn >= 1 && st.sn == st.lo, "psi_no: image misses SN = LO");
  return result;
}

Partition gon_conjugate(const Overpartition& op) {
  require(classes::contains(classes::ClassId::gon, op), "gon_conjugate: overpartition not in gon");
  const int k = op.overline_count();
  Partition mu = conjugate(op.stripped());
  ensure(!mu.empty() && k < mu.largest() - maex(mu), "gon_conjugate: image misses k < LN - maex");
  return mu;
}

Overpartition gon_conjugate_inverse(const Partition& mu, int k) {
  require(!mu.empty(), "gon_conjugate inverse: partition must be nonempty");
  require(k >= 0 && k < mu.largest() - maex(mu),
          "gon_conjugate inverse: requires 0 <= k < LN - maex");
  const Partition lam = conjugate(mu);
  const int m = lam.length();
  std::vector<OverEntry> entries;
  for (int i = 1; i <= m; ++i) entries.push_back({lam.part_at(i), i > m - k});
  Overpartition result{std::move(entries)};
  ensure(classes::contains(classes::ClassId::gon, result), "gon_conjugate inverse: result not in gon");
  ensure(result.overline_count() == k, "gon_conjugate inverse: overline count mismatch");
  return result;
}

Partition parity_pad(const Partition& p) {
  require(!p.empty() && p.largest() % 2 == 1 && p.smallest() % 2 == 0,
          "parity_pad: expects largest part odd and smallest part even");
  std::vector<int> parts;
  for (int part : p.parts()) parts.push_back(part - 1);
  for (int i = 0; i < p.length(); ++i) parts.push_back(1);
  Partition out{std::move(parts)};
  const int half = out.length() / 2;
  ensure(out.length() % 2 == 0 && out.length() >= 4, "parity_pad: image length wrong");
  ensure(out.largest() % 2 == 0 && out.smallest() % 2 == 1, "parity_pad: image parity wrong");
  ensure(out.part_at(half) % 2 == 1, "parity_pad: half-index part not odd");
  ensure(out.count_of(1) >= half, "parity_pad: too few ones");
  return out;
}

Partition parity_pad_inverse(const Partition& p) {
  const int len = p.length();
  require(len >= 4 && len % 2 == 0, "parity_pad inverse: needs even length >= 4");
  require(p.largest() % 2 == 0 && p.smallest() % 2 == 1,
          "parity_pad inverse: expects largest part even and smallest part odd");
  const int half = len / 2;
  require(p.part_at(half) % 2 == 1, "parity_pad inverse: half-index part must be odd");
  require(p.count_of(1) >= half, "parity_pad inverse: needs at least length/2 ones");
  std::vector<int> parts;
  for (int i = 1; i <= half; ++i) parts.push_back(p.part_at(i) + 1);
  Partition out{std::move(parts)};
  ensure(out.largest() % 2 == 1 && out.smallest() % 2 == 0, "parity_pad inverse: image parity wrong");
  ensure(out.weight() == p.weight(), "parity_pad inverse: weight not preserved");
  return out;
}

Partition hon_to_distinct(const Overpartition& op) {
  require(in_hon(op), "hon_to_distinct: expects exactly one plain part with LN > LO");
  Partition out = op.stripped();
  ensure(out.has_distinct_parts(), "hon_to_distinct: image not distinct");
  return out;
}

Overpartition hon_from_distinct(const Partition& p) {
  require(!p.empty() && p.has_distinct_parts(), "hon_from_distinct: expects a nonempty distinct partition");
  std::vector<OverEntry> entries;
  for (int i = 1; i <= p.length(); ++i) entries.push_back({p.part_at(i), i > 1});
  Overpartition result{std::move(entries)};
  ensure(in_hon(result), "hon_from_distinct: result out of codomain");
  return result;
}

bool in_cno(const Overpartition& op) {
  const BoundaryStats st = boundary_stats(op);
  return st.ln > st.lo && st.lo >= 1;
}

bool in_fno(const Overpartition& op) {
  const BoundaryStats st = boundary_stats(op);
  return op.overline_count() >= 2 && st.lo >= st.ln;
}

bool in_hno(const Overpartition& op) {
  const BoundaryStats st = boundary_stats(op);
  return op.overline_count() == 1 && st.lo >= st.ln;
}

bool in_con(const Overpartition& op) {
  const BoundaryStats st = boundary_stats(op);
  return st.lo >= st.ln && st.ln >= 1;
}

bool in_fon(const Overpartition& op) {
  const BoundaryStats st = boundary_stats(op);
  return op.part_count() - op.overline_count() >= 2 && st.ln > st.lo;
}

bool in_hon(const Overpartition& op) {
  const BoundaryStats st = boundary_stats(op);
  return op.part_count() - op.overline_count() == 1 && st.ln > st.lo;
}

bool in_cprime_on(const Overpartition& op) {
  const BoundaryStats st = boundary_stats(op);
  return st.lo >= st.ln && st.ln >= 1 && st.lo > st.sn;
}

bool in_fprime_on(const Overpartition& op) {
  const BoundaryStats st = boundary_stats(op);
  return st.ln > st.lo && st.ln > st.sn && st.sn >= 1;
}

bool in_hprime_on(const Overpartition& op) {
  const BoundaryStats st = boundary_stats(op);
  return st.ln == st.sn && st.sn >= 1 && st.sn >= st.lo;
}

}  // namespace ovp::bijections
