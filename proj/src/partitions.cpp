#include "ovp/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace ovp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::part_at(int i) const {
  if (i < 1) throw std::out_of_range("partition parts are 1-based");
  return i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

bool Partition::has_distinct_parts() const {
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] == parts_[i - 1]) return false;
  return true;
}

int Partition::count_of(int t) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), t));
}

Overpartition::Overpartition(std::vector<OverEntry> entries) : entries_(std::move(entries)) {
  for (const OverEntry& e : entries_)
    if (e.size <= 0) throw std::invalid_argument("overpartition sizes must be positive");
  // canonical: size descending, overlined before plain among equal sizes
  std::sort(entries_.begin(), entries_.end(), [](const OverEntry& a, const OverEntry& b) {
    if (a.size != b.size) return a.size > b.size;
    return a.overlined && !b.overlined;
  });
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i].overlined && entries_[i - 1].overlined && entries_[i].size == entries_[i - 1].size)
      throw std::invalid_argument("at most one overlined part per size");
  weight_ = 0;
  for (const OverEntry& e : entries_) weight_ += e.size;
}

int Overpartition::overline_count() const {
  return static_cast<int>(std::count_if(entries_.begin(), entries_.end(),
                                        [](const OverEntry& e) { return e.overlined; }));
}

std::vector<int> Overpartition::plain_sizes() const {
  std::vector<int> out;
  for (const OverEntry& e : entries_)
    if (!e.overlined) out.push_back(e.size);
  return out;
}

std::vector<int> Overpartition::overlined_sizes() const {
  std::vector<int> out;
  for (const OverEntry& e : entries_)
    if (e.overlined) out.push_back(e.size);
  return out;
}

Partition Overpartition::stripped() const {
  std::vector<int> parts;
  parts.reserve(entries_.size());
  for (const OverEntry& e : entries_) parts.push_back(e.size);
  return Partition(std::move(parts));
}

BoundaryStats boundary_stats(const Overpartition& op) {
  BoundaryStats st;
  for (const OverEntry& e : op.entries()) {
    if (e.overlined) {
      if (st.lo == 0) st.lo = e.size;
      st.so = e.size;  // entries descend, so the last seen is the smallest
    } else {
      if (st.ln == 0) st.ln = e.size;
      st.sn = e.size;
    }
  }
  return st;
}

EllStats ell_stats(const Overpartition& op) {
  const BoundaryStats st = boundary_stats(op);
  EllStats ell;
  for (const OverEntry& e : op.entries()) {
    if (!e.overlined) {
      if (e.size >= st.so) ++ell.n_ge_o;
      if (e.size > st.so) ++ell.n_gt_o;
    } else {
      if (e.size >= st.sn) ++ell.o_ge_n;
      if (e.size > st.sn) ++ell.o_gt_n;
    }
  }
  return ell;
}

Partition conjugate(const Partition& p) {
  std::vector<int> cols;
  cols.reserve(static_cast<std::size_t>(p.largest()));
  for (int i = 1; i <= p.largest(); ++i) {
    int h = 0;
    for (int part : p.parts()) {
      if (part < i) break;
      ++h;
    }
    cols.push_back(h);
  }
  return Partition(std::move(cols));
}

int mex(const Partition& p) {
  // parts descend; scan upward through the candidate values
  int candidate = 1;
  const auto& parts = p.parts();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (*it > candidate) break;
    if (*it == candidate) ++candidate;
  }
  return candidate;
}

int maex(const Partition& p) {
  if (p.empty()) throw std::invalid_argument("maex of the empty partition is undefined");
  std::vector<bool> present(static_cast<std::size_t>(p.largest()) + 1, false);
  for (int part : p.parts()) present[static_cast<std::size_t>(part)] = true;
  for (int t = p.largest() - 1; t >= 1; --t)
    if (!present[static_cast<std::size_t>(t)]) return t;
  return 0;
}

namespace {

void partition_rec(int remaining, int cap, std::vector<int>& acc,
                   const std::function<void(const Partition&)>& fn) {
  if (remaining == 0) {
    fn(Partition(acc));
    return;
  }
  for (int p = std::min(remaining, cap); p >= 1; --p) {
    acc.push_back(p);
    partition_rec(remaining - p, p, acc, fn);
    acc.pop_back();
  }
}

void overpartition_rec(int remaining, int cap, std::vector<OverEntry>& acc,
                       const std::function<void(const Overpartition&)>& fn) {
  if (remaining == 0) {
    fn(Overpartition(acc));
    return;
  }
  for (int s = std::min(remaining, cap); s >= 1; --s) {
    for (int over = 1; over >= 0; --over) {
      const int base = over ? s : 0;
      if (base > remaining) continue;
      const int max_plain = (remaining - base) / s;
      const int min_plain = over ? 0 : 1;
      for (int c = max_plain; c >= min_plain; --c) {
        const std::size_t mark = acc.size();
        if (over) acc.push_back({s, true});
        for (int i = 0; i < c; ++i) acc.push_back({s, false});
        overpartition_rec(remaining - base - c * s, s - 1, acc, fn);
        acc.resize(mark);
      }
    }
  }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<int> acc;
  partition_rec(n, n == 0 ? 1 : n, acc, fn);
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

void for_each_overpartition(int n, const std::function<void(const Overpartition&)>& fn) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<OverEntry> acc;
  overpartition_rec(n, n == 0 ? 1 : n, acc, fn);
}

std::vector<Overpartition> enumerate_overpartitions(int n) {
  std::vector<Overpartition> out;
  for_each_overpartition(n, [&](const Overpartition& op) { out.push_back(op); });
  return out;
}

ParseError::ParseError(const std::string& what, std::size_t pos)
    : std::invalid_argument(what), position(pos) {}

namespace {

std::vector<OverEntry> parse_entries(std::string_view text, bool allow_overlines) {
  std::vector<OverEntry> entries;
  std::size_t pos = 0;
  const std::size_t n = text.size();
  // skip an all-whitespace string as empty
  bool all_space = true;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) all_space = false;
  if (all_space) return entries;

  while (pos <= n) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = n;
    std::size_t b = pos, e = end;
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    if (b == e) throw ParseError("empty token", pos);
    bool overlined = false;
    std::size_t digits_end = e;
    if (text[e - 1] == '~') {
      if (!allow_overlines) throw ParseError("overline mark not allowed here", e - 1);
      overlined = true;
      digits_end = e - 1;
      if (digits_end == b) throw ParseError("overline mark without a size", b);
    }
    long long value = 0;
    for (std::size_t i = b; i < digits_end; ++i) {
      char ch = text[i];
      if (ch < '0' || ch > '9') throw ParseError(std::string("unexpected character '") + ch + "'", i);
      value = value * 10 + (ch - '0');
      if (value > 1'000'000'000LL) throw ParseError("size too large", b);
    }
    if (value <= 0) throw ParseError("sizes must be positive", b);
    entries.push_back({static_cast<int>(value), overlined});
    if (end == n) break;
    pos = end + 1;
    if (pos == n) throw ParseError("trailing comma", end);
  }
  return entries;
}

}  // namespace

Overpartition parse_overpartition(std::string_view text) {
  std::vector<OverEntry> entries = parse_entries(text, true);
  try {
    return Overpartition(std::move(entries));
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what(), 0);
  }
}

Partition parse_partition(std::string_view text) {
  std::vector<OverEntry> entries = parse_entries(text, false);
  std::vector<int> parts;
  parts.reserve(entries.size());
  for (const OverEntry& e : entries) parts.push_back(e.size);
  return Partition(std::move(parts));
}

std::string to_string(const Overpartition& op) {
  std::ostringstream os;
  bool first = true;
  for (const OverEntry& e : op.entries()) {
    if (!first) os << ',';
    os << e.size;
    if (e.overlined) os << '~';
    first = false;
  }
  return os.str();
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  bool first = true;
  for (int part : p.parts()) {
    if (!first) os << ',';
    os << part;
    first = false;
  }
  return os.str();
}

std::vector<Overpartition> read_corpus(std::istream& in) {
  std::vector<Overpartition> out;
  std::string line;
  while (std::getline(in, line)) {
    // blank lines separate nothing; an explicit empty overpartition is a
    // line containing only whitespace, so keep it
    out.push_back(parse_overpartition(line));
  }
  return out;
}

void write_corpus(std::ostream& out, const std::vector<Overpartition>& ops) {
  for (const Overpartition& op : ops) out << to_string(op) << '\n';
}

}  // namespace ovp
