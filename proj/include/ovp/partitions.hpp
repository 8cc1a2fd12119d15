#pragma once

#include <compare>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ovp {

/// Integer partition: weakly decreasing positive parts. The empty sequence
/// is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Accepts parts in any order and canonicalizes (sorts descending).
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  long long weight() const { return weight_; }
  /// Largest/smallest part, 0 when empty.
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int smallest() const { return parts_.empty() ? 0 : parts_.back(); }
  int part_at(int i) const;  // 1-based, 0 beyond the length
  bool has_distinct_parts() const;
  /// Multiplicity of t among the parts.
  int count_of(int t) const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  long long weight_ = 0;
};

/// One overpartition part: a size plus its overline mark.
struct OverEntry {
  int size = 0;
  bool overlined = false;
  auto operator<=>(const OverEntry&) const = default;
};

/// Overpartition: a partition in which the first occurrence of a size may
/// be overlined. Canonical entry order is size descending with the
/// overlined entry before plain entries of the same size.
class Overpartition {
 public:
  Overpartition() = default;
  /// Accepts entries in any order, canonicalizes, and rejects duplicate
  /// overlines or nonpositive sizes.
  explicit Overpartition(std::vector<OverEntry> entries);

  const std::vector<OverEntry>& entries() const { return entries_; }
  int part_count() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  long long weight() const { return weight_; }
  int overline_count() const;
  bool is_pure_partition() const { return overline_count() == 0; }

  /// Plain / overlined sizes, descending (overlined sizes are distinct).
  std::vector<int> plain_sizes() const;
  std::vector<int> overlined_sizes() const;
  /// Forget the overline marks.
  Partition stripped() const;

  auto operator<=>(const Overpartition&) const = default;

 private:
  std::vector<OverEntry> entries_;
  long long weight_ = 0;
};

/// Sizes of the extreme parts of each kind, 0 when that kind is absent.
struct BoundaryStats {
  int ln = 0;  // largest non-overlined
  int sn = 0;  // smallest non-overlined
  int lo = 0;  // largest overlined
  int so = 0;  // smallest overlined
};

/// Part counts relative to the opposite kind's boundary: plain parts with
/// size >= / > SO, and overlined parts with size >= / > SN. When the
/// boundary statistic is 0 every part of the other kind qualifies.
struct EllStats {
  long long n_ge_o = 0;
  long long n_gt_o = 0;
  long long o_ge_n = 0;
  long long o_gt_n = 0;
};

BoundaryStats boundary_stats(const Overpartition& op);
EllStats ell_stats(const Overpartition& op);

/// Ferrers transpose.
Partition conjugate(const Partition& p);
/// Smallest positive integer that is not a part.
int mex(const Partition& p);
/// Largest nonnegative integer below the largest part that is not a part;
/// rejects the empty partition.
int maex(const Partition& p);

/// Streams every partition of n exactly once in reverse-lexicographic
/// order: (n), (n-1,1), ..., (1^n).
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);
std::vector<Partition> enumerate_partitions(int n);

/// Streams every overpartition of n exactly once, reverse-lexicographic on
/// canonical entry sequences with overlined comparing above plain, so
/// (4̄) precedes (4).
void for_each_overpartition(int n, const std::function<void(const Overpartition&)>& fn);
std::vector<Overpartition> enumerate_overpartitions(int n);

/// Text notation: comma-separated sizes, '~' suffix marks an overline,
/// e.g. "10~,8~,7~,6,4,4,2,1". The empty string is the empty overpartition.
/// Input order need not be canonical. Parse errors carry the position.
struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t position);
  std::size_t position;
};

Overpartition parse_overpartition(std::string_view text);
Partition parse_partition(std::string_view text);
std::string to_string(const Overpartition& op);
std::string to_string(const Partition& p);

/// Line-delimited corpus format: one overpartition per line.
std::vector<Overpartition> read_corpus(std::istream& in);
void write_corpus(std::ostream& out, const std::vector<Overpartition>& ops);

}  // namespace ovp
