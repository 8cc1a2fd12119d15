#pragma once

#include <array>
#include <string>

#include "json.hpp"
#include "ovp/classes.hpp"
#include "ovp/partitions.hpp"

namespace ovp::counting {

/// Which ell-statistic drives the signed count A(n) - B(n).
enum class AbVariant { n_ge_o, n_gt_o, o_ge_n, o_gt_n };

std::string to_string(AbVariant v);

// Every function here counts by exhaustive enumeration; these are the
// ground-truth sides of the registered theorems.

long long partition_count(int n);
long long overpartition_count(int n);
long long class_count(classes::ClassId c, int n);
/// Overpartitions with SO = LN >= 1 (resp. SN = LO >= 1).
long long count_e_on(int n);
long long count_e_no(int n);
/// Partitions with a repeated part.
long long count_repeated(int n);
/// Partitions with all parts distinct.
long long count_distinct(int n);
/// Ordered pairs (alpha, beta) of distinct partitions with |alpha|+|beta| = n.
long long count_distinct_pairs(int n);
/// Partitions with an even number of parts.
long long p_even_length(int n);
/// Largest part even and smallest part odd.
long long p_even_largest_odd_smallest(int n);
/// Largest part odd and smallest part even.
long long p_odd_largest_even_smallest(int n);
/// Members of eon whose plain parts all share one size (LN = SN).
long long hprime_on(int n);
/// Overpartitions whose largest plain part is odd with every smaller plain
/// part even.
long long cor22_count(int n);
long long sigma_mex(int n);
long long sigma_largest(int n);
/// Sum of maex over the nonempty partitions of n.
long long sigma_maex(int n);

/// Signed count: sum of (-1)^ell over the overpartitions of n, where the
/// o_ge_n / o_gt_n variants restrict to SN >= 1. Requires n >= 1.
long long ab_difference(AbVariant v, int n);

struct CountRecord {
  int n = 0;
  long long gno = 0, eno = 0, gon = 0, eon = 0;
  long long d = 0, d2 = 0, r = 0;
  long long p_e = 0, p_eo = 0, p_oe = 0;
  long long e_on = 0, e_no = 0, hprime_on = 0, cor22 = 0;
  long long sigma_mex = 0, sigma_l = 0, sigma_maex = 0;
  // ab differences for n_ge_o, n_gt_o, o_ge_n, o_gt_n in that order
  std::array<long long, 4> ab_diffs{0, 0, 0, 0};
};

CountRecord count_record(int n);

std::string csv_header();
std::string csv_row(const CountRecord& rec);
nlohmann::json to_json(const CountRecord& rec);

}  // namespace ovp::counting
