#pragma once

#include "ovp/partitions.hpp"

namespace ovp::bijections {

/// Ordered pair of partitions into distinct parts.
struct DistinctPair {
  Partition alpha;
  Partition beta;
  auto operator<=>(const DistinctPair&) const = default;
};

/// Intermediate objects of the staircase/conjugation map, exposed so the
/// worked examples can be checked step by step.
struct SylvesterSteps {
  int k = 0;                   // number of overlined parts
  Partition lambda;            // staircase-stripped partition
  Partition lambda_conjugate;
  int s = 0;                   // largest s >= 0 with lambda_s >= k+s (lambda_0 = +inf)
  bool second_case = false;    // lambda_s == k+s
  DistinctPair pair;
};

/// Maps a nonempty member of gno with k overlined parts to a pair of
/// distinct partitions with length difference k or -k-1: subtract the
/// staircase k,k-1,...,1 from the overlined parts, conjugate, and split at
/// the largest s with lambda_s >= k+s.
SylvesterSteps sylvester_forward_steps(const Overpartition& op);
DistinctPair sylvester_forward(const Overpartition& op);
/// Inverse of sylvester_forward; the pair's length difference must be k or
/// -k-1.
Overpartition sylvester_inverse(const DistinctPair& pair, int k);

/// Member of gno with k overlines -> partition with mex >= k+1: strip the
/// staircase and adjoin 1,...,k as parts.
Partition mex_embed(const Overpartition& op);
Overpartition mex_embed_inverse(const Partition& mu, int k);

/// Flip the largest part's kind: when LN > LO the largest plain part gets
/// overlined, otherwise the largest overlined part loses its mark. An
/// involution on nonempty overpartitions.
Overpartition involution(const Overpartition& op);

/// SO = LN >= 1 members <-> partitions with a repeated part (largest
/// repeated part rule).
Partition phi_on(const Overpartition& op);
Overpartition psi_on(const Partition& p);
/// SN = LO >= 1 members <-> partitions with a repeated part (smallest
/// repeated part rule).
Partition phi_no(const Overpartition& op);
Overpartition psi_no(const Partition& p);

/// Member of gon with k overlines -> partition mu with
/// k < largest(mu) - maex(mu): drop the marks and conjugate.
Partition gon_conjugate(const Overpartition& op);
Overpartition gon_conjugate_inverse(const Partition& mu, int k);

/// Partition with odd largest part and even smallest part -> partition with
/// even largest part and smallest part odd, even length >= 4, odd part at
/// the half index, and at least length/2 ones.
Partition parity_pad(const Partition& p);
Partition parity_pad_inverse(const Partition& p);

/// Overpartitions with exactly one plain part and LN > LO <-> nonempty
/// distinct partitions (drop / restore the marks below the largest part).
Partition hon_to_distinct(const Overpartition& op);
Overpartition hon_from_distinct(const Partition& p);

// Restriction domains of the involution.
bool in_cno(const Overpartition& op);         // LN > LO >= 1
bool in_fno(const Overpartition& op);         // >= 2 overlined parts, LO >= LN
bool in_hno(const Overpartition& op);         // exactly 1 overlined part, LO >= LN
bool in_con(const Overpartition& op);         // LO >= LN >= 1
bool in_fon(const Overpartition& op);         // >= 2 plain parts, LN > LO
bool in_hon(const Overpartition& op);         // exactly 1 plain part, LN > LO
bool in_cprime_on(const Overpartition& op);   // LO >= LN >= 1, LO > SN
bool in_fprime_on(const Overpartition& op);   // LN > LO, LN > SN >= 1
bool in_hprime_on(const Overpartition& op);   // LN = SN >= 1, SN >= LO

}  // namespace ovp::bijections
