#pragma once

#include <array>
#include <string>
#include <vector>

#include "ovp/partitions.hpp"

namespace ovp::classes {

/// The four separable families. Membership in terms of boundary stats:
///   gno: SO = 0 or SO > LN   (overlined sizes strictly above plain sizes)
///   eno: SO = 0 or SO >= LN
///   gon: SN >= 1 and SN > LO (plain parts required, strictly above)
///   eon: SN >= 1 and SN >= LO
enum class ClassId { gno, eno, gon, eon };

constexpr std::array<ClassId, 4> all_classes() {
  return {ClassId::gno, ClassId::eno, ClassId::gon, ClassId::eon};
}

std::string to_string(ClassId c);
ClassId class_from_string(const std::string& name);

bool contains(ClassId c, const Overpartition& op);
std::vector<ClassId> classify(const Overpartition& op);

/// The finite basis of the class restricted to m parts: one element per
/// admissible overline count k (k = 0..m for gno/eno, k = 0..m-1 for
/// gon/eon), so the four bases have m+1, m+1, m, m elements.
std::vector<Overpartition> basis(ClassId c, int m);

/// Base plus weakly decreasing nonnegative padding. Padding entries are
/// aligned with the base's parts sorted by size descending, the dominant
/// kind first on ties (overlined first for gno/eno, plain first for
/// gon/eon); the class id is part of the value because one base multiset
/// can sit in two bases with different alignments.
struct Decomposition {
  ClassId class_id = ClassId::gno;
  Overpartition base;
  std::vector<int> padding;
};

/// The unique decomposition of a nonempty class member.
Decomposition decompose(const Overpartition& op, ClassId c);
/// Rebuilds the member; total inverse of decompose on valid inputs.
Overpartition compose(const Decomposition& d);

}  // namespace ovp::classes
