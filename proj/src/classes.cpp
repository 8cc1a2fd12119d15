#include "ovp/classes.hpp"

#include <algorithm>
#include <stdexcept>

namespace ovp::classes {

std::string to_string(ClassId c) {
  switch (c) {
    case ClassId::gno: return "gno";
    case ClassId::eno: return "eno";
    case ClassId::gon: return "gon";
    case ClassId::eon: return "eon";
  }
  throw std::logic_error("unreachable class id");
}

ClassId class_from_string(const std::string& name) {
  if (name == "gno") return ClassId::gno;
  if (name == "eno") return ClassId::eno;
  if (name == "gon") return ClassId::gon;
  if (name == "eon") return ClassId::eon;
  throw std::invalid_argument("unknown class '" + name + "' (expected gno|eno|gon|eon)");
}

bool contains(ClassId c, const Overpartition& op) {
  const BoundaryStats st = boundary_stats(op);
  switch (c) {
    case ClassId::gno: return st.so == 0 || st.so > st.ln;
    case ClassId::eno: return st.so == 0 || st.so >= st.ln;
    case ClassId::gon: return st.sn >= 1 && st.sn > st.lo;
    case ClassId::eon: return st.sn >= 1 && st.sn >= st.lo;
  }
  throw std::logic_error("unreachable class id");
}

std::vector<ClassId> classify(const Overpartition& op) {
  std::vector<ClassId> out;
  for (ClassId c : all_classes())
    if (contains(c, op)) out.push_back(c);
  return out;
}

namespace {

bool overlined_first(ClassId c) { return c == ClassId::gno || c == ClassId::eno; }

int max_overlines(ClassId c, int m) { return overlined_first(c) ? m : m - 1; }

// Basis element for the class with m parts and k overlined parts, already
// in padding-alignment order (size descending, dominant kind first).
std::vector<OverEntry> basis_slots(ClassId c, int m, int k) {
  if (m < 1) throw std::invalid_argument("basis part count must be >= 1");
  if (k < 0 || k > max_overlines(c, m))
    throw std::invalid_argument("overline count out of range for this basis");
  std::vector<OverEntry> slots;
  slots.reserve(static_cast<std::size_t>(m));
  switch (c) {
    case ClassId::gno:
      // k < m: overlined k+1..2 above plain ones; k = m: overlined m..1
      if (k < m) {
        for (int s = k + 1; s >= 2; --s) slots.push_back({s, true});
        for (int i = 0; i < m - k; ++i) slots.push_back({1, false});
      } else {
        for (int s = m; s >= 1; --s) slots.push_back({s, true});
      }
      break;
    case ClassId::eno:
      // overlined k..1 above (or tied with) plain ones
      for (int s = k; s >= 1; --s) slots.push_back({s, true});
      for (int i = 0; i < m - k; ++i) slots.push_back({1, false});
      break;
    case ClassId::gon:
      // plain parts k+1 strictly above overlined k..1
      for (int i = 0; i < m - k; ++i) slots.push_back({k + 1, false});
      for (int s = k; s >= 1; --s) slots.push_back({s, true});
      break;
    case ClassId::eon:
      // k = 0: plain ones; k >= 1: plain k's tied with the overlined k
      if (k == 0) {
        for (int i = 0; i < m; ++i) slots.push_back({1, false});
      } else {
        for (int i = 0; i < m - k; ++i) slots.push_back({k, false});
        for (int s = k; s >= 1; --s) slots.push_back({s, true});
      }
      break;
  }
  return slots;
}

std::vector<OverEntry> aligned_entries(ClassId c, const Overpartition& op) {
  std::vector<OverEntry> entries = op.entries();
  const bool over_first = overlined_first(c);
  std::stable_sort(entries.begin(), entries.end(), [&](const OverEntry& a, const OverEntry& b) {
    if (a.size != b.size) return a.size > b.size;
    if (a.overlined != b.overlined) return over_first ? a.overlined : !a.overlined;
    return false;
  });
  return entries;
}

}  // namespace

std::vector<Overpartition> basis(ClassId c, int m) {
  std::vector<Overpartition> out;
  for (int k = 0; k <= max_overlines(c, m); ++k) out.emplace_back(basis_slots(c, m, k));
  return out;
}

Decomposition decompose(const Overpartition& op, ClassId c) {
  if (op.empty()) throw std::domain_error("the empty overpartition has no decomposition");
  if (!contains(c, op)) throw std::domain_error("overpartition is not in class " + to_string(c));
  const int m = op.part_count();
  const int k = op.overline_count();
  const std::vector<OverEntry> slots = basis_slots(c, m, k);
  const std::vector<OverEntry> aligned = aligned_entries(c, op);
  std::vector<int> padding(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (aligned[idx].overlined != slots[idx].overlined)
      throw std::logic_error("decompose: overline pattern does not match the basis element");
    padding[idx] = aligned[idx].size - slots[idx].size;
    if (padding[idx] < 0) throw std::logic_error("decompose: negative padding");
    if (i > 0 && padding[idx] > padding[idx - 1])
      throw std::logic_error("decompose: padding not weakly decreasing");
  }
  return Decomposition{c, Overpartition(slots), std::move(padding)};
}

Overpartition compose(const Decomposition& d) {
  const int m = d.base.part_count();
  if (m < 1) throw std::invalid_argument("compose: base must be nonempty");
  if (static_cast<int>(d.padding.size()) != m)
    throw std::invalid_argument("compose: padding length must equal the base part count");
  for (int i = 0; i < m; ++i) {
    if (d.padding[static_cast<std::size_t>(i)] < 0)
      throw std::invalid_argument("compose: padding must be nonnegative");
    if (i > 0 && d.padding[static_cast<std::size_t>(i)] > d.padding[static_cast<std::size_t>(i - 1)])
      throw std::invalid_argument("compose: padding must be weakly decreasing");
  }
  const int k = d.base.overline_count();
  std::vector<OverEntry> slots;
  try {
    slots = basis_slots(d.class_id, m, k);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("compose: base is not a basis element of the class");
  }
  if (Overpartition(slots) != d.base)
    throw std::invalid_argument("compose: base is not a basis element of the class");
  std::vector<OverEntry> entries;
  entries.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    entries.push_back({slots[idx].size + d.padding[idx], slots[idx].overlined});
  }
  Overpartition result{std::move(entries)};
  if (!contains(d.class_id, result))
    throw std::logic_error("compose: result escaped the class");
  return result;
}

}  // namespace ovp::classes
