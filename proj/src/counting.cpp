#include "ovp/counting.hpp"

#include <sstream>
#include <stdexcept>

namespace ovp::counting {

std::string to_string(AbVariant v) {
  switch (v) {
    case AbVariant::n_ge_o: return "n_ge_o";
    case AbVariant::n_gt_o: return "n_gt_o";
    case AbVariant::o_ge_n: return "o_ge_n";
    case AbVariant::o_gt_n: return "o_gt_n";
  }
  throw std::logic_error("unreachable ab variant");
}

long long partition_count(int n) {
  long long count = 0;
  for_each_partition(n, [&](const Partition&) { ++count; });
  return count;
}

long long overpartition_count(int n) {
  long long count = 0;
  for_each_overpartition(n, [&](const Overpartition&) { ++count; });
  return count;
}

long long class_count(classes::ClassId c, int n) {
  long long count = 0;
  for_each_overpartition(n, [&](const Overpartition& op) {
    if (classes::contains(c, op)) ++count;
  });
  return count;
}

long long count_e_on(int n) {
  long long count = 0;
  for_each_overpartition(n, [&](const Overpartition& op) {
    const BoundaryStats st = boundary_stats(op);
    if (st.so >= 1 && st.so == st.ln) ++count;
  });
  return count;
}

long long count_e_no(int n) {
  long long count = 0;
  for_each_overpartition(n, [&](const Overpartition& op) {
    const BoundaryStats st = boundary_stats(op);
    if (st.sn >= 1 && st.sn == st.lo) ++count;
  });
  return count;
}

long long count_repeated(int n) {
  long long count = 0;
  for_each_partition(n, [&](const Partition& p) {
    if (!p.has_distinct_parts()) ++count;
  });
  return count;
}

long long count_distinct(int n) {
  long long count = 0;
  for_each_partition(n, [&](const Partition& p) {
    if (p.has_distinct_parts()) ++count;
  });
  return count;
}

long long count_distinct_pairs(int n) {
  long long total = 0;
  for (int j = 0; j <= n; ++j) total += count_distinct(j) * count_distinct(n - j);
  return total;
}

long long p_even_length(int n) {
  long long count = 0;
  for_each_partition(n, [&](const Partition& p) {
    if (p.length() % 2 == 0) ++count;
  });
  return count;
}

long long p_even_largest_odd_smallest(int n) {
  long long count = 0;
  for_each_partition(n, [&](const Partition& p) {
    if (!p.empty() && p.largest() % 2 == 0 && p.smallest() % 2 == 1) ++count;
  });
  return count;
}

long long p_odd_largest_even_smallest(int n) {
  long long count = 0;
  for_each_partition(n, [&](const Partition& p) {
    if (!p.empty() && p.largest() % 2 == 1 && p.smallest() % 2 == 0) ++count;
  });
  return count;
}

long long hprime_on(int n) {
  long long count = 0;
  for_each_overpartition(n, [&](const Overpartition& op) {
    const BoundaryStats st = boundary_stats(op);
    if (st.sn >= 1 && st.sn >= st.lo && st.ln == st.sn) ++count;
  });
  return count;
}

namespace {

bool cor22_predicate(const Overpartition& op) {
  const BoundaryStats st = boundary_stats(op);
  if (st.ln == 0 || st.ln % 2 == 0) return false;
  for (const OverEntry& e : op.entries())
    if (!e.overlined && e.size < st.ln && e.size % 2 == 1) return false;
  return true;
}

}  // namespace

long long cor22_count(int n) {
  if (n < 1) throw std::invalid_argument("cor22_count requires n >= 1");
  long long count = 0;
  for_each_overpartition(n, [&](const Overpartition& op) {
    if (cor22_predicate(op)) ++count;
  });
  return count;
}

long long sigma_mex(int n) {
  long long total = 0;
  for_each_partition(n, [&](const Partition& p) { total += mex(p); });
  return total;
}

long long sigma_largest(int n) {
  long long total = 0;
  for_each_partition(n, [&](const Partition& p) { total += p.largest(); });
  return total;
}

long long sigma_maex(int n) {
  long long total = 0;
  for_each_partition(n, [&](const Partition& p) {
    if (!p.empty()) total += maex(p);
  });
  return total;
}

namespace {

long long signed_ell(const Overpartition& op, AbVariant v) {
  const EllStats ell = ell_stats(op);
  long long value = 0;
  switch (v) {
    case AbVariant::n_ge_o: value = ell.n_ge_o; break;
    case AbVariant::n_gt_o: value = ell.n_gt_o; break;
    case AbVariant::o_ge_n: value = ell.o_ge_n; break;
    case AbVariant::o_gt_n: value = ell.o_gt_n; break;
  }
  return value % 2 == 0 ? 1 : -1;
}

}  // namespace

long long ab_difference(AbVariant v, int n) {
  if (n < 1) throw std::invalid_argument("ab_difference requires n >= 1");
  const bool needs_plain = v == AbVariant::o_ge_n || v == AbVariant::o_gt_n;
  long long total = 0;
  for_each_overpartition(n, [&](const Overpartition& op) {
    if (needs_plain && boundary_stats(op).sn == 0) return;
    total += signed_ell(op, v);
  });
  return total;
}

CountRecord count_record(int n) {
  CountRecord rec;
  rec.n = n;
  for_each_overpartition(n, [&](const Overpartition& op) {
    const BoundaryStats st = boundary_stats(op);
    for (classes::ClassId c : classes::all_classes()) {
      if (!classes::contains(c, op)) continue;
      switch (c) {
        case classes::ClassId::gno: ++rec.gno; break;
        case classes::ClassId::eno: ++rec.eno; break;
        case classes::ClassId::gon: ++rec.gon; break;
        case classes::ClassId::eon: ++rec.eon; break;
      }
    }
    if (st.so >= 1 && st.so == st.ln) ++rec.e_on;
    if (st.sn >= 1 && st.sn == st.lo) ++rec.e_no;
    if (st.sn >= 1 && st.sn >= st.lo && st.ln == st.sn) ++rec.hprime_on;
    if (n >= 1 && cor22_predicate(op)) ++rec.cor22;
    if (n >= 1) {
      rec.ab_diffs[0] += signed_ell(op, AbVariant::n_ge_o);
      rec.ab_diffs[1] += signed_ell(op, AbVariant::n_gt_o);
      if (st.sn >= 1) {
        rec.ab_diffs[2] += signed_ell(op, AbVariant::o_ge_n);
        rec.ab_diffs[3] += signed_ell(op, AbVariant::o_gt_n);
      }
    }
  });
  for_each_partition(n, [&](const Partition& p) {
    if (p.has_distinct_parts()) ++rec.d; else ++rec.r;
    if (p.length() % 2 == 0) ++rec.p_e;
    if (!p.empty()) {
      if (p.largest() % 2 == 0 && p.smallest() % 2 == 1) ++rec.p_eo;
      if (p.largest() % 2 == 1 && p.smallest() % 2 == 0) ++rec.p_oe;
      rec.sigma_maex += maex(p);
    }
    rec.sigma_mex += mex(p);
    rec.sigma_l += p.largest();
  });
  rec.d2 = count_distinct_pairs(n);
  return rec;
}

std::string csv_header() {
  return "n,gno,eno,gon,eon,e_on,e_no,r,d,d2,p_e,p_eo,p_oe,hprime_on,cor22,"
         "sigma_mex,sigma_l,sigma_maex,ab_ngeo,ab_ngto,ab_ogen,ab_ogtn";
}

std::string csv_row(const CountRecord& r) {
  std::ostringstream os;
  os << r.n << ',' << r.gno << ',' << r.eno << ',' << r.gon << ',' << r.eon << ',' << r.e_on << ','
     << r.e_no << ',' << r.r << ',' << r.d << ',' << r.d2 << ',' << r.p_e << ',' << r.p_eo << ','
     << r.p_oe << ',' << r.hprime_on << ',' << r.cor22 << ',' << r.sigma_mex << ',' << r.sigma_l
     << ',' << r.sigma_maex << ',' << r.ab_diffs[0] << ',' << r.ab_diffs[1] << ',' << r.ab_diffs[2]
     << ',' << r.ab_diffs[3];
  return os.str();
}

nlohmann::json to_json(const CountRecord& r) {
  return nlohmann::json{{"n", r.n},
                        {"gno", r.gno},
                        {"eno", r.eno},
                        {"gon", r.gon},
                        {"eon", r.eon},
                        {"e_on", r.e_on},
                        {"e_no", r.e_no},
                        {"r", r.r},
                        {"d", r.d},
                        {"d2", r.d2},
                        {"p_e", r.p_e},
                        {"p_eo", r.p_eo},
                        {"p_oe", r.p_oe},
                        {"hprime_on", r.hprime_on},
                        {"cor22", r.cor22},
                        {"sigma_mex", r.sigma_mex},
                        {"sigma_l", r.sigma_l},
                        {"sigma_maex", r.sigma_maex},
                        {"ab_ngeo", r.ab_diffs[0]},
                        {"ab_ngto", r.ab_diffs[1]},
                        {"ab_ogen", r.ab_diffs[2]},
                        {"ab_ogtn", r.ab_diffs[3]}};
}

}  // namespace ovp::counting
