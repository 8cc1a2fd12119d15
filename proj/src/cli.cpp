#include "ovp/cli.hpp"

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ovp/bijections.hpp"
#include "ovp/classes.hpp"
#include "ovp/counting.hpp"
#include "ovp/partitions.hpp"
#include "ovp/verifier.hpp"

namespace ovp::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerification = 3;

long long count_stat(const std::string& what, int n) {
  using counting::AbVariant;
  static const std::map<std::string, std::function<long long(int)>> stats = {
      {"gno", [](int m) { return counting::class_count(classes::ClassId::gno, m); }},
      {"eno", [](int m) { return counting::class_count(classes::ClassId::eno, m); }},
      {"gon", [](int m) { return counting::class_count(classes::ClassId::gon, m); }},
      {"eon", [](int m) { return counting::class_count(classes::ClassId::eon, m); }},
      {"p", counting::partition_count},
      {"op", counting::overpartition_count},
      {"e_on", counting::count_e_on},
      {"e_no", counting::count_e_no},
      {"r", counting::count_repeated},
      {"d", counting::count_distinct},
      {"d2", counting::count_distinct_pairs},
      {"p_e", counting::p_even_length},
      {"p_eo", counting::p_even_largest_odd_smallest},
      {"p_oe", counting::p_odd_largest_even_smallest},
      {"hprime_on", counting::hprime_on},
      {"cor22", counting::cor22_count},
      {"sigma_mex", counting::sigma_mex},
      {"sigma_l", counting::sigma_largest},
      {"sigma_maex", counting::sigma_maex},
      {"ab_ngeo", [](int m) { return counting::ab_difference(AbVariant::n_ge_o, m); }},
      {"ab_ngto", [](int m) { return counting::ab_difference(AbVariant::n_gt_o, m); }},
      {"ab_ogen", [](int m) { return counting::ab_difference(AbVariant::o_ge_n, m); }},
      {"ab_ogtn", [](int m) { return counting::ab_difference(AbVariant::o_gt_n, m); }},
  };
  auto it = stats.find(what);
  if (it == stats.end()) throw CLI::ValidationError("count", "unknown class or statistic '" + what + "'");
  return it->second(n);
}

std::vector<std::string> stat_names() {
  return {"gno",   "eno",   "gon",       "eon",   "p",         "op",        "e_on",
          "e_no",  "r",     "d",         "d2",    "p_e",       "p_eo",      "p_oe",
          "hprime_on", "cor22", "sigma_mex", "sigma_l", "sigma_maex", "ab_ngeo", "ab_ngto",
          "ab_ogen",   "ab_ogtn"};
}

bijections::DistinctPair parse_pair(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  std::optional<std::string> alpha, beta;
  while (is >> tok) {
    if (tok.rfind("alpha=", 0) == 0)
      alpha = tok.substr(6);
    else if (tok.rfind("beta=", 0) == 0)
      beta = tok.substr(5);
    else
      throw std::invalid_argument("expected tokens alpha=<parts> beta=<parts>, got '" + tok + "'");
  }
  if (!alpha || !beta) throw std::invalid_argument("pair input needs both alpha= and beta=");
  return {parse_partition(*alpha), parse_partition(*beta)};
}

std::string format_pair(const bijections::DistinctPair& pair) {
  return "alpha=" + to_string(pair.alpha) + " beta=" + to_string(pair.beta);
}

int require_k(const std::optional<int>& k) {
  if (!k) throw CLI::ValidationError("biject", "this map needs --k");
  return *k;
}

std::string apply_bijection(const std::string& map, bool inverse, const std::string& input,
                            const std::optional<int>& k) {
  using namespace bijections;
  if (map == "sylvester") {
    if (inverse) return to_string(sylvester_inverse(parse_pair(input), require_k(k)));
    return format_pair(sylvester_forward(parse_overpartition(input)));
  }
  if (map == "mex-embed") {
    if (inverse) return to_string(mex_embed_inverse(parse_partition(input), require_k(k)));
    return to_string(mex_embed(parse_overpartition(input)));
  }
  if (map == "involution") {
    return to_string(involution(parse_overpartition(input)));  // self-inverse
  }
  if (map == "phi-on") {
    if (inverse) return to_string(psi_on(parse_partition(input)));
    return to_string(phi_on(parse_overpartition(input)));
  }
  if (map == "phi-no") {
    if (inverse) return to_string(psi_no(parse_partition(input)));
    return to_string(phi_no(parse_overpartition(input)));
  }
  if (map == "gon-conj") {
    if (inverse) return to_string(gon_conjugate_inverse(parse_partition(input), require_k(k)));
    return to_string(gon_conjugate(parse_overpartition(input)));
  }
  if (map == "parity-pad") {
    if (inverse) return to_string(parity_pad_inverse(parse_partition(input)));
    return to_string(parity_pad(parse_partition(input)));
  }
  if (map == "hon-distinct") {
    if (inverse) return to_string(hon_from_distinct(parse_partition(input)));
    return to_string(hon_to_distinct(parse_overpartition(input)));
  }
  throw CLI::ValidationError("biject", "unknown map '" + map + "'");
}

void print_report(std::ostream& out, const verifier::VerificationReport& report) {
  const bool identity = verifier::is_identity_id(report.id);
  out << (report.pass ? "[PASS] " : "[FAIL] ") << report.id
      << (identity ? " order=" : " nmax=") << report.bound;
  if (report.first_failure) {
    out << " first disagreement at " << (identity ? "q^" : "n=") << report.first_failure->index
        << ": lhs=" << report.first_failure->lhs << " rhs=" << report.first_failure->rhs;
  }
  out << " (" << static_cast<long long>(report.elapsed_ms) << " ms)\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact overpartition families, q-series, and bijection certification"};
  app.name("ovp");
  app.require_subcommand(1);

  auto* count_cmd = app.add_subcommand("count", "count a class or statistic at weight n");
  std::string count_what;
  int count_n = 0;
  count_cmd->add_option("what", count_what, "class (gno|eno|gon|eon) or statistic")->required();
  count_cmd->add_option("--n", count_n, "weight")->required()->check(CLI::NonNegativeNumber);

  auto* verify_cmd = app.add_subcommand("verify", "verify registered identities and theorems");
  std::string verify_id;
  int verify_order = 0, verify_nmax = 0;
  bool verify_json = false;
  auto* id_opt = verify_cmd->add_option("--id", verify_id, "run a single identity/theorem id");
  auto* order_opt =
      verify_cmd->add_option("--order", verify_order, "truncation order for identities")
          ->check(CLI::PositiveNumber);
  auto* nmax_opt = verify_cmd->add_option("--nmax", verify_nmax, "bound for theorems/crosscheck")
                       ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", verify_json, "emit JSON reports");

  auto* biject_cmd = app.add_subcommand("biject", "apply a bijection to one object");
  std::string biject_map, biject_input;
  bool biject_inverse = false;
  int biject_k = 0;
  biject_cmd
      ->add_option("map", biject_map, "sylvester|mex-embed|involution|phi-on|phi-no|gon-conj|parity-pad|hon-distinct")
      ->required()
      ->check(CLI::IsMember({"sylvester", "mex-embed", "involution", "phi-on", "phi-no", "gon-conj",
                             "parity-pad", "hon-distinct"}));
  biject_cmd->add_option("--input", biject_input, "object in text notation")->required();
  biject_cmd->add_flag("--inverse", biject_inverse, "apply the inverse map");
  auto* k_opt = biject_cmd->add_option("--k", biject_k, "overline count parameter")
                    ->check(CLI::NonNegativeNumber);

  auto* table_cmd = app.add_subcommand("table", "emit count records for n = 0..nmax");
  int table_nmax = 0;
  bool table_csv = false, table_json = false;
  table_cmd->add_option("--nmax", table_nmax, "largest weight")->required()->check(CLI::NonNegativeNumber);
  auto* csv_flag = table_cmd->add_flag("--csv", table_csv, "CSV output (default)");
  auto* json_flag = table_cmd->add_flag("--json", table_json, "JSON output");
  csv_flag->excludes(json_flag);

  auto* list_cmd = app.add_subcommand("list", "list identity, theorem, and bijection names");

  std::vector<const char*> argv;
  argv.push_back("ovp");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (*count_cmd) {
      out << count_stat(count_what, count_n) << '\n';
      return kExitOk;
    }

    if (*verify_cmd) {
      const std::optional<int> order = *order_opt ? std::optional<int>(verify_order) : std::nullopt;
      const std::optional<int> nmax = *nmax_opt ? std::optional<int>(verify_nmax) : std::nullopt;
      std::vector<verifier::VerificationReport> reports;
      if (*id_opt) {
        if (verifier::is_identity_id(verify_id))
          reports.push_back(verifier::verify_identity(verify_id, order));
        else if (verifier::is_theorem_id(verify_id))
          reports.push_back(
              verifier::verify_theorem(verify_id, nmax.value_or(verifier::kDefaultTheoremBound)));
        else if (verify_id == verifier::kCrosscheckId)
          reports.push_back(verifier::crosscheck_enumeration(
              nmax.value_or(verifier::kDefaultCrosscheckBound)));
        else
          throw CLI::ValidationError("verify", "unknown id '" + verify_id + "'");
      } else {
        reports = verifier::verify_all(order, nmax);
      }
      bool all_pass = true;
      if (verify_json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& report : reports) j.push_back(verifier::to_json(report));
        out << j.dump(2) << '\n';
      }
      for (const auto& report : reports) {
        if (!verify_json) print_report(out, report);
        all_pass = all_pass && report.pass;
      }
      return all_pass ? kExitOk : kExitVerification;
    }

    if (*biject_cmd) {
      const std::optional<int> k = *k_opt ? std::optional<int>(biject_k) : std::nullopt;
      out << apply_bijection(biject_map, biject_inverse, biject_input, k) << '\n';
      return kExitOk;
    }

    if (*table_cmd) {
      if (table_json) {
        nlohmann::json j = nlohmann::json::array();
        for (int n = 0; n <= table_nmax; ++n) j.push_back(counting::to_json(counting::count_record(n)));
        out << j.dump(2) << '\n';
      } else {
        out << counting::csv_header() << '\n';
        for (int n = 0; n <= table_nmax; ++n) out << counting::csv_row(counting::count_record(n)) << '\n';
      }
      return kExitOk;
    }

    if (*list_cmd) {
      out << "identities:\n";
      for (const auto& id : verifier::identity_ids()) out << "  " << id << '\n';
      out << "theorems:\n";
      for (const auto& id : verifier::theorem_ids()) out << "  " << id << '\n';
      out << "crosscheck:\n  " << verifier::kCrosscheckId << '\n';
      out << "bijections:\n";
      for (const char* name : {"sylvester", "mex-embed", "involution", "phi-on", "phi-no",
                               "gon-conj", "parity-pad", "hon-distinct"})
        out << "  " << name << '\n';
      out << "classes:\n";
      for (classes::ClassId c : classes::all_classes()) out << "  " << classes::to_string(c) << '\n';
      out << "statistics:\n";
      for (const auto& name : stat_names()) out << "  " << name << '\n';
      return kExitOk;
    }

    err << "no subcommand selected\n";
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error at position " << e.position << ": " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace ovp::cli
