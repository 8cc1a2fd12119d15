#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ovp/qseries.hpp"

namespace ovp::verifier {

struct FirstFailure {
  long long index = 0;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string id;
  long long bound = 0;  // truncation order for identities, n_max otherwise
  bool pass = false;
  std::optional<FirstFailure> first_failure;
  double elapsed_ms = 0.0;
};

inline constexpr int kDefaultIdentityOrder = 60;
inline constexpr int kClassicalIdentityOrder = 80;
inline constexpr int kDefaultTheoremBound = 20;
inline constexpr int kDefaultCrosscheckBound = 25;
inline constexpr const char* kCrosscheckId = "XCHECK-ENUM";

std::vector<std::string> identity_ids();
std::vector<std::string> theorem_ids();
bool is_identity_id(const std::string& id);
bool is_theorem_id(const std::string& id);
/// 80 for the classical identities, 60 otherwise.
int default_identity_order(const std::string& id);

/// Builds both sides of the identity independently and compares every
/// coefficient 0..order exactly. A mismatch is a fail verdict, not an error.
VerificationReport verify_identity(const std::string& id, std::optional<int> order = std::nullopt);
/// Checks the integer relation for every 1 <= n <= n_max, brute force
/// against brute force or series coefficients.
VerificationReport verify_theorem(const std::string& id, int n_max = kDefaultTheoremBound);
/// Enumerated class counts against the class generating functions, and
/// E_ON/E_NO counts against their series, for every n <= n_max.
VerificationReport crosscheck_enumeration(int n_max = kDefaultCrosscheckBound);

/// Every identity, every theorem, and the crosscheck, sorted by id.
/// `order` overrides each identity's default; `n_max` overrides the
/// theorem and crosscheck bounds.
std::vector<VerificationReport> verify_all(std::optional<int> order = std::nullopt,
                                           std::optional<int> n_max = std::nullopt);

nlohmann::json to_json(const VerificationReport& report);

}  // namespace ovp::verifier
