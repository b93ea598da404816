#ifndef GF3ALG_CLAIMS_HPP
#define GF3ALG_CLAIMS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace gf3alg {

enum class ClaimStatus { pass, fail, inconclusive };

std::string to_string(ClaimStatus s);

/// One verified claim: a stable identifier, the mathematical statement it
/// tracks, the outcome, and an optional witness (coordinate vectors or index
/// tuples). Failures always carry a witness. Reports are deterministic given
/// (claim_id, n, seed); elapsed_ms is the only field allowed to vary.
struct ClaimReport {
  std::string claim_id;
  std::string paper_anchor;
  ClaimStatus status = ClaimStatus::pass;
  nlohmann::ordered_json witness;  // null when absent
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;
};

nlohmann::ordered_json claim_to_json(const ClaimReport& r);
ClaimReport claim_from_json(const nlohmann::ordered_json& j);

struct ClaimOptions {
  int n = 1;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1000000;
};

struct ClaimDef {
  std::string id;
  std::string anchor;
  /// May emit several reports (sub-claims); ids of extras are prefixed with
  /// the claim id.
  std::function<std::vector<ClaimReport>(const ClaimOptions&)> run;
};

/// All claims, ordered by claim_id.
const std::vector<ClaimDef>& claim_registry();
bool claim_exists(const std::string& id);

std::vector<ClaimReport> run_claim(const std::string& id, const ClaimOptions& opt);
std::vector<ClaimReport> run_all_claims(const ClaimOptions& opt);

std::string render_text(const std::vector<ClaimReport>& reports);
nlohmann::ordered_json render_json(const std::vector<ClaimReport>& reports);

/// 0 all pass, 1 any fail, 3 inconclusive (and no fail).
int exit_code_for(const std::vector<ClaimReport>& reports);

}  // namespace gf3alg

#endif
