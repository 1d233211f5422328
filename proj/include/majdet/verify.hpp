#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "majdet/formulas.hpp"
#include "majdet/matrix.hpp"
#include "majdet/tableaux.hpp"

namespace majdet {

enum class Identity {
  maj,
  fmaj,
  maj_col,
  amaj,
  signed_general,
  signed_nneg,
  signed_majB,
  signed_sneg,
  dihedral,
  defining,
  irrep,
};

/// "maj", "fmaj", "maj-col", "amaj", "signed", "signed-nneg", "signed-majB",
/// "signed-sneg", "dihedral", "defining", "irrep".
std::string identity_name(Identity id);
std::optional<Identity> parse_identity(std::string_view name);
const std::vector<Identity>& all_identities();

/// Largest group the verifier will enumerate.
inline constexpr std::size_t kMaxGroupOrder = 2000;

struct VerifyParams {
  Identity identity = Identity::maj;
  int n = 1;
  int m = 1;
  std::optional<Partition> lambda;
  /// Unset: symbolic when the matrix has at most symbolic_threshold rows.
  std::optional<CompareMode> mode;
  ModularOptions modular;
  std::size_t symbolic_threshold = 24;
  Execution exec = Execution::parallel;
};

struct VerificationReport {
  std::string identity;
  int n = 1;
  std::optional<int> m;
  std::optional<Partition> lambda;
  CompareMode mode = CompareMode::symbolic;
  bool pass = false;
  std::optional<std::string> lhs;
  std::optional<std::string> rhs;
  std::optional<nlohmann::json> rhs_factors;
  std::optional<std::uint64_t> prime;
  std::optional<std::uint64_t> seed;
  std::optional<int> points;
  /// First mismatching point or coefficient.
  std::optional<std::string> mismatch;
  double elapsed_ms = 0;
};

/// Builds both sides and compares them. Throws InvalidArgument for parameters
/// outside an identity's domain.
VerificationReport verify(const VerifyParams& params);

/// {identity, params, mode, pass, lhs?, rhs?, prime?, seed?, points?, mismatch?, elapsed_ms}
nlohmann::json to_json(const VerificationReport& report, bool include_timing = true);

}  // namespace majdet
