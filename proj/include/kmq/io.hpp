#pragma once

// File formats: GCM files, weight and root literals, polynomials and root
// tables as JSON, and the on-disk root table cache.

#include "kmq/gcm.hpp"
#include "kmq/qpolynomial.hpp"
#include "kmq/roots.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace kmq::io {

using json = nlohmann::json;

/// A JSON integer or a "p/q" string.
Rational rational_from_json(const json& j);

/// {"matrix": [[...]], "symmetrizer": [...]} with the symmetrizer optional.
GCM gcm_from_json(const json& j);
GCM load_gcm(const std::filesystem::path& path);
json to_json(const GCM& a);

/// Either {"coroot_values": [...], "d_value": r} (or "scaling_values": [...]),
/// or the A1^(1) triple "(alpha, h, n)". Missing scaling values default to 0.
Weight parse_weight(std::string_view text, const GCM& a);
Weight weight_from_json(const json& j, const GCM& a);
json to_json(const Weight& w);

/// "[k_0, k_1, ...]".
RootVector parse_root(std::string_view text, const GCM& a);
json to_json(const RootVector& r);

/// [[exponent, "coefficient"], ...] in ascending order.
json to_json(const QPolynomial& p);
QPolynomial polynomial_from_json(const json& j);

/// {"gcm_hash", "box", "entries": [{"root", "mult"}], "checksum"}.
json to_json(const PositiveRootTable& t);
PositiveRootTable root_table_from_json(const json& j);

/// Root tables persisted as <dir>/roots-<gcm hash>.json. A file that fails to
/// parse or to match its checksum is reported on `log` and rebuilt; a file
/// written for a different matrix is ignored.
class RootTableCache {
 public:
  explicit RootTableCache(std::filesystem::path dir, std::ostream* log = nullptr);

  std::filesystem::path file_for(const GCM& a) const;
  /// The cached table when it exists, is intact and covers `box`.
  std::optional<PositiveRootTable> load(const GCM& a, const RootVector& box) const;
  void save(const PositiveRootTable& t) const;
  /// Cached or freshly computed table restricted to `box`. A miss computes the
  /// union of the requested and cached boxes and stores it.
  PositiveRootTable get(const GCM& a, const RootVector& box) const;

 private:
  std::optional<PositiveRootTable> read(const GCM& a) const;

  std::filesystem::path dir_;
  std::ostream* log_;
};

}  // namespace kmq::io
