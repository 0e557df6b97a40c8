#include "kmq/io.hpp"

#include "kmq/errors.hpp"

#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>

namespace kmq::io {

namespace {

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

VectorQ rational_vector(const json& j, Eigen::Index n, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  if (static_cast<Eigen::Index>(j.size()) != n) {
    throw DimensionMismatch(std::string(what) + " has " + std::to_string(j.size()) + " entries, expected " +
                            std::to_string(n));
  }
  VectorQ v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rational_from_json(j[static_cast<std::size_t>(i)]);
  return v;
}

std::string checksum(const json& entries) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : entries.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

bool is_affine_a1(const GCM& a) {
  return a.rank() == 2 && a(0, 1) == -2 && a(1, 0) == -2;
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected an integer or a \"p/q\" string, got " + j.dump());
}

GCM gcm_from_json(const json& j) {
  const json& m = member(j, "matrix");
  if (!m.is_array() || m.empty()) throw NotGCM("matrix must be a nonempty array of rows");
  const auto n = static_cast<Eigen::Index>(m.size());
  IntMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = m[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw NotGCM("matrix row " + std::to_string(i) + " does not have " + std::to_string(n) + " entries");
    }
    for (Eigen::Index k = 0; k < n; ++k) a(i, k) = integer(row[static_cast<std::size_t>(k)], "matrix entry");
  }
  if (j.contains("symmetrizer")) return validate_gcm(a, rational_vector(j.at("symmetrizer"), n, "symmetrizer"));
  return validate_gcm(a);
}

GCM load_gcm(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open GCM file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return gcm_from_json(parse_json(buf.str(), "GCM file"));
}

json to_json(const GCM& a) {
  json m = json::array();
  for (Eigen::Index i = 0; i < a.rank(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < a.rank(); ++k) row.push_back(a(i, k));
    m.push_back(row);
  }
  json d = json::array();
  for (Eigen::Index i = 0; i < a.rank(); ++i) d.push_back(to_string(a.symmetrizer(i)));
  return json{{"matrix", m}, {"symmetrizer", d}};
}

Weight parse_weight(std::string_view text, const GCM& a) {
  const auto start = text.find_first_not_of(" \t");
  if (start != std::string_view::npos && text[start] == '(') {
    if (!is_affine_a1(a)) throw InputError("the (alpha,h,n) shorthand needs the A1^(1) matrix");
    const auto close = text.find(')', start);
    if (close == std::string_view::npos) throw InputError("unterminated weight triple");
    std::vector<Rational> parts;
    std::string_view body = text.substr(start + 1, close - start - 1);
    while (true) {
      const auto comma = body.find(',');
      parts.push_back(parse_rational(body.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    if (parts.size() != 3) throw InputError("weight triple needs exactly three entries");
    VectorQ coroot(2);
    coroot << parts[1] - parts[0], parts[0];
    VectorQ scaling(1);
    scaling << parts[2];
    return Weight(coroot, scaling);
  }
  return weight_from_json(parse_json(text, "weight literal"), a);
}

Weight weight_from_json(const json& j, const GCM& a) {
  Weight w;
  w.coroot_values = rational_vector(member(j, "coroot_values"), a.rank(), "coroot_values");
  w.scaling_values = VectorQ::Zero(a.corank());
  if (j.contains("d_value")) {
    if (a.corank() != 1) throw DimensionMismatch("d_value needs a GCM of corank 1");
    w.scaling_values(0) = rational_from_json(j.at("d_value"));
  } else if (j.contains("scaling_values")) {
    w.scaling_values = rational_vector(j.at("scaling_values"), a.corank(), "scaling_values");
  }
  return w;
}

json to_json(const Weight& w) {
  json c = json::array();
  for (Eigen::Index i = 0; i < w.coroot_values.size(); ++i) c.push_back(to_string(w.coroot_values(i)));
  json out{{"coroot_values", c}};
  if (w.scaling_values.size() == 1) {
    out["d_value"] = to_string(w.scaling_values(0));
  } else if (w.scaling_values.size() > 1) {
    json s = json::array();
    for (Eigen::Index i = 0; i < w.scaling_values.size(); ++i) s.push_back(to_string(w.scaling_values(i)));
    out["scaling_values"] = s;
  }
  return out;
}

RootVector parse_root(std::string_view text, const GCM& a) {
  const json j = parse_json(text, "root literal");
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != a.rank()) {
    throw DimensionMismatch("root literal must be an array of " + std::to_string(a.rank()) + " integers");
  }
  RootVector r = RootVector::zero(a.rank());
  for (Eigen::Index i = 0; i < a.rank(); ++i) r[i] = integer(j[static_cast<std::size_t>(i)], "root coordinate");
  return r;
}

json to_json(const RootVector& r) {
  json out = json::array();
  for (Eigen::Index i = 0; i < r.size(); ++i) out.push_back(r[i]);
  return out;
}

json to_json(const QPolynomial& p) {
  json out = json::array();
  for (const auto& [e, c] : p.serialized()) out.push_back(json::array({e, c}));
  return out;
}

QPolynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw InputError("polynomial must be an array of [exponent, coefficient] pairs");
  QPolynomial p;
  for (const json& t : j) {
    if (!t.is_array() || t.size() != 2) throw InputError("polynomial term must be [exponent, coefficient]");
    const Rational c = rational_from_json(t[1]);
    if (!is_integer(c)) throw InputError("polynomial coefficients must be integers");
    p.add_term(integer(t[0], "exponent"), to_bigint(c));
  }
  return p;
}

json to_json(const PositiveRootTable& t) {
  json entries = json::array();
  for (const auto& [root, mult] : t.entries) {
    entries.push_back(json{{"root", to_json(root)}, {"mult", to_string(mult)}});
  }
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(t.gcm_hash));
  return json{{"gcm_hash", hash}, {"box", to_json(t.box)}, {"entries", entries}, {"checksum", checksum(entries)}};
}

PositiveRootTable root_table_from_json(const json& j) {
  PositiveRootTable t;
  const json& hash = member(j, "gcm_hash");
  if (!hash.is_string()) throw InputError("gcm_hash must be a hex string");
  try {
    t.gcm_hash = std::stoull(hash.get<std::string>(), nullptr, 16);
  } catch (const std::exception&) {
    throw InputError("gcm_hash is not hexadecimal");
  }
  const json& box = member(j, "box");
  if (!box.is_array()) throw InputError("box must be an array");
  t.box = RootVector::zero(static_cast<Eigen::Index>(box.size()));
  for (std::size_t i = 0; i < box.size(); ++i) t.box[static_cast<Eigen::Index>(i)] = integer(box[i], "box");
  const json& entries = member(j, "entries");
  if (!entries.is_array()) throw InputError("entries must be an array");
  if (j.contains("checksum") && j.at("checksum") != checksum(entries)) {
    throw InputError("root table checksum mismatch");
  }
  for (const json& e : entries) {
    const json& r = member(e, "root");
    if (!r.is_array() || r.size() != box.size()) throw InputError("root entry has the wrong rank");
    RootVector root = RootVector::zero(t.box.size());
    for (std::size_t i = 0; i < r.size(); ++i) root[static_cast<Eigen::Index>(i)] = integer(r[i], "root");
    if (!t.covers(root) || root.is_zero()) throw InputError("root entry " + root.str() + " outside the box");
    const Rational m = rational_from_json(member(e, "mult"));
    if (!is_integer(m) || m <= 0) throw InputError("multiplicity must be a positive integer");
    t.entries.emplace(root, to_bigint(m));
  }
  return t;
}

// ---------------------------------------------------------------- cache

RootTableCache::RootTableCache(std::filesystem::path dir, std::ostream* log)
    : dir_(std::move(dir)), log_(log) {}

std::filesystem::path RootTableCache::file_for(const GCM& a) const {
  return dir_ / ("roots-" + a.hash_hex() + ".json");
}

std::optional<PositiveRootTable> RootTableCache::read(const GCM& a) const {
  const auto path = file_for(a);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    std::stringstream buf;
    buf << in.rdbuf();
    PositiveRootTable t = root_table_from_json(json::parse(buf.str()));
    if (t.gcm_hash != a.hash() || t.box.size() != a.rank()) return std::nullopt;
    return t;
  } catch (const std::exception& e) {
    if (log_) *log_ << "warning: ignoring corrupt cache file " << path.string() << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

std::optional<PositiveRootTable> RootTableCache::load(const GCM& a, const RootVector& box) const {
  auto t = read(a);
  if (!t || !box.below(t->box)) return std::nullopt;
  return t->restrict_to(box);
}

void RootTableCache::save(const PositiveRootTable& t) const {
  std::filesystem::create_directories(dir_);
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(t.gcm_hash));
  const auto path = dir_ / ("roots-" + std::string(hash) + ".json");
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw InputError("cannot write cache file " + tmp.string());
    out << to_json(t).dump(1) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

PositiveRootTable RootTableCache::get(const GCM& a, const RootVector& box) const {
  const auto cached = read(a);
  if (cached && box.below(cached->box)) return cached->restrict_to(box);
  RootVector wide = box;
  if (cached) wide.coeffs = wide.coeffs.cwiseMax(cached->box.coeffs);
  PositiveRootTable fresh = positive_roots_with_mult(a, wide);
  save(fresh);
  return fresh.restrict_to(box);
}

}  // namespace kmq::io
