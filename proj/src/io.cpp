#include "rwise/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "rwise/errors.hpp"

namespace rwise {

Json subsets_json(std::span<const Subset> sets) {
  Json out = Json::array();
  for (const Subset& s : sets) out.push_back(s.elements());
  return out;
}

Json sets_json(const Family& fam) { return subsets_json(fam.members()); }

std::string serialize_family(const Family& fam, std::optional<int> r, std::optional<int> t) {
  Json j;
  j["n"] = fam.n();
  j["k"] = fam.k();
  if (r) j["r"] = *r;
  if (t) j["t"] = *t;
  j["sets"] = sets_json(fam);
  return j.dump() + "\n";
}

FamilyFile parse_family(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("family file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("family file must hold one JSON object");
  auto get_int = [&](const char* key) -> int {
    if (!j.contains(key) || !j[key].is_number_integer()) throw UsageError(std::string("family file needs integer \"") + key + "\"");
    return j[key].get<int>();
  };
  const int n = get_int("n");
  const int k = get_int("k");
  if (n < 1 || n > kMaxGround) throw UsageError("n must be in 1.." + std::to_string(kMaxGround));
  if (k < 0 || k > n) throw UsageError("k must be in 0..n");
  if (!j.contains("sets") || !j["sets"].is_array()) throw UsageError("family file needs an array \"sets\"");

  std::vector<Subset> members;
  for (const Json& entry : j["sets"]) {
    if (!entry.is_array()) throw UsageError("each set must be an array of integers");
    if (entry.size() != static_cast<std::size_t>(k)) throw UsageError("set " + entry.dump() + " does not have k elements");
    Subset s;
    int previous = 0;
    for (const Json& v : entry) {
      if (!v.is_number_integer()) throw UsageError("set " + entry.dump() + " holds a non-integer");
      const int e = v.get<int>();
      if (e < 1 || e > n) throw UsageError("set " + entry.dump() + " leaves [1, n]");
      if (e <= previous) throw UsageError("set " + entry.dump() + " is not strictly increasing");
      previous = e;
      s.insert(e);
    }
    members.push_back(s);
  }
  FamilyFile file{Family(n, k, std::move(members)), std::nullopt, std::nullopt};
  if (j.contains("r")) file.r = get_int("r");
  if (j.contains("t")) file.t = get_int("t");
  return file;
}

FamilyFile read_family_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_family(buffer.str());
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << content;
}

Json exact_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) return value.convert_to<std::uint64_t>();
  if (value < 0 && value >= std::numeric_limits<std::int64_t>::min()) return value.convert_to<std::int64_t>();
  return value.str();
}

Json report_json(const SearchReport& report) {
  Json j;
  j["mode"] = report.mode;
  j["n"] = report.params.n;
  j["k"] = report.params.k;
  j["r"] = report.params.r;
  j["t"] = report.params.t;
  if (report.mode == "stochastic") {
    j["seed"] = report.seed;
    j["budget"] = report.budget;
    j["workers"] = report.workers;
  }
  j["complete"] = report.complete;
  j["approximate_dedup"] = report.approximate_dedup;
  j["families_examined"] = report.families_examined;
  j["trivial_shortcuts"] = report.trivial_shortcuts;
  j["best_count"] = exact_json(report.best_count);
  j["reference_count"] = exact_json(report.reference_count);
  j["exceedance"] = report.exceedance;
  if (report.mode == "exhaustive") {
    Json classes = Json::array();
    for (const ClassSummary& c : report.classes) {
      Json entry;
      entry["size"] = c.family.size();
      entry["trivial"] = c.trivial;
      entry["triangles"] = exact_json(c.triangles);
      entry["sets"] = sets_json(c.family);
      classes.push_back(std::move(entry));
    }
    j["classes"] = std::move(classes);
  }
  j["best_family"] = Json::parse(serialize_family(report.best_family));
  return j;
}

std::string serialize_report(const SearchReport& report) { return report_json(report).dump() + "\n"; }

}  // namespace rwise
