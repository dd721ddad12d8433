#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rwise/bigint.hpp"
#include "rwise/family.hpp"
#include "rwise/search.hpp"

namespace rwise {

using Json = nlohmann::ordered_json;

/// On-disk family: {"n":..,"k":..,["r":..,"t":..,]"sets":[[1,2],...]} with
/// 1-based, strictly increasing inner lists. Written as one line plus "\n".
struct FamilyFile {
  Family family;
  std::optional<int> r;
  std::optional<int> t;
};

std::string serialize_family(const Family& fam, std::optional<int> r = {}, std::optional<int> t = {});
/// Throws UsageError on malformed input.
FamilyFile parse_family(std::string_view text);
FamilyFile read_family_file(const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, const std::string& content);

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json exact_json(const BigInt& value);
Json sets_json(const Family& fam);
Json subsets_json(std::span<const Subset> sets);

Json report_json(const SearchReport& report);
std::string serialize_report(const SearchReport& report);

}  // namespace rwise
