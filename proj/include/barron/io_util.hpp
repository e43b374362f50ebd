#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace barron {

// Shortest round-trip-exact decimal form ("%.17g"); all CSV/JSON numeric
// output goes through this so re-runs are byte-identical.
std::string fmt_g17(double x);

std::uint64_t fnv1a64(std::string_view s);
std::string hex16(std::uint64_t v);

std::string csv_row(const std::vector<std::string>& cells);

void write_text_file(const std::filesystem::path& p, const std::string& content);
std::string read_text_file(const std::filesystem::path& p);

}  // namespace barron
