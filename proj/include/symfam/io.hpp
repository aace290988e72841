#pragma once

#include "symfam/family.hpp"
#include "symfam/permutation.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace symfam {

// Family files: first line `n=<int>`, then one set per line as ascending
// comma-separated elements, or `-` for the empty set. Blank lines are
// skipped. Errors are ParseError with the 1-based line number.
SetFamily read_family(std::istream& in);
SetFamily load_family(const std::filesystem::path& path);

// Canonical form: members in ascending bitmask order, LF line endings.
void write_family(std::ostream& out, const SetFamily& family);
void save_family(const std::filesystem::path& path, const SetFamily& family);
std::string format_set(Mask set);

// Group files: one or more blocks, each an `n=<int>` header followed by
// generator lines of n space-separated images. Blocks are labelled
// `<label>#<k>` (k from 1) when there are several, else `<label>`.
std::vector<PermGroup> read_groups(std::istream& in, const std::string& label);
std::vector<PermGroup> load_groups(const std::filesystem::path& path);
// Exactly one block.
PermGroup load_group(const std::filesystem::path& path);

void write_group(std::ostream& out, const PermGroup& group);

}  // namespace symfam
