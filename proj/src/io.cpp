#include "symfam/io.hpp"

#include "symfam/errors.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace symfam {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view token, int& value) {
  if (token.empty()) return false;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc{} && ptr == end;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line, trimmed.
  bool next(std::string_view& out) {
    while (std::getline(in_, buffer_)) {
      ++line_;
      out = trim(buffer_);
      if (!out.empty()) return true;
    }
    return false;
  }

  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::string buffer_;
  std::size_t line_ = 0;
};

int parse_header(std::string_view text, std::size_t line, int max_n) {
  int n = 0;
  if (!text.starts_with("n=") || !parse_int(text.substr(2), n))
    throw ParseError(line, "expected header 'n=<int>', got '" + std::string(text) + "'");
  if (n < 1 || n > max_n)
    throw ParseError(line, "universe size must lie in [1, " + std::to_string(max_n) + "], got " + std::to_string(n));
  return n;
}

Mask parse_set(std::string_view text, int n, std::size_t line) {
  if (text == "-") return 0;
  Mask set = 0;
  int previous = 0;
  while (true) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    int element = 0;
    if (!parse_int(token, element)) throw ParseError(line, "malformed element '" + std::string(token) + "'");
    if (element < 1 || element > n)
      throw ParseError(line, "element " + std::to_string(element) + " out of range [1, " + std::to_string(n) + "]");
    if (element <= previous) throw ParseError(line, "elements must be strictly ascending");
    set |= Mask{1} << (element - 1);
    previous = element;
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return set;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

SetFamily read_family(std::istream& in) {
  LineReader reader(in);
  std::string_view text;
  if (!reader.next(text)) throw ParseError(reader.line() + 1, "missing header 'n=<int>'");
  const int n = parse_header(text, reader.line(), kMaxExplicitUniverse);
  FamilyBuilder builder(n);
  while (reader.next(text)) {
    const Mask set = parse_set(text, n, reader.line());
    if (builder.contains(set)) throw ParseError(reader.line(), "duplicate set " + format_set(set));
    builder.add(set);
  }
  return std::move(builder).build();
}

SetFamily load_family(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_family(in);
}

std::string format_set(Mask set) {
  if (set == 0) return "-";
  std::string out;
  for (int i = 0; set != 0; ++i, set >>= 1)
    if (set & 1) {
      if (!out.empty()) out += ',';
      out += std::to_string(i + 1);
    }
  return out;
}

void write_family(std::ostream& out, const SetFamily& family) {
  out << "n=" << family.n() << '\n';
  for (Mask m : family) out << format_set(m) << '\n';
}

void save_family(const std::filesystem::path& path, const SetFamily& family) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path.string() + "'");
  write_family(out, family);
}

std::vector<PermGroup> read_groups(std::istream& in, const std::string& label) {
  struct Block {
    int n;
    std::vector<Permutation> generators;
    std::size_t header_line;
  };
  std::vector<Block> blocks;
  LineReader reader(in);
  std::string_view text;
  while (reader.next(text)) {
    if (text.starts_with("n=")) {
      blocks.push_back({parse_header(text, reader.line(), kMaxSubsetUniverse), {}, reader.line()});
      continue;
    }
    if (blocks.empty()) throw ParseError(reader.line(), "missing header 'n=<int>'");
    Block& block = blocks.back();
    std::vector<int> images;
    std::istringstream tokens{std::string(text)};
    for (std::string token; tokens >> token;) {
      int image = 0;
      if (!parse_int(token, image)) throw ParseError(reader.line(), "malformed image '" + token + "'");
      images.push_back(image);
    }
    if (static_cast<int>(images.size()) != block.n)
      throw ParseError(reader.line(), "expected " + std::to_string(block.n) + " images, got " +
                                          std::to_string(images.size()));
    try {
      block.generators.emplace_back(std::move(images));
    } catch (const DomainError& e) {
      throw ParseError(reader.line(), e.what());
    }
  }
  if (blocks.empty()) throw ParseError(reader.line() + 1, "missing header 'n=<int>'");

  std::vector<PermGroup> groups;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    auto& block = blocks[k];
    if (block.generators.empty()) block.generators.push_back(Permutation::identity(block.n));
    const std::string name = blocks.size() == 1 ? label : label + "#" + std::to_string(k + 1);
    groups.emplace_back(std::move(block.generators), name);
  }
  return groups;
}

std::vector<PermGroup> load_groups(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_groups(in, path.stem().string());
}

PermGroup load_group(const std::filesystem::path& path) {
  auto groups = load_groups(path);
  if (groups.size() != 1)
    throw DomainError("'" + path.string() + "' holds " + std::to_string(groups.size()) + " groups, expected one");
  return std::move(groups.front());
}

void write_group(std::ostream& out, const PermGroup& group) {
  out << "n=" << group.n() << '\n';
  for (const auto& g : group.generators()) out << g.to_string() << '\n';
}

}  // namespace symfam
