#include <fmt/format.h>

#include <fstream>
#include <sstream>

#include "mtmetrics/error.hpp"
#include "mtmetrics/evalharness.hpp"

namespace mtmetrics {

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(fmt::format("cannot open '{}'", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  const std::string data = slurp(path);
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < data.size()) {
    std::size_t end = data.find('\n', start);
    if (end == std::string::npos) end = data.size();
    std::string line = data.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto bad = find_invalid_utf8(line)) {
      throw InputError(fmt::format("'{}': invalid UTF-8 at line {} (byte {})", path.string(),
                                   lines.size() + 1, *bad + 1));
    }
    lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

ParallelText read_parallel(const std::filesystem::path& hyp, const std::filesystem::path& ref) {
  ParallelText text{read_lines(hyp), read_lines(ref)};
  if (text.hyps.size() != text.refs.size()) {
    throw InputError(fmt::format("line-count mismatch: hypothesis '{}' has {} lines, reference '{}' has {} lines",
                                 hyp.string(), text.hyps.size(), ref.string(), text.refs.size()));
  }
  return text;
}

ParallelText read_tsv(const std::filesystem::path& path) {
  ParallelText text;
  const auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto tab = lines[i].find('\t');
    if (tab == std::string::npos) {
      throw InputError(fmt::format("'{}': line {} has no tab separator", path.string(), i + 1));
    }
    text.hyps.push_back(lines[i].substr(0, tab));
    text.refs.push_back(lines[i].substr(tab + 1));
  }
  return text;
}

}  // namespace mtmetrics
