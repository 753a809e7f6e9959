#include "nbga/tsp/tsplib.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace nbga::tsp {

TsplibError::TsplibError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_number(const Token& token) {
  double value = 0.0;
  const auto* begin = token.text.data();
  const auto* end = begin + token.text.size();
  if (!token.text.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw TsplibError(token.line, "expected a number, found '" + std::string(token.text) + "'");
  }
  return value;
}

bool is_numeric(std::string_view s) {
  double value = 0.0;
  const auto* begin = s.data();
  if (!s.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), value);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

class Reader {
 public:
  explicit Reader(std::string_view text) {
    std::size_t line = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      lines_.push_back({text.substr(start, end - start), line++});
      start = end + 1;
    }
  }

  bool done() const { return index_ >= lines_.size(); }
  const Token& peek() const { return lines_[index_]; }
  Token next() { return lines_[index_++]; }

  /// Pulls `count` whitespace-delimited numeric tokens, possibly spanning
  /// lines. Stops with a count error at a keyword line or end of input.
  std::vector<Token> numbers(std::size_t count, std::string_view section) {
    std::vector<Token> tokens;
    tokens.reserve(count);
    while (tokens.size() < count) {
      if (done()) {
        throw TsplibError(0, std::string(section) + ": expected " + std::to_string(count) +
                                 " values, found " + std::to_string(tokens.size()));
      }
      const Token& line = peek();
      const auto words = split(line);
      if (!words.empty() && !is_numeric(words.front().text)) {
        throw TsplibError(line.line, std::string(section) + ": expected " +
                                         std::to_string(count) + " values, found " +
                                         std::to_string(tokens.size()));
      }
      ++index_;
      for (const auto& word : words) {
        if (tokens.size() == count) {
          throw TsplibError(word.line, std::string(section) + ": more values than expected");
        }
        tokens.push_back(word);
      }
    }
    // A further purely numeric line means the section is longer than declared.
    while (!done() && split(peek()).empty()) ++index_;
    if (!done()) {
      const auto words = split(peek());
      if (is_numeric(words.front().text)) {
        throw TsplibError(peek().line, std::string(section) + ": more values than expected");
      }
    }
    return tokens;
  }

  static std::vector<Token> split(const Token& line) {
    std::vector<Token> words;
    std::size_t i = 0;
    const auto& s = line.text;
    while (i < s.size()) {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
      if (i > start) words.push_back({s.substr(start, i - start), line.line});
    }
    return words;
  }

 private:
  std::vector<Token> lines_;
  std::size_t index_ = 0;
};

enum class WeightType { Euc2d, Explicit };
enum class WeightFormat { FullMatrix, UpperRow, LowerDiagRow };

std::size_t to_dimension(const Token& value) {
  const double d = to_number(value);
  if (d < 3 || d != static_cast<double>(static_cast<std::size_t>(d))) {
    throw TsplibError(value.line, "DIMENSION must be an integer of at least 3");
  }
  return static_cast<std::size_t>(d);
}

}  // namespace

TspInstance parse_tsplib(std::string_view text, const TsplibOptions& options) {
  Reader reader(text);

  std::string name = "unnamed";
  std::optional<std::size_t> dimension;
  std::optional<WeightType> weight_type;
  std::optional<WeightFormat> weight_format;
  std::optional<std::vector<Point2>> coords;
  std::optional<std::vector<double>> weights;
  std::size_t weight_line = 0;

  auto require_dimension = [&](std::size_t line) {
    if (!dimension) throw TsplibError(line, "section appears before DIMENSION");
    return *dimension;
  };

  while (!reader.done()) {
    const Token line = reader.next();
    const auto content = trim(line.text);
    if (content.empty()) continue;
    if (content == "EOF") break;

    std::string_view key = content;
    std::string_view value;
    if (const auto colon = content.find(':'); colon != std::string_view::npos) {
      key = trim(content.substr(0, colon));
      value = trim(content.substr(colon + 1));
    }
    const Token value_token{value, line.line};

    if (key == "NAME") {
      name = std::string(value);
    } else if (key == "TYPE") {
      if (value != "TSP") {
        throw TsplibError(line.line, "unsupported problem TYPE '" + std::string(value) + "'");
      }
    } else if (key == "DIMENSION") {
      dimension = to_dimension(value_token);
    } else if (key == "EDGE_WEIGHT_TYPE") {
      if (value == "EUC_2D") {
        weight_type = WeightType::Euc2d;
      } else if (value == "EXPLICIT") {
        weight_type = WeightType::Explicit;
      } else {
        throw TsplibError(line.line, "unknown EDGE_WEIGHT_TYPE '" + std::string(value) + "'");
      }
    } else if (key == "EDGE_WEIGHT_FORMAT") {
      if (value == "FULL_MATRIX") {
        weight_format = WeightFormat::FullMatrix;
      } else if (value == "UPPER_ROW") {
        weight_format = WeightFormat::UpperRow;
      } else if (value == "LOWER_DIAG_ROW") {
        weight_format = WeightFormat::LowerDiagRow;
      } else {
        throw TsplibError(line.line, "unknown EDGE_WEIGHT_FORMAT '" + std::string(value) + "'");
      }
    } else if (key == "NODE_COORD_SECTION" || key == "DISPLAY_DATA_SECTION") {
      const std::size_t n = require_dimension(line.line);
      const auto tokens = reader.numbers(3 * n, key);
      std::vector<Point2> points(n);
      std::vector<bool> seen(n, false);
      for (std::size_t k = 0; k < n; ++k) {
        const double id = to_number(tokens[3 * k]);
        const auto index = static_cast<std::size_t>(id);
        if (id < 1 || static_cast<double>(index) != id || index > n || seen[index - 1]) {
          throw TsplibError(tokens[3 * k].line, "invalid or repeated node id");
        }
        seen[index - 1] = true;
        points[index - 1] = {to_number(tokens[3 * k + 1]), to_number(tokens[3 * k + 2])};
      }
      if (key == "NODE_COORD_SECTION") coords = std::move(points);
    } else if (key == "EDGE_WEIGHT_SECTION") {
      const std::size_t n = require_dimension(line.line);
      if (!weight_format) throw TsplibError(line.line, "EDGE_WEIGHT_SECTION without EDGE_WEIGHT_FORMAT");
      std::size_t count = 0;
      switch (*weight_format) {
        case WeightFormat::FullMatrix: count = n * n; break;
        case WeightFormat::UpperRow: count = n * (n - 1) / 2; break;
        case WeightFormat::LowerDiagRow: count = n * (n + 1) / 2; break;
      }
      weight_line = line.line;
      const auto tokens = reader.numbers(count, key);
      std::vector<double> matrix(n * n, 0.0);
      std::size_t t = 0;
      switch (*weight_format) {
        case WeightFormat::FullMatrix:
          for (std::size_t i = 0; i < n * n; ++i) matrix[i] = to_number(tokens[t++]);
          break;
        case WeightFormat::UpperRow:
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
              matrix[i * n + j] = matrix[j * n + i] = to_number(tokens[t++]);
            }
          }
          break;
        case WeightFormat::LowerDiagRow:
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
              matrix[i * n + j] = matrix[j * n + i] = to_number(tokens[t++]);
            }
          }
          break;
      }
      weights = std::move(matrix);
    } else if (key == "COMMENT" || key == "DISPLAY_DATA_TYPE" || key == "NODE_COORD_TYPE" ||
               key == "EDGE_DATA_FORMAT") {
      // informational only
    } else {
      throw TsplibError(line.line, "unsupported keyword '" + std::string(key) + "'");
    }
  }

  if (!dimension) throw TsplibError(0, "missing DIMENSION");
  if (!weight_type) throw TsplibError(0, "missing EDGE_WEIGHT_TYPE");

  auto build = [&]() {
    if (*weight_type == WeightType::Euc2d) {
      if (!coords) throw TsplibError(0, "EUC_2D instance without NODE_COORD_SECTION");
      return TspInstance::from_coordinates(name, std::move(*coords), options.rounding);
    }
    if (!weights) throw TsplibError(0, "EXPLICIT instance without EDGE_WEIGHT_SECTION");
    try {
      return TspInstance::from_matrix(name, *dimension, std::move(*weights));
    } catch (const std::invalid_argument& e) {
      throw TsplibError(weight_line, e.what());
    }
  };

  auto instance = build();
  instance.set_known_optimum(known_optimum_for(instance.name()));
  return instance;
}

TspInstance load_tsplib(const std::filesystem::path& path, const TsplibOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TsplibError(0, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_tsplib(buffer.str(), options);
}

}  // namespace nbga::tsp
