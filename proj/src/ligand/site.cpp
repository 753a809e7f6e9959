#include "nbga/ligand/site.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace nbga::ligand {

SiteError::SiteError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

void ActiveSite::validate() const {
  if (residues.empty()) throw std::invalid_argument("active site has no residues");
  if (right_anchor == left_anchor) throw std::invalid_argument("anchors must be distinct");
  if (!(right_axis > 0.0) || !(left_axis > 0.0)) {
    throw std::invalid_argument("major axes must be positive");
  }
}

namespace {

std::vector<std::string_view> words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

double number(std::string_view word, std::size_t line) {
  double value = 0.0;
  const auto* begin = word.data();
  if (!word.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw SiteError(line, "expected a number, found '" + std::string(word) + "'");
  }
  return value;
}

}  // namespace

ActiveSite parse_site(std::string_view text) {
  ActiveSite site;
  std::optional<Point2> right_anchor;
  std::optional<Point2> left_anchor;
  std::optional<double> right_axis;
  std::optional<double> left_axis;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    const auto w = words(line);
    if (w.empty() || w.front().front() == '#') continue;

    auto expect = [&](std::size_t count) {
      if (w.size() != count) {
        throw SiteError(line_no, "'" + std::string(w.front()) + "' expects " +
                                     std::to_string(count - 1) + " values");
      }
    };

    if (w.front() == "right_anchor" || w.front() == "left_anchor") {
      expect(3);
      const Point2 p{number(w[1], line_no), number(w[2], line_no)};
      (w.front() == "right_anchor" ? right_anchor : left_anchor) = p;
    } else if (w.front() == "right_axis" || w.front() == "left_axis") {
      expect(2);
      (w.front() == "right_axis" ? right_axis : left_axis) = number(w[1], line_no);
    } else {
      if (w.size() != 4) throw SiteError(line_no, "residue lines are 'NAME x y P|H'");
      if (w[3] != "P" && w[3] != "H") {
        throw SiteError(line_no, "residue polarity must be P or H, found '" + std::string(w[3]) + "'");
      }
      site.residues.push_back(
          {std::string(w[0]), {number(w[1], line_no), number(w[2], line_no)}, w[3] == "P"});
    }
  }

  if (!right_anchor) throw SiteError(0, "missing right_anchor");
  if (!left_anchor) throw SiteError(0, "missing left_anchor");
  if (!right_axis) throw SiteError(0, "missing right_axis");
  if (!left_axis) throw SiteError(0, "missing left_axis");
  site.right_anchor = *right_anchor;
  site.left_anchor = *left_anchor;
  site.right_axis = *right_axis;
  site.left_axis = *left_axis;
  try {
    site.validate();
  } catch (const std::invalid_argument& e) {
    throw SiteError(0, e.what());
  }
  return site;
}

ActiveSite load_site(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SiteError(0, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_site(buffer.str());
}

}  // namespace nbga::ligand
