#include "braidkit/poly_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace braidkit {

namespace {

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::vector<long long> integers(const std::string& line) {
  std::istringstream in(line);
  std::vector<long long> out;
  long long x;
  while (in >> x) out.push_back(x);
  if (!in.eof()) throw std::invalid_argument("non-integer token in '" + line + "'");
  return out;
}

}  // namespace

std::string write_homfly_text(const LaurentPoly2& p) {
  std::ostringstream out;
  int current = 0;
  bool open = false;
  for (const auto& [e, c] : p.terms()) {
    if (!open || e.z != current) {
      if (open) out << '\n';
      out << "z^" << e.z << " :";
      current = e.z;
      open = true;
    }
    out << ' ' << e.v << ':' << c;
  }
  if (open) out << '\n';
  return out.str();
}

LaurentPoly2 read_homfly_text(std::string_view text) {
  std::vector<LaurentPoly2::Term> terms;
  for (const auto& line : content_lines(text)) {
    auto colon = line.find(':');
    auto zpos = line.find("z^");
    if (zpos == std::string::npos || colon == std::string::npos || colon < zpos) {
      throw std::invalid_argument("expected 'z^k :' in '" + line + "'");
    }
    int z = std::stoi(line.substr(zpos + 2, colon - zpos - 2));
    std::istringstream rest(line.substr(colon + 1));
    std::string pair;
    while (rest >> pair) {
      auto sep = pair.find(':');
      if (sep == std::string::npos) throw std::invalid_argument("expected v:c, got '" + pair + "'");
      int v = std::stoi(pair.substr(0, sep));
      long long c = std::stoll(pair.substr(sep + 1));
      terms.push_back({{v, z}, c});
    }
  }
  return LaurentPoly2::from_terms(std::move(terms));
}

LaurentPoly2 read_knotscape_homfly(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw std::invalid_argument("empty polynomial block");
  auto header = integers(lines[0]);
  if (header.size() != 4) throw std::invalid_argument("header needs 4 integers");
  const int zmin = static_cast<int>(header[2]);
  const int zmax = static_cast<int>(header[3]);
  const std::size_t rows = static_cast<std::size_t>((zmax - zmin) / 2 + 1);
  if (lines.size() < rows + 1) throw std::invalid_argument("polynomial block has too few rows");

  std::vector<LaurentPoly2::Term> terms;
  for (std::size_t r = 0; r < rows; ++r) {
    auto row = integers(lines[r + 1]);
    if (row.size() < 3) throw std::invalid_argument("row needs min v, max v and coefficients");
    const int z = zmin + 2 * static_cast<int>(r);
    const int vmin = static_cast<int>(row[0]);
    const int vmax = static_cast<int>(row[1]);
    if (static_cast<int>(row.size()) - 2 != (vmax - vmin) / 2 + 1) {
      throw std::invalid_argument("coefficient count does not match v-range in '" + lines[r + 1] + "'");
    }
    for (std::size_t k = 2; k < row.size(); ++k) {
      const int v = vmin + 2 * static_cast<int>(k - 2);
      const int half = (v + z) / 2;
      const long long sign = (half % 2 == 0) ? 1 : -1;
      terms.push_back({{v, z}, sign * row[k]});
    }
  }
  return LaurentPoly2::from_terms(std::move(terms));
}

LaurentPoly1 read_knotscape_jones(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw std::invalid_argument("empty Jones row");
  auto row = integers(lines[0]);
  if (row.size() < 5) throw std::invalid_argument("Jones row too short");
  const int lo = static_cast<int>(row[2]);
  const int hi = static_cast<int>(row[3]);
  if (static_cast<int>(row.size()) - 4 != hi - lo + 1) {
    throw std::invalid_argument("Jones coefficient count does not match degree range");
  }
  std::vector<LaurentPoly1::Term> terms;
  for (std::size_t k = 4; k < row.size(); ++k) {
    terms.push_back({2 * (lo + static_cast<int>(k - 4)), row[k]});
  }
  return LaurentPoly1::from_terms(std::move(terms));
}

LaurentPoly2 read_homfly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (text.find("z^") != std::string::npos) return read_homfly_text(text);
  return read_knotscape_homfly(text);
}

}  // namespace braidkit
