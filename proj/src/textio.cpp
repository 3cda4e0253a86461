#include "abcg/textio.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

#include "abcg/errors.hpp"

namespace abcg {

namespace {

std::string p_tag(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  if (p == x_minus_one_pow(2)) return "(X-1)^2";
  if (p == x_minus_one_pow(3)) return "(X-1)^3";
  throw std::invalid_argument("row divisor must be 0, (X-1)^2 or (X-1)^3");
}

LaurentPoly p_from_tag(const std::string& tag, int line) {
  if (tag == "0") return LaurentPoly();
  if (tag == "(X-1)^2") return x_minus_one_pow(2);
  if (tag == "(X-1)^3") return x_minus_one_pow(3);
  throw ParseError("unknown divisor tag '" + tag + "'", line, 5);
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string system_to_text(const DivisibilitySystem& sys) {
  std::ostringstream out;
  out << "system n=" << sys.n << " rows=" << sys.rows.size() << "\n";
  for (const DivRow& row : sys.rows) {
    out << "row " << p_tag(row.p);
    for (int i = 0; i < sys.n; ++i) {
      if (row.coeffs[i].is_zero()) continue;
      out << " ; " << (i + 1) << ": " << row.coeffs[i].str();
    }
    out << " ; rhs: " << row.rhs.str() << "\n";
  }
  return out.str();
}

DivisibilitySystem system_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  DivisibilitySystem sys;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      int rows = 0;
      if (std::sscanf(line.c_str(), "system n=%d rows=%d", &sys.n, &rows) != 2)
        throw ParseError("expected 'system n=<N> rows=<R>' header", lineno, 1);
      if (sys.n < 0) throw ParseError("negative variable count", lineno, 1);
      have_header = true;
      continue;
    }
    if (line.rfind("row ", 0) != 0)
      throw ParseError("expected 'row ...'", lineno, 1);
    std::vector<std::string> parts = split(line.substr(4), ';');
    if (parts.empty()) throw ParseError("empty row", lineno, 1);
    DivRow row;
    row.p = p_from_tag(trim(parts[0]), lineno);
    row.coeffs.assign(sys.n, LaurentPoly());
    bool have_rhs = false;
    for (std::size_t pi = 1; pi < parts.size(); ++pi) {
      std::string part = trim(parts[pi]);
      std::size_t colon = part.find(':');
      if (colon == std::string::npos)
        throw ParseError("expected '<i>: <poly>' or 'rhs: <poly>'", lineno, 1);
      std::string key = trim(part.substr(0, colon));
      std::string val = trim(part.substr(colon + 1));
      try {
        if (key == "rhs") {
          row.rhs = LaurentPoly::parse(val);
          have_rhs = true;
        } else {
          int idx = std::stoi(key);
          if (idx < 1 || idx > sys.n)
            throw ParseError("coefficient index out of range", lineno, 1);
          row.coeffs[idx - 1] = LaurentPoly::parse(val);
        }
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " (in system row)", lineno,
                         e.col);
      } catch (const std::exception&) {
        throw ParseError("bad coefficient key '" + key + "'", lineno, 1);
      }
    }
    if (!have_rhs) throw ParseError("row is missing 'rhs:'", lineno, 1);
    sys.rows.push_back(std::move(row));
  }
  if (!have_header) throw ParseError("missing system header", 1, 1);
  return sys;
}

}  // namespace abcg
