#include "solvlen/cycles.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "solvlen/error.hpp"

namespace solvlen {

namespace {

[[noreturn]] void fail(const std::string& what, size_t pos) {
  throw Error("cycle parse error at position " + std::to_string(pos) + ": " +
              what);
}

} // namespace

Perm parse_cycles(const std::string& text, uint32_t min_degree) {
  std::vector<std::vector<uint32_t>> cycles;
  std::vector<bool> seen;
  uint32_t max_point = 0;

  auto note_point = [&](uint32_t pt1, size_t pos) {
    if (pt1 == 0) fail("points are 1-based", pos);
    if (min_degree > 0 && pt1 > min_degree)
      fail("point " + std::to_string(pt1) + " exceeds declared degree " +
               std::to_string(min_degree),
           pos);
    if (pt1 > seen.size()) seen.resize(pt1, false);
    if (seen[pt1 - 1])
      fail("point " + std::to_string(pt1) + " appears twice", pos);
    seen[pt1 - 1] = true;
    max_point = std::max(max_point, pt1);
  };

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_ws();
  if (i == text.size()) fail("empty input", i);
  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('", i);
    ++i;
    skip_ws();
    std::vector<uint32_t> cyc;
    while (i < text.size() && text[i] != ')') {
      if (!cyc.empty()) {
        if (text[i] != ',') fail("expected ',' or ')'", i);
        ++i;
        skip_ws();
      }
      size_t start = i;
      uint32_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<uint32_t>(text[i] - '0');
        if (value > 1000000) fail("point out of range", start);
        ++i;
      }
      if (i == start) fail("expected a point", i);
      note_point(value, start);
      cyc.push_back(value - 1); // to 0-based
      skip_ws();
    }
    if (i == text.size()) fail("unclosed cycle", i);
    ++i; // ')'
    if (cyc.size() == 1) fail("cycle of length 1", i - 1);
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    any_cycle = true;
    skip_ws();
  }
  if (!any_cycle) fail("expected at least one cycle", i);

  uint32_t degree = std::max<uint32_t>({1u, min_degree, max_point});
  std::vector<uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  for (const auto& cyc : cycles)
    for (size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k]] = cyc[(k + 1) % cyc.size()];
  return Perm::unchecked(std::move(img));
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> done(p.degree(), false);
  for (uint32_t i = 0; i < p.degree(); ++i) {
    if (done[i] || p[i] == i) continue;
    out += '(';
    uint32_t j = i;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(j + 1);
      done[j] = true;
      j = p[j];
      first = false;
    } while (j != i);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

} // namespace solvlen
