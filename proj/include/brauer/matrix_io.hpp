#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "brauer/bigint.hpp"
#include "brauer/charform.hpp"

namespace brauer {

/// Whitespace-separated integers; '#' starts a comment. 15 values are the
/// upper triangle row-major, 25 values a full (symmetric) matrix.
inline SymMat5 parse_matrix(const std::string& text) {
  std::vector<BigInt> values;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) values.push_back(parse_bigint(tok));
  }
  if (values.size() == SymMat5::kEntries) {
    std::array<BigInt, SymMat5::kEntries> upper;
    std::copy(values.begin(), values.end(), upper.begin());
    return SymMat5(upper);
  }
  if (values.size() == 25) return SymMat5::from_full(values);
  throw Error(ErrorKind::InvalidInput,
              "expected 15 or 25 matrix entries, found " + std::to_string(values.size()));
}

inline SymMat5 read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matrix(buf.str());
  } catch (const Error& e) {
    throw Error(e.kind() == ErrorKind::NotSymmetric ? ErrorKind::InvalidInput : e.kind(), path + ": " + e.what());
  }
}

/// The 15-value form, one matrix row per line.
inline std::string format_upper(const SymMat5& m) {
  std::string out;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i; j < 5; ++j) {
      if (j > i) out += ' ';
      out += m(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace brauer
