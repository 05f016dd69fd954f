#include "eatpc/matrix_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "eatpc/error.hpp"

namespace eatpc {

void write_matrix(std::ostream& out, const Gf2Matrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  std::string line(m.cols(), '0');
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) line[c] = m.get(r, c) ? '1' : '0';
    out << line << '\n';
  }
}

std::string to_text(const Gf2Matrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

Gf2Matrix read_matrix(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ValidationError("matrix text: missing header line");
  std::istringstream hs(header);
  long long rows = -1;
  long long cols = -1;
  std::string trailing;
  if (!(hs >> rows >> cols) || (hs >> trailing) || rows < 0 || cols < 0) {
    throw ValidationError("matrix text: header must be '<rows> <cols>', got '" + header + "'");
  }

  Gf2Matrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  std::string line;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!std::getline(in, line)) {
      throw ValidationError("matrix text: expected " + std::to_string(rows) + " rows, found " +
                            std::to_string(r));
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() != m.cols()) {
      throw ValidationError("matrix text: row " + std::to_string(r) + " has " +
                            std::to_string(line.size()) + " entries, expected " +
                            std::to_string(cols));
    }
    m.set_row(r, BitVector::from_string(line));
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw ValidationError("matrix text: unexpected content after last row");
    }
  }
  return m;
}

Gf2Matrix parse_matrix(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_matrix(is);
}

Gf2Matrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open matrix file '" + path.string() + "'");
  return read_matrix(in);
}

}  // namespace eatpc
