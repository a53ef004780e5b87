#include "mhd/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mhd {

namespace {

std::vector<double> prim_row(const PrimState& p) {
  return {p.rho, p.u, p.v, p.w, p.p, p.B1, p.B2, p.B3};
}

double parse_cell(const std::string& cell, const std::string& path) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  const bool underflow = errno == ERANGE && std::abs(v) <= 1.0;
  if (end == cell.c_str() || *end != '\0' || (errno == ERANGE && !underflow)) {
    throw std::runtime_error("bad number '" + cell + "' in " + path);
  }
  return v;
}

const std::vector<std::string> kPrimNames = {"rho", "u", "v", "w", "p", "B1", "B2", "B3"};

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows,
               const std::vector<std::string>& labels) {
  if (!labels.empty() && labels.size() != rows.size()) {
    throw std::invalid_argument("one label per row required");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (!labels.empty()) out << labels[r] << (row.empty() ? "" : ",");
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
  if (!out) throw std::runtime_error("failed writing " + path);
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::out_of_range("no column '" + name + "'");
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty csv " + path);
  std::stringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) t.header.push_back(cell);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ls(line);
    while (std::getline(ls, cell, ',')) row.push_back(parse_cell(cell, path));
    if (row.size() != t.header.size()) throw std::runtime_error("ragged row in " + path);
    t.rows.push_back(std::move(row));
  }
  return t;
}

void write_snapshot(const std::string& path, const Field& q, const Grid1D& grid, double gamma) {
  std::vector<std::string> header = {"x"};
  header.insert(header.end(), kPrimNames.begin(), kPrimNames.end());
  std::vector<std::vector<double>> rows;
  rows.reserve(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    std::vector<double> row = {grid.centers[i]};
    const auto p = prim_row(cons_to_prim(q[i], gamma));
    row.insert(row.end(), p.begin(), p.end());
    rows.push_back(std::move(row));
  }
  write_csv(path, header, rows);
}

void write_snapshot(const std::string& path, const Field& q, const Grid2D& grid, double gamma) {
  std::vector<std::string> header = {"x", "y"};
  header.insert(header.end(), kPrimNames.begin(), kPrimNames.end());
  std::vector<std::vector<double>> rows;
  rows.reserve(q.size());
  for (std::size_t j = 0; j < grid.ny; ++j) {
    for (std::size_t i = 0; i < grid.nx; ++i) {
      std::vector<double> row = {grid.x(i), grid.y(j)};
      const auto p = prim_row(cons_to_prim(q[grid.index(i, j)], gamma));
      row.insert(row.end(), p.begin(), p.end());
      rows.push_back(std::move(row));
    }
  }
  write_csv(path, header, rows);
}

}  // namespace mhd
