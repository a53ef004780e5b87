/// \file io.hpp
/// CSV artifacts: full-precision numeric tables and primitive-variable snapshots.

#pragma once

#include <string>
#include <vector>

#include "mhd/grid.hpp"

namespace mhd {

/// Formats with 17 significant digits so doubles round-trip exactly.
std::string format_double(double v);

/// When labels is non-empty, row k is prefixed by labels[k] as a text first column.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows,
               const std::vector<std::string>& labels = {});

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Column index by name; throws std::out_of_range if absent.
  std::size_t column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);

/// Header x,rho,u,v,w,p,B1,B2,B3.
void write_snapshot(const std::string& path, const Field& q, const Grid1D& grid, double gamma);
/// Header x,y,rho,u,v,w,p,B1,B2,B3.
void write_snapshot(const std::string& path, const Field& q, const Grid2D& grid, double gamma);

}  // namespace mhd
