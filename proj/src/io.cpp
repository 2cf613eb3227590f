#include "statfield/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace statfield::io {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot open for writing: " + path.string());
  os << text;
  if (!os) throw ConfigError("write failed: " + path.string());
}

void write_csv(const std::filesystem::path& path, const std::vector<Column>& columns) {
  if (columns.empty()) throw ConfigError("write_csv: no columns");
  const std::size_t rows = columns.front().data->size();
  std::ostringstream os;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) os << ',';
    os << columns[c].name;
    if (columns[c].data->size() != rows) throw ConfigError("write_csv: ragged columns");
  }
  os << '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) os << ',';
      os << format_double((*columns[c].data)[r]);
    }
    os << '\n';
  }
  write_text(path, os.str());
}

void write_field_csv(const std::filesystem::path& path, const SampledField& f) {
  const auto xs = f.grid.points();
  write_csv(path, {{"x", &xs}, {"value", &f.values}});
}

void write_state_csv(const std::filesystem::path& path, const FieldState& state) {
  const auto xs = state.rho.grid.points();
  write_csv(path, {{"x", &xs}, {"rho", &state.rho.values}, {"S", &state.s_phase.values}});
}

namespace {

std::vector<std::vector<double>> read_numeric_csv(const std::filesystem::path& path,
                                                  std::size_t expected_cols) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open: " + path.string());
  std::string line;
  if (!std::getline(is, line)) throw ConfigError("empty CSV: " + path.string());
  std::vector<std::vector<double>> rows;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                          ": not a number: '" + cell + "'");
      }
    }
    if (row.size() != expected_cols)
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected " +
                        std::to_string(expected_cols) + " columns");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ConfigError("no data rows in " + path.string());
  return rows;
}

void check_grid_match(const std::filesystem::path& path, const GridSpec& grid,
                      const std::vector<std::vector<double>>& rows) {
  if (static_cast<int>(rows.size()) != grid.n)
    throw ConfigError(path.string() + ": row count " + std::to_string(rows.size()) +
                      " does not match grid n = " + std::to_string(grid.n));
  for (int k = 0; k < grid.n; ++k) {
    const double want = grid.x(k);
    if (std::abs(rows[static_cast<std::size_t>(k)][0] - want) >
        1e-9 * std::max(1.0, std::abs(want)))
      throw ConfigError(path.string() + ": x column does not match the configured grid");
  }
}

}  // namespace

FieldState read_state_csv(const std::filesystem::path& path, const GridSpec& grid) {
  const auto rows = read_numeric_csv(path, 3);
  check_grid_match(path, grid, rows);
  FieldState st;
  st.rho = SampledField(grid);
  st.s_phase = SampledField(grid);
  for (int k = 0; k < grid.n; ++k) {
    st.rho[k] = rows[static_cast<std::size_t>(k)][1];
    st.s_phase[k] = rows[static_cast<std::size_t>(k)][2];
  }
  return st;
}

SampledField read_field_csv(const std::filesystem::path& path, const GridSpec& grid) {
  const auto rows = read_numeric_csv(path, 2);
  check_grid_match(path, grid, rows);
  SampledField f(grid);
  for (int k = 0; k < grid.n; ++k) f[k] = rows[static_cast<std::size_t>(k)][1];
  return f;
}

void read_two_column_csv(const std::filesystem::path& path, std::vector<double>* first,
                         std::vector<double>* second) {
  const auto rows = read_numeric_csv(path, 2);
  first->clear();
  second->clear();
  for (const auto& r : rows) {
    first->push_back(r[0]);
    second->push_back(r[1]);
  }
}

}  // namespace statfield::io
