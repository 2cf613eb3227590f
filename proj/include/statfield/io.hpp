#ifndef STATFIELD_IO_HPP
#define STATFIELD_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "statfield/fields.hpp"

namespace statfield::io {

/// Fixed 17-significant-digit formatting: repeated runs must produce
/// byte-identical files.
std::string format_double(double v);

struct Column {
  std::string name;
  const std::vector<double>* data;
};

void write_csv(const std::filesystem::path& path, const std::vector<Column>& columns);

/// Field dump with header "x,value".
void write_field_csv(const std::filesystem::path& path, const SampledField& f);

/// State dump with header "x,rho,S".
void write_state_csv(const std::filesystem::path& path, const FieldState& state);

/// Reads a state dump ("x,rho,S") against an expected grid.
FieldState read_state_csv(const std::filesystem::path& path, const GridSpec& grid);

/// Reads a field dump ("x,value") against an expected grid.
SampledField read_field_csv(const std::filesystem::path& path, const GridSpec& grid);

/// Reads a two-column CSV ("x,E" or "i,E"), returning both columns.
void read_two_column_csv(const std::filesystem::path& path, std::vector<double>* first,
                         std::vector<double>* second);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace statfield::io

#endif
