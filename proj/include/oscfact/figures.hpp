#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oscfact/families.hpp"
#include "oscfact/grid.hpp"

namespace oscfact {

/// What a figure id emits.
enum class SeriesKind {
  solution,          // t,re,im,abs
  solution_with_v1,  // t,re,im,abs,v1
  zeta,              // t,value
  frequency          // t,value
};

struct FigureSpec {
  int id = 1;
  FamilyParams params;
  SuperpositionConstants constants;
  SeriesKind series = SeriesKind::solution;
  TimeGrid window;
};

/// Default parameters and windows for figure ids 1..9. Throws
/// std::invalid_argument outside the range.
FigureSpec figure_spec(int id);

/// One CSV row; unused trailing columns are ignored by the writer.
struct SeriesRecord {
  std::vector<double> cols;
};

std::vector<std::string> series_header(SeriesKind kind);
std::vector<SeriesRecord> evaluate_series(const FigureSpec& spec);

/// Writes rows in scientific notation with 12 significant digits, LF line
/// endings, via write-then-rename. Complex series are re-parsed and the abs
/// column checked against re/im before the file is finalized.
void write_series_csv(const std::string& path,
                      const std::vector<std::string>& header,
                      const std::vector<SeriesRecord>& rows);

/// Emits the figure to `path` (singular windows raise SingularTime).
void emit_figure(const FigureSpec& spec, const std::string& path);

}  // namespace oscfact
