#include "oscfact/figures.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oscfact {

namespace {

const FamilyParams kTrigFigure{FamilyKind::trigonometric, 3.5, 2.0};
const FamilyParams kHypFigure{FamilyKind::hyperbolic, 1.0, 0.5};
const SuperpositionConstants kTrigConstants{Complex(2.0 / 7.0), Complex(7.0 / 4.0)};
const SuperpositionConstants kHypConstants{Complex(2.0), Complex(-1.0)};

std::string format_sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return buf;
}

}  // namespace

FigureSpec figure_spec(int id) {
  if (id < 1 || id > 9)
    throw std::invalid_argument("figure id must be in 1..9");
  FigureSpec spec;
  spec.id = id;
  if (id <= 4) {
    spec.params = kTrigFigure;
    spec.constants = kTrigConstants;
    spec.window = make_grid(0.0, 4.0, 2001);
  } else {
    spec.params = kHypFigure;
    spec.constants = kHypConstants;
    spec.window = make_grid(0.0, 6.0, 2001);
  }
  switch (id) {
    case 1: spec.series = SeriesKind::solution_with_v1; break;
    case 2: spec.series = SeriesKind::solution; break;
    case 3: spec.series = SeriesKind::zeta; break;
    case 4: spec.series = SeriesKind::frequency; break;
    case 5:
    case 6:
    case 7: spec.series = SeriesKind::solution; break;
    case 8: spec.series = SeriesKind::zeta; break;
    case 9: spec.series = SeriesKind::frequency; break;
  }
  return spec;
}

std::vector<std::string> series_header(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::solution: return {"t", "re", "im", "abs"};
    case SeriesKind::solution_with_v1: return {"t", "re", "im", "abs", "v1"};
    case SeriesKind::zeta:
    case SeriesKind::frequency: return {"t", "value"};
  }
  return {};
}

std::vector<SeriesRecord> evaluate_series(const FigureSpec& spec) {
  std::vector<SeriesRecord> rows;
  rows.reserve(spec.window.n);
  for (std::size_t k = 0; k < spec.window.n; ++k) {
    const double t = spec.window.time(k);
    SeriesRecord rec;
    switch (spec.series) {
      case SeriesKind::solution: {
        const Complex y = solution(spec.params, spec.constants, t);
        rec.cols = {t, y.real(), y.imag(), std::abs(y)};
        break;
      }
      case SeriesKind::solution_with_v1: {
        const Complex y = solution(spec.params, spec.constants, t);
        const Complex v1 = trig_v_modes(spec.params.rate, t).first;
        rec.cols = {t, y.real(), y.imag(), std::abs(y), v1.real()};
        break;
      }
      case SeriesKind::zeta:
        rec.cols = {t, snapshot(spec.params, t).zeta.real()};
        break;
      case SeriesKind::frequency:
        rec.cols = {t, snapshot(spec.params, t).frequency.real()};
        break;
    }
    rows.push_back(std::move(rec));
  }
  return rows;
}

void write_series_csv(const std::string& path,
                      const std::vector<std::string>& header,
                      const std::vector<SeriesRecord>& rows) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    for (std::size_t c = 0; c < header.size(); ++c)
      out << (c ? "," : "") << header[c];
    out << '\n';
    for (const auto& rec : rows) {
      for (std::size_t c = 0; c < header.size(); ++c)
        out << (c ? "," : "") << format_sci(rec.cols[c]);
      out << '\n';
    }
    if (!out) throw std::runtime_error("write failed for " + tmp);
  }

  // Consistency pass on the file as written: abs^2 = re^2 + im^2.
  const bool complex_series = header.size() >= 4 && header[3] == "abs";
  if (complex_series) {
    std::ifstream in(tmp);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string cell;
      std::vector<double> cols;
      while (std::getline(ls, cell, ',')) cols.push_back(std::stod(cell));
      const double mag2 = cols[1] * cols[1] + cols[2] * cols[2];
      const double diff = std::abs(cols[3] * cols[3] - mag2);
      // Tolerance covers the 12-digit rounding of the three columns.
      if (diff > 4e-11 * std::max(1.0, mag2)) {
        std::remove(tmp.c_str());
        throw std::runtime_error("abs column inconsistent in " + path);
      }
    }
  }

  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("rename to " + path + " failed");
  }
}

void emit_figure(const FigureSpec& spec, const std::string& path) {
  const auto singular = singularity_scan(spec.params, spec.window);
  if (!singular.empty()) throw SingularTime(singular.front());
  write_series_csv(path, series_header(spec.series), evaluate_series(spec));
}

}  // namespace oscfact
