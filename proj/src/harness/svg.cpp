#include "goalforge/harness/svg.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "goalforge/harness/results_io.hpp"

namespace goalforge {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 630.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 450.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

double x_at(std::size_t epoch, std::size_t epochs) {
  if (epochs <= 1) return (kLeft + kRight) / 2.0;
  return kLeft + (kRight - kLeft) * static_cast<double>(epoch) /
                     static_cast<double>(epochs - 1);
}

double y_at(double rate) {
  const double clamped = std::clamp(rate, 0.0, 1.0);
  return kBottom - (kBottom - kTop) * clamped;
}

std::string point(double x, double y) {
  return format_double(x) + "," + format_double(y);
}

}  // namespace

void write_curves_svg(const std::filesystem::path& file, const std::string& title,
                      const std::vector<SvgSeries>& series) {
  if (series.empty()) throw std::invalid_argument("write_curves_svg: no series");
  const std::size_t epochs = series.front().summary.epochs();
  if (epochs == 0) throw std::invalid_argument("write_curves_svg: empty summary");
  for (const auto& s : series) {
    if (s.summary.epochs() != epochs) {
      throw std::invalid_argument("write_curves_svg: series with differing epoch counts");
    }
  }

  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::trunc);
  if (!out) throw DataError("cannot write " + file.string());

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << (kLeft + kRight) / 2.0
      << "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">"
      << title << "</text>\n";

  // axes and gridlines
  for (int i = 0; i <= 4; ++i) {
    const double rate = 0.25 * i;
    const double y = y_at(rate);
    out << "<line x1=\"" << kLeft << "\" y1=\"" << format_double(y) << "\" x2=\"" << kRight
        << "\" y2=\"" << format_double(y) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << kLeft - 8 << "\" y=\"" << format_double(y + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
        << format_double(rate) << "</text>\n";
  }
  const std::size_t tick_step = std::max<std::size_t>(1, epochs / 6);
  for (std::size_t e = 0; e < epochs; e += tick_step) {
    const double x = x_at(e, epochs);
    out << "<line x1=\"" << format_double(x) << "\" y1=\"" << kBottom << "\" x2=\""
        << format_double(x) << "\" y2=\"" << kBottom + 5 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << format_double(x) << "\" y=\"" << kBottom + 20
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << (e + 1)
        << "</text>\n";
  }
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kBottom << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\"" << kRight << "\" y2=\""
      << kBottom << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << (kLeft + kRight) / 2.0 << "\" y=\"" << kBottom + 40
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">epoch</text>\n";
  out << "<text x=\"18\" y=\"" << (kTop + kBottom) / 2.0
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
         "transform=\"rotate(-90 18 "
      << (kTop + kBottom) / 2.0 << ")\">test success rate</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    const CurveSummary& s = series[i].summary;
    out << "<polygon class=\"band\" fill=\"" << color << "\" fill-opacity=\"0.15\" stroke=\"none\" points=\"";
    for (std::size_t e = 0; e < epochs; ++e) {
      if (e) out << " ";
      out << point(x_at(e, epochs), y_at(s.q3[e]));
    }
    for (std::size_t e = epochs; e-- > 0;) {
      out << " " << point(x_at(e, epochs), y_at(s.q1[e]));
    }
    out << "\"/>\n";
    out << "<polyline class=\"median\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\" points=\"";
    for (std::size_t e = 0; e < epochs; ++e) {
      if (e) out << " ";
      out << point(x_at(e, epochs), y_at(s.median[e]));
    }
    out << "\"/>\n";
  }

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    const double y = kTop + 18.0 * static_cast<double>(i);
    out << "<line x1=\"" << kRight + 12 << "\" y1=\"" << format_double(y) << "\" x2=\""
        << kRight + 36 << "\" y2=\"" << format_double(y) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << kRight + 42 << "\" y=\"" << format_double(y + 4)
        << "\" font-family=\"sans-serif\" font-size=\"13\">" << series[i].label << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace goalforge
