#include "photonbec/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace photonbec {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// linear tick positions with a 1/2/5 step
std::vector<double> linear_ticks(double lo, double hi) {
  std::vector<double> ticks;
  const double span = hi - lo;
  if (!(span > 0.0)) return {lo};
  double step = std::pow(10.0, std::floor(std::log10(span / 5.0)));
  if (span / step > 10.0) step *= 2.0;
  if (span / step > 10.0) step *= 2.5;
  if (span / step > 10.0) step *= 2.0;
  double t = std::ceil(lo / step) * step;
  for (; t <= hi + 1e-9 * span; t += step) ticks.push_back(t);
  return ticks;
}

std::vector<double> decade_ticks(double lo, double hi) {
  std::vector<double> ticks;
  for (int e = static_cast<int>(std::floor(std::log10(lo))); std::pow(10.0, e) <= hi * 1.0001;
       ++e) {
    const double v = std::pow(10.0, e);
    if (v >= lo * 0.9999) ticks.push_back(v);
  }
  if (ticks.empty()) ticks = {lo, hi};
  return ticks;
}

}  // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label, int width,
                 int height)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)),
      width_(width), height_(height) {}

void SvgPlot::add_series(std::string name, std::vector<std::pair<double, double>> points) {
  series_.push_back({std::move(name), std::move(points)});
}

void SvgPlot::add_vline(double x, std::string label) {
  vlines_.push_back({x, std::move(label)});
}

std::string SvgPlot::render() const {
  const double ml = 72, mr = 18, mt = 36, mb = 52;  // margins
  const double pw = width_ - ml - mr, ph = height_ - mt - mb;

  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  auto usable = [this](double x, double y) {
    return std::isfinite(x) && std::isfinite(y) && (!log_x_ || x > 0.0) && (!log_y_ || y > 0.0);
  };
  for (const auto& s : series_)
    for (const auto& [x, y] : s.points)
      if (usable(x, y)) {
        x_lo = std::min(x_lo, x);
        x_hi = std::max(x_hi, x);
        y_lo = std::min(y_lo, y);
        y_hi = std::max(y_hi, y);
      }
  if (!(x_lo <= x_hi)) {  // nothing plottable
    x_lo = log_x_ ? 0.1 : 0.0;
    x_hi = 1.0;
  }
  if (!(y_lo <= y_hi)) {
    y_lo = log_y_ ? 0.1 : 0.0;
    y_hi = 1.0;
  }
  if (x_lo == x_hi) x_hi = x_lo + (log_x_ ? x_lo : 1.0);
  if (y_lo == y_hi) y_hi = y_lo + (log_y_ ? y_lo : 1.0);

  auto map_x = [&](double x) {
    const double t = log_x_ ? (std::log10(x) - std::log10(x_lo)) / (std::log10(x_hi) - std::log10(x_lo))
                            : (x - x_lo) / (x_hi - x_lo);
    return ml + t * pw;
  };
  auto map_y = [&](double y) {
    const double t = log_y_ ? (std::log10(y) - std::log10(y_lo)) / (std::log10(y_hi) - std::log10(y_lo))
                            : (y - y_lo) / (y_hi - y_lo);
    return mt + (1.0 - t) * ph;
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width_
      << "\" height=\"" << height_ << "\" viewBox=\"0 0 " << width_ << ' ' << height_
      << "\">\n"
      << "<rect width=\"" << width_ << "\" height=\"" << height_ << "\" fill=\"white\"/>\n";

  svg << "<text x=\"" << px(width_ / 2.0) << "\" y=\"22\" font-family=\"sans-serif\" "
         "font-size=\"15\" text-anchor=\"middle\">"
      << xml_escape(title_) << "</text>\n";

  // tick marks, grid and labels
  const auto x_ticks = log_x_ ? decade_ticks(x_lo, x_hi) : linear_ticks(x_lo, x_hi);
  const auto y_ticks = log_y_ ? decade_ticks(y_lo, y_hi) : linear_ticks(y_lo, y_hi);
  for (double t : x_ticks) {
    const double X = map_x(t);
    svg << "<line x1=\"" << px(X) << "\" y1=\"" << px(mt) << "\" x2=\"" << px(X) << "\" y2=\""
        << px(mt + ph) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << px(X) << "\" y=\"" << px(mt + ph + 16)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
        << tick_text(t) << "</text>\n";
  }
  for (double t : y_ticks) {
    const double Y = map_y(t);
    svg << "<line x1=\"" << px(ml) << "\" y1=\"" << px(Y) << "\" x2=\"" << px(ml + pw)
        << "\" y2=\"" << px(Y) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << px(ml - 6) << "\" y=\"" << px(Y + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" << tick_text(t)
        << "</text>\n";
  }

  svg << "<rect x=\"" << px(ml) << "\" y=\"" << px(mt) << "\" width=\"" << px(pw)
      << "\" height=\"" << px(ph) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  for (const auto& v : vlines_) {
    if ((log_x_ && !(v.x > 0.0)) || v.x < x_lo || v.x > x_hi) continue;
    const double X = map_x(v.x);
    svg << "<line x1=\"" << px(X) << "\" y1=\"" << px(mt) << "\" x2=\"" << px(X) << "\" y2=\""
        << px(mt + ph) << "\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"4,3\"/>\n";
    svg << "<text x=\"" << px(X + 3) << "\" y=\"" << px(mt + 12)
        << "\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#555555\">"
        << xml_escape(v.label) << "</text>\n";
  }

  for (std::size_t s = 0; s < series_.size(); ++s) {
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
    std::ostringstream pts;
    bool open = false;
    for (const auto& [x, y] : series_[s].points) {
      if (!usable(x, y)) {  // break the polyline at unplottable points
        open = false;
        continue;
      }
      if (!open) {
        if (pts.tellp() > 0) {
          svg << "<polyline fill=\"none\" stroke=\"" << color
              << "\" stroke-width=\"1.5\" points=\"" << pts.str() << "\"/>\n";
          pts.str("");
        }
        open = true;
      }
      pts << px(map_x(x)) << ',' << px(map_y(y)) << ' ';
    }
    if (pts.tellp() > 0)
      svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\""
          << pts.str() << "\"/>\n";

    const double ly = mt + 16 + 16.0 * static_cast<double>(s);
    svg << "<line x1=\"" << px(ml + pw - 150) << "\" y1=\"" << px(ly - 4) << "\" x2=\""
        << px(ml + pw - 126) << "\" y2=\"" << px(ly - 4) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << px(ml + pw - 120) << "\" y=\"" << px(ly)
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << xml_escape(series_[s].name)
        << "</text>\n";
  }

  svg << "<text x=\"" << px(ml + pw / 2.0) << "\" y=\"" << px(height_ - 14)
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">"
      << xml_escape(x_label_) << "</text>\n";
  svg << "<text x=\"18\" y=\"" << px(mt + ph / 2.0)
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 18 "
      << px(mt + ph / 2.0) << ")\">" << xml_escape(y_label_) << "</text>\n";

  svg << "</svg>\n";
  return svg.str();
}

void SvgPlot::write(const std::filesystem::path& path) const {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("SvgPlot::write: cannot open '" + path.string() + "'");
  os << render();
}

}  // namespace photonbec
