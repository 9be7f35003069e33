#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace photonbec {

/// Minimal standalone SVG 1.1 line-plot emitter: linear/log axes with ticks,
/// polyline series with a legend, and labelled vertical markers. Output is
/// deterministic (fixed-precision coordinates, no timestamps), so figures
/// are diffable.
class SvgPlot {
 public:
  SvgPlot(std::string title, std::string x_label, std::string y_label, int width = 720,
          int height = 480);

  void set_log_x(bool on) { log_x_ = on; }
  void set_log_y(bool on) { log_y_ = on; }

  void add_series(std::string name, std::vector<std::pair<double, double>> points);
  void add_vline(double x, std::string label);

  std::string render() const;
  void write(const std::filesystem::path& path) const;

 private:
  struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;
  };
  struct VLine {
    double x;
    std::string label;
  };

  std::string title_, x_label_, y_label_;
  int width_, height_;
  bool log_x_ = false, log_y_ = false;
  std::vector<Series> series_;
  std::vector<VLine> vlines_;
};

}  // namespace photonbec
