#include "vecsim/ensemble.hpp"

#include <algorithm>

#include "vecsim/morphology.hpp"

namespace vecsim {
namespace {

void check_shapes(std::span<const BinaryGrid> grids, const BinaryGrid& ref) {
  for (const BinaryGrid& g : grids) {
    if (!g.same_shape(ref)) throw ValidationError("realizations have different dimensions");
  }
}

double median(std::vector<double> v) {
  std::ranges::sort(v);
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

EtypeMap etype(std::span<const BinaryGrid> realizations) {
  if (realizations.empty()) throw ValidationError("E-type needs at least one realization");
  check_shapes(realizations, realizations.front());
  const BinaryGrid& first = realizations.front();
  EtypeMap map{Grid<double>(first.width(), first.height(), 0.0), realizations.size()};
  std::vector<std::size_t> counts(first.size(), 0);
  for (const BinaryGrid& g : realizations) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += g.cells()[i];
  }
  const double n = static_cast<double>(realizations.size());
  for (std::size_t i = 0; i < counts.size(); ++i) map.values.cells()[i] = static_cast<double>(counts[i]) / n;
  return map;
}

ConnectivityRow connectivity_row(const BinaryGrid& grid, int connectivity) {
  const Components comps = connected_components(grid, connectivity);
  ConnectivityRow row;
  row.components = comps.count;
  const std::size_t sand = grid.sand_count();
  row.sand_fraction = grid.size() ? static_cast<double>(sand) / static_cast<double>(grid.size()) : 0.0;
  if (sand > 0) {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(comps.count) + 1, 0);
    for (int label : comps.labels.cells()) ++sizes[static_cast<std::size_t>(label)];
    const std::size_t largest = *std::max_element(sizes.begin() + 1, sizes.end());
    row.largest_fraction = static_cast<double>(largest) / static_cast<double>(sand);
  }
  return row;
}

ConnectivityReport connectivity_report(std::span<const BinaryGrid> realizations, const BinaryGrid& training,
                                       int connectivity) {
  check_shapes(realizations, training);
  ConnectivityReport report;
  report.training = connectivity_row(training, connectivity);
  if (report.training.components == 0) throw ValidationError("training image has no sand");
  std::vector<double> ratios;
  for (const BinaryGrid& g : realizations) {
    report.realizations.push_back(connectivity_row(g, connectivity));
    ratios.push_back(static_cast<double>(report.realizations.back().components) /
                     static_cast<double>(report.training.components));
  }
  report.median_component_ratio = ratios.empty() ? 0.0 : median(std::move(ratios));
  return report;
}

double variability(std::span<const BinaryGrid> realizations, int seed_rows, int seed_cols) {
  if (realizations.size() < 2) throw ValidationError("variability needs at least two realizations");
  check_shapes(realizations, realizations.front());
  const BinaryGrid& ref = realizations.front();
  std::vector<std::size_t> outside;
  for (int y = std::max(seed_rows, 0); y < ref.height(); ++y)
    for (int x = std::max(seed_cols, 0); x < ref.width(); ++x) outside.push_back(ref.index({x, y}));
  if (outside.empty()) return 0.0;

  double total = 0.0;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < realizations.size(); ++a) {
    for (std::size_t b = a + 1; b < realizations.size(); ++b) {
      const auto ca = realizations[a].cells();
      const auto cb = realizations[b].cells();
      std::size_t diff = 0;
      for (std::size_t i : outside) diff += ca[i] != cb[i];
      total += static_cast<double>(diff) / static_cast<double>(outside.size());
      ++pairs;
    }
  }
  return total / static_cast<double>(pairs);
}

}  // namespace vecsim
