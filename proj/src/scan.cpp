#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <thread>

#include "discordq/q_marker.hpp"

namespace discordq::marker {

namespace {

double parse_double(const std::string& text, const std::string& whole) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw Error(ErrorCode::ParseError, "malformed grid '" + whole + "': bad number '" + text + "'");
  }
  return value;
}

}  // namespace

Grid Grid::parse(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos) {
    throw Error(ErrorCode::ParseError, "malformed grid '" + text + "': expected start:stop:count");
  }
  Grid g;
  g.start = parse_double(text.substr(0, first), text);
  g.stop = parse_double(text.substr(first + 1, second - first - 1), text);
  const std::string count = text.substr(second + 1);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), value);
  if (count.empty() || ec != std::errc() || ptr != count.data() + count.size() || value == 0) {
    throw Error(ErrorCode::ParseError, "malformed grid '" + text + "': count must be a positive integer");
  }
  g.count = value;
  if (g.count == 1 && g.start != g.stop) {
    throw Error(ErrorCode::ParseError, "malformed grid '" + text + "': a single point needs start == stop");
  }
  return g;
}

std::vector<double> Grid::points() const {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = count == 1 ? start : start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  if (count > 1) out.back() = stop;
  return out;
}

std::vector<ScanRow> scan_photon_added(const Grid& n_grid, const Grid& r_grid, unsigned threads) {
  const std::vector<double> ns = n_grid.points();
  const std::vector<double> rs = r_grid.points();
  std::vector<ScanRow> rows(ns.size() * rs.size());
  for (std::size_t i = 0; i < ns.size(); ++i)
    for (std::size_t j = 0; j < rs.size(); ++j) {
      rows[i * rs.size() + j].n = ns[i];
      rows[i * rs.size() + j].r = rs[j];
    }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx = next++; idx < rows.size(); idx = next++) {
      ScanRow& row = rows[idx];
      try {
        row.q = q_general(wigner::make_photon_added_squeezed_thermal(row.n, row.r)).q;
        row.log10_q = std::log10(std::max(row.q, kLogFloor));
      } catch (const Error& e) {
        row.ok = false;
        row.error = e.code();
        row.message = e.what();
        row.q = std::nan("");
        row.log10_q = std::nan("");
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(rows.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return rows;
}

}  // namespace discordq::marker
