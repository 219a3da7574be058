#include "wiring/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wiring {

namespace {

// Wire trajectories: rows[l][t] = row of wire l during slice t (0..m slices).
std::vector<std::vector<int>> trajectories(const AllowableSequence& seq) {
  const int n = seq.n;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n) + 1);
  auto sigma = identity_sigma(n);
  for (std::size_t t = 0; t <= seq.moves.size(); ++t) {
    for (int r = 1; r <= n; ++r) rows[static_cast<std::size_t>(sigma[static_cast<std::size_t>(r)])].push_back(r);
    if (t < seq.moves.size()) {
      const MovePair p = seq.moves[t];
      if (p.a < 1 || p.b > n || p.a >= p.b) throw std::invalid_argument("render: invalid move");
      for (int i = p.a; i < p.b; ++i) {
        if (sigma[static_cast<std::size_t>(i)] >= sigma[static_cast<std::size_t>(i) + 1]) {
          throw std::invalid_argument("render: move block not increasing");
        }
      }
      std::reverse(sigma.begin() + p.a, sigma.begin() + p.b + 1);
    }
  }
  return rows;
}

std::string render_svg(const AllowableSequence& seq) {
  const int n = seq.n;
  const int m = static_cast<int>(seq.moves.size());
  const int colw = 32;      // uniform column width per junction
  const int rowh = 18;
  const int margin = 24;
  const int width = 2 * margin + (2 * m + 2) * (colw / 2);
  const int height = 2 * margin + (n - 1) * rowh;
  const auto ycoord = [&](int row) { return margin + (n - row) * rowh; };
  // x layout: flat segment, then a half-column diagonal inside each junction
  // column the wire participates in.
  const auto xcoord = [&](int slice) { return margin + slice * colw; };

  const auto rows = trajectories(seq);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1\">\n";
  for (int l = 1; l <= n; ++l) {
    const auto& r = rows[static_cast<std::size_t>(l)];
    out << "<polyline points=\"";
    out << xcoord(0) << ',' << ycoord(r[0]);
    for (int t = 0; t < m; ++t) {
      // horizontal to the junction column, diagonal across it
      out << ' ' << xcoord(t + 1) << ',' << ycoord(r[static_cast<std::size_t>(t)]);
      out << ' ' << xcoord(t + 1) + colw / 2 << ',' << ycoord(r[static_cast<std::size_t>(t) + 1]);
    }
    out << ' ' << xcoord(m + 1) + colw / 2 << ',' << ycoord(r[static_cast<std::size_t>(m)]);
    out << "\"/>\n";
  }
  out << "</g>\n";
  out << "<g font-family=\"monospace\" font-size=\"10\" fill=\"black\">\n";
  for (int l = 1; l <= n; ++l) {
    const auto& r = rows[static_cast<std::size_t>(l)];
    out << "<text x=\"" << (margin - 16) << "\" y=\"" << ycoord(r[0]) + 3 << "\">" << l
        << "</text>\n";
    out << "<text x=\"" << (xcoord(m + 1) + colw / 2 + 4) << "\" y=\""
        << ycoord(r[static_cast<std::size_t>(m)]) + 3 << "\">" << l << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string render_ascii(const AllowableSequence& seq) {
  const int n = seq.n;
  const int m = static_cast<int>(seq.moves.size());
  const auto rows = trajectories(seq);
  // n text rows (row n printed first); 3 columns per slice segment and 3 per
  // junction column, where the reversed block shows as a stack of X marks.
  const int width = 3 * (m + 1) + 3 * m;
  std::vector<std::string> grid(static_cast<std::size_t>(n),
                                std::string(static_cast<std::size_t>(width), ' '));
  auto cell = [&](int row, int col) -> char& {
    return grid[static_cast<std::size_t>(n - row)][static_cast<std::size_t>(col)];
  };
  for (int l = 1; l <= n; ++l) {
    const auto& r = rows[static_cast<std::size_t>(l)];
    for (int t = 0; t <= m; ++t) {
      for (int c = 0; c < 3; ++c) cell(r[static_cast<std::size_t>(t)], 6 * t + c) = '-';
    }
  }
  for (int t = 0; t < m; ++t) {
    const MovePair p = seq.moves[static_cast<std::size_t>(t)];
    for (int row = p.a; row <= p.b; ++row) {
      cell(row, 6 * t + 3) = '-';
      cell(row, 6 * t + 4) = 'X';
      cell(row, 6 * t + 5) = '-';
    }
  }
  std::ostringstream out;
  for (const std::string& line : grid) out << line << '\n';
  return out.str();
}

}  // namespace

std::string render_wiring(const AllowableSequence& seq, RenderStyle style) {
  if (seq.n < 2) throw std::invalid_argument("render: need at least two wires");
  return style == RenderStyle::svg ? render_svg(seq) : render_ascii(seq);
}

}  // namespace wiring
