#include "tilingdet/regions.hpp"

#include <algorithm>
#include <map>
#include "json.hpp"

#include "tilingdet/errors.hpp"

namespace tilingdet::regions {

namespace {

bool position_less(const Cell& l, const Cell& r) {
  if (l.row != r.row) return l.row < r.row;
  return l.col < r.col;
}

// Left and right boundary of each lattice line, in half units.
struct HexagonRows {
  std::vector<long> left;
  std::vector<long> right;
  long rows() const { return static_cast<long>(left.size()) - 1; }
};

HexagonRows hexagon_rows(const HexagonSpec& s) {
  HexagonRows h;
  h.left.push_back(0);
  h.right.push_back(2 * s.b);
  for (long r = 0; r < s.a + s.f; ++r) {
    h.left.push_back(h.left.back() + (r < s.a ? -1 : 1));
    h.right.push_back(h.right.back() + (r < s.c ? 1 : -1));
  }
  return h;
}

std::vector<Cell> hexagon_cells(const HexagonRows& h) {
  std::vector<Cell> cells;
  const long lo = *std::min_element(h.left.begin(), h.left.end());
  const long hi = *std::max_element(h.right.begin(), h.right.end());
  for (long r = 0; r < h.rows(); ++r) {
    for (long x = lo; x <= hi; ++x) {
      const bool up = (x - r) % 2 == 0;
      if (up) {
        if (h.left[r] <= x && x <= h.right[r] && h.left[r + 1] <= x - 1 && x + 1 <= h.right[r + 1])
          cells.push_back(Cell::up(r, x));
      } else {
        if (h.left[r] <= x - 1 && x + 1 <= h.right[r] && h.left[r + 1] <= x && x <= h.right[r + 1])
          cells.push_back(Cell::down(r, x));
      }
    }
  }
  return cells;
}

// Crossing tiles of line `line`, one per unit segment of that line.
std::vector<std::optional<Tile>> line_crossings(const CellRegion& region, const HexagonRows& h, long line) {
  std::vector<std::optional<Tile>> axis;
  if (line <= 0 || line >= h.rows()) return axis;
  const long positions = (h.right[line] - h.left[line]) / 2;
  for (long p = 0; p < positions; ++p) {
    const long x = h.left[line] + 1 + 2 * p;
    Tile t{Cell::up(line - 1, x), Cell::down(line, x)};
    if (region.has_tile(t)) {
      axis.emplace_back(t);
    } else {
      axis.emplace_back(std::nullopt);
    }
  }
  return axis;
}

// Square cells from centre coordinates U = x + y + 1, V = y - x (U + V odd).
std::vector<Cell> square_block(long u_lo, long u_hi, long v_lo, long v_hi) {
  std::vector<Cell> cells;
  for (long u = u_lo; u <= u_hi; ++u) {
    for (long v = v_lo; v <= v_hi; ++v) {
      if ((u + v) % 2 == 0) continue;
      cells.push_back(Cell::square((u - v - 1) / 2, (u + v - 1) / 2));
    }
  }
  return cells;
}

Cell square_at(long u, long v) { return Cell::square((u - v - 1) / 2, (u + v - 1) / 2); }

void require_positive(long value, const char* what) {
  if (value < 1) throw DomainError(std::string(what) + " must be positive");
}

}  // namespace

void require_strictly_increasing(std::span<const long> values, long lo, long hi, const std::string& what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < lo || values[i] >= hi) {
      throw DomainError(what + " index " + std::to_string(values[i]) + " outside [" + std::to_string(lo) + ", " +
                        std::to_string(hi - 1) + "]");
    }
    if (i > 0 && values[i] <= values[i - 1]) {
      throw DomainError(what + " indices must be strictly increasing");
    }
  }
}

CellRegion::CellRegion(Lattice lattice, std::vector<Cell> cells) : lattice_(lattice), cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end(), position_less);
  for (std::size_t i = 1; i < cells_.size(); ++i) {
    if (!position_less(cells_[i - 1], cells_[i])) throw DomainError("duplicate cell in region");
  }
  for (const Cell& c : cells_) {
    const bool square = c.shape == CellShape::square;
    if (square != (lattice == Lattice::square)) throw DomainError("cell shape does not match the lattice");
    if (!square && (((c.col - c.row) % 2 == 0) != (c.shape == CellShape::up)))
      throw DomainError("triangle orientation does not match its position");
  }
  rebuild_adjacency();
}

void CellRegion::rebuild_adjacency() {
  adjacency_.clear();
  neighbours_.assign(cells_.size(), {});
  auto link = [&](std::size_t i, const Cell& other) {
    auto j = index_of(other);
    if (!j) return;
    Tile t{cells_[i], other};
    if (std::find(forbidden_.begin(), forbidden_.end(), t) != forbidden_.end()) return;
    adjacency_.emplace_back(std::min(i, *j), std::max(i, *j));
  };
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const Cell& c = cells_[i];
    switch (c.shape) {
      case CellShape::up:
        link(i, Cell::down(c.row, c.col - 1));
        link(i, Cell::down(c.row, c.col + 1));
        link(i, Cell::down(c.row + 1, c.col));
        break;
      case CellShape::square:
        link(i, Cell::square(c.x() + 1, c.y()));
        link(i, Cell::square(c.x(), c.y() + 1));
        break;
      case CellShape::down:
        break;
    }
  }
  std::sort(adjacency_.begin(), adjacency_.end());
  for (auto [i, j] : adjacency_) {
    neighbours_[i].push_back(j);
    neighbours_[j].push_back(i);
  }
  for (auto& n : neighbours_) std::sort(n.begin(), n.end());
}

std::optional<std::size_t> CellRegion::index_of(const Cell& cell) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), cell, position_less);
  if (it == cells_.end() || !(*it == cell)) return std::nullopt;
  return static_cast<std::size_t>(it - cells_.begin());
}

bool CellRegion::has_tile(const Tile& tile) const {
  auto i = index_of(tile.first);
  auto j = index_of(tile.second);
  if (!i || !j) return false;
  const auto& n = neighbours_[*i];
  return std::binary_search(n.begin(), n.end(), *j);
}

std::size_t CellRegion::count(CellShape shape) const {
  return static_cast<std::size_t>(
      std::count_if(cells_.begin(), cells_.end(), [shape](const Cell& c) { return c.shape == shape; }));
}

bool CellRegion::balanced() const {
  if (lattice_ == Lattice::triangular) return count(CellShape::up) == count(CellShape::down);
  long diff = 0;
  for (const Cell& c : cells_) diff += ((c.x() + c.y()) % 2 == 0) ? 1 : -1;
  return diff == 0;
}

std::optional<Tile> CellRegion::centre_tile() const {
  if (axis_.size() % 2 == 0) return std::nullopt;
  return axis_[axis_.size() / 2];
}

CellRegion CellRegion::without_cells(std::span<const Cell> removed) const {
  std::vector<Cell> kept = cells_;
  for (const Cell& r : removed) {
    auto it = std::find(kept.begin(), kept.end(), r);
    if (it == kept.end()) throw DomainError("cannot remove a cell that is not in the region");
    kept.erase(it);
  }
  CellRegion out(lattice_, std::move(kept));
  out.forbidden_ = forbidden_;
  out.rebuild_adjacency();
  for (auto t : axis_) {
    if (t && !out.has_tile(*t)) t.reset();
    out.axis_.push_back(t);
  }
  return out;
}

CellRegion CellRegion::without_tiles(std::span<const Tile> forbidden) const {
  CellRegion out = *this;
  out.forbidden_.insert(out.forbidden_.end(), forbidden.begin(), forbidden.end());
  out.rebuild_adjacency();
  for (auto& t : out.axis_)
    if (t && !out.has_tile(*t)) t.reset();
  return out;
}

ValidationReport validate_hexagon(const HexagonSpec& s) {
  const long sides[] = {s.a, s.b, s.c, s.d, s.e, s.f};
  const char* names = "abcdef";
  for (int i = 0; i < 6; ++i) {
    if (sides[i] < 0) return {false, std::string("side ") + names[i] + " is negative"};
  }
  if (s.a - s.d != s.c - s.f) {
    return {false, "a - d != c - f (" + std::to_string(s.a - s.d) + " vs " + std::to_string(s.c - s.f) + ")"};
  }
  if (s.c - s.f != s.e - s.b) {
    return {false, "c - f != e - b (" + std::to_string(s.c - s.f) + " vs " + std::to_string(s.e - s.b) + ")"};
  }
  return {};
}

CellRegion build_hexagon_region(const HexagonSpec& spec, const DefectSpec& defect) {
  if (auto report = validate_hexagon(spec); !report) throw DomainError("invalid hexagon: " + report.message);
  const HexagonRows rows = hexagon_rows(spec);
  CellRegion region(Lattice::triangular, hexagon_cells(rows));
  if (spec.a == spec.c) region.set_axis(line_crossings(region, rows, spec.a));

  switch (defect.kind) {
    case DefectKind::none:
      return region;
    case DefectKind::central_triangle_removed: {
      if (spec.a != spec.c || spec.a < 1 || spec.d != spec.a + 1)
        throw DomainError("central triangle removal needs a hexagon (k, q, k, k+1, q-1, k+1)");
      std::vector<Cell> below;
      for (const Cell& c : region.cells())
        if (c.row == spec.a && c.shape == CellShape::down) below.push_back(c);
      if (below.size() % 2 == 0) throw DomainError("the axis has no central triangle");
      const Cell removed = below[below.size() / 2];
      return region.without_cells(std::span<const Cell>(&removed, 1));
    }
    case DefectKind::central_lozenge_forced: {
      auto t = region.centre_tile();
      if (!t) throw DomainError("hexagon has no central vertical lozenge (needs a = c and an odd axis)");
      const Cell cells[] = {t->first, t->second};
      return region.without_cells(cells);
    }
    case DefectKind::crossing_set_restricted: {
      if (region.axis().empty()) throw DomainError("crossing restriction needs a hexagon with a = c");
      const long n = static_cast<long>(region.axis().size());
      require_strictly_increasing(defect.indices, 0, n, "crossing");
      std::vector<Tile> forbidden;
      for (long p = 0; p < n; ++p) {
        if (std::binary_search(defect.indices.begin(), defect.indices.end(), p)) continue;
        if (region.axis()[p]) forbidden.push_back(*region.axis()[p]);
      }
      return region.without_tiles(forbidden);
    }
    case DefectKind::diagonal_squares_removed:
      break;
  }
  throw DomainError("defect kind does not apply to hexagons");
}

CellRegion build_semihexagon_region(const DentedSemiHexagon& spec) {
  require_positive(spec.k, "k");
  if (spec.q < 0) throw DomainError("q must be nonnegative");
  if (static_cast<long>(spec.dents.size()) != spec.k) throw DomainError("a semi-hexagon needs exactly k dents");
  require_strictly_increasing(spec.dents, 0, spec.q + spec.k, "dent");
  const HexagonSpec hex{spec.k, spec.q, spec.k, 0, spec.q + spec.k, 0};
  const HexagonRows rows = hexagon_rows(hex);
  CellRegion region(Lattice::triangular, hexagon_cells(rows));
  std::vector<Cell> dents;
  for (long p : spec.dents) dents.push_back(Cell::up(spec.k - 1, rows.left[spec.k] + 1 + 2 * p));
  return region.without_cells(dents);
}

CellRegion build_aztec_region(const DentedAztecRectangle& spec, const DefectSpec& defect) {
  require_positive(spec.a, "a");
  require_positive(spec.b, "b");
  if (defect.kind != DefectKind::none) throw DomainError("dented Aztec rectangles take no further defect");
  if (static_cast<long>(spec.dents.size()) != spec.b) throw DomainError("a dented Aztec rectangle needs exactly b dents");
  require_strictly_increasing(spec.dents, 0, spec.a + 1, "dent");
  const long a = spec.a, b = spec.b;
  CellRegion region(Lattice::square, square_block(b - 2 * a, b, -b, b - 1));
  std::vector<Cell> dents;
  for (long r : spec.dents) dents.push_back(square_at(b - 2 * a + 2 * r, b - 1));
  return region.without_cells(dents);
}

std::vector<Cell> central_diagonal(const UndentedAztecRectangle& spec) {
  require_positive(spec.a, "a");
  require_positive(spec.b, "b");
  const long a = spec.a, b = spec.b;
  long u0 = b - 2 * a;
  long v = (b % 2 == 1) ? 0 : 1;
  if (spec.variant == UndentedVariant::trimmed) {
    u0 += 1;
    v -= 1;
  }
  std::vector<Cell> diag;
  for (long u = u0; u <= u0 + 2 * a; ++u)
    if ((u + v) % 2 != 0) diag.push_back(square_at(u, v));
  return diag;
}

CellRegion build_aztec_region(const UndentedAztecRectangle& spec, const DefectSpec& defect) {
  require_positive(spec.a, "a");
  require_positive(spec.b, "b");
  const long a = spec.a, b = spec.b;
  CellRegion region = spec.variant == UndentedVariant::centered
                          ? CellRegion(Lattice::square, square_block(b - 2 * a, b, -b, b))
                          : CellRegion(Lattice::square, square_block(b + 1 - 2 * a, b + 1, -b - 1, b - 1));
  switch (defect.kind) {
    case DefectKind::none:
      return region;
    case DefectKind::diagonal_squares_removed: {
      require_strictly_increasing(defect.indices, 0, a + 1, "removed square");
      const std::vector<Cell> diag = central_diagonal(spec);
      std::vector<Cell> removed;
      for (long r : defect.indices) removed.push_back(diag[r]);
      return region.without_cells(removed);
    }
    default:
      throw DomainError("defect kind does not apply to Aztec rectangles");
  }
}

CellRegion build_aztec_diamond(long n) { return build_aztec_region(UndentedAztecRectangle{n, n}); }

std::vector<long> complement_indices(long a, std::span<const long> removed) {
  if (a < 0) throw DomainError("a must be nonnegative");
  require_strictly_increasing(removed, 0, a + 1, "removed");
  std::vector<long> t;
  for (long i = 0; i <= a; ++i)
    if (!std::binary_search(removed.begin(), removed.end(), i)) t.push_back(i);
  return t;
}

std::string to_string(CellShape shape) {
  switch (shape) {
    case CellShape::up:
      return "up";
    case CellShape::down:
      return "down";
    case CellShape::square:
      break;
  }
  return "square";
}

std::string to_json(const CellRegion& region, int indent) {
  using nlohmann::json;
  auto pair_json = [&](const Tile& t) {
    return json::array({*region.index_of(t.first), *region.index_of(t.second)});
  };
  json cells = json::array();
  for (const Cell& c : region.cells()) {
    if (c.shape == CellShape::square) {
      cells.push_back({{"shape", "square"}, {"x", c.x()}, {"y", c.y()}});
    } else {
      cells.push_back({{"shape", to_string(c.shape)}, {"row", c.row}, {"col", c.col}});
    }
  }
  json tiles = json::array();
  for (auto [i, j] : region.adjacency()) tiles.push_back({i, j});
  json out{{"lattice", region.lattice() == Lattice::triangular ? "triangular" : "square"},
           {"cell_count", region.size()},
           {"balanced", region.balanced()},
           {"cells", cells},
           {"tiles", tiles}};
  if (!region.axis().empty()) {
    json axis = json::array();
    for (const auto& t : region.axis()) axis.push_back(t ? pair_json(*t) : json(nullptr));
    out["axis"] = axis;
  }
  return out.dump(indent);
}

std::string render_ascii(const CellRegion& region) {
  if (region.empty()) return "(empty region)\n";
  long row_lo = region.cells().front().row, row_hi = row_lo;
  long col_lo = region.cells().front().col, col_hi = col_lo;
  for (const Cell& c : region.cells()) {
    row_lo = std::min(row_lo, c.row);
    row_hi = std::max(row_hi, c.row);
    col_lo = std::min(col_lo, c.col);
    col_hi = std::max(col_hi, c.col);
  }
  const std::size_t width = static_cast<std::size_t>(col_hi - col_lo + 1);
  std::map<long, std::string> lines;
  for (long r = row_lo; r <= row_hi; ++r) lines[r] = std::string(width, '.');
  for (const Cell& c : region.cells()) {
    char mark = '#';
    if (c.shape == CellShape::up) mark = '^';
    if (c.shape == CellShape::down) mark = 'v';
    lines[c.row][static_cast<std::size_t>(c.col - col_lo)] = mark;
  }
  std::string out;
  // Triangle rows are numbered from the top, square rows are y coordinates.
  if (region.lattice() == Lattice::triangular) {
    for (auto& [r, line] : lines) out += line + "\n";
  } else {
    for (auto it = lines.rbegin(); it != lines.rend(); ++it) out += it->second + "\n";
  }
  return out;
}

}  // namespace tilingdet::regions
