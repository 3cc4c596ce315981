#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tilingdet::regions {

/// Hexagon side lengths, clockwise from the upper-left side, in unit triangles.
struct HexagonSpec {
  long a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
  /// The symmetric (k, q, k, k, q, k) hexagon.
  static HexagonSpec kqk(long k, long q) { return {k, q, k, k, q, k}; }
};

/// (k, q, k) semi-hexagon with k up triangles removed from its long side
/// (length q + k). Dent positions are 0-based from the left.
struct DentedSemiHexagon {
  long k = 0;
  long q = 0;
  std::vector<long> dents;
};

/// a by b Aztec rectangle whose top staircase row (a + 1 squares) carries
/// the dents; exactly b of them must be removed.
struct DentedAztecRectangle {
  long a = 0;
  long b = 0;
  std::vector<long> dents;
};

/// Two congruent coordinate conventions for the undented rectangle.
/// `centered` places the central diagonal on V = y - x = 0; `trimmed` is the
/// a by (b+1) dented rectangle with its whole dent row cut away.
enum class UndentedVariant { centered, trimmed };

struct UndentedAztecRectangle {
  long a = 0;
  long b = 0;
  UndentedVariant variant = UndentedVariant::centered;
};

enum class DefectKind {
  none,
  central_triangle_removed,
  central_lozenge_forced,
  crossing_set_restricted,
  diagonal_squares_removed,
};

/// `indices` holds the allowed crossing positions for crossing_set_restricted
/// and the removed diagonal positions for diagonal_squares_removed.
struct DefectSpec {
  DefectKind kind = DefectKind::none;
  std::vector<long> indices;
};

enum class Lattice { triangular, square };
enum class CellShape : std::uint8_t { up, down, square };

/// Triangles: `row` counts from the top, `col` is the horizontal position in
/// half units (up iff col - row is even). Squares: `row` = y, `col` = x of the
/// lower-left corner.
struct Cell {
  CellShape shape = CellShape::square;
  long row = 0;
  long col = 0;

  static Cell up(long row, long col) { return {CellShape::up, row, col}; }
  static Cell down(long row, long col) { return {CellShape::down, row, col}; }
  static Cell square(long x, long y) { return {CellShape::square, y, x}; }
  long x() const { return col; }
  long y() const { return row; }

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Tile {
  Cell first;
  Cell second;
  friend bool operator==(const Tile& a, const Tile& b) {
    return (a.first == b.first && a.second == b.second) || (a.first == b.second && a.second == b.first);
  }
};

/// Finite set of cells together with its admissible tile placements.
/// Adjacency is the lattice rule (lozenges or dominoes) restricted to the
/// cells present, minus any tiles explicitly forbidden.
class CellRegion {
 public:
  CellRegion() = default;
  CellRegion(Lattice lattice, std::vector<Cell> cells);

  Lattice lattice() const { return lattice_; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  /// Tile placements as index pairs (i < j) into cells().
  const std::vector<std::pair<std::size_t, std::size_t>>& adjacency() const { return adjacency_; }
  const std::vector<std::vector<std::size_t>>& neighbours() const { return neighbours_; }

  std::optional<std::size_t> index_of(const Cell& cell) const;
  bool contains(const Cell& cell) const { return index_of(cell).has_value(); }
  bool has_tile(const Tile& tile) const;

  std::size_t count(CellShape shape) const;
  /// Up/down counts agree (triangles) or the checkerboard colours agree (squares).
  bool balanced() const;

  /// Crossing tiles of the horizontal symmetry axis, in left to right order.
  /// Positions whose cells are missing are kept as std::nullopt so indices
  /// stay aligned with the axis.
  const std::vector<std::optional<Tile>>& axis() const { return axis_; }
  void set_axis(std::vector<std::optional<Tile>> axis) { axis_ = std::move(axis); }
  std::optional<Tile> centre_tile() const;

  /// Throws DomainError if some cell is absent.
  CellRegion without_cells(std::span<const Cell> removed) const;
  /// Forbids the given placements; unknown tiles are ignored.
  CellRegion without_tiles(std::span<const Tile> forbidden) const;

 private:
  void rebuild_adjacency();

  Lattice lattice_ = Lattice::triangular;
  std::vector<Cell> cells_;
  std::vector<Tile> forbidden_;
  std::vector<std::pair<std::size_t, std::size_t>> adjacency_;
  std::vector<std::vector<std::size_t>> neighbours_;
  std::vector<std::optional<Tile>> axis_;
};

struct ValidationReport {
  bool ok = true;
  std::string message;
  explicit operator bool() const { return ok; }
};

ValidationReport validate_hexagon(const HexagonSpec& spec);

CellRegion build_hexagon_region(const HexagonSpec& spec, const DefectSpec& defect = {});
CellRegion build_semihexagon_region(const DentedSemiHexagon& spec);
CellRegion build_aztec_region(const DentedAztecRectangle& spec, const DefectSpec& defect = {});
CellRegion build_aztec_region(const UndentedAztecRectangle& spec, const DefectSpec& defect = {});
/// Undented n by n rectangle.
CellRegion build_aztec_diamond(long n);

/// Cells of the diagonal through (odd b) or touching (even b) the central
/// square of an undented rectangle, in increasing x order. It has a + 1 cells.
std::vector<Cell> central_diagonal(const UndentedAztecRectangle& spec);

/// {0, ..., a} minus `removed`; `removed` must be strictly increasing in range.
std::vector<long> complement_indices(long a, std::span<const long> removed);

/// Requires a strictly increasing list in [lo, hi); throws DomainError naming `what`.
void require_strictly_increasing(std::span<const long> values, long lo, long hi, const std::string& what);

std::string to_string(CellShape shape);
std::string to_json(const CellRegion& region, int indent = -1);
std::string render_ascii(const CellRegion& region);

}  // namespace tilingdet::regions
