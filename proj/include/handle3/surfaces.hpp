#pragma once

// Compact orientable surfaces with boundary, recorded by (genus, boundary
// count), and the arc-cut / band-attach surgery on them.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace handle3 {

struct SurfacePiece {
  int genus = 0;
  int boundary = 1;

  friend auto operator<=>(const SurfacePiece&, const SurfacePiece&) = default;
};

inline constexpr SurfacePiece kDisk{0, 1};
inline constexpr SurfacePiece kAnnulus{0, 2};
inline constexpr SurfacePiece kPants{0, 3};
inline constexpr SurfacePiece kPuncturedTorus{1, 1};

using PieceSet = std::vector<SurfacePiece>;

int euler_char(const SurfacePiece& piece);
int euler_char(const PieceSet& pieces);
std::string canonical_name(const SurfacePiece& piece);
// "{D,A}" style, in canonical order.
std::string canonical_name(const PieceSet& pieces);

bool is_valid_piece(const SurfacePiece& piece);
// Sorts lexicographically by (genus, boundary).
PieceSet canonical(PieceSet pieces);

enum class ArcOutcome { split_boundary, reduce_genus, separate_piece };

const char* to_string(ArcOutcome o);
std::optional<ArcOutcome> parse_arc_outcome(const std::string& s);

struct ArcDescriptor {
  int piece_id = 0;
  std::array<int, 2> endpoint_circles{0, 0};
  // Consulted only when both endpoints sit on one circle.
  ArcOutcome same_circle_outcome = ArcOutcome::reduce_genus;
  // separate_piece: shapes of the two resulting pieces.
  std::optional<std::array<SurfacePiece, 2>> split;
  // separate_piece: old circles that go to the first piece. When absent the
  // first piece takes the lowest remaining ids.
  std::optional<std::vector<int>> first_piece_circles;
};

struct BandFoot {
  int piece_id = 0;
  int circle = 0;
};

struct BandDescriptor {
  // One foot pair means both feet on that circle.
  std::vector<BandFoot> targets;
  bool twisted = false;
};

// A piece whose boundary circles carry labels (locus ids in a decomposition,
// plain circle ids otherwise). labels.size() is the boundary count.
struct LabeledPiece {
  int genus = 0;
  std::vector<int> labels;

  SurfacePiece shape() const { return {genus, static_cast<int>(labels.size())}; }
  friend auto operator<=>(const LabeledPiece&, const LabeledPiece&) = default;
};

// Cut a labeled piece along an arc. New circles get labels new_a / new_b and
// come after the surviving old circles. Distinct endpoints merge two circles
// into new_a. Same circle, non-separating: new_a and new_b on one piece.
// Same circle, separating: new_a ends the first piece, new_b the second.
std::vector<LabeledPiece> cut_labeled(const LabeledPiece& piece,
                                      const ArcDescriptor& arc, int new_a,
                                      int new_b);

// Attach an untwisted band. Result piece is appended after the untouched
// pieces (input order kept). One circle: that circle becomes new_a, new_b.
// Two circles of one piece or two pieces: they fuse into new_a.
std::vector<LabeledPiece> band_labeled(const std::vector<LabeledPiece>& pieces,
                                       const BandDescriptor& band, int new_a,
                                       int new_b);

// Plain versions: circles of a piece are 0..c-1, renumbered ascending with
// new circles last. Results in canonical order.
PieceSet cut_along_arc(const SurfacePiece& piece, const ArcDescriptor& arc);
PieceSet attach_band(const PieceSet& pieces, const BandDescriptor& band);

}  // namespace handle3
