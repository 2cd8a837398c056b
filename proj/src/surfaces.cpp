#include "handle3/surfaces.hpp"

#include <algorithm>
#include <set>

#include "handle3/error.hpp"

namespace handle3 {

int euler_char(const SurfacePiece& piece) {
  return 2 - 2 * piece.genus - piece.boundary;
}

int euler_char(const PieceSet& pieces) {
  int total = 0;
  for (const auto& p : pieces) total += euler_char(p);
  return total;
}

std::string canonical_name(const SurfacePiece& piece) {
  if (piece == kDisk) return "D";
  if (piece == kAnnulus) return "A";
  if (piece == kPants) return "P";
  if (piece == kPuncturedTorus) return "T*";
  return "S(" + std::to_string(piece.genus) + "," + std::to_string(piece.boundary) + ")";
}

std::string canonical_name(const PieceSet& pieces) {
  std::string out = "{";
  bool first = true;
  for (const auto& p : canonical(pieces)) {
    if (!first) out += ",";
    out += canonical_name(p);
    first = false;
  }
  return out + "}";
}

bool is_valid_piece(const SurfacePiece& piece) {
  return piece.genus >= 0 && piece.boundary >= 1;
}

PieceSet canonical(PieceSet pieces) {
  std::sort(pieces.begin(), pieces.end());
  return pieces;
}

const char* to_string(ArcOutcome o) {
  switch (o) {
    case ArcOutcome::split_boundary: return "split_boundary";
    case ArcOutcome::reduce_genus: return "reduce_genus";
    case ArcOutcome::separate_piece: return "separate_piece";
  }
  return "?";
}

std::optional<ArcOutcome> parse_arc_outcome(const std::string& s) {
  if (s == "split_boundary") return ArcOutcome::split_boundary;
  if (s == "reduce_genus") return ArcOutcome::reduce_genus;
  if (s == "separate_piece") return ArcOutcome::separate_piece;
  return std::nullopt;
}

namespace {

void check_circle(const LabeledPiece& piece, int circle) {
  if (circle < 0 || circle >= static_cast<int>(piece.labels.size()))
    throw Error(ErrorCode::IllegalArc,
                "arc endpoint " + std::to_string(circle) + " is not a circle of a " +
                    canonical_name(piece.shape()));
}

}  // namespace

std::vector<LabeledPiece> cut_labeled(const LabeledPiece& piece,
                                      const ArcDescriptor& arc, int new_a,
                                      int new_b) {
  const int a = arc.endpoint_circles[0];
  const int b = arc.endpoint_circles[1];
  check_circle(piece, a);
  check_circle(piece, b);
  const int g = piece.genus;
  const int c = static_cast<int>(piece.labels.size());

  std::vector<int> rest;
  for (int i = 0; i < c; ++i)
    if (i != a && i != b) rest.push_back(piece.labels[i]);

  if (a != b) {
    rest.push_back(new_a);
    return {LabeledPiece{g, rest}};
  }

  switch (arc.same_circle_outcome) {
    case ArcOutcome::split_boundary:
    case ArcOutcome::reduce_genus: {
      if (g < 1)
        throw Error(ErrorCode::InconsistentOutcome,
                    "a non-separating arc needs genus >= 1, piece is " +
                        canonical_name(piece.shape()));
      rest.push_back(new_a);
      rest.push_back(new_b);
      return {LabeledPiece{g - 1, rest}};
    }
    case ArcOutcome::separate_piece: {
      if (!arc.split)
        throw Error(ErrorCode::InconsistentOutcome,
                    "separate_piece needs the split shapes");
      const auto [s1, s2] = *arc.split;
      if (!is_valid_piece(s1) || !is_valid_piece(s2) || s1.genus + s2.genus != g ||
          s1.boundary + s2.boundary != c + 1)
        throw Error(ErrorCode::InconsistentOutcome,
                    "split " + canonical_name(s1) + " + " + canonical_name(s2) +
                        " does not fit " + canonical_name(piece.shape()));
      // Old circles other than the cut one, by position.
      std::vector<int> others;
      for (int i = 0; i < c; ++i)
        if (i != a) others.push_back(i);
      std::vector<int> first_pos;
      if (arc.first_piece_circles) {
        std::set<int> seen;
        for (int i : *arc.first_piece_circles) {
          if (i == a || i < 0 || i >= c || !seen.insert(i).second)
            throw Error(ErrorCode::InconsistentOutcome,
                        "bad first_piece_circles entry " + std::to_string(i));
          first_pos.push_back(i);
        }
        if (static_cast<int>(first_pos.size()) != s1.boundary - 1)
          throw Error(ErrorCode::InconsistentOutcome,
                      "first_piece_circles must list boundary-1 circles of the first piece");
        std::sort(first_pos.begin(), first_pos.end());
      } else {
        first_pos.assign(others.begin(), others.begin() + (s1.boundary - 1));
      }
      LabeledPiece p1{s1.genus, {}}, p2{s2.genus, {}};
      for (int i : others) {
        if (std::binary_search(first_pos.begin(), first_pos.end(), i))
          p1.labels.push_back(piece.labels[i]);
        else
          p2.labels.push_back(piece.labels[i]);
      }
      p1.labels.push_back(new_a);
      p2.labels.push_back(new_b);
      return {p1, p2};
    }
  }
  throw Error(ErrorCode::InconsistentOutcome, "unknown outcome");
}

std::vector<LabeledPiece> band_labeled(const std::vector<LabeledPiece>& pieces,
                                       const BandDescriptor& band, int new_a,
                                       int new_b) {
  if (band.twisted)
    throw Error(ErrorCode::IllegalBand, "twisted bands are not allowed");
  if (band.targets.empty() || band.targets.size() > 2)
    throw Error(ErrorCode::IllegalBand, "a band has one or two attachment targets");
  for (const auto& t : band.targets) {
    if (t.piece_id < 0 || t.piece_id >= static_cast<int>(pieces.size()))
      throw Error(ErrorCode::IllegalBand, "no piece " + std::to_string(t.piece_id));
    const auto& p = pieces[t.piece_id];
    if (t.circle < 0 || t.circle >= static_cast<int>(p.labels.size()))
      throw Error(ErrorCode::IllegalBand,
                  "piece " + std::to_string(t.piece_id) + " has no circle " +
                      std::to_string(t.circle));
  }

  std::vector<LabeledPiece> out;
  auto keep_others = [&](int x, int y) {
    for (int i = 0; i < static_cast<int>(pieces.size()); ++i)
      if (i != x && i != y) out.push_back(pieces[i]);
  };

  const BandFoot f1 = band.targets[0];
  const BandFoot f2 = band.targets.size() == 2 ? band.targets[1] : f1;
  const auto& p = pieces[f1.piece_id];

  if (f1.piece_id == f2.piece_id && f1.circle == f2.circle) {
    LabeledPiece r{p.genus, {}};
    for (int i = 0; i < static_cast<int>(p.labels.size()); ++i)
      if (i != f1.circle) r.labels.push_back(p.labels[i]);
    r.labels.push_back(new_a);
    r.labels.push_back(new_b);
    keep_others(f1.piece_id, -1);
    out.push_back(r);
    return out;
  }
  if (f1.piece_id == f2.piece_id) {
    LabeledPiece r{p.genus + 1, {}};
    for (int i = 0; i < static_cast<int>(p.labels.size()); ++i)
      if (i != f1.circle && i != f2.circle) r.labels.push_back(p.labels[i]);
    r.labels.push_back(new_a);
    keep_others(f1.piece_id, -1);
    out.push_back(r);
    return out;
  }
  const auto& q = pieces[f2.piece_id];
  LabeledPiece r{p.genus + q.genus, {}};
  for (int i = 0; i < static_cast<int>(p.labels.size()); ++i)
    if (i != f1.circle) r.labels.push_back(p.labels[i]);
  for (int i = 0; i < static_cast<int>(q.labels.size()); ++i)
    if (i != f2.circle) r.labels.push_back(q.labels[i]);
  r.labels.push_back(new_a);
  keep_others(f1.piece_id, f2.piece_id);
  out.push_back(r);
  return out;
}

namespace {

LabeledPiece numbered(const SurfacePiece& s) {
  if (!is_valid_piece(s))
    throw Error(ErrorCode::IllegalArc, "not a valid piece: " + canonical_name(s));
  LabeledPiece l{s.genus, {}};
  for (int i = 0; i < s.boundary; ++i) l.labels.push_back(i);
  return l;
}

PieceSet shapes_of(const std::vector<LabeledPiece>& ls) {
  PieceSet out;
  for (const auto& l : ls) out.push_back(l.shape());
  return canonical(out);
}

}  // namespace

PieceSet cut_along_arc(const SurfacePiece& piece, const ArcDescriptor& arc) {
  auto l = numbered(piece);
  return shapes_of(cut_labeled(l, arc, piece.boundary, piece.boundary + 1));
}

PieceSet attach_band(const PieceSet& pieces, const BandDescriptor& band) {
  std::vector<LabeledPiece> ls;
  int next = 0;
  for (const auto& s : pieces) {
    if (!is_valid_piece(s))
      throw Error(ErrorCode::IllegalBand, "not a valid piece: " + canonical_name(s));
    LabeledPiece l{s.genus, {}};
    for (int i = 0; i < s.boundary; ++i) l.labels.push_back(next++);
    ls.push_back(l);
  }
  return shapes_of(band_labeled(ls, band, next, next + 1));
}

}  // namespace handle3
