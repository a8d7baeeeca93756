#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aperiodic/ring.hpp"
#include "aperiodic/tiling.hpp"

namespace aperiodic {

/// The bar family whose normal is parallel to edge direction 36*j degrees:
/// the unique k with 36j = 72k (mod 180), i.e. k = 3j mod 5.
int class_of_edge(int direction_index);

/// Robinson half-tile.  Acute golden triangle (half-kite): roles
/// (apex 36, B, C) with legs apex-B, apex-C and the kite axis on (v0,v2).
/// Gnomon (half-dart): roles (P 36, Q 36, R 108) with the dart axis on
/// (v0,v2).  Mirror images carry reversed vertex orientation; the cut rules
/// are role-based and therefore mirror-covariant.
struct HalfTile {
  bool gnomon = false;
  ExactPoint v0, v1, v2;
};

/// A patch of Robinson half-tiles under the alternating half-step
/// substitution.  Even phases are dart/kite states; odd phases are the
/// intermediate rhombus-triangle states.
struct TrianglePatch {
  std::vector<HalfTile> halves;
  int phase = 0;       // 0: acute-cut phase next; 1: gnomon-cut phase next
  int half_steps = 0;  // applied so far

  /// (acute, gnomon) counts by shape.
  std::pair<std::int64_t, std::int64_t> shape_counts() const;
  /// (majority, minority) counts; these follow the Fibonacci count matrix
  /// exactly at every step (the shape labels trade places at odd phases,
  /// where the patch passes through the rhombus triangle family).
  std::pair<std::int64_t, std::int64_t> role_counts() const;
};

/// Seed patches: one full tile (two mirror halves sharing the axis), with
/// the axis along +x and the short edge length 1.
TrianglePatch seed_patch(const std::string& kind);  // "kite" | "dart"
/// A single half-tile seed (one acute or one gnomon).
TrianglePatch seed_half(bool gnomon);

/// Applies `steps` half-steps of the Robinson substitution in place, with an
/// exact phi rescale after every second half-step so tile sizes are
/// preserved.  Counts obey the Fibonacci matrix per step (see role_counts).
void robinson_substitute(TrianglePatch& patch, int steps, int max_steps = 32);

/// Merges mirror-paired halves of an even-phase patch into darts and kites,
/// assigns the canonical decorations, and drops (and counts) unpaired
/// boundary halves.  Positions are scaled by 2/5 so the five-family
/// reconstruction formula holds literally.
Tiling assemble_p2(const TrianglePatch& patch);

struct CrossingEntry {
  std::string kind;  // "dart" | "kite"
  int chirality = 0; // 0, or 1 for the mirrored tile
  int slot = 0;      // side index on the v0..v3 cycle
  int family = 0;    // family at orientation 0 (the stored offset)
  int sign = 0;
};

/// The decoration lookup read off the unit prototiles at orientation 0.
/// Long sides carry two entries (the two flanking families), short sides
/// one (the side's direction class).  Tiles at orientation o carry family
/// (f + 3o) mod 5 with sign (-1)^o times the stored sign.
std::vector<CrossingEntry> canonical_crossing_table();

/// Serialises/parses the versioned fixture format, one entry per line:
/// "kind chirality slot family sign".
std::string crossing_table_text(const std::vector<CrossingEntry>& table);
std::vector<CrossingEntry> parse_crossing_table(const std::string& text);

}  // namespace aperiodic
