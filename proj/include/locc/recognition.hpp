#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locc/graph.hpp"

namespace locc {

/// Hole = induced cycle of length >= 4, as a label sequence around the cycle.
using Hole = std::vector<std::string>;

struct WheelWitness {
  std::string hub;
  Hole rim;  // induced cycle of length >= 4 inside N(hub)
};

struct ChordalityResult {
  bool chordal = false;
  std::vector<std::string> elimination_order;  // perfect elimination order when chordal
  std::optional<Hole> hole;                    // witness when not chordal
};

/// Maximum-cardinality search + elimination check; a failed check is turned
/// into a hole witness.
ChordalityResult is_chordal(const Graph& g);

struct WheelFreeResult {
  bool wheel_free = false;
  std::optional<WheelWitness> wheel;
};

/// Wheel-free iff every neighborhood induces a chordal graph; a hole in some
/// N(v) plus the hub v is the wheel witness.
WheelFreeResult is_wheel_free(const Graph& g);

struct BallWitness {
  std::string center;
  Hole hole;  // hole inside ball(center, r)
};

struct LocalChordalityResult {
  bool holds = false;
  std::optional<BallWitness> witness;
};

/// Every ball of radius r/2 chordal? Requires r >= 3.
LocalChordalityResult is_r_locally_chordal(const Graph& g, int r);

/// A shortest induced cycle of length >= 4 (and <= max_len when given).
std::optional<Hole> shortest_hole(const Graph& g, std::optional<int> max_len = std::nullopt);

enum class LocalityStatus { chordal, locally_chordal, not_locally_chordal };

struct LocalityReport {
  LocalityStatus status = LocalityStatus::chordal;
  std::optional<int> r_star;  // set iff locally_chordal; chordal means r* = infinity
  std::optional<Hole> hole;   // shortest hole when locally_chordal
  std::optional<WheelWitness> wheel;
};

/// Chordal -> r* infinite. Wheel-free with a shortest hole of length L ->
/// locally_chordal with r* = L - 1. Otherwise not locally chordal, with a
/// wheel witness.
LocalityReport locality(const Graph& g);

}  // namespace locc
