#pragma once

#include "cyclocover/intmat.hpp"

#include <string>
#include <vector>

namespace cyclocover {

// One end of a chord: chord index is 1-based; terminal == true is the barred
// end in the x-bar arrow notation.
struct Endpoint {
  int chord;
  bool terminal;
  bool operator==(const Endpoint&) const = default;
};

enum class SlidePosition { same, opposite };

struct SlideStep {
  int moving_chord = 0;
  bool moving_terminal = false;
  bool endpoint_known = false; // true when the move came from a diagram slide
  int along_chord = 0;
  SlidePosition position = SlidePosition::same;
};

struct SlideRecord {
  std::vector<SlideStep> steps;
  IntMat transform; // accumulated product of elementary factors (and any
                    // final permutation composed in by the caller)
};

// "3" or "3̄" (combining macron marks the terminal end).
Endpoint parse_endpoint(const std::string& s);
std::string format_endpoint(const Endpoint& e);

/*
 * Linear chord diagram: 2n chords on an oriented interval, endpoint order
 * read left to right.  `homology` expresses the current class of each chord
 * in the initial classes c_1..c_2n; the intersection form is maintained as
 * homology * A0 * homology^T for the initial intersection matrix A0.
 *
 * A slide moves one endpoint past an adjacent endpoint of another chord and
 * reinserts it next to that chord's other endpoint, staying on the interior
 * side of the chord's footprint iff it started interior.  The slid class
 * changes by -(other class) when the two endpoints are ends of the same kind
 * (both origins or both terminals), by +(other class) otherwise.
 */
class ChordDiagram {
public:
  static ChordDiagram from_series(std::vector<Endpoint> series, IntMat A0);
  // Endpoint series 1..2g, 1bar..2gbar with the strictly-upper-ones skew
  // intersection matrix (the hyperelliptic cut diagram).
  static ChordDiagram cq1_initial(int g);

  int chords() const { return chords_; }
  const std::vector<Endpoint>& series() const { return series_; }
  const IntMat& homology() const { return homology_; }
  const IntMat& initial_intersections() const { return a0_; }
  IntMat intersections() const;

  // Slides `moving` along the chord owning `target`; `target` must be
  // adjacent to `moving` in the series.  Appends the performed move to
  // `record` when non-null (elementary transform folded into record->transform).
  ChordDiagram slide(Endpoint moving, Endpoint target,
                     SlideRecord* record = nullptr) const;

private:
  int chords_ = 0;
  std::vector<Endpoint> series_;
  IntMat homology_;
  IntMat a0_;

  int position_of(const Endpoint& e) const;
};

} // namespace cyclocover
