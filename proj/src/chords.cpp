#include "cyclocover/chords.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cyclocover {

namespace {
constexpr const char* kMacron = "̄"; // combining bar over the last digit
} // namespace

Endpoint parse_endpoint(const std::string& s) {
  std::string digits = s;
  bool terminal = false;
  if (digits.size() >= 2 && digits.substr(digits.size() - 2) == kMacron) {
    terminal = true;
    digits.resize(digits.size() - 2);
  }
  if (digits.empty() ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("malformed endpoint '" + s + "'");
  const int chord = std::stoi(digits);
  if (chord < 1) throw std::invalid_argument("chord indices start at 1");
  return Endpoint{chord, terminal};
}

std::string format_endpoint(const Endpoint& e) {
  std::string s = std::to_string(e.chord);
  if (e.terminal) s += kMacron;
  return s;
}

ChordDiagram ChordDiagram::from_series(std::vector<Endpoint> series,
                                       IntMat A0) {
  if (series.size() % 2 != 0) throw std::invalid_argument("odd series length");
  const int n = static_cast<int>(series.size()) / 2;
  std::vector<int> seen(n + 1, 0);
  for (const auto& e : series) {
    if (e.chord < 1 || e.chord > n)
      throw std::invalid_argument("chord index out of range");
    seen[e.chord] |= e.terminal ? 2 : 1;
  }
  for (int c = 1; c <= n; ++c)
    if (seen[c] != 3)
      throw std::invalid_argument("chord " + std::to_string(c) +
                                  " does not have both endpoints");
  if (A0.rows() != n || A0.cols() != n || !A0.is_skew_symmetric())
    throw std::invalid_argument("initial intersection matrix must be skew n x n");
  ChordDiagram d;
  d.chords_ = n;
  d.series_ = std::move(series);
  d.homology_ = IntMat::identity(n);
  d.a0_ = std::move(A0);
  return d;
}

ChordDiagram ChordDiagram::cq1_initial(int g) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  const int n = 2 * g;
  std::vector<Endpoint> series;
  series.reserve(2 * n);
  for (int c = 1; c <= n; ++c) series.push_back({c, false});
  for (int c = 1; c <= n; ++c) series.push_back({c, true});
  IntMat A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      A.at(i, j) = 1;
      A.at(j, i) = -1;
    }
  return from_series(std::move(series), std::move(A));
}

IntMat ChordDiagram::intersections() const {
  return homology_.congruence(a0_);
}

int ChordDiagram::position_of(const Endpoint& e) const {
  for (size_t i = 0; i < series_.size(); ++i)
    if (series_[i] == e) return static_cast<int>(i);
  throw std::invalid_argument("endpoint " + format_endpoint(e) +
                              " not in diagram");
}

ChordDiagram ChordDiagram::slide(Endpoint moving, Endpoint target,
                                 SlideRecord* record) const {
  if (moving.chord == target.chord)
    throw std::invalid_argument("cannot slide a chord along itself");
  const int pm = position_of(moving);
  const int pt = position_of(target);
  if (pm - pt != 1 && pt - pm != 1)
    throw std::invalid_argument("endpoints " + format_endpoint(moving) +
                                " and " + format_endpoint(target) +
                                " are not adjacent");
  const Endpoint other{target.chord, !target.terminal};
  const int po = position_of(other);
  const bool interior = pm > std::min(pt, po) && pm < std::max(pt, po);
  // Ends of the same kind pass "same position": the slid class loses the
  // slid-along class; opposite kinds gain it.
  const SlidePosition pos = moving.terminal == target.terminal
                                ? SlidePosition::same
                                : SlidePosition::opposite;

  IntMat E = IntMat::identity(chords_);
  E.at(moving.chord - 1, target.chord - 1) =
      pos == SlidePosition::same ? -1 : 1;

  ChordDiagram out = *this;
  out.homology_ = E * homology_;
  out.series_.erase(out.series_.begin() + pm);
  const int io = po > pm ? po - 1 : po;
  // The moved endpoint lands beside the other end of the slid-along chord,
  // staying interior to its footprint iff it started interior; the interior
  // side of `other` faces the target endpoint.
  const int insert_at = interior == (pt < po) ? io : io + 1;
  out.series_.insert(out.series_.begin() + insert_at, moving);

  if (record) {
    record->steps.push_back(
        {moving.chord, moving.terminal, true, target.chord, pos});
    record->transform =
        record->transform.rows() == 0 ? E : E * record->transform;
  }
  return out;
}

} // namespace cyclocover
