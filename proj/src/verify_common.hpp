#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "wadj/families.hpp"
#include "wadj/graph.hpp"
#include "wadj/numeric.hpp"
#include "wadj/verify.hpp"
#include "wadj/weights.hpp"

namespace wadj::detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline constexpr const char* kNamedLabels[] = {"G1", "G2", "G3", "G4"};
inline constexpr FamilyTag kNamedTags[] = {FamilyTag::G1, FamilyTag::G2, FamilyTag::G3, FamilyTag::G4};

inline int named_min_order(int index) { return index == 3 ? 6 : (index == 0 ? 4 : 5); }

inline Graph named_graph(int index, int n) { return make_named({kNamedTags[index], n}); }

inline CaseStatus pass_if(bool ok) { return ok ? CaseStatus::pass : CaseStatus::fail; }

/// Property P* on the degree grid 1..max(2, d_max).
bool has_pstar(const WeightFunction& f, int d_max);

inline WeightFunction extended_weight() { return WeightFunction::builtin(WeightKind::extended); }

/// (10n - 9) / 20 * sqrt(n - shift) evaluated in high precision; shift is
/// given in tenths, e.g. 38 for 3.8.
HighReal half_n_minus_09_sqrt(int n, int shift_tenths);

}  // namespace wadj::detail
