#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "imprec/generators.hpp"

namespace imprec {

struct SuiteCounts {
  int pass = 0;
  int fail = 0;
  bool all_passed() const { return fail == 0 && pass > 0; }
};

/// Randomized checks of the four program equations (associativity,
/// commutativity, weakening, hoisting), one instance of each per round.
struct LawSuiteReport {
  std::uint64_t seed = 0;
  int count = 0;
  std::map<std::string, SuiteCounts> laws;
  bool all_passed() const;
};

LawSuiteReport run_law_suite(std::uint64_t seed, int count);

/// Random composable graded pairs: checks the pointwise inclusion of the
/// composed image in the composite of images, and that the decoupled
/// composite's image equals the Kleisli composite exactly.
struct OplaxSuiteReport {
  std::uint64_t seed = 0;
  int count = 0;
  SuiteCounts inclusion;
  SuiteCounts decoupled_image;
  int strict = 0;  // how many pairs had a strictly smaller composed image
  bool all_passed() const { return inclusion.all_passed() && decoupled_image.all_passed(); }
};

OplaxSuiteReport run_oplax_suite(std::uint64_t seed, int count);

/// Random pairs of column presentations of one credal set: checks that
/// both factor exactly and surjectively through the extreme points.
struct KanSuiteReport {
  std::uint64_t seed = 0;
  int count = 0;
  SuiteCounts factorization;
  bool all_passed() const { return factorization.all_passed(); }
};

KanSuiteReport run_kan_suite(std::uint64_t seed, int count);

/// Random graded morphisms: checks the marker encode/recover roundtrip.
struct FaithfulSuiteReport {
  std::uint64_t seed = 0;
  int count = 0;
  SuiteCounts roundtrip;
  bool all_passed() const { return roundtrip.all_passed(); }
};

FaithfulSuiteReport run_faithful_suite(std::uint64_t seed, int count);

}  // namespace imprec
