#pragma once

#include <doctest.h>

#include <algorithm>
#include <vector>

#include "confembed/error.hpp"
#include "confembed/lie.hpp"

namespace testing_support {

inline std::vector<confembed::LieType> all_types(int max_rank) {
  using confembed::Family;
  std::vector<confembed::LieType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::C, n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({Family::D, n});
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({Family::E, n});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

inline confembed::Weight w(const char* type, confembed::IntVec coords) {
  return confembed::root_system(confembed::LieType::parse(type))->weight(coords);
}

template <class Fn>
confembed::ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const confembed::Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return confembed::ErrorKind::Usage;
}

}  // namespace testing_support
