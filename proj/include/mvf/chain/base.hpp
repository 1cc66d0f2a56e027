#pragma once

#include <string>
#include <vector>

#include "mvf/local/place_spec.hpp"

namespace mvf {

// The tuple of local theories over Q, one PlaceSpec per index.
struct BaseStructure {
  std::vector<PlaceSpec> places;

  int size() const { return static_cast<int>(places.size()); }
  const PlaceSpec& operator[](int i) const { return places[i]; }
  // InvalidArgument when empty, when a spec is malformed, or when the same
  // (kind, prime) appears twice.
  void validate() const;
  std::string to_string() const;
};

inline bool operator==(const BaseStructure& a, const BaseStructure& b) {
  return a.places == b.places;
}

}  // namespace mvf
