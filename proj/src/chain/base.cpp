#include "mvf/chain/base.hpp"

#include "mvf/errors.hpp"

namespace mvf {

void BaseStructure::validate() const {
  if (places.empty()) fail(ErrorCode::InvalidArgument, "base structure needs at least one place");
  for (size_t i = 0; i < places.size(); ++i) {
    places[i].validate();
    for (size_t j = 0; j < i; ++j)
      if (places[i] == places[j])
        fail(ErrorCode::InvalidArgument, "base place " + places[i].to_string() + " repeated");
  }
}

std::string BaseStructure::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < places.size(); ++i) {
    if (i) s += ", ";
    s += places[i].to_string();
  }
  return s + ")";
}

}  // namespace mvf
