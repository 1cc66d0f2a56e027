#pragma once

#include <string>

#include "mvf/exact/rational.hpp"

namespace mvf {

enum class Theory { RCF, PCF, ACVF };

const char* theory_name(Theory t);

struct PlaceSpec {
  Theory kind = Theory::RCF;
  Integer prime = 0;  // 0 for RCF

  static PlaceSpec rcf() { return {Theory::RCF, Integer(0)}; }
  static PlaceSpec pcf(long p) { return {Theory::PCF, Integer(p)}; }
  static PlaceSpec acvf(long p) { return {Theory::ACVF, Integer(p)}; }

  bool is_valued() const { return kind != Theory::RCF; }
  std::string to_string() const;
  // InvalidArgument unless kind and prime are consistent.
  void validate() const;
};

inline bool operator==(const PlaceSpec& a, const PlaceSpec& b) {
  return a.kind == b.kind && a.prime == b.prime;
}

}  // namespace mvf
