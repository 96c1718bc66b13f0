#pragma once

#include "hyperdet/symfun.hpp"
#include "hyperdet/tensor.hpp"

namespace hyperdet {

// String-level JSON bridge so the installed headers stay dependency-free.
// Scalars use the ExactScalar text format; polynomials are maps from
// comma-separated exponent tuples to "p/q"; all emitted documents carry
// "schema": "hyperdet/1" at top level and sorted keys.

struct TensorRequest {
  int order = 0, dim = 0;
  std::vector<ExactScalar> entries;  // row-major, last index fastest
};
TensorRequest parse_tensor_json(const std::string& text);

struct HankelRequest {
  std::vector<ExactScalar> moments;
  int n = 0, k = 0, r = 0;
};
HankelRequest parse_hankel_json(const std::string& text);

struct ToeplitzRequest {
  std::map<int, ExactScalar> offsets;
  int n = 0, k = 0;
};
ToeplitzRequest parse_toeplitz_json(const std::string& text);

std::string multipoly_json(const MultiPoly& p);
std::string unipoly_json(const UniPoly& p);
std::string sym_expansion_json(const SymExpansion& f);

}  // namespace hyperdet
