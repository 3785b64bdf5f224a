#pragma once

#include <string>
#include <vector>

#include "shocklens/errors.hpp"

namespace shocklens {

/// A scalar field sampled on a structured grid: common x nodes, one row of
/// values per time slice, plus provenance metadata.
struct FieldSample {
  std::string field;
  double nu = 0.0;
  int K = 0;
  std::vector<double> t;                    // slice times, ascending
  std::vector<double> x;                    // nodes, ascending
  std::vector<std::vector<double>> values;  // values[slice][node]

  void validate() const {
    if (t.empty() || x.empty() || values.size() != t.size())
      throw EmptyGrid("FieldSample: empty or inconsistent grid");
    for (const auto& row : values)
      if (row.size() != x.size())
        throw EmptyGrid("FieldSample: row length mismatch");
  }
};

}  // namespace shocklens
