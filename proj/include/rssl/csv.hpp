// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rssl/linalg.hpp"

namespace rssl {

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

struct LoadedDataset {
  Matrix data;
  std::optional<std::vector<int>> labels;
};

/// Dataset interchange format: header `f1,...,fp[,label]`, one observation
/// per row, labels 0/1. Pass labels = nullptr to omit the label column.
void write_dataset_csv(const std::string& path, const Matrix& X,
                       const std::vector<int>* labels);

/// Reads the interchange format back. A trailing column named `label` is
/// returned separately; every value must parse as a finite number.
LoadedDataset read_dataset_csv(const std::string& path);

}  // namespace rssl
