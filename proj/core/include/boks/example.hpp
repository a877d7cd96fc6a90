#pragma once

#include "boks/sparse_vector.hpp"

namespace boks {

// Binary label, always -1 or +1.
using Label = int;

// Throws ConfigError unless y is -1 or +1.
void check_label(Label y);

struct Example {
  SparseVector x;
  Label y = 1;
};

}  // namespace boks
