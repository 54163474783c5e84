#pragma once

#include <stdexcept>

namespace dtim {

// Malformed or unusable input data: bad UTF-8, bad TSV, empty word list.
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid model state or configuration: empty n-gram vocabulary, bad
// hyper-parameters, score out of range.
class ModelError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace dtim
