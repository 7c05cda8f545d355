#pragma once

#include <stdexcept>
#include <string>

namespace kronlab {

struct KronlabError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParityError : KronlabError {
  using KronlabError::KronlabError;
};
struct PrecisionError : KronlabError {
  using KronlabError::KronlabError;
};
struct ConfigError : KronlabError {
  using KronlabError::KronlabError;
};
struct RankError : KronlabError {
  int rank;
  RankError(const std::string& what, int r) : KronlabError(what), rank(r) {}
};
struct ConvergenceError : KronlabError {
  using KronlabError::KronlabError;
};
struct PoleError : KronlabError {
  using KronlabError::KronlabError;
};
struct ConsistencyError : KronlabError {
  using KronlabError::KronlabError;
};

}  // namespace kronlab
