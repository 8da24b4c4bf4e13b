#pragma once

// Enumeration of integer matrices on an L1 sphere and membership counts
// for M(3,Z) (irreducible characteristic polynomial) and H(3,Z) (hyperbolic).

#include "frobcf/matrix.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace frobcf {

enum class MatrixClass { Reducible, Elliptic, Hyperbolic };

/// "reducible", "M" (irreducible, not all eigenvalues real) or "H".
std::string_view class_tag(MatrixClass c);

MatrixClass classify_matrix(const IntMatrix& m);

/// Every dim x dim integer matrix of norm exactly `norm`, once each, in
/// lexicographic order of the row-major entry vector. Entries are ordered
/// by absolute value, negative before positive: 0, -1, 1, -2, 2, ...
class NormSphereStream {
 public:
  NormSphereStream(int dim, int norm);
  /// Restricts the stream to matrices whose leading entries equal `prefix`.
  NormSphereStream(int dim, int norm, std::vector<long> prefix);

  std::optional<IntMatrix> next();

 private:
  bool advance();
  void fill_minimal(std::size_t from, long remaining);

  int dim_;
  long norm_;
  std::size_t fixed_;
  std::vector<long> v_;
  bool started_ = false;
  bool done_ = false;
};

/// Number of integer vectors of length `len` with L1 norm `norm`.
std::uint64_t sphere_size(int len, int norm);

/// Visits the whole sphere in canonical order.
void enumerate_norm(int dim, int norm, const std::function<void(const IntMatrix&)>& visit);

/// Materialized sphere restricted to one class, in canonical order.
std::vector<IntMatrix> matrices_of_class(int dim, int norm, MatrixClass cls, int workers = 1);
/// All matrices of M(dim,Z) (either class) with the given norm.
std::vector<IntMatrix> irreducible_matrices(int dim, int norm, int workers = 1);

struct CensusReport {
  int dim = 3;
  int norm = 0;
  std::uint64_t total_enumerated = 0;
  std::uint64_t count_m = 0;  // irreducible (M(k,Z))
  std::uint64_t count_h = 0;  // hyperbolic (H(k,Z))
};

struct CensusOptions {
  int cap = 7;
  int workers = 1;
};

/// Counts M and H members on the norm sphere. Throws InputError above the cap.
CensusReport census(int dim, int norm, const CensusOptions& options = {});

}  // namespace frobcf
