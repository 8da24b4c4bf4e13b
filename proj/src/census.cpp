#include "frobcf/census.hpp"

#include "frobcf/parallel.hpp"

#include <cstdlib>
#include <numeric>

namespace frobcf {

int default_workers() {
  if (const char* env = std::getenv("FROBCF_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) return w;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string_view class_tag(MatrixClass c) {
  switch (c) {
    case MatrixClass::Reducible: return "reducible";
    case MatrixClass::Elliptic: return "M";
    case MatrixClass::Hyperbolic: return "H";
  }
  return "?";
}

MatrixClass classify_matrix(const IntMatrix& m) {
  if (!is_irreducible(m)) return MatrixClass::Reducible;
  return is_hyperbolic(m) ? MatrixClass::Hyperbolic : MatrixClass::Elliptic;
}

namespace {

long next_key(long v) { return v == 0 ? -1 : (v < 0 ? -v : -(v + 1)); }

}  // namespace

NormSphereStream::NormSphereStream(int dim, int norm) : NormSphereStream(dim, norm, {}) {}

NormSphereStream::NormSphereStream(int dim, int norm, std::vector<long> prefix)
    : dim_(dim), norm_(norm), fixed_(prefix.size()), v_(std::move(prefix)) {
  if (dim != 2 && dim != 3) throw InputError("dimension must be 2 or 3");
  if (norm < 0) throw InputError("norm must be nonnegative");
  const std::size_t len = static_cast<std::size_t>(dim * dim);
  if (fixed_ > len) throw InputError("prefix longer than the matrix");
  long used = 0;
  for (long x : v_) used += std::labs(x);
  if (used > norm_ || (fixed_ == len && used != norm_)) {
    done_ = true;
    return;
  }
  v_.resize(len, 0);
  if (fixed_ < len) fill_minimal(fixed_, norm_ - used);
}

void NormSphereStream::fill_minimal(std::size_t from, long remaining) {
  for (std::size_t i = from; i + 1 < v_.size(); ++i) v_[i] = 0;
  v_.back() = -remaining;
}

bool NormSphereStream::advance() {
  const std::size_t len = v_.size();
  if (fixed_ == len) return false;
  std::vector<long> budget(len + 1);
  budget[0] = norm_;
  for (std::size_t i = 0; i < len; ++i) budget[i + 1] = budget[i] - std::labs(v_[i]);
  for (std::size_t i = len; i-- > fixed_;) {
    const long cand = next_key(v_[i]);
    if (i + 1 == len) {
      if (v_[i] < 0) {
        v_[i] = -v_[i];
        return true;
      }
      continue;
    }
    if (std::labs(cand) <= budget[i]) {
      v_[i] = cand;
      fill_minimal(i + 1, budget[i] - std::labs(cand));
      return true;
    }
  }
  return false;
}

std::optional<IntMatrix> NormSphereStream::next() {
  if (done_) return std::nullopt;
  if (started_ && !advance()) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  std::vector<Int> e(v_.begin(), v_.end());
  return IntMatrix(dim_, e);
}

std::uint64_t sphere_size(int len, int norm) {
  if (norm == 0) return 1;
  auto binom = [](std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  std::uint64_t total = 0;
  for (int k = 1; k <= std::min(len, norm); ++k)
    total += binom(len, k) * (std::uint64_t{1} << k) * binom(norm - 1, k - 1);
  return total;
}

void enumerate_norm(int dim, int norm, const std::function<void(const IntMatrix&)>& visit) {
  NormSphereStream s(dim, norm);
  while (auto m = s.next()) visit(*m);
}

namespace {

// Two-entry prefixes in canonical order; each defines an independent block.
std::vector<std::vector<long>> block_prefixes(int norm) {
  std::vector<std::vector<long>> out;
  for (long a = 0;; a = next_key(a)) {
    if (std::labs(a) > norm) break;
    for (long b = 0;; b = next_key(b)) {
      if (std::labs(a) + std::labs(b) > norm) break;
      out.push_back({a, b});
    }
  }
  return out;
}

template <class Visit>
void for_each_block(int dim, int norm, int workers, Visit&& visit) {
  const auto prefixes = block_prefixes(norm);
  parallel_for(prefixes.size(), workers, [&](std::size_t b) {
    NormSphereStream s(dim, norm, prefixes[b]);
    while (auto m = s.next()) visit(b, *m);
  });
}

}  // namespace

std::vector<IntMatrix> matrices_of_class(int dim, int norm, MatrixClass cls, int workers) {
  const auto prefixes = block_prefixes(norm);
  std::vector<std::vector<IntMatrix>> blocks(prefixes.size());
  for_each_block(dim, norm, workers, [&](std::size_t b, const IntMatrix& m) {
    if (classify_matrix(m) == cls) blocks[b].push_back(m);
  });
  std::vector<IntMatrix> out;
  for (auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<IntMatrix> irreducible_matrices(int dim, int norm, int workers) {
  const auto prefixes = block_prefixes(norm);
  std::vector<std::vector<IntMatrix>> blocks(prefixes.size());
  for_each_block(dim, norm, workers, [&](std::size_t b, const IntMatrix& m) {
    if (is_irreducible(m)) blocks[b].push_back(m);
  });
  std::vector<IntMatrix> out;
  for (auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

CensusReport census(int dim, int norm, const CensusOptions& options) {
  if (norm > options.cap)
    throw InputError("norm " + std::to_string(norm) + " exceeds the census cap " +
                     std::to_string(options.cap) + "; raise the cap to run it");
  const auto prefixes = block_prefixes(norm);
  struct Counts {
    std::uint64_t total = 0, m = 0, h = 0;
  };
  std::vector<Counts> counts(prefixes.size());
  for_each_block(dim, norm, options.workers, [&](std::size_t b, const IntMatrix& mat) {
    auto& c = counts[b];
    ++c.total;
    switch (classify_matrix(mat)) {
      case MatrixClass::Hyperbolic: ++c.h; [[fallthrough]];
      case MatrixClass::Elliptic: ++c.m; break;
      case MatrixClass::Reducible: break;
    }
  });
  CensusReport r;
  r.dim = dim;
  r.norm = norm;
  for (const auto& c : counts) {
    r.total_enumerated += c.total;
    r.count_m += c.m;
    r.count_h += c.h;
  }
  return r;
}

}  // namespace frobcf
