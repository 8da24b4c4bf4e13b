#include "frobcf/real_root.hpp"

#include <algorithm>

namespace frobcf {

namespace {

Int pow2(int k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return r;
}

Rat ratio(const Int& n, const Int& d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

int sign_of(const Int& v) { return sgn(v) > 0 ? 1 : (sgn(v) < 0 ? -1 : 0); }

using Poly = std::vector<Rat>;  // lowest degree first

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rat q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign_at(const Poly& p, const Rat& x) {
  Rat v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return sgn(v) > 0 ? 1 : (sgn(v) < 0 ? -1 : 0);
}

int variations(const std::vector<Poly>& chain, const Rat& x) {
  int count = 0, last = 0;
  for (const auto& p : chain) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int MonicCubic::sign_at(const Int& num, int k) const {
  const Int s = pow2(k);
  const Int v = num * num * num + c[2] * num * num * s + c[1] * num * s * s + c[0] * s * s * s;
  return sign_of(v);
}

FieldPoly MonicCubic::reduce(const std::vector<Int>& p) const {
  std::vector<Int> r = p;
  for (std::size_t d = r.size(); d-- > 3;) {
    const Int t = r[d];
    if (sgn(t) == 0) continue;
    r[d - 1] -= t * c[2];
    r[d - 2] -= t * c[1];
    r[d - 3] -= t * c[0];
    r[d] = 0;
  }
  r.resize(3);
  return {r[0], r[1], r[2]};
}

FieldPoly MonicCubic::multiply(const FieldPoly& a, const FieldPoly& b) const {
  std::vector<Int> p(5);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p[i + j] += a[i] * b[j];
  return reduce(p);
}

RealRoot::RealRoot(MonicCubic f, Int lo, int k) : f_(std::move(f)), lo_(std::move(lo)), k_(k) {
  if (f_.sign_at(lo_, k_) * f_.sign_at(lo_ + 1, k_) >= 0)
    throw IntegrityError("interval does not isolate a simple root");
  update_fast();
}

double RealRoot::approx() const {
  return ratio(2 * lo_ + 1, pow2(k_ + 1)).get_d();
}

void RealRoot::refine() {
  const Int left = 2 * lo_;
  const int s_left = f_.sign_at(left, k_ + 1);
  const int s_mid = f_.sign_at(left + 1, k_ + 1);
  if (s_mid == 0) throw IntegrityError("cubic has a dyadic root");
  lo_ = (s_left * s_mid < 0) ? left : left + 1;
  ++k_;
  update_fast();
}

void RealRoot::refine_to(int k) {
  while (k_ < k) refine();
}

void RealRoot::update_fast() {
  constexpr int kFast = 30;
  fast_ok_ = false;
  if (k_ < kFast) return;
  // cell at precision kFast containing the current interval
  Int l;
  mpz_fdiv_q_2exp(l.get_mpz_t(), lo_.get_mpz_t(), static_cast<mp_bitcnt_t>(k_ - kFast));
  if (abs(l) >= Int(1L << 50)) return;
  fast_k_ = kFast;
  fl_ = l.get_si();
  fh_ = fl_ + 1;
  const __int128 a = fl_ * fl_, b = fh_ * fh_;
  if (fl_ >= 0) {
    sl_ = a;
    sh_ = b;
  } else if (fh_ <= 0) {
    sl_ = b;
    sh_ = a;
  } else {
    sl_ = 0;
    sh_ = std::max(a, b);
  }
  fast_ok_ = true;
}

void RealRoot::bounds(const FieldPoly& g, Int& low, Int& high) const {
  const Int s = pow2(k_);
  const Int lo = lo_, hi = lo_ + 1;
  Int sq_lo, sq_hi;
  if (sgn(lo) >= 0) {
    sq_lo = lo * lo;
    sq_hi = hi * hi;
  } else if (sgn(hi) <= 0) {
    sq_lo = hi * hi;
    sq_hi = lo * lo;
  } else {
    sq_lo = 0;
    sq_hi = std::max(Int(lo * lo), Int(hi * hi));
  }
  const Int c0 = g[0] * s * s;
  const Int l1 = g[1] * lo * s, h1 = g[1] * hi * s;
  const Int l2 = g[2] * sq_lo, h2 = g[2] * sq_hi;
  low = c0 + std::min(l1, h1) + std::min(l2, h2);
  high = c0 + std::max(l1, h1) + std::max(l2, h2);
}

int RealRoot::sign(const FieldPoly& g) const {
  if (sgn(g[0]) == 0 && sgn(g[1]) == 0 && sgn(g[2]) == 0) return 0;
  constexpr long kSmall = 1L << 23;
  if (fast_ok_ && abs(g[0]) < kSmall && abs(g[1]) < kSmall && abs(g[2]) < kSmall) {
    const __int128 c0 = g[0].get_si(), c1 = g[1].get_si(), c2 = g[2].get_si();
    const __int128 base = c0 << (2 * fast_k_);
    const __int128 l1 = c1 * fl_ << fast_k_, h1 = c1 * fh_ << fast_k_;
    const __int128 l2 = c2 * sl_, h2 = c2 * sh_;
    const __int128 low = base + std::min(l1, h1) + std::min(l2, h2);
    const __int128 high = base + std::max(l1, h1) + std::max(l2, h2);
    if (low > 0) return 1;
    if (high < 0) return -1;
  }
  RealRoot r = *this;
  for (;;) {
    Int low, high;
    r.bounds(g, low, high);
    if (sgn(low) > 0) return 1;
    if (sgn(high) < 0) return -1;
    // straddling: refine, never decide
    if (r.k_ > 4096) throw IntegrityError("sign of a nonzero field element not resolved");
    for (int i = 0; i < 16; ++i) r.refine();
  }
}

std::vector<RealRoot> isolate_real_roots(const MonicCubic& f, int precision) {
  const Poly p{Rat(f.c[0]), Rat(f.c[1]), Rat(f.c[2]), Rat(1)};
  const Poly dp{Rat(f.c[1]), Rat(2 * f.c[2]), Rat(3)};
  std::vector<Poly> chain{p, dp};
  for (;;) {
    Poly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    chain.push_back(r);
  }
  if (chain.back().size() != 1) throw InputError("cubic has a repeated root");
  Int bound = 1;
  for (const auto& c : f.c) bound = std::max(bound, Int(abs(c) + 1));
  // isolate by bisection on (a, b] with Sturm counts
  std::vector<std::pair<Rat, Rat>> todo{{Rat(-bound), Rat(bound)}}, isolated;
  while (!todo.empty()) {
    auto [a, b] = todo.back();
    todo.pop_back();
    const int n = variations(chain, a) - variations(chain, b);
    if (n == 0) continue;
    if (n == 1) {
      isolated.push_back({a, b});
      continue;
    }
    const Rat m = (a + b) / 2;
    if (sign_at(p, m) == 0) throw InputError("cubic has a rational root");
    todo.push_back({a, m});
    todo.push_back({m, b});
  }
  if (isolated.size() != 3) throw InputError("cubic does not have three real roots");
  std::sort(isolated.begin(), isolated.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<RealRoot> roots;
  const Int scale = pow2(precision);
  for (const auto& [a, b] : isolated) {
    const int sa = sign_at(p, a);
    if (sa == 0) throw InputError("cubic has a rational root");
    // largest lo with lo/2^k left of the root
    auto left = [&](const Int& lo) {
      const Rat x = ratio(lo, scale);
      if (x <= a) return true;
      if (x >= b) return false;
      return sign_at(p, x) == sa;
    };
    Int lo = floor_div(a.get_num() * scale, a.get_den());
    Int hi = floor_div(b.get_num() * scale, b.get_den()) + 1;
    while (hi - lo > 1) {
      const Int mid = floor_div(lo + hi, Int(2));
      if (left(mid)) lo = mid;
      else hi = mid;
    }
    roots.emplace_back(f, lo, precision);
  }
  return roots;
}

}  // namespace frobcf
