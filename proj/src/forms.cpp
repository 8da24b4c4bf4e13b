#include "frobcf/forms.hpp"

namespace frobcf {

BinaryQuadraticForm q2(const IntMatrix& a) {
  if (a.dim() != 2) throw InputError("q2 needs a 2x2 matrix");
  if (!is_irreducible(a)) throw InputError("not in M(2,Z): characteristic polynomial is reducible");
  const Int& a11 = a(0, 0);
  const Int& a12 = a(0, 1);
  const Int& a21 = a(1, 0);
  const Int& a22 = a(1, 1);
  const Int g = gcd(gcd(a12, a21), a22 - a11);
  return {a12 / g, (a22 - a11) / g, -a21 / g};
}

std::string_view binary_monomial(int k) {
  static constexpr std::string_view names[] = {"m^3", "m^2n", "mn^2", "n^3"};
  return names[k];
}

std::string_view ternary_monomial(int k) {
  static constexpr std::string_view names[] = {"x^3",  "y^3",  "z^3",  "x^2y", "xy^2",
                                               "x^2z", "xz^2", "y^2z", "yz^2", "xyz"};
  return names[k];
}

BinaryCubicForm p_bar(const CharCubic& chi, const Rat& alpha, const Rat& beta) {
  const Rat a1 = chi.a1, a2 = chi.a2, a3 = chi.a3;
  BinaryCubicForm f;
  f.c[0] = 1;
  f.c[1] = 2 * a1 * alpha + 3 * beta;
  f.c[2] = (a2 + a1 * a1) * alpha * alpha + 4 * a1 * alpha * beta + 3 * beta * beta;
  f.c[3] = (a1 * a2 - a3) * alpha * alpha * alpha + (a2 + a1 * a1) * alpha * alpha * beta +
           2 * a1 * alpha * beta * beta + beta * beta * beta;
  return f;
}

Int bracket(const IntMatrix& a, const IntMatrix& b, int ij, int kl) {
  const int i = ij / 10 - 1, j = ij % 10 - 1, k = kl / 10 - 1, l = kl % 10 - 1;
  for (int x : {i, j, k, l})
    if (x < 0 || x > 2) throw InputError("bracket index out of range");
  if (a.dim() != 3 || b.dim() != 3) throw InputError("bracket needs 3x3 matrices");
  return a(i, j) * b(k, l) - a(k, l) * b(i, j);
}

const std::array<std::vector<BracketTerm>, 10>& p_tilde_table() {
  // The x^2z row reads <11,12> + <12,33> + <32,13>; with the other rows it
  // makes the form equal det(u; uA; uB) whenever A and B commute.
  static const std::array<std::vector<BracketTerm>, 10> table{{
      {{1, 12, 13}},                                        // x^3
      {{1, 23, 21}},                                        // y^3
      {{1, 31, 32}},                                        // z^3
      {{1, 13, 11}, {1, 22, 13}, {1, 12, 23}},              // x^2y
      {{1, 22, 23}, {1, 23, 11}, {1, 13, 21}},              // xy^2
      {{1, 11, 12}, {1, 12, 33}, {1, 32, 13}},              // x^2z
      {{1, 32, 33}, {1, 11, 32}, {1, 31, 12}},              // xz^2
      {{1, 21, 22}, {1, 33, 21}, {1, 23, 31}},              // y^2z
      {{1, 31, 22}, {1, 33, 31}, {1, 21, 32}},              // yz^2
      {{1, 11, 22}, {1, 22, 33}, {1, 33, 11}, {3, 13, 31}}, // xyz
  }};
  return table;
}

TernaryCubicForm p_tilde(const IntMatrix& a, const IntMatrix& b) {
  TernaryCubicForm f;
  const auto& table = p_tilde_table();
  for (int k = 0; k < 10; ++k) {
    Int s = 0;
    for (const auto& t : table[k]) s += t.coefficient * bracket(a, b, t.ij, t.kl);
    f.c[k] = s;
  }
  return f;
}

namespace {

template <class It>
Rat primitive_scale(It begin, It end) {
  Int num_gcd = 0, den_lcm = 1;
  for (auto it = begin; it != end; ++it) {
    const Rat r(*it);
    num_gcd = gcd(num_gcd, r.get_num());
    den_lcm = lcm(den_lcm, r.get_den());
  }
  if (sgn(num_gcd) == 0) return Rat(0);
  int sign = 1;
  for (auto it = begin; it != end; ++it)
    if (sgn(*it) != 0) {
      sign = sgn(*it);
      break;
    }
  Rat s(num_gcd, den_lcm);
  s.canonicalize();
  return sign * s;
}

}  // namespace

std::pair<IntBinaryCubic, Rat> primitive_part(const BinaryCubicForm& f) {
  const Rat s = primitive_scale(f.c.begin(), f.c.end());
  IntBinaryCubic p;
  if (sgn(s) == 0) return {p, s};
  for (int k = 0; k < 4; ++k) {
    const Rat v = f.c[k] / s;
    if (v.get_den() != 1) throw IntegrityError("primitive part is not integral");
    p.c[k] = v.get_num();
  }
  return {p, s};
}

std::pair<TernaryCubicForm, Rat> primitive_part(const TernaryCubicForm& f) {
  const Rat s = primitive_scale(f.c.begin(), f.c.end());
  TernaryCubicForm p;
  if (sgn(s) == 0) return {p, s};
  for (int k = 0; k < 10; ++k) {
    const Rat v = Rat(f.c[k]) / s;
    if (v.get_den() != 1) throw IntegrityError("primitive part is not integral");
    p.c[k] = v.get_num();
  }
  return {p, s};
}

Int ProductForm::content() const {
  const Rat c = scale_mn * scale_xyz;
  if (c.get_den() != 1) throw IntegrityError("integrality violated: Q has non-integer content " + c.get_str());
  return c.get_num();
}

Rat ProductForm::eval(const std::array<Int, 5>& v) const {
  return cubic_mn.eval(Rat(v[3]), Rat(v[4])) * Rat(cubic_xyz.eval(v[0], v[1], v[2]));
}

ProductForm q3(const CommutantBasis& basis) {
  ProductForm q;
  q.basis = basis;
  q.chi = char_cubic(basis.a);
  q.cubic_mn = p_bar(q.chi, basis.powers.alpha, basis.powers.beta);
  q.cubic_xyz = p_tilde(basis.a, adjugate(basis.a));
  std::tie(q.mn_primitive, q.scale_mn) = primitive_part(q.cubic_mn);
  std::tie(q.xyz_primitive, q.scale_xyz) = primitive_part(q.cubic_xyz);
  if (sgn(q.scale_xyz) == 0) throw IntegrityError("Ptilde vanishes identically");
  (void)q.content();  // throws when the product is not integral
  return q;
}

ProductForm q3(const IntMatrix& c) {
  if (c.dim() != 3) throw InputError("q3 needs a 3x3 matrix");
  return q3(commutant_basis(c));
}

}  // namespace frobcf
