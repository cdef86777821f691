#include "deltader/constructors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "deltader/errors.hpp"

namespace deltader {

namespace {

std::uint64_t small_binomial(std::uint64_t m, std::uint64_t k, std::uint64_t p) {
  if (k > m) return 0;
  unsigned __int128 num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num = num * ((m - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  // den is a unit since k < p
  __int128 t = 0, nt = 1, r = static_cast<__int128>(p), nr = static_cast<__int128>(den);
  while (nr != 0) {
    __int128 q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(num * static_cast<unsigned __int128>(t) % p);
}

std::uint64_t int_pow(std::uint64_t p, unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (r > (1ull << 40) / p) throw InputError("p^n is too large");
    r *= p;
  }
  return r;
}

AlgebraBuilder builder_from(const Algebra& A) {
  AlgebraBuilder b(A.field(), A.dim(), A.flavor());
  b.names(A.names());
  if (A.has_grading()) b.grading(A.grading());
  if (A.has_form()) b.form(A.form());
  for (auto [i, j] : A.stored_pairs())
    for (const auto& [k, c] : A.product(i, j)) b.add(i, j, k, c);
  return b;
}

std::string index_label(const std::string& stem, long long i) { return stem + std::to_string(i); }

}  // namespace

std::uint64_t binomial_mod(long long m, long long k, std::uint64_t p) {
  if (k < 0 || m < 0 || k > m) return 0;
  std::uint64_t um = static_cast<std::uint64_t>(m), uk = static_cast<std::uint64_t>(k), r = 1;
  while (uk > 0 || um > 0) {
    std::uint64_t a = um % p, b = uk % p;
    if (b > a) return 0;
    r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * small_binomial(a, b, p) % p);
    um /= p;
    uk /= p;
  }
  return r;
}

Algebra make_abelian(const Field& f, std::size_t n) { return AlgebraBuilder(f, n, Flavor::Lie).build(); }

Algebra make_sl(const Field& f, std::size_t n) {
  if (n < 2) throw InputError("sl(n) needs n >= 2");
  // basis matrices as sparse lists of (row, col, value)
  struct Elem {
    std::string name;
    std::vector<std::tuple<std::size_t, std::size_t, long long>> entries;
  };
  std::vector<Elem> basis;
  for (std::size_t i = 0; i + 1 < n; ++i) basis.push_back({"H" + std::to_string(i + 1), {{i, i, 1}, {i + 1, i + 1, -1}}});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      basis.push_back({"E" + std::to_string(i + 1) + std::to_string(j + 1), {{i, j, 1}}});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      basis.push_back({"E" + std::to_string(i + 1) + std::to_string(j + 1), {{i, j, 1}}});
  if (n == 2) {
    basis[0].name = "h";
    basis[1].name = "e";
    basis[2].name = "f";
  }
  const std::size_t d = basis.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> offdiag;
  for (std::size_t k = n - 1; k < d; ++k) {
    auto [r, c, v] = basis[k].entries[0];
    offdiag[{r, c}] = k;
  }
  std::vector<std::string> names;
  for (auto& e : basis) names.push_back(e.name);
  AlgebraBuilder b(f, d, Flavor::Lie);
  b.names(names);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t c = a + 1; c < d; ++c) {
      std::vector<long long> m(n * n, 0);
      for (auto [i1, j1, v1] : basis[a].entries)
        for (auto [i2, j2, v2] : basis[c].entries) {
          if (j1 == i2) m[i1 * n + j2] += v1 * v2;
          if (j2 == i1) m[i2 * n + j1] -= v1 * v2;
        }
      long long acc = 0;
      for (std::size_t k = 0; k + 1 < n; ++k) {
        acc += m[k * n + k];
        b.add(a, c, k, acc);
      }
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          if (r != s && m[r * n + s] != 0) b.add(a, c, offdiag.at({r, s}), m[r * n + s]);
    }
  return b.build();
}

Algebra make_witt_type(const Field& f, const WittSupport& R) {
  std::vector<long long> elems = R.elements;
  if (R.modulus) {
    const long long N = *R.modulus;
    if (N < 2) throw InputError("Witt-type modulus must be at least 2");
    if (f.kind() != FieldKind::PrimeField) throw InputError("residues mod p^n need the prime field GF(p)");
    long long q = N;
    const long long p = static_cast<long long>(f.characteristic());
    while (q % p == 0) q /= p;
    if (q != 1) throw InputError("the modulus must be a power of the field characteristic");
    for (auto& e : elems) e = ((e % N) + N) % N;
  }
  std::sort(elems.begin(), elems.end());
  if (std::adjacent_find(elems.begin(), elems.end()) != elems.end()) throw InputError("Witt-type support has repeated elements");
  if (!std::binary_search(elems.begin(), elems.end(), 0LL)) throw InputError("Witt-type support must contain 0");
  const std::size_t n = elems.size();
  auto index = [&](long long v) -> std::optional<std::size_t> {
    auto it = std::lower_bound(elems.begin(), elems.end(), v);
    if (it == elems.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - elems.begin());
  };
  std::vector<std::string> names;
  for (auto e : elems) names.push_back(index_label("e", e));
  AlgebraBuilder b(f, n, Flavor::Lie);
  b.names(names);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      long long s = elems[i] + elems[j];
      if (R.modulus) s %= *R.modulus;
      auto k = index(s);
      if (!k)
        throw MathError("NotClosed", "e" + std::to_string(elems[i]) + " + e" + std::to_string(elems[j]) + " = " +
                                         std::to_string(s) + " is not in R");
      b.add(i, j, *k, f.from_int(elems[j] - elems[i]));
    }
  return b.build();
}

Algebra make_zassenhaus(std::uint64_t p, unsigned n) {
  Field f = Field::prime_field(p);
  if (n < 1) throw InputError("Zassenhaus algebra needs n >= 1");
  const long long N = static_cast<long long>(int_pow(p, n));
  std::vector<std::string> names;
  for (long long i = -1; i <= N - 2; ++i) names.push_back(index_label("e", i));
  AlgebraBuilder b(f, static_cast<std::size_t>(N), Flavor::Lie);
  b.names(names);
  for (long long i = -1; i <= N - 2; ++i)
    for (long long j = i + 1; j <= N - 2; ++j) {
      const long long s = i + j;
      if (s < -1 || s > N - 2) continue;
      const auto c1 = binomial_mod(s + 1, j, p), c2 = binomial_mod(s + 1, i, p);
      FieldElement c = FieldElement::from_residue(f, c1) - FieldElement::from_residue(f, c2);
      b.add(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(j + 1), static_cast<std::size_t>(s + 1), c);
    }
  return b.build();
}

Algebra make_divided_powers(std::uint64_t p, unsigned n) {
  Field f = Field::prime_field(p);
  if (n < 1) throw InputError("divided powers need n >= 1");
  const std::size_t N = int_pow(p, n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < N; ++i) names.push_back(index_label("x", static_cast<long long>(i)));
  AlgebraBuilder b(f, N, Flavor::Assoc);
  b.names(names);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; i + j < N; ++j)
      b.add(i, j, i + j, FieldElement::from_residue(f, binomial_mod(static_cast<long long>(i + j), static_cast<long long>(j), p)));
  return b.build();
}

LinearMap divided_power_derivative(std::uint64_t p, unsigned n) {
  Field f = Field::prime_field(p);
  const std::size_t N = int_pow(p, n);
  LinearMap d(f, N, N);
  for (std::size_t i = 1; i < N; ++i) d(i, i - 1) = f.one();
  return d;
}

Algebra make_current(const Algebra& L, const Algebra& A) {
  if (!L.anticommutative()) throw MathError("FlavorMismatch", "the left factor must be anticommutative");
  if (A.flavor() != Flavor::Assoc) throw MathError("FlavorMismatch", "the right factor must be associative commutative");
  if (L.field() != A.field()) throw InputError("current algebra factors must share a field");
  const std::size_t n = L.dim(), m = A.dim();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a) names.push_back(L.names()[i] + "*" + A.names()[a]);
  AlgebraBuilder b(L.field(), n * m, L.flavor());
  b.names(names);
  if (L.has_grading()) {
    std::vector<int> g;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t a = 0; a < m; ++a) g.push_back(L.parity(i));
    b.grading(g);
  }
  for (auto [i, j] : L.stored_pairs())
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t c = (i == j ? a : 0); c < m; ++c)
        for (const auto& [k, x] : L.product(i, j))
          for (const auto& [l, y] : A.product(a, c)) b.add(i * m + a, j * m + c, k * m + l, x * y);
  return b.build();
}

Algebra make_semidirect(const ModuleAction& M) {
  const Algebra& L = M.algebra();
  if (!validate_module(M).ok()) throw MathError("InvalidAction", "the action does not respect the bracket");
  const std::size_t n = L.dim(), m = M.mdim();
  std::vector<std::string> names = L.names();
  for (std::size_t j = 0; j < m; ++j) names.push_back("m" + std::to_string(j + 1));
  AlgebraBuilder b(L.field(), n + m, Flavor::Lie);
  b.names(names);
  for (auto [i, j] : L.stored_pairs())
    for (const auto& [k, c] : L.product(i, j)) b.add(i, j, k, c);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& [k, c] : M.act(i, j)) b.add(i, n + j, n + k, c);
  return b.build();
}

Algebra make_deformed_zassenhaus(std::uint64_t p, unsigned n) {
  if (n < 2) throw InputError("the deformed Zassenhaus algebra needs n >= 2");
  Algebra cur = make_current(make_zassenhaus(p, 1), make_divided_powers(p, n - 1));
  const Field& f = cur.field();
  const long long N = static_cast<long long>(int_pow(p, n - 1));
  AlgebraBuilder b = builder_from(cur);
  const std::size_t top = (p - 1) * static_cast<std::size_t>(N);  // e_{p-2} ⊗ x^0
  for (long long a = 0; a < N; ++a)
    for (long long c = a + 1; c < N; ++c) {
      const long long s = a + c - 1;
      if (s >= N) continue;
      FieldElement v = FieldElement::from_residue(f, binomial_mod(s, c - 1, p)) -
                       FieldElement::from_residue(f, binomial_mod(s, a - 1, p));
      b.add(static_cast<std::size_t>(a), static_cast<std::size_t>(c), top + static_cast<std::size_t>(s), v);
    }
  return b.build();
}

Algebra make_derivation_algebra(const Algebra& A, const LinearMap& partial) {
  if (A.flavor() != Flavor::Assoc) throw MathError("FlavorMismatch", "A must be associative commutative");
  const std::size_t n = A.dim();
  if (partial.domain_dim() != n || partial.codomain_dim() != n) throw InputError("derivation has the wrong shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector lhs = partial.apply(A.multiply_basis(i, j));
      Vector rhs = add(A.multiply(partial.image(i), unit_vector(A.field(), n, j)),
                       A.multiply(unit_vector(A.field(), n, i), partial.image(j)));
      if (lhs != rhs)
        throw MathError("NotADerivation", "Leibniz rule fails on (" + A.names()[i] + ", " + A.names()[j] + ")");
    }
  std::vector<std::string> names;
  for (const auto& s : A.names()) names.push_back(s + "d");
  AlgebraBuilder b(A.field(), n, Flavor::Lie);
  b.names(names);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = sub(A.multiply(unit_vector(A.field(), n, i), partial.image(j)),
                     A.multiply(unit_vector(A.field(), n, j), partial.image(i)));
      for (std::size_t k = 0; k < n; ++k) b.add(i, j, k, v[k]);
    }
  return b.build();
}

Algebra make_elduque4(const Field& f) {
  AlgebraBuilder b(f, 4, Flavor::Lie);
  b.names({"a", "u", "v", "w"});
  b.add(0, 1, 1, 1).add(0, 2, 3, 1).add(0, 3, 2, 1);
  return b.build();
}

Algebra make_osp12(const Field& f) {
  enum { H, E, F, X, Y };
  AlgebraBuilder b(f, 5, Flavor::SuperLie);
  b.names({"H", "E", "F", "x", "y"}).grading({0, 0, 0, 1, 1});
  b.add(H, E, E, 2).add(H, F, F, -2).add(E, F, H, 1);
  b.add(H, X, X, 1).add(H, Y, Y, -1).add(E, Y, X, -1).add(F, X, Y, -1);
  b.add(X, X, E, 2).add(Y, Y, F, -2).add(X, Y, H, 1);
  Matrix B(f, 5, 5);
  B(H, H) = f.from_int(2);
  B(E, F) = f.one();
  B(F, E) = f.one();
  B(X, Y) = f.from_int(2);
  B(Y, X) = f.from_int(-2);
  b.form(B);
  return b.build();
}

Algebra make_truncated_polynomials(const Field& f, std::size_t k) {
  if (k < 1) throw InputError("truncation degree must be at least 1");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
  AlgebraBuilder b(f, k, Flavor::Assoc);
  b.names(names);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; i + j < k; ++j) b.add(i, j, i + j, 1);
  return b.build();
}

int GrassmannMonomial::parity() const { return std::popcount(mask) % 2; }

std::pair<int, unsigned> grassmann_product(unsigned a, unsigned b) {
  if (a & b) return {0, 0};
  int swaps = 0;
  for (unsigned j = 0; j < 32; ++j)
    if (b & (1u << j)) swaps += std::popcount(a >> (j + 1));
  return {swaps % 2 ? -1 : 1, a | b};
}

std::size_t EnvelopeBasis::index_of(std::size_t i, unsigned mask) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), std::make_pair(i, mask));
  if (it == elements.end() || *it != std::make_pair(i, mask)) return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(it - elements.begin());
}

EnvelopeBasis envelope_basis(const Algebra& L, unsigned m) {
  if (!L.has_grading()) throw MathError("GradingMissing", "the Grassmann envelope needs a Z2-grading");
  if (m < 1 || m > 16) throw InputError("number of Grassmann generators must be between 1 and 16");
  EnvelopeBasis e;
  e.m = m;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (unsigned g = 0; g < (1u << m); ++g)
      if (std::popcount(g) % 2 == L.parity(i)) e.elements.emplace_back(i, g);
  return e;
}

namespace {

std::string monomial_name(unsigned g) {
  if (g == 0) return "1";
  std::string s;
  for (unsigned j = 0; j < 32; ++j)
    if (g & (1u << j)) s += "g" + std::to_string(j + 1);
  return s;
}

}  // namespace

Algebra make_grassmann_envelope(const Algebra& L, unsigned m) {
  EnvelopeBasis eb = envelope_basis(L, m);
  if (L.flavor() == Flavor::Assoc) throw MathError("FlavorMismatch", "the envelope is built for (super) Lie algebras");
  if (L.flavor() == Flavor::Lie)
    for (int p : L.grading())
      if (p) throw InputError("odd basis vectors need the superlie flavor");
  const std::size_t N = eb.elements.size();
  std::vector<std::string> names;
  for (auto [i, g] : eb.elements) names.push_back(L.names()[i] + "(" + monomial_name(g) + ")");
  AlgebraBuilder b(L.field(), N, Flavor::Lie);
  b.names(names);
  for (std::size_t I = 0; I < N; ++I)
    for (std::size_t J = I + 1; J < N; ++J) {
      auto [i, g] = eb.elements[I];
      auto [j, h] = eb.elements[J];
      auto [sign, gh] = grassmann_product(g, h);
      if (sign == 0) continue;
      for (const auto& [k, c] : L.product(i, j)) {
        std::size_t K = eb.index_of(k, gh);
        if (K == static_cast<std::size_t>(-1)) throw MathError("GradingMismatch", "product leaves the envelope");
        b.add(I, J, K, sign > 0 ? c : -c);
      }
    }
  return b.build();
}

Matrix make_form_envelope(const Algebra& L, unsigned m, const Vector& f) {
  const Matrix& B = L.form();
  if (!validate_form(L).ok()) throw MathError("InvalidForm", "the form is not supersymmetric and invariant");
  if (f.size() != (1u << m)) throw InputError("the functional needs one value per Grassmann monomial");
  if (is_zero(f)) throw InputError("the functional must be nonzero");
  EnvelopeBasis eb = envelope_basis(L, m);
  const std::size_t N = eb.elements.size();
  Matrix out(L.field(), N, N);
  for (std::size_t I = 0; I < N; ++I)
    for (std::size_t J = 0; J < N; ++J) {
      auto [i, g] = eb.elements[I];
      auto [j, h] = eb.elements[J];
      if (B(i, j).is_zero()) continue;
      auto [sign, gh] = grassmann_product(g, h);
      if (sign == 0) continue;
      FieldElement v = B(i, j) * f[gh];
      out(I, J) = sign > 0 ? v : -v;
    }
  return out;
}

}  // namespace deltader
