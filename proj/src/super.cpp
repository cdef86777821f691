#include "deltader/super.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "deltader/constructors.hpp"
#include "deltader/errors.hpp"

namespace deltader {

namespace {

// Grows left-normed chains y x_1 x_2 x_3 x_4 one factor at a time, only along
// nonzero partial products, and adds each chain with its (Koszul) sign into
// the sum for its multiset of x indices.
struct S4Search {
  const Algebra& A;
  bool super;
  SpanBuilder span;
  std::vector<std::vector<std::size_t>> partners;  // j with e_i e_j != 0
  std::vector<std::size_t> seq;
  std::map<std::vector<std::size_t>, Vector> sums;

  int par(std::size_t i) const { return super ? A.parity(i) : 0; }

  int sequence_sign() const {
    int s = 1;
    for (std::size_t a = 0; a < seq.size(); ++a)
      for (std::size_t b = a + 1; b < seq.size(); ++b)
        if (seq[a] > seq[b]) {
          s = -s;
          if (par(seq[a]) && par(seq[b])) s = -s;
        }
    return s;
  }

  bool allowed(std::size_t j) const {
    if (std::find(seq.begin(), seq.end(), j) == seq.end()) return true;
    return par(j) == 1;
  }

  void grow(const Vector& partial) {
    if (seq.size() == 4) {
      std::vector<std::size_t> key = seq;
      std::sort(key.begin(), key.end());
      auto [it, fresh] = sums.try_emplace(key, zero_vector(A.field(), A.dim()));
      axpy(it->second, A.field().from_int(sequence_sign()), partial);
      return;
    }
    std::vector<char> seen(A.dim(), 0);
    for (std::size_t s = 0; s < A.dim(); ++s) {
      if (partial[s].is_zero()) continue;
      for (std::size_t j : partners[s]) {
        if (seen[j] || !allowed(j)) continue;
        seen[j] = 1;
        Vector next = A.multiply(partial, unit_vector(A.field(), A.dim(), j));
        if (is_zero(next)) continue;
        seq.push_back(j);
        grow(next);
        seq.pop_back();
      }
    }
  }

  void run() {
    const std::size_t n = A.dim();
    partners.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(A.multiply_basis(i, j))) partners[i].push_back(j);
    for (std::size_t y = 0; y < n && !span.full(); ++y) {
      sums.clear();
      grow(unit_vector(A.field(), n, y));
      for (const auto& [key, v] : sums)
        if (!is_zero(v) && span.insert(v) && span.full()) break;
    }
  }
};

}  // namespace

IdealBasis compute_s4(const Algebra& alg, IdentityLaw law) {
  const bool super = law == IdentityLaw::Super;
  if (super && !alg.has_grading()) throw MathError("GradingMissing", "the super standard identity needs a Z2-grading");
  const Field& f = alg.field();
  const std::size_t n = alg.dim();
  S4Search search{alg, super, SpanBuilder(f, n), {}, {}, {}};
  search.run();
  IdealBasis out;
  out.algebra = alg;
  out.span = Subspace::span(f, n, search.span.finish().rows);
  out.is_ideal = true;
  for (std::size_t i = 0; i < n && out.is_ideal; ++i)
    for (const auto& v : out.span.basis())
      if (!out.span.contains(alg.multiply(unit_vector(f, n, i), v))) {
        out.is_ideal = false;
        break;
      }
  return out;
}

bool check_standard_identity(const Algebra& alg, IdentityLaw law) { return compute_s4(alg, law).dim() == 0; }

bool verify_kernel_containment(const SolutionSpace& space, const IdealBasis& ideal) {
  for (const auto& D : space.basis) {
    if (D.domain_dim() != ideal.span.ambient()) throw InputError("map and ideal live in different algebras");
    for (const auto& v : ideal.span.basis())
      if (!is_zero(D.apply(v))) return false;
  }
  return true;
}

Subspace envelope_subspace(const Algebra& L, const Subspace& S, unsigned m) {
  const EnvelopeBasis eb = envelope_basis(L, m);
  const Field& f = L.field();
  std::vector<Vector> gens;
  for (const auto& v : S.basis())
    for (int p = 0; p < 2; ++p) {
      Vector part = zero_vector(f, L.dim());
      for (std::size_t i = 0; i < L.dim(); ++i)
        if (L.parity(i) == p) part[i] = v[i];
      if (is_zero(part)) continue;
      for (unsigned g = 0; g < (1u << m); ++g) {
        if (std::popcount(g) % 2 != p) continue;
        Vector w = zero_vector(f, eb.elements.size());
        for (std::size_t i = 0; i < L.dim(); ++i)
          if (!part[i].is_zero()) w[eb.index_of(i, g)] = part[i];
        gens.push_back(std::move(w));
      }
    }
  return Subspace::span(f, eb.elements.size(), gens);
}

DeskCheckReport desk_check_theorems(const Algebra& alg) {
  DeskCheckReport rep;
  const Field& f = alg.field();
  const std::size_t n = alg.dim();
  rep.graded = alg.has_grading();
  rep.form_attached = alg.has_form();
  const bool perfect = derived_subspace(alg).dim() == n;
  const bool centerless = center(alg).dim() == 0;
  rep.hypotheses_met = n > 0 && perfect && centerless && validate(alg, default_law(alg)).ok();
  if (!rep.hypotheses_met) {
    rep.note = "hypotheses not met: the algebra is not perfect with zero center, so it is not simple";
    return rep;
  }

  if (f.kind() != FieldKind::QuotientRing) {
    rep.parametric = solve_parametric(alg);
    rep.specials_within_known_set = true;
    for (const auto& [d, dim] : rep.parametric->specials) {
      bool known = false;
      for (const char* lit : {"-1", "0", "1/2", "1"}) known = known || d == f.parse(lit);
      rep.specials_within_known_set = rep.specials_within_known_set && known;
    }
  }

  rep.zero_off_special = true;
  for (const char* lit : {"-1", "0", "1/2", "1", "2", "1/3"}) {
    FieldElement d;
    try {
      d = f.parse(lit);
    } catch (const std::exception&) {
      continue;
    }
    DeskCheckRow row{d, {}};
    if (rep.graded)
      for (int p = 0; p < 2; ++p) row.dims.push_back(solve_superderivations(alg, d, p).dim());
    else
      row.dims.push_back(solve_delta_derivations(alg, d).dim());
    const std::string s = lit;
    if (s == "2" || s == "1/3")
      for (auto k : row.dims) rep.zero_off_special = rep.zero_off_special && k == 0;
    rep.rows.push_back(std::move(row));
  }

  const SolutionSpace half = solve_delta_derivations(alg, f.parse("1/2"));
  const SolutionSpace cent = solve_centroid(alg);
  rep.centroid_dim = cent.dim();
  rep.half_equals_centroid = half.span() == cent.span();
  if (rep.graded) {
    rep.half_equals_centroid = true;
    for (int p = 0; p < 2; ++p) {
      const SolutionSpace sc = solve_supercentroid(alg, p);
      const SolutionSpace sh = solve_superderivations(alg, f.parse("1/2"), p);
      rep.supercentroid_dims.push_back(sc.dim());
      rep.half_equals_centroid = rep.half_equals_centroid && sc.span() == sh.span();
    }
  }
  rep.passed = rep.zero_off_special && (!rep.parametric || rep.specials_within_known_set) &&
               (!rep.form_attached || rep.half_equals_centroid);
  return rep;
}

}  // namespace deltader
