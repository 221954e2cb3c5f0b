#include "winfty/dhat.hpp"

#include <sstream>

namespace winfty {

namespace {

// internal monomial algebra: element of D as map (t-power, derivative order) -> coeff
using MonKey = std::pair<long, unsigned>;
using MonElement = std::map<MonKey, Rational>;

void mon_add(MonElement& e, long a, unsigned m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.try_emplace(MonKey{a, m}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

// Stirling numbers of the second kind: D^l = sum_j S2(l,j) t^j d^j
std::vector<std::vector<Rational>> stirling2_table(unsigned lmax) {
  std::vector<std::vector<Rational>> s2(lmax + 1);
  s2[0] = {Rational(1)};
  for (unsigned l = 1; l <= lmax; ++l) {
    s2[l].assign(l + 1, Rational(0));
    for (unsigned j = 1; j <= l; ++j) {
      Rational v = (j < l) ? s2[l - 1][j] * Rational(static_cast<long>(j)) : Rational(0);
      v += s2[l - 1][j - 1];
      s2[l][j] = v;
    }
  }
  return s2;
}

MonElement to_monomials(const DiffOpElement& e) {
  unsigned lmax = 0;
  for (const auto& [key, c] : e.terms())
    if (key.kind == OpKind::L) lmax = std::max(lmax, key.l);
  const auto s2 = stirling2_table(lmax);

  MonElement out;
  for (const auto& [key, c] : e.terms()) {
    if (key.kind == OpKind::J) {
      // J^l(k) = -t^{l+k} d^l
      mon_add(out, static_cast<long>(key.l) + key.k, key.l, -c);
    } else {
      // L^l(k) = -t^k D^l = -sum_j S2(l,j) t^{k+j} d^j
      for (unsigned j = 0; j <= key.l; ++j)
        mon_add(out, key.k + static_cast<long>(j), j, -c * s2[key.l][j]);
    }
  }
  return out;
}

DiffOpElement from_monomials(const MonElement& e) {
  DiffOpElement out;
  for (const auto& [key, c] : e) {
    // t^a d^l = -J^l(a - l)
    out.add_term(OpBasisKey{OpKind::J, key.second, key.first - static_cast<long>(key.second)}, -c);
  }
  return out;
}

// t^a d^m . t^b d^n = sum_j C(m,j) ff(b,j) t^{a+b-j} d^{m+n-j}
void mon_compose_into(MonElement& out, long a, unsigned m, long b, unsigned n, const Rational& c) {
  for (unsigned j = 0; j <= m; ++j) {
    const Rational f = int_binomial(static_cast<long>(m), j) * Rational(falling_factorial(b, j));
    if (f.is_zero()) continue;
    mon_add(out, a + b - static_cast<long>(j), m + n - j, c * f);
  }
}

}  // namespace

DiffOpElement DiffOpElement::basis(OpKind kind, unsigned l, long k) {
  DiffOpElement e;
  e.terms_.emplace(OpBasisKey{kind, l, k}, Rational(1));
  return e;
}

DiffOpElement DiffOpElement::central_element(Rational c) {
  DiffOpElement e;
  e.central_ = std::move(c);
  return e;
}

void DiffOpElement::add_term(const OpBasisKey& key, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOpElement& DiffOpElement::operator+=(const DiffOpElement& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  central_ += o.central_;
  return *this;
}

DiffOpElement& DiffOpElement::operator*=(const Rational& k) {
  if (k.is_zero()) {
    terms_.clear();
    central_ = Rational(0);
    return *this;
  }
  for (auto& [key, c] : terms_) c *= k;
  central_ *= k;
  return *this;
}

std::string DiffOpElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    os << c.str() << "*" << (key.kind == OpKind::J ? "J^" : "L^") << key.l << "(" << key.k << ")";
    first = false;
  }
  if (!central_.is_zero() || first) {
    if (!first) os << " + ";
    os << central_.str() << "*C";
  }
  return os.str();
}

DiffOpElement raw_monomial(long tpow, unsigned dord) {
  DiffOpElement e;
  e.add_term(OpBasisKey{OpKind::J, dord, tpow - static_cast<long>(dord)}, Rational(-1));
  return e;
}

Rational psi_monomial(long a, unsigned m, long b, unsigned n) {
  if (a + b != static_cast<long>(m) + static_cast<long>(n)) return Rational(0);
  const Rational pref = factorial(m) * factorial(n) / factorial(m + n + 1);
  return pref * Rational(falling_factorial(a, n + 1)) * Rational(falling_factorial(b, m));
}

Rational psi(const DiffOpElement& x, const DiffOpElement& y) {
  const MonElement mx = to_monomials(x);
  const MonElement my = to_monomials(y);
  Rational acc(0);
  for (const auto& [kx, cx] : mx)
    for (const auto& [ky, cy] : my)
      acc += cx * cy * psi_monomial(kx.first, kx.second, ky.first, ky.second);
  return acc;
}

DiffOpElement j_to_l(const DiffOpElement& e) {
  DiffOpElement out;
  out.central() = e.central();
  for (const auto& [key, c] : e.terms()) {
    if (key.kind == OpKind::L) {
      out.add_term(key, c);
      continue;
    }
    const auto coeffs = falling_factorial_coeffs(key.l);
    for (unsigned j = 0; j < coeffs.size(); ++j)
      out.add_term(OpBasisKey{OpKind::L, j, key.k}, c * coeffs[j]);
  }
  return out;
}

DiffOpElement l_to_j(const DiffOpElement& e) {
  DiffOpElement out;
  out.central() = e.central();
  MonElement mons;
  for (const auto& [key, c] : e.terms()) {
    if (key.kind == OpKind::J) {
      out.add_term(key, c);
      continue;
    }
    DiffOpElement single;
    single.add_term(key, c);
    for (const auto& [mk, mc] : to_monomials(single)) mon_add(mons, mk.first, mk.second, mc);
  }
  out += from_monomials(mons);
  return out;
}

DiffOpElement dhat_bracket(const DiffOpElement& x, const DiffOpElement& y, const Rational& c) {
  const MonElement mx = to_monomials(x);
  const MonElement my = to_monomials(y);
  MonElement comm;
  Rational central(0);
  for (const auto& [kx, cx] : mx) {
    for (const auto& [ky, cy] : my) {
      const Rational coeff = cx * cy;
      mon_compose_into(comm, kx.first, kx.second, ky.first, ky.second, coeff);
      mon_compose_into(comm, ky.first, ky.second, kx.first, kx.second, -coeff);
      central += coeff * psi_monomial(kx.first, kx.second, ky.first, ky.second);
    }
  }
  DiffOpElement out = from_monomials(comm);
  out.central() = central * c;
  return out;
}

PowerSeries delta_series(const Weight& lambda, int N, int order) {
  PowerSeries acc(order);
  const PowerSeries em1 = series_em1(order);
  PowerSeries pw = PowerSeries::constant(Rational(1), order);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) pw = pw * em1;
    PowerSeries term = pw;
    term.scale(hw_eigenvalue(static_cast<unsigned>(k), lambda, N) / factorial(static_cast<unsigned>(k)));
    acc += term;
  }
  return acc;
}

PowerSeries delta_closed_form(const Weight& lambda, int N, int order) {
  if (lambda.N() != N) throw std::invalid_argument("delta_closed_form: weight length mismatch");
  PowerSeries acc(order);
  for (int i = 1; i <= N; ++i) {
    const Rational s = -lambda.pair_gamma(i);
    const Rational t = lambda.alpha_pair[i - 1];
    acc -= series_em1_ratio(s, order);
    PowerSeries te = series_exp_linear(s, order);
    te.scale(t);
    acc -= te;
  }
  return acc;
}

Rational QuasifiniteDecomposition::multiplicity_sum_at_zero() const {
  Rational acc(0);
  for (const auto& [r, p] : terms)
    if (!p.empty()) acc += p[0];
  return acc;
}

QuasifiniteDecomposition quasifinite_decompose(const Weight& lambda, int N) {
  if (lambda.N() != N) throw std::invalid_argument("quasifinite_decompose: weight length mismatch");
  QuasifiniteDecomposition dec;
  dec.central_charge = Rational(-N);

  // phi(x) + c = sum_i [ (t_i - 1) e^{s_i x} - t_i e^{(s_i+1) x} ]; same
  // exponents merge by adding constants, never by raising the degree
  std::map<Rational, Rational> merged;
  for (int i = 1; i <= N; ++i) {
    const Rational s = -lambda.pair_gamma(i);
    const Rational t = lambda.alpha_pair[i - 1];
    merged[s] += t - Rational(1);
    merged[s + Rational(1)] += -t;
  }
  for (const auto& [r, p] : merged)
    if (!p.is_zero()) dec.terms.emplace_back(r, std::vector<Rational>{p});

  if (dec.multiplicity_sum_at_zero() != Rational(-N))
    throw inconsistency_error("quasifinite_decompose: sum of multiplicities at 0 is not -N");

  // reconstruction: Delta = phi/(e^x - 1) with phi = (sum p_i e^{r_i x}) + N
  const int order = 10;
  PowerSeries phi(order + 1);
  phi[0] = Rational(N);
  for (const auto& [r, p] : dec.terms) {
    PowerSeries e = series_exp_linear(r, order + 1);
    e.scale(p[0]);
    phi += e;
  }
  PowerSeries num(order), den(order);
  const PowerSeries em1 = series_em1(order + 1);
  for (int n = 0; n <= order; ++n) {
    num[n] = phi[n + 1];
    den[n] = em1[n + 1];
  }
  if (series_divide(num, den) != delta_closed_form(lambda, N, order))
    throw inconsistency_error("quasifinite_decompose: reconstructed series does not match Delta");
  return dec;
}

WeightSeries weight_components(const Weight& lambda, int N, int order) {
  const PowerSeries d = delta_closed_form(lambda, N, order);
  WeightSeries out;
  out.lambda_n.reserve(static_cast<size_t>(order) + 1);
  for (int n = 0; n <= order; ++n)
    out.lambda_n.push_back(factorial(static_cast<unsigned>(n)) * d[n]);
  return out;
}

WeightSeries weight_components_measured(const Weight& lambda, int N, int order) {
  const LatticeConfig cfg(N);
  const State v = State::highest_weight(cfg, lambda);
  std::vector<Rational> measured;  // J^k(0)-eigenvalues
  for (int k = 0; k <= order; ++k) {
    const State jv = j_mode(static_cast<unsigned>(k), 0, v);
    Rational eig;
    if (!jv.is_scalar_multiple_of_vacuum(&eig))
      throw inconsistency_error("weight_components_measured: J^k(0) v_lambda is not scalar");
    measured.push_back(eig);
  }
  // J^k(0) = sum_j c^{(k)}_j L^j(0) with unit leading coefficient; solve the
  // triangular system for the L^n(0)-eigenvalues
  WeightSeries out;
  for (int n = 0; n <= order; ++n) {
    const auto coeffs = falling_factorial_coeffs(static_cast<unsigned>(n));
    Rational v_n = measured[static_cast<size_t>(n)];
    for (int j = 0; j < n; ++j) v_n -= coeffs[static_cast<size_t>(j)] * out.lambda_n[static_cast<size_t>(j)];
    out.lambda_n.push_back(v_n);
  }
  return out;
}

bool realization_bracket_check(unsigned a, long m, unsigned b, long n, int N, long deg) {
  const LatticeConfig cfg(N);
  const DiffOpElement bracket =
      dhat_bracket(DiffOpElement::basis(OpKind::J, a, m), DiffOpElement::basis(OpKind::J, b, n), Rational(-N));
  for (const auto& mono : heisenberg_monomials(cfg, deg)) {
    const State v = State::monomial(cfg, mono);
    State concrete = j_mode(a, m, j_mode(b, n, v)) - j_mode(b, n, j_mode(a, m, v));
    State abstract = bracket.central() * v;
    for (const auto& [key, c] : bracket.terms()) {
      State t = j_mode(key.l, key.k, v);
      t *= c;
      abstract += t;
    }
    if (concrete != abstract) return false;
  }
  return true;
}

}  // namespace winfty
