#include "irrcert/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "irrcert/numtheory.hpp"

namespace irrcert::oracle {

namespace nt = numtheory;

Polynomial FactorizationWitness::refold() const {
  Polynomial acc = Polynomial::constant(unit);
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

namespace {

// Positive divisors of |n|, ascending.
std::vector<Int> positive_divisors(const Int& n) {
  auto pf = nt::factorize(n);
  std::vector<Int> out{Int(1)};
  for (const auto& [p, e] : pf.factors) {
    std::size_t base = out.size();
    Int power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= p;
      for (std::size_t s = 0; s < base; ++s) out.push_back(out[s] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Signed divisor list in a fixed order: +1, -1, +d2, -d2, ...
std::vector<Int> signed_divisors(const Int& n) {
  std::vector<Int> pos = positive_divisors(n);
  std::vector<Int> out;
  out.reserve(pos.size() * 2);
  for (const auto& d : pos) {
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

// Sample points 0, 1, -1, 2, -2, ... skipping zeros of f; a value of
// zero at a sample point would break divisor enumeration.
std::vector<Int> sample_points(const Polynomial& f, std::size_t count) {
  std::vector<Int> out;
  Int t = 0;
  while (out.size() < count) {
    if (f.eval_int(t) != 0) out.push_back(t);
    if (t > 0)
      t = -t;
    else
      t = -t + 1;
  }
  return out;
}

struct LagrangeBasis {
  // basis[i][c]: coefficient c of the i-th Lagrange basis polynomial.
  std::vector<std::vector<Rat>> basis;
};

LagrangeBasis lagrange_basis(const std::vector<Int>& pts) {
  std::size_t m = pts.size() - 1;
  LagrangeBasis lb;
  lb.basis.resize(pts.size());
  for (std::size_t i = 0; i <= m; ++i) {
    std::vector<Int> numer{Int(1)};
    Int denom = 1;
    for (std::size_t j = 0; j <= m; ++j) {
      if (j == i) continue;
      std::vector<Int> next(numer.size() + 1, Int(0));
      for (std::size_t c = 0; c < numer.size(); ++c) {
        next[c + 1] += numer[c];
        next[c] -= numer[c] * pts[j];
      }
      numer = std::move(next);
      denom *= pts[i] - pts[j];
    }
    lb.basis[i].resize(m + 1, Rat(0));
    for (std::size_t c = 0; c <= m; ++c) {
      Rat r(numer[c], denom);
      r.canonicalize();
      lb.basis[i][c] = r;
    }
  }
  return lb;
}

// Minimal-degree nonconstant factor of a primitive g with positive
// leading coefficient, or nullopt if g is irreducible.
std::optional<Polynomial> find_factor(const Polynomial& g) {
  std::size_t n = g.degree_checked();
  if (n < 2) return std::nullopt;

  for (std::size_t m = 1; m <= n / 2; ++m) {
    std::vector<Int> pts = sample_points(g, m + 1);
    LagrangeBasis lb = lagrange_basis(pts);

    std::vector<std::vector<Int>> divisors(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
      Int value = g.eval_int(pts[i]);
      // The first coordinate stays positive: h and -h divide together.
      divisors[i] = i == 0 ? positive_divisors(value) : signed_divisors(value);
    }

    std::vector<std::size_t> idx(m + 1, 0);
    std::vector<Int> values(m + 1);
    while (true) {
      for (std::size_t i = 0; i <= m; ++i) values[i] = divisors[i][idx[i]];

      // Leading coefficient first: it must be a nonzero integer dividing
      // lead(g). Candidates with zero lead were covered at smaller m.
      Rat lead(0);
      for (std::size_t i = 0; i <= m; ++i) lead += Rat(values[i]) * lb.basis[i][m];
      lead.canonicalize();
      if (lead != 0 && lead.get_den() == 1 &&
          mpz_divisible_p(g.leading().get_mpz_t(), lead.get_num().get_mpz_t())) {
        std::vector<Int> coeffs(m + 1);
        bool integral = true;
        for (std::size_t c = 0; c <= m && integral; ++c) {
          Rat acc(0);
          for (std::size_t i = 0; i <= m; ++i)
            acc += Rat(values[i]) * lb.basis[i][c];
          acc.canonicalize();
          if (acc.get_den() != 1)
            integral = false;
          else
            coeffs[c] = acc.get_num();
        }
        if (integral) {
          Polynomial h{std::move(coeffs)};
          if (!h.is_zero() && h.degree_checked() >= 1) {
            if (h.leading() < 0) h = -h;
            if (g.divide_exact(h)) return h;
          }
        }
      }

      std::size_t pos = 0;
      while (pos <= m && ++idx[pos] == divisors[pos].size()) {
        idx[pos] = 0;
        ++pos;
      }
      if (pos > m) break;
    }
  }
  return std::nullopt;
}

void split(const Polynomial& g, std::vector<Polynomial>& out) {
  if (auto h = find_factor(g)) {
    Polynomial cofactor = *g.divide_exact(*h);
    if (cofactor.leading() < 0) cofactor = -cofactor;
    split(*h, out);
    split(cofactor, out);
  } else {
    out.push_back(g);
  }
}

}  // namespace

KroneckerResult kronecker_factor(const Polynomial& f, std::size_t max_degree) {
  if (f.is_zero() || f.degree_checked() < 1)
    throw std::invalid_argument("kronecker_factor: deg f >= 1 required");
  if (f.degree_checked() > max_degree)
    throw nt::BoundExceeded("oracle bound exceeded");

  Int unit = f.content();
  if (f.leading() < 0) unit = -unit;
  Polynomial work = f.primitive_part();
  if (work.leading() < 0) work = -work;

  std::vector<Polynomial> factors;
  split(work, factors);
  std::sort(factors.begin(), factors.end(),
            [](const Polynomial& a, const Polynomial& b) {
              if (a.degree_checked() != b.degree_checked())
                return a.degree_checked() < b.degree_checked();
              return a.coeffs() < b.coeffs();
            });

  KroneckerResult result;
  result.irreducible_by_exhaustion = factors.size() == 1;
  result.witness = {std::move(unit), std::move(factors)};
  return result;
}

Lemma1Result lemma1_check(const Polynomial& f1, const Polynomial& f2,
                          const Int& p, unsigned k, unsigned j) {
  if (f1.is_zero() || f1.degree_checked() < 1 || f2.is_zero() ||
      f2.degree_checked() < 1)
    throw std::invalid_argument("lemma1_check: nonconstant factors required");
  if (!nt::is_prime(p)) throw std::invalid_argument("lemma1_check: p must be prime");
  if (k < 2) throw std::invalid_argument("lemma1_check: k >= 2 required");
  if (j < 1) throw std::invalid_argument("lemma1_check: j >= 1 required");

  Polynomial f = f1 * f2;
  std::size_t n = f.degree_checked();
  if (j > n) return Lemma1Result::NotApplicable;

  Int pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
  for (unsigned i = 0; i < j; ++i)
    if (!mpz_divisible_p(f.coeff(i).get_mpz_t(), pk.get_mpz_t()))
      return Lemma1Result::NotApplicable;
  Int pk1 = pk * p;
  if (f.coeff(0) == 0 ||
      mpz_divisible_p(f.coeff(0).get_mpz_t(), pk1.get_mpz_t()))
    return Lemma1Result::NotApplicable;
  if (nt::gcd(Int(k), Int(j)) != 1) return Lemma1Result::NotApplicable;
  if (!mpz_divisible_p(f1.coeff(0).get_mpz_t(), p.get_mpz_t()) ||
      !mpz_divisible_p(f2.coeff(0).get_mpz_t(), p.get_mpz_t()))
    return Lemma1Result::NotApplicable;

  return mpz_divisible_p(f.coeff(j).get_mpz_t(), p.get_mpz_t())
             ? Lemma1Result::ApplicableHolds
             : Lemma1Result::ApplicableViolated;
}

Lemma1FuzzReport lemma1_fuzz(std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("lemma1_fuzz: trials >= 1 required");

  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  const int primes[] = {2, 3, 5};
  Lemma1FuzzReport report{trials, 0, 0, 0};

  for (std::uint64_t t = 0; t < trials; ++t) {
    Int p = primes[pick(0, 2)];
    unsigned k = static_cast<unsigned>(pick(2, 3));
    unsigned ell = 1;  // ell <= k - ell for k in {2, 3}
    unsigned j;
    do {
      j = static_cast<unsigned>(pick(1, 4));
    } while (nt::gcd(Int(k), Int(j)) != 1);

    Int p_ell, p_rest;
    mpz_pow_ui(p_ell.get_mpz_t(), p.get_mpz_t(), ell);
    mpz_pow_ui(p_rest.get_mpz_t(), p.get_mpz_t(), k - ell);

    auto unit_mod_p = [&]() {
      Int u;
      do {
        u = pick(-4, 4);
      } while (u == 0 || u % p == 0);
      return u;
    };

    // Half the trials are shaped so every hypothesis holds; the rest are
    // loose (only p | b_0 and p | c_0 enforced) to exercise the
    // NotApplicable paths.
    bool shaped = pick(0, 1) == 0;
    unsigned deg1 = static_cast<unsigned>(pick(1, 3));
    unsigned deg2 = static_cast<unsigned>(pick(1, 3));
    if (shaped && deg1 + deg2 < j) deg2 = j - deg1 + 1;

    auto gen = [&](unsigned deg, const Int& stride) {
      std::vector<Int> c(deg + 1);
      c[0] = stride * unit_mod_p();
      for (unsigned i = 1; i < deg; ++i) {
        Int r = pick(-9, 9);
        c[i] = (shaped && i < j) ? stride * r : r;
      }
      do {
        Int r = pick(-9, 9);
        c[deg] = (shaped && deg < j) ? stride * r : r;
      } while (c[deg] == 0);
      return Polynomial{std::move(c)};
    };

    Polynomial f1 = gen(deg1, shaped ? p_ell : Int(p));
    Polynomial f2 = gen(deg2, shaped ? p_rest : Int(p));

    switch (lemma1_check(f1, f2, p, k, j)) {
      case Lemma1Result::ApplicableHolds:
        ++report.applicable;
        ++report.holds;
        break;
      case Lemma1Result::ApplicableViolated:
        ++report.applicable;
        ++report.violated;
        break;
      default:
        break;
    }
  }
  return report;
}

}  // namespace irrcert::oracle
