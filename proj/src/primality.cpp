#include "chiral/primality.hpp"

#include <random>
#include <vector>

namespace chiral {
namespace {

constexpr std::array<uint32_t, 62> kSmallPrimes{
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,
    59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127, 131,
    137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223,
    227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293};

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t x = 1;
  a %= m;
  while (e > 0) {
    if (e & 1) x = mulmod_u64(x, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return x;
}

// n odd, n > a. True when a is not a compositeness witness for n.
bool mr_pass_u64(uint64_t n, uint64_t a) {
  const uint64_t nm1 = n - 1;
  int s = 0;
  uint64_t d = nm1;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  uint64_t x = powmod_u64(a, d, n);
  if (x == 1 || x == nm1) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod_u64(x, x, n);
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

struct WordVerdict {
  bool prime = false;
  uint64_t divisor = 0;  // 0 = none known
  uint64_t witness = 0;  // 0 = none
  bool unit_or_zero = false;
};

WordVerdict classify_u64(uint64_t n) {
  WordVerdict v;
  if (n < 2) {
    v.unit_or_zero = true;
    return v;
  }
  for (uint32_t p : kSmallPrimes) {
    if (n == p) {
      v.prime = true;
      return v;
    }
    if (n % p == 0) {
      v.divisor = p;
      return v;
    }
  }
  for (uint64_t a : kMillerRabinBases) {
    if (!mr_pass_u64(n, a)) {
      v.witness = a;
      return v;
    }
  }
  v.prime = true;
  return v;
}

mpz_class mod_n(const mpz_class& x, const mpz_class& n) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool mr_pass(const mpz_class& n, const mpz_class& a) {
  const mpz_class nm1 = n - 1;
  const mp_bitcnt_t s = mpz_scan1(nm1.get_mpz_t(), 0);
  const mpz_class d = nm1 >> s;
  mpz_class x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == nm1) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    x = mod_n(x * x, n);
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

// (x/2) mod n for odd n.
mpz_class halve_mod(mpz_class x, const mpz_class& n) {
  x = mod_n(x, n);
  if (mpz_odd_p(x.get_mpz_t())) x += n;
  return mod_n(x >> 1, n);
}

// Strong Lucas probable prime test with Selfridge parameters: first
// D in 5, -7, 9, -11, ... with jacobi(D/n) = -1, P = 1, Q = (1-D)/4.
// Requires n odd, coprime to small primes, and not a perfect square.
// Passes when U_d = 0 or V_{d*2^r} = 0 for some r < s, where n+1 = d*2^s.
bool strong_lucas_pass(const mpz_class& n) {
  long d_param = 5;
  for (;;) {
    mpz_class D(d_param);
    int j = mpz_jacobi(D.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    if (j == 0) return false;  // gcd(|D|, n) > 1
    d_param = d_param > 0 ? -(d_param + 2) : -(d_param - 2);
  }
  const mpz_class D(d_param);
  const mpz_class Q((1 - d_param) / 4);

  const mpz_class n1 = n + 1;
  const mp_bitcnt_t s = mpz_scan1(n1.get_mpz_t(), 0);
  const mpz_class d = n1 >> s;

  // Binary ladder over the bits of d below the leading one, maintaining
  // U_k, V_k and Q^k via U_2k = U·V, V_2k = V^2 - 2Q^k and, on set bits,
  // U_{2k+1} = (U+V)/2, V_{2k+1} = (D·U+V)/2 (P = 1).
  mpz_class U(1), V(1), qk = mod_n(Q, n);
  const size_t bits = mpz_sizeinbase(d.get_mpz_t(), 2);
  for (size_t i = bits - 1; i-- > 0;) {
    U = mod_n(U * V, n);
    V = mod_n(V * V - 2 * qk, n);
    qk = mod_n(qk * qk, n);
    if (mpz_tstbit(d.get_mpz_t(), i)) {
      mpz_class u2 = halve_mod(U + V, n);
      mpz_class v2 = halve_mod(D * U + V, n);
      U = u2;
      V = v2;
      qk = mod_n(qk * Q, n);
    }
  }
  if (U == 0) return true;
  for (mp_bitcnt_t r = 0; r < s; ++r) {
    if (V == 0) return true;
    V = mod_n(V * V - 2 * qk, n);
    qk = mod_n(qk * qk, n);
  }
  return false;
}

// Uniform value in [0, bound) assembled from 64-bit draws; rejection keeps
// the distribution exact and the sequence reproducible for a given engine.
mpz_class random_below(std::mt19937_64& gen, const mpz_class& bound) {
  const size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const size_t words = (bits + 63) / 64;
  const int top_bits = static_cast<int>(bits % 64);
  std::vector<uint64_t> buf(words);
  mpz_class r;
  do {
    for (auto& w : buf) w = gen();
    if (top_bits != 0) buf.back() &= (~uint64_t{0}) >> (64 - top_bits);
    mpz_import(r.get_mpz_t(), words, -1, sizeof(uint64_t), 0, 0, buf.data());
  } while (r >= bound);
  return r;
}

PrimalityVerdict composite_with_divisor(mpz_class d) {
  PrimalityVerdict v;
  v.kind = VerdictKind::Composite;
  v.divisor = std::move(d);
  return v;
}

}  // namespace

std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Prime: return "prime";
    case VerdictKind::Composite: return "composite";
    case VerdictKind::ProbablePrime: return "probable_prime";
  }
  return "?";
}

const mpz_class& deterministic_bound() {
  static const mpz_class bound("3317044064679887385961981");
  return bound;
}

bool is_prime_u64(uint64_t n) { return classify_u64(n).prime; }

PrimalityVerdict is_prime(const mpz_class& n, const PrimalityConfig& cfg) {
  if (n < 0) throw std::invalid_argument("is_prime: negative input");
  if (cfg.rounds < 1) throw std::invalid_argument("is_prime: rounds must be >= 1");

  PrimalityVerdict v;
  if (n < 2) {
    v.kind = VerdictKind::Composite;
    v.note = "unit/zero";
    return v;
  }
  if (mpz_fits_ulong_p(n.get_mpz_t())) {
    WordVerdict w = classify_u64(mpz_get_ui(n.get_mpz_t()));
    if (w.prime) {
      v.kind = VerdictKind::Prime;
      return v;
    }
    if (w.divisor != 0) return composite_with_divisor(mpz_class(static_cast<unsigned long>(w.divisor)));
    v.kind = VerdictKind::Composite;
    v.witness = mpz_class(static_cast<unsigned long>(w.witness));
    return v;
  }

  for (uint32_t p : kSmallPrimes) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return composite_with_divisor(mpz_class(p));
  }

  if (n < deterministic_bound()) {
    for (uint64_t a : kMillerRabinBases) {
      if (!mr_pass(n, mpz_class(static_cast<unsigned long>(a)))) {
        v.kind = VerdictKind::Composite;
        v.witness = mpz_class(static_cast<unsigned long>(a));
        return v;
      }
    }
    v.kind = VerdictKind::Prime;
    return v;
  }

  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    v = composite_with_divisor(std::move(root));
    v.note = "perfect square";
    return v;
  }
  if (!strong_lucas_pass(n)) {
    v.kind = VerdictKind::Composite;
    v.note = "strong Lucas";
    v.seed = cfg.seed;
    return v;
  }
  std::mt19937_64 gen(cfg.seed);
  const mpz_class span = n - 3;
  for (int i = 0; i < cfg.rounds; ++i) {
    const mpz_class a = 2 + random_below(gen, span);  // a in [2, n-2]
    if (!mr_pass(n, a)) {
      v.kind = VerdictKind::Composite;
      v.witness = a;
      v.seed = cfg.seed;
      return v;
    }
  }
  v.kind = VerdictKind::ProbablePrime;
  v.rounds = cfg.rounds;
  v.strong_lucas = true;
  v.seed = cfg.seed;
  return v;
}

PrimalityVerdict is_prime(const DigitString& n, const PrimalityConfig& cfg) {
  if (auto w = n.to_u64()) {
    if (cfg.rounds < 1) throw std::invalid_argument("is_prime: rounds must be >= 1");
    WordVerdict r = classify_u64(*w);
    PrimalityVerdict v;
    if (r.unit_or_zero) {
      v.kind = VerdictKind::Composite;
      v.note = "unit/zero";
      return v;
    }
    if (r.prime) {
      v.kind = VerdictKind::Prime;
      return v;
    }
    if (r.divisor != 0) return composite_with_divisor(mpz_class(static_cast<unsigned long>(r.divisor)));
    v.kind = VerdictKind::Composite;
    v.witness = mpz_class(static_cast<unsigned long>(r.witness));
    return v;
  }
  return is_prime(n.to_mpz(), cfg);
}

PrimalityVerdict trial_division_oracle(const DigitString& n, uint64_t bound) {
  if (bound > 100'000'000) throw std::invalid_argument("trial_division_oracle: bound > 10^8");
  if (bound < 2) throw std::invalid_argument("trial_division_oracle: bound < 2");
  const auto value = n.to_u64();
  const uint64_t limit = bound * bound;  // <= 10^16, no overflow
  if (!value || *value >= limit)
    throw std::invalid_argument("trial_division_oracle: square root of input exceeds bound");

  const uint64_t v = *value;
  PrimalityVerdict out;
  if (v < 2) {
    out.kind = VerdictKind::Composite;
    out.note = "unit/zero";
    return out;
  }
  if (v % 2 == 0 && v != 2) return composite_with_divisor(mpz_class(2));
  for (uint64_t d = 3; d * d <= v; d += 2) {
    if (v % d == 0) return composite_with_divisor(mpz_class(static_cast<unsigned long>(d)));
  }
  out.kind = VerdictKind::Prime;
  return out;
}

}  // namespace chiral
