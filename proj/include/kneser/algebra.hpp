#pragma once
// Prime-field scalars, length-2 vectors, 2x2 operators and GL2 enumeration.
// Every value carries its modulus; mixed-modulus arithmetic is rejected.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kneser::algebra {

inline constexpr uint32_t kPrimeCap = 31;  // largest supported modulus

inline bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void check_modulus(uint32_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  if (p > kPrimeCap)
    throw std::invalid_argument("modulus " + std::to_string(p) + " exceeds cap " +
                                std::to_string(kPrimeCap));
}

inline void check_same(uint32_t p, uint32_t q) {
  if (p != q)
    throw std::invalid_argument("mismatched moduli " + std::to_string(p) + " vs " +
                                std::to_string(q));
}

struct Fp {
  uint32_t v = 0;
  uint32_t p = 2;

  Fp() = default;
  Fp(int64_t value, uint32_t mod) : p(mod) {
    check_modulus(mod);
    int64_t m = value % (int64_t)mod;
    if (m < 0) m += mod;
    v = (uint32_t)m;
  }

  friend Fp operator+(Fp a, Fp b) { check_same(a.p, b.p); return raw((a.v + b.v) % a.p, a.p); }
  friend Fp operator-(Fp a, Fp b) { check_same(a.p, b.p); return raw((a.v + a.p - b.v) % a.p, a.p); }
  friend Fp operator*(Fp a, Fp b) { check_same(a.p, b.p); return raw((uint64_t)a.v * b.v % a.p, a.p); }
  friend Fp operator-(Fp a) { return raw(a.v ? a.p - a.v : 0, a.p); }
  friend bool operator==(Fp a, Fp b) { check_same(a.p, b.p); return a.v == b.v; }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }

  Fp pow(int64_t e) const {
    if (v == 0) {
      if (e < 0) throw std::domain_error("inverse of zero");
      return raw(e == 0 ? 1 % p : 0, p);
    }
    uint64_t base = v, acc = 1;
    uint64_t ee = e >= 0 ? (uint64_t)e % (p - 1) : (uint64_t)(p - 1 - (uint64_t)(-e) % (p - 1)) % (p - 1);
    while (ee) {
      if (ee & 1) acc = acc * base % p;
      base = base * base % p;
      ee >>= 1;
    }
    return raw((uint32_t)acc, p);
  }

  Fp inv() const {
    if (v == 0) throw std::domain_error("inverse of zero");
    return pow((int64_t)p - 2);
  }

  static Fp raw(uint32_t v, uint32_t p) {
    Fp f;
    f.v = v;
    f.p = p;
    return f;
  }
};

struct FpVec {
  uint32_t x = 0, y = 0;
  uint32_t p = 2;

  FpVec() = default;
  FpVec(int64_t x_, int64_t y_, uint32_t mod) : p(mod) {
    check_modulus(mod);
    x = Fp(x_, mod).v;
    y = Fp(y_, mod).v;
  }
  bool zero() const { return x == 0 && y == 0; }

  friend FpVec operator+(FpVec a, FpVec b) {
    check_same(a.p, b.p);
    return FpVec((a.x + b.x) % a.p, (a.y + b.y) % a.p, a.p);
  }
  friend FpVec operator-(FpVec a) { return FpVec(a.x ? a.p - a.x : 0, a.y ? a.p - a.y : 0, a.p); }
  friend bool operator==(FpVec a, FpVec b) { check_same(a.p, b.p); return a.x == b.x && a.y == b.y; }
  friend bool operator!=(FpVec a, FpVec b) { return !(a == b); }
};

inline uint32_t cross(FpVec u, FpVec v) {
  check_same(u.p, v.p);
  return (uint32_t)(((uint64_t)u.x * v.y + (uint64_t)u.p * u.p - (uint64_t)u.y * v.x) % u.p);
}

// Collinearity of nonzero vectors (zero vectors are rejected: the notion is
// used only on points of F_p^2 \ {0}).
inline bool collinear(FpVec u, FpVec v) {
  if (u.zero() || v.zero()) throw std::invalid_argument("collinear: zero vector");
  return cross(u, v) == 0;
}

// 2x2 operator over F_p, entries row-major, determinant cached at build time.
struct FpOp {
  uint32_t m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  uint32_t p = 2;
  uint32_t det = 1;

  FpOp() = default;
  FpOp(int64_t a, int64_t b, int64_t c, int64_t d, uint32_t mod) : p(mod) {
    check_modulus(mod);
    m00 = Fp(a, mod).v; m01 = Fp(b, mod).v;
    m10 = Fp(c, mod).v; m11 = Fp(d, mod).v;
    det = cache_det();
  }
  uint32_t cache_det() const {
    return (uint32_t)(((uint64_t)m00 * m11 + (uint64_t)p * p - (uint64_t)m01 * m10) % p);
  }
  bool invertible() const { return det != 0; }

  friend bool operator==(const FpOp& f, const FpOp& g) {
    check_same(f.p, g.p);
    return f.m00 == g.m00 && f.m01 == g.m01 && f.m10 == g.m10 && f.m11 == g.m11;
  }
  friend bool operator!=(const FpOp& f, const FpOp& g) { return !(f == g); }
};

inline FpVec apply(const FpOp& f, FpVec v) {
  check_same(f.p, v.p);
  return FpVec(((uint64_t)f.m00 * v.x + (uint64_t)f.m01 * v.y) % f.p,
               ((uint64_t)f.m10 * v.x + (uint64_t)f.m11 * v.y) % f.p, f.p);
}

// Composition f after g: apply g first, then f.
inline FpOp compose(const FpOp& f, const FpOp& g) {
  check_same(f.p, g.p);
  uint32_t p = f.p;
  return FpOp((int64_t)(((uint64_t)f.m00 * g.m00 + (uint64_t)f.m01 * g.m10) % p),
              (int64_t)(((uint64_t)f.m00 * g.m01 + (uint64_t)f.m01 * g.m11) % p),
              (int64_t)(((uint64_t)f.m10 * g.m00 + (uint64_t)f.m11 * g.m10) % p),
              (int64_t)(((uint64_t)f.m10 * g.m01 + (uint64_t)f.m11 * g.m11) % p), p);
}

inline FpOp inverse(const FpOp& f) {
  if (!f.invertible()) throw std::domain_error("operator is singular");
  uint64_t di = Fp::raw(f.det, f.p).inv().v;
  uint32_t p = f.p;
  return FpOp((int64_t)(di * f.m11 % p), (int64_t)(di * ((uint64_t)p * p - f.m01) % p),
              (int64_t)(di * ((uint64_t)p * p - f.m10) % p), (int64_t)(di * f.m00 % p), p);
}

// Operator sending e1 -> a, e2 -> b (columns a, b). Inputs must be linearly
// independent, i.e. nonzero and non-collinear.
inline FpOp g_ab(FpVec a, FpVec b) {
  check_same(a.p, b.p);
  if (a.zero() || b.zero() || collinear(a, b))
    throw std::invalid_argument("g_ab: columns are collinear");
  return FpOp(a.x, b.x, a.y, b.y, a.p);
}

// All of GL2(F_p) in a fixed lexicographic order of (m00,m01,m10,m11).
// |GL2| = (p^2-1)(p^2-p).
inline std::vector<FpOp> gl2_enumerate(uint32_t p) {
  check_modulus(p);
  std::vector<FpOp> out;
  out.reserve((size_t)(p * p - 1) * (p * p - p));
  for (uint32_t a = 0; a < p; ++a)
    for (uint32_t b = 0; b < p; ++b)
      for (uint32_t c = 0; c < p; ++c)
        for (uint32_t d = 0; d < p; ++d) {
          FpOp f(a, b, c, d, p);
          if (f.invertible()) out.push_back(f);
        }
  return out;
}

inline uint64_t gl2_order(uint32_t p) {
  return (uint64_t)(p * p - 1) * (p * p - p);
}

// Discrete logarithms in F_p^x w.r.t. the least primitive root; log-space
// arithmetic (mod p-1) is what dependence evaluation and box DP run on.
struct UnitLog {
  uint32_t p = 2;
  uint32_t root = 1;
  std::vector<int32_t> log;   // log[v] for v in [1, p-1]
  std::vector<uint32_t> exp;  // exp[k] = root^k, k in [0, p-1)

  explicit UnitLog(uint32_t mod) : p(mod) {
    check_modulus(mod);
    for (uint32_t g = 1; g < p; ++g) {
      std::vector<uint32_t> pow(p - 1);
      uint32_t v = 1;
      bool all = true;
      std::vector<bool> seen(p, false);
      for (uint32_t k = 0; k + 1 < p; ++k) {
        pow[k] = v;
        if (seen[v]) { all = false; break; }
        seen[v] = true;
        v = (uint32_t)((uint64_t)v * g % p);
      }
      if (all) {
        root = g;
        exp = pow;
        log.assign(p, -1);
        for (uint32_t k = 0; k + 1 < p; ++k) log[pow[k]] = (int32_t)k;
        return;
      }
    }
    throw std::logic_error("no primitive root found");
  }
};

// Vector over F_2^t packed into the low t bits of an integer.
struct XorVec {
  uint32_t bits = 0;
  uint32_t t = 1;

  XorVec() = default;
  XorVec(uint32_t bits_, uint32_t t_) : bits(bits_), t(t_) {
    if (t_ == 0 || t_ > 31) throw std::invalid_argument("XorVec: dimension out of range");
    if (bits_ >> t_)
      throw std::invalid_argument("XorVec: value does not fit in dimension");
  }
  friend XorVec operator^(XorVec a, XorVec b) {
    if (a.t != b.t) throw std::invalid_argument("XorVec: mismatched dimensions");
    return XorVec(a.bits ^ b.bits, a.t);
  }
  friend bool operator==(XorVec a, XorVec b) { return a.t == b.t && a.bits == b.bits; }
};

}  // namespace kneser::algebra
