#pragma once

// Pure relational arithmetic on little-endian binary numerals: lists of
// bits 0/1 with no trailing zero, the empty list being zero.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kanren/std/list.hpp"

namespace kanren {

using Bits = List<int>;
using Bit = Val<int>;

inline std::vector<int> bits_of(std::uint64_t n) {
  std::vector<int> out;
  for (; n != 0; n >>= 1) out.push_back(static_cast<int>(n & 1));
  return out;
}

inline Bits build_num(std::uint64_t n) { return list_of(bits_of(n)); }

/// Value of a ground binary numeral. Rejects non-bits and trailing zeros.
inline std::uint64_t decode_num(const FList<int>& bits) {
  std::vector<int> v = to_vector(bits);
  if (!v.empty() && v.back() != 1) throw std::invalid_argument("binary numeral with trailing zero");
  std::uint64_t n = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (*it != 0 && *it != 1) throw std::invalid_argument("not a bit");
    n = (n << 1) | static_cast<std::uint64_t>(*it);
  }
  return n;
}

namespace bin {

inline Bit b0() { return lit(0); }
inline Bit b1() { return lit(1); }
inline Bits zero() { return nil<int>(); }
inline Bits one() { return single<int>(b1()); }

}  // namespace bin

inline Goal poso(const Bits& n) {
  return fresh([=](Bit a, Bits d) { return eq(n, a % d); });
}

inline Goal gt1o(const Bits& n) {
  return fresh([=](Bit a, Bit ad, Bits dd) { return eq(n, a % (ad % dd)); });
}

inline Goal full_addero(const Bit& b, const Bit& x, const Bit& y, const Bit& r, const Bit& c) {
  auto row = [=](int vb, int vx, int vy, int vr, int vc) {
    return conj(eq(b, lit(vb)), eq(x, lit(vx)), eq(y, lit(vy)), eq(r, lit(vr)), eq(c, lit(vc)));
  };
  return conde({row(0, 0, 0, 0, 0), row(1, 0, 0, 1, 0), row(0, 1, 0, 1, 0), row(1, 1, 0, 0, 1), row(0, 0, 1, 1, 0),
                row(1, 0, 1, 0, 1), row(0, 1, 1, 0, 1), row(1, 1, 1, 1, 1)});
}

inline Goal addero(const Bit& d, const Bits& n, const Bits& m, const Bits& r);

inline Goal gen_addero(const Bit& d, const Bits& n, const Bits& m, const Bits& r) {
  return fresh([=](Bit a, Bit b, Bit c, Bit e, Bits x, Bits y, Bits z) {
    return conj(eq(n, a % x), eq(m, b % y), poso(y), eq(r, c % z), poso(z), full_addero(d, a, b, c, e),
                addero(e, x, y, z));
  });
}

inline Goal addero(const Bit& d, const Bits& n, const Bits& m, const Bits& r) {
  using namespace bin;
  return conde({
      conj(eq(d, b0()), eq(m, zero()), eq(n, r)),
      conj(eq(d, b0()), eq(n, zero()), eq(m, r), poso(m)),
      conj(eq(d, b1()), eq(m, zero()), delay([=] { return addero(b0(), n, one(), r); })),
      conj(eq(d, b1()), eq(n, zero()), poso(m), delay([=] { return addero(b0(), one(), m, r); })),
      conj(eq(n, one()), eq(m, one()),
           fresh([=](Bit a, Bit c) { return eq(r, a % single<int>(c)) && full_addero(d, b1(), b1(), a, c); })),
      conj(eq(n, one()), gen_addero(d, n, m, r)),
      conj(eq(m, one()), gt1o(n), gt1o(r), delay([=] { return addero(d, one(), n, r); })),
      conj(gt1o(n), gen_addero(d, n, m, r)),
  });
}

inline Goal pluso(const Bits& n, const Bits& m, const Bits& k) { return addero(bin::b0(), n, m, k); }

inline Goal minuso(const Bits& n, const Bits& m, const Bits& k) { return pluso(m, k, n); }

inline Goal multo(const Bits& n, const Bits& m, const Bits& p);

inline Goal bound_multo(const Bits& q, const Bits& p, const Bits& n, const Bits& m) {
  return conde({
      conj(eq(q, bin::zero()), poso(p)),
      fresh([=](Bit a0, Bit a1, Bit a2, Bit a3, Bits x, Bits y, Bits z) {
        return conj(eq(q, a0 % x), eq(p, a1 % y),
                    conde({conj(eq(n, bin::zero()), eq(m, a2 % z), bound_multo(x, y, z, bin::zero())),
                           conj(eq(n, a3 % z), bound_multo(x, y, z, m))}));
      }),
  });
}

inline Goal odd_multo(const Bits& x, const Bits& n, const Bits& m, const Bits& p) {
  return fresh([=](Bits q) { return conj(bound_multo(q, p, n, m), multo(x, m, q), pluso(bin::b0() % q, m, p)); });
}

inline Goal multo(const Bits& n, const Bits& m, const Bits& p) {
  using namespace bin;
  return conde({
      conj(eq(n, zero()), eq(p, zero())),
      conj(poso(n), eq(m, zero()), eq(p, zero())),
      conj(eq(n, one()), poso(m), eq(m, p)),
      conj(gt1o(n), eq(m, one()), eq(n, p)),
      fresh([=](Bits x, Bits z) {
        return conj(eq(n, b0() % x), poso(x), eq(p, b0() % z), poso(z), gt1o(m), multo(x, m, z));
      }),
      fresh([=](Bits x, Bits y) {
        return conj(eq(n, b1() % x), poso(x), eq(m, b0() % y), poso(y), multo(m, n, p));
      }),
      fresh([=](Bits x, Bits y) {
        return conj(eq(n, b1() % x), poso(x), eq(m, b1() % y), poso(y), odd_multo(x, n, m, p));
      }),
  });
}

/// Same bit length.
inline Goal eqlo(const Bits& n, const Bits& m) {
  using namespace bin;
  return conde({
      conj(eq(n, zero()), eq(m, zero())),
      conj(eq(n, one()), eq(m, one())),
      fresh([=](Bit a, Bits x, Bit b, Bits y) {
        return conj(eq(n, a % x), poso(x), eq(m, b % y), poso(y), eqlo(x, y));
      }),
  });
}

/// Shorter bit length.
inline Goal ltlo(const Bits& n, const Bits& m) {
  using namespace bin;
  return conde({
      conj(eq(n, zero()), poso(m)),
      conj(eq(n, one()), gt1o(m)),
      fresh([=](Bit a, Bits x, Bit b, Bits y) {
        return conj(eq(n, a % x), poso(x), eq(m, b % y), poso(y), ltlo(x, y));
      }),
  });
}

inline Goal lelo(const Bits& n, const Bits& m) { return conde({eqlo(n, m), ltlo(n, m)}); }

inline Goal lto(const Bits& n, const Bits& m) {
  return conde({ltlo(n, m), conj(eqlo(n, m), fresh([=](Bits x) { return conj(poso(x), pluso(n, x, m)); }))});
}

inline Goal leqo(const Bits& n, const Bits& m) { return conde({eq(n, m), lto(n, m)}); }

/// Splits n at the bit length of r into low part l and high part h.
inline Goal splito(const Bits& n, const Bits& r, const Bits& l, const Bits& h) {
  using namespace bin;
  return conde({
      conj(eq(n, zero()), eq(h, zero()), eq(l, zero())),
      fresh([=](Bit b, Bits n1) {
        return conj(eq(n, b0() % (b % n1)), eq(r, zero()), eq(h, b % n1), eq(l, zero()));
      }),
      fresh([=](Bits n1) { return conj(eq(n, b1() % n1), eq(r, zero()), eq(n1, h), eq(l, one())); }),
      fresh([=](Bit b, Bits n1, Bit a, Bits r1) {
        return conj(eq(n, b0() % (b % n1)), eq(r, a % r1), eq(l, zero()), splito(b % n1, r1, zero(), h));
      }),
      fresh([=](Bits n1, Bit a, Bits r1) {
        return conj(eq(n, b1() % n1), eq(r, a % r1), eq(l, one()), splito(n1, r1, zero(), h));
      }),
      fresh([=](Bit b, Bits n1, Bit a, Bits r1, Bits l1) {
        return conj(eq(n, b % n1), eq(r, a % r1), eq(l, b % l1), poso(l1), splito(n1, r1, l1, h));
      }),
  });
}

/// n = m * q + r with r < m.
inline Goal divo(const Bits& n, const Bits& m, const Bits& q, const Bits& r) {
  using namespace bin;
  return conde({
      conj(eq(r, n), eq(q, zero()), lto(n, m)),
      conj(eq(q, one()), eqlo(n, m), pluso(r, m, n), lto(r, m)),
      conj(ltlo(m, n), lto(r, m), poso(q),
           fresh([=](Bits nh, Bits nl, Bits qh, Bits ql, Bits qlm, Bits qlmr, Bits rr, Bits rh) {
             return conj(splito(n, r, nl, nh), splito(q, r, ql, qh),
                         conde({
                             conj(eq(nh, zero()), eq(qh, zero()), minuso(nl, r, qlm), multo(ql, m, qlm)),
                             conj(poso(nh), multo(ql, m, qlm), pluso(qlm, r, qlmr), minuso(qlmr, nl, rr),
                                  splito(rr, r, zero(), rh), divo(nh, m, qh, rh)),
                         }));
           })),
  });
}

/// Bit length of n relative to b, used by logo.
inline Goal exp2o(const Bits& n, const Bits& b, const Bits& q) {
  using namespace bin;
  return conde({
      conj(eq(n, one()), eq(q, zero())),
      conj(gt1o(n), eq(q, one()), fresh([=](Bits s) { return splito(n, b, s, one()); })),
      fresh([=](Bits q1, Bits b2) {
        return conj(eq(q, b0() % q1), poso(q1), ltlo(b, n), appendo(b, b1() % b, b2), exp2o(n, b2, q1));
      }),
      fresh([=](Bits q1, Bits nh, Bits b2, Bits s) {
        return conj(eq(q, b1() % q1), poso(q1), poso(nh), splito(n, b, s, nh), appendo(b, b1() % b, b2),
                    exp2o(nh, b2, q1));
      }),
  });
}

/// nq = n^q.
inline Goal repeated_mulo(const Bits& n, const Bits& q, const Bits& nq) {
  using namespace bin;
  return conde({
      conj(poso(n), eq(q, zero()), eq(nq, one())),
      conj(eq(q, one()), eq(n, nq)),
      conj(gt1o(q), fresh([=](Bits q1, Bits nq1) {
             return conj(pluso(q1, one(), q), repeated_mulo(n, q1, nq1), multo(nq1, n, nq));
           })),
  });
}

/// n = b^q + r with r < b^(q+1) - b^q.
inline Goal logo(const Bits& n, const Bits& b, const Bits& q, const Bits& r) {
  using namespace bin;
  return conde({
      conj(eq(n, one()), poso(b), eq(q, zero()), eq(r, zero())),
      conj(eq(q, zero()), lto(n, b), pluso(r, one(), n)),
      conj(eq(q, one()), gt1o(b), eqlo(n, b), pluso(r, b, n)),
      conj(eq(b, one()), poso(q), pluso(r, one(), n)),
      conj(eq(b, zero()), poso(q), eq(r, n)),
      conj(eq(b, b0() % one()), fresh([=](Bit a, Bit ad, Bits dd) {
             return conj(poso(dd), eq(n, a % (ad % dd)), exp2o(n, zero(), q),
                         fresh([=](Bits s) { return splito(n, dd, r, s); }));
           })),
      conj(fresh([=](Bit a, Bit ad, Bit add, Bits ddd) {
             return conde({eq(b, b1() % one()), eq(b, a % (ad % (add % ddd)))});
           }),
           ltlo(b, n),
           fresh([=](Bits bw1, Bits bw, Bits nw, Bits nw1, Bits ql1, Bits ql, Bits s) {
             return conj(exp2o(b, zero(), bw1), pluso(bw1, one(), bw), ltlo(q, n),
                         fresh([=](Bits q1, Bits bwq1) {
                           return conj(pluso(q, one(), q1), multo(bw, q1, bwq1), lto(nw1, bwq1));
                         }),
                         exp2o(n, zero(), nw1), pluso(nw1, one(), nw), divo(nw, bw, ql1, s), pluso(ql, one(), ql1),
                         lelo(ql, q), fresh([=](Bits bql, Bits qh, Bits s2, Bits qdh, Bits qd) {
                           return conj(repeated_mulo(b, ql, bql), divo(nw, bw1, qh, s2), pluso(ql, qdh, qh),
                                       pluso(ql, qd, q), leqo(qd, qdh), fresh([=](Bits bqd, Bits bq1, Bits bq) {
                                         return conj(repeated_mulo(b, qd, bqd), multo(bql, bqd, bq),
                                                     multo(b, bq, bq1), pluso(bq, r, n), lto(n, bq1));
                                       }));
                         }));
           })),
  });
}

/// n = b^q.
inline Goal expo(const Bits& b, const Bits& q, const Bits& n) { return logo(n, b, q, bin::zero()); }

}  // namespace kanren
