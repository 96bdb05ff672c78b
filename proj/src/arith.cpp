#include "edis/arith.hpp"

#include <atomic>
#include <numeric>
#include <sstream>
#include <thread>
#include <vector>

#include "edis/errors.hpp"

namespace edis {

namespace {

// g = gcd(a, b) and x with a x == g (mod b/g); plain extended Euclid
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x,
                     std::int64_t& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  std::int64_t x1, y1;
  std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x              = y1;
  y              = x1 - (a / b) * y1;
  return g;
}

// minimal r >= 0 with r == d (mod c) and r == f (mod e); requires
// gcd(c, e) | (d - f)
std::int64_t crt_min(std::int64_t c, std::int64_t d, std::int64_t e,
                     std::int64_t f) {
  std::int64_t p, q;
  std::int64_t g   = ext_gcd(c, e, p, q);
  std::int64_t lcm = c / g * e;
  // r = d + c * t with t == (f - d)/g * p (mod e/g)
  __int128 diff = static_cast<__int128>(f) - d;
  __int128 t    = (diff / g) % (e / g) * (p % (e / g)) % (e / g);
  __int128 r    = d + static_cast<__int128>(c) * static_cast<std::int64_t>(t);
  r %= lcm;
  if (r < 0) {
    r += lcm;
  }
  return static_cast<std::int64_t>(r);
}

}  // namespace

ArithElement ArithElement::make(std::int64_t a, std::int64_t b, std::int64_t c,
                                std::int64_t d) {
  if (a <= b || c <= d || b < 0 || d < 0) {
    throw Error("arith: normal form needs a > b >= 0 and c > d >= 0");
  }
  ArithElement e;
  e.zero = false;
  e.a    = a;
  e.b    = b;
  e.c    = c;
  e.d    = d;
  return e;
}

std::string ArithElement::to_string() const {
  if (zero) {
    return "0";
  }
  std::ostringstream os;
  os << "R[" << a << "," << b << "]R[" << c << "," << d << "]^-1";
  return os.str();
}

ArithElement arith_mul(ArithElement const& x, ArithElement const& y,
                       std::int64_t max_param) {
  if (x.zero || y.zero) {
    return ArithElement::make_zero();
  }
  // (R_{a,b} R_{c,d}^-1)(R_{e,f} R_{g,h}^-1)
  std::int64_t a = x.a, b = x.b, c = x.c, d = x.d;
  std::int64_t e = y.a, f = y.b, g = y.c, h = y.d;
  std::int64_t const input_cap = std::int64_t(1) << 31;
  if (a > input_cap || c > input_cap || e > input_cap || g > input_cap) {
    throw ArithOverflowError("arith_mul: input parameter too large");
  }
  std::int64_t gc = std::gcd(c, e);
  if ((d - f) % gc != 0) {
    return ArithElement::make_zero();
  }
  std::int64_t r  = crt_min(c, d, e, f);
  __int128     a2 = static_cast<__int128>(a) * e / gc;
  __int128     b2 = static_cast<__int128>(a) * ((r - d) / c) + b;
  __int128     c2 = static_cast<__int128>(g) * c / gc;
  __int128     d2 = static_cast<__int128>(g) * ((r - f) / e) + h;
  if (a2 > max_param || b2 > max_param || c2 > max_param || d2 > max_param) {
    throw ArithOverflowError("arith_mul: parameter exceeds bound "
                             + std::to_string(max_param));
  }
  return ArithElement::make(static_cast<std::int64_t>(a2),
                            static_cast<std::int64_t>(b2),
                            static_cast<std::int64_t>(c2),
                            static_cast<std::int64_t>(d2));
}

ArithElement arith_inverse(ArithElement const& x) {
  if (x.zero) {
    return x;
  }
  return ArithElement::make(x.c, x.d, x.a, x.b);
}

std::vector<std::pair<std::int64_t, std::int64_t>>
arith_as_map(ArithElement const& x, std::int64_t bound) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  if (x.zero) {
    return out;
  }
  for (std::int64_t n = x.b; n <= bound; n += x.a) {
    out.emplace_back(n, (n - x.b) / x.a * x.c + x.d);
  }
  return out;
}

std::optional<ArithWitness> arith_separate(std::int64_t a, std::int64_t b,
                                           std::int64_t a2, std::int64_t b2,
                                           std::int64_t radius) {
  for (std::int64_t e = 1; e <= radius; ++e) {
    for (std::int64_t f = 0; f < e; ++f) {
      bool left  = (b - f) % std::gcd(a, e) == 0;
      bool right = (b2 - f) % std::gcd(a2, e) == 0;
      if (left != right) {
        return ArithWitness{e, f};
      }
    }
  }
  return std::nullopt;
}

ArithVerifyReport arith_verify(std::int64_t max_param, std::int64_t truncate,
                               int jobs) {
  std::vector<ArithElement> elements;
  for (std::int64_t a = 1; a <= max_param; ++a) {
    for (std::int64_t b = 0; b < a && b <= max_param; ++b) {
      for (std::int64_t c = 1; c <= max_param; ++c) {
        for (std::int64_t d = 0; d < c && d <= max_param; ++d) {
          elements.push_back(ArithElement::make(a, b, c, d));
        }
      }
    }
  }
  ArithVerifyReport rep{max_param, truncate, 0, 0, 0};
  std::int64_t      N = truncate;

  auto check_pair = [&](ArithElement const& x, ArithElement const& y,
                        std::int64_t& zeros) -> bool {
    ArithElement z = arith_mul(x, y);
    if (z.zero) {
      ++zeros;
    }
    // walk dom(x) within [0, N]; n = x.b + k x.a, x(n) = k x.c + x.d
    std::int64_t zn = z.zero ? -1 : z.b;  // next expected point of z
    std::int64_t residue = ((x.d - y.b) % y.a + y.a) % y.a;  // (x(n)-f) mod e
    std::int64_t step    = x.c % y.a;
    std::int64_t k       = 0;
    for (std::int64_t n = x.b; n <= N; n += x.a, ++k) {
      if (residue == 0) {
        // n is in the composite domain; value y(x(n))
        std::int64_t m = k * x.c + x.d;
        std::int64_t v = (m - y.b) / y.a * y.c + y.d;
        if (z.zero || zn != n || (n - z.b) / z.a * z.c + z.d != v) {
          return false;
        }
        zn += z.a;
      }
      residue += step;
      if (residue >= y.a) {
        residue -= y.a;
      }
    }
    // no extra points of z may remain inside the window
    return z.zero || zn > N;
  };

  int workers = std::max(1, jobs);
  std::vector<std::thread>  threads;
  std::vector<std::int64_t> zero_counts(workers, 0);
  std::vector<std::int64_t> mismatch_counts(workers, 0);
  std::atomic<std::size_t>  next{0};
  auto                      work = [&](int w) {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= elements.size()) {
        break;
      }
      for (auto const& y : elements) {
        if (!check_pair(elements[i], y, zero_counts[w])) {
          ++mismatch_counts[w];
        }
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back(work, w);
    }
    for (auto& t : threads) {
      t.join();
    }
  }
  rep.pairs = static_cast<std::int64_t>(elements.size())
              * static_cast<std::int64_t>(elements.size());
  for (int w = 0; w < workers; ++w) {
    rep.zero_products += zero_counts[w];
    rep.mismatches += mismatch_counts[w];
  }
  return rep;
}

ArithSeparationReport arith_readout_separation(std::int64_t bound,
                                               std::int64_t radius) {
  if (bound < 2) {
    throw Error("arith_readout_separation: bound must be >= 2");
  }
  ArithSeparationReport rep{bound, 0, 0};
  for (std::int64_t a = 1; a <= bound; ++a) {
    for (std::int64_t b = 0; b < a; ++b) {
      for (std::int64_t a2 = a; a2 <= bound; ++a2) {
        for (std::int64_t b2 = 0; b2 < a2; ++b2) {
          if (a == a2 && b2 <= b) {
            continue;
          }
          auto w = arith_separate(a, b, a2, b2, radius);
          if (!w) {
            throw NoWitnessError(
                "arith_readout_separation: no witness within radius for ("
                + std::to_string(a) + "," + std::to_string(b) + ") vs ("
                + std::to_string(a2) + "," + std::to_string(b2) + ")");
          }
          ++rep.pairs_checked;
          rep.max_witness_e = std::max(rep.max_witness_e, w->e);
        }
      }
    }
  }
  return rep;
}

}  // namespace edis
