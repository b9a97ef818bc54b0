#include "fm.hpp"

#include <algorithm>
#include <bitset>
#include <unordered_map>

#include "errors.hpp"

namespace toss {

namespace {

using boost::multiprecision::cpp_int;

constexpr size_t kMaxOriginRows = 512;
using Ancestors = std::bitset<kMaxOriginRows>;

struct BigRat {
  cpp_int num, den;  // den > 0
  BigRat(cpp_int n = 0, cpp_int d = 1) : num(std::move(n)), den(std::move(d)) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    cpp_int g = gcd(num < 0 ? cpp_int(-num) : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  friend BigRat operator+(const BigRat& a, const BigRat& b) {
    return BigRat(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend BigRat operator*(const BigRat& a, const BigRat& b) {
    return BigRat(a.num * b.num, a.den * b.den);
  }
  friend BigRat operator/(const BigRat& a, const BigRat& b) {
    return BigRat(a.num * b.den, a.den * b.num);
  }
  friend bool operator<(const BigRat& a, const BigRat& b) {
    return a.num * b.den < b.num * a.den;
  }
};

// rows live on checked __int128 words; the combination step is the only
// place products appear and it throws on overflow rather than wrapping
struct WorkRow {
  std::vector<__int128> a;  // [coeffs..., const]
  bool strict = false;
  Ancestors anc;
};

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void normalize(std::vector<__int128>& v) {
  __int128 g = 0;
  for (const auto& x : v) g = gcd128(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

__int128 mul_checked(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("FM coefficient exceeded 128 bits");
  return r;
}

struct RowHash {
  size_t operator()(const std::vector<__int128>& v) const {
    size_t h = v.size();
    for (const auto& x : v) {
      uint64_t lo = (uint64_t)x, hi = (uint64_t)((unsigned __int128)x >> 64);
      h ^= lo + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h ^= hi + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

bool is_contradiction(const WorkRow& r, int nvars) {
  for (int v = 0; v < nvars; ++v)
    if (r.a[v] != 0) return false;
  const __int128& c = r.a[nvars];
  return c < 0 || (c == 0 && r.strict);
}

}  // namespace

FmResult fm_solve(const std::vector<FmRow>& input, int nvars) {
  if (input.size() > kMaxOriginRows)
    throw too_many_variables_error("FM elimination limited to 512 input rows");
  std::vector<WorkRow> rows;
  rows.reserve(input.size());
  for (size_t i = 0; i < input.size(); ++i) {
    if ((int)input[i].a.size() != nvars + 1)
      throw dimension_mismatch_error("FM row has wrong width");
    WorkRow r;
    r.a.reserve(nvars + 1);
    for (const auto& x : input[i].a) {
      if (x > INT64_MAX || x < INT64_MIN)
        throw std::overflow_error("FM input coefficient exceeds 64 bits");
      r.a.push_back((long long)x);
    }
    r.strict = input[i].strict;
    r.anc.set(i);
    normalize(r.a);
    if (is_contradiction(r, nvars)) return {false, {}};
    rows.push_back(std::move(r));
  }

  // elimination stack: (variable, rows bounding it at that level)
  std::vector<std::pair<int, std::vector<WorkRow>>> stack;
  std::vector<char> eliminated(nvars, 0);

  for (int step = 0; step < nvars; ++step) {
    int var = -1;
    long long best = 0;
    for (int v = 0; v < nvars; ++v) {
      if (eliminated[v]) continue;
      long long pos = 0, neg = 0;
      for (const auto& r : rows) {
        if (r.a[v] > 0) ++pos;
        if (r.a[v] < 0) ++neg;
      }
      if (pos + neg == 0) continue;
      long long cost = pos * neg - pos - neg;
      if (var < 0 || cost < best) {
        var = v;
        best = cost;
      }
    }
    if (var < 0) break;
    eliminated[var] = 1;

    std::vector<WorkRow> pos, neg, zero;
    for (auto& r : rows) {
      if (r.a[var] > 0)
        pos.push_back(std::move(r));
      else if (r.a[var] < 0)
        neg.push_back(std::move(r));
      else
        zero.push_back(std::move(r));
    }

    std::unordered_map<std::vector<__int128>, std::pair<bool, Ancestors>, RowHash> fresh;
    fresh.reserve(pos.size() * 2);
    const size_t anc_bound = (size_t)step + 2;  // Imbert's redundancy bound
    std::vector<__int128> buf(nvars + 1);
    for (const auto& p : pos)
      for (const auto& m : neg) {
        Ancestors anc = p.anc | m.anc;
        if (anc.count() > anc_bound) continue;
        const __int128 pc = p.a[var];
        const __int128 mc = -m.a[var];
        for (int t = 0; t <= nvars; ++t)
          buf[t] = mul_checked(mc, p.a[t]) + mul_checked(pc, m.a[t]);
        normalize(buf);
        bool strict = p.strict || m.strict;
        auto it = fresh.find(buf);
        if (it == fresh.end()) {
          fresh.emplace(buf, std::make_pair(strict, anc));
        } else {
          it->second.first = it->second.first || strict;
          if (anc.count() < it->second.second.count()) it->second.second = anc;
        }
      }

    // keep the bounding rows for the witness back-substitution
    auto& level = stack.emplace_back(var, std::move(pos)).second;
    level.insert(level.end(), std::make_move_iterator(neg.begin()),
                 std::make_move_iterator(neg.end()));

    rows = std::move(zero);
    for (auto& [v, meta] : fresh) {
      WorkRow r{v, meta.first, meta.second};
      if (is_contradiction(r, nvars)) return {false, {}};
      bool constant = true;
      for (int t = 0; t < nvars; ++t)
        if (r.a[t] != 0) {
          constant = false;
          break;
        }
      if (!constant) rows.push_back(std::move(r));
    }
  }

  for (const auto& r : rows)
    if (is_contradiction(r, nvars)) return {false, {}};

  // feasible: back-substitute through the stack (never-eliminated variables
  // are unconstrained and stay 0)
  std::vector<BigRat> point(nvars, BigRat(0));
  std::vector<char> assigned(nvars, 0);
  for (int v = 0; v < nvars; ++v)
    if (!eliminated[v]) assigned[v] = 1;
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    int var = it->first;
    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    BigRat lo(0), hi(0);
    auto to_cpp = [](__int128 x) {
      bool negate = x < 0;
      unsigned __int128 u = negate ? -(unsigned __int128)x : (unsigned __int128)x;
      cpp_int c = (uint64_t)(u >> 64);
      c <<= 64;
      c += (uint64_t)u;
      return negate ? cpp_int(-c) : c;
    };
    for (const auto& r : it->second) {
      // a_var * x + rest >= 0 with every other variable already fixed
      BigRat rest(to_cpp(r.a[nvars]));
      for (int v = 0; v < nvars; ++v) {
        if (v == var || r.a[v] == 0) continue;
        if (!assigned[v])
          throw internal_error("FM back-substitution hit an unassigned variable");
        rest = rest + BigRat(to_cpp(r.a[v])) * point[v];
      }
      BigRat bound = BigRat(-1) * rest / BigRat(to_cpp(r.a[var]));
      if (r.a[var] > 0) {  // x >= bound
        if (!has_lo || lo < bound) {
          lo = bound;
          lo_strict = r.strict;
          has_lo = true;
        } else if (!(bound < lo)) {
          lo_strict = lo_strict || r.strict;
        }
      } else {  // x <= bound
        if (!has_hi || bound < hi) {
          hi = bound;
          hi_strict = r.strict;
          has_hi = true;
        } else if (!(hi < bound)) {
          hi_strict = hi_strict || r.strict;
        }
      }
    }
    BigRat x(0);
    if (has_lo && has_hi) {
      if (hi < lo || (!(lo < hi) && (lo_strict || hi_strict)))
        throw internal_error("FM back-substitution found an empty interval");
      x = lo < hi ? (lo + hi) * BigRat(1, 2) : lo;
    } else if (has_lo) {
      x = lo_strict ? lo + BigRat(1) : lo;
    } else if (has_hi) {
      x = hi_strict ? hi + BigRat(-1) : hi;
    }
    point[var] = x;
    assigned[var] = 1;
  }

  FmResult res;
  res.feasible = true;
  res.witness.resize(nvars);
  for (int v = 0; v < nvars; ++v) {
    const auto& q = point[v];
    if (q.num > INT64_MAX || q.num < INT64_MIN || q.den > INT64_MAX)
      throw std::overflow_error("FM witness exceeds 64-bit rationals");
    res.witness[v] = Rat((long long)q.num, (long long)q.den);
  }
  return res;
}

}  // namespace toss
