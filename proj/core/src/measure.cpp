#include "aetilde/measure.hpp"

#include <algorithm>
#include <numeric>

namespace aet {

namespace mp = boost::multiprecision;

Ord cmp_measure(const Measure& a, const Measure& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) {
      // Larger entry at the first difference means the smaller measure.
      return a[i] > b[i] ? Ord::Less : Ord::Greater;
    }
  }
  if (a.size() == b.size()) return Ord::Equal;
  return a.size() < b.size() ? Ord::Less : Ord::Greater;
}

Rational e_value(const Measure& m) {
  long long total = std::accumulate(m.begin(), m.end(), 0LL);
  mp::cpp_int acc = 0;
  long long run = 0;
  for (int v : m) {
    run += v;
    acc += mp::cpp_int(1) << static_cast<unsigned>(total - run);
  }
  return Rational(acc, mp::cpp_int(1) << static_cast<unsigned>(total));
}

Measure concat_power(const Measure& a, const Measure& b, int k) {
  Measure out = a;
  out.reserve(a.size() + b.size() * std::max(k, 0));
  for (int i = 0; i < k; ++i) out.insert(out.end(), b.begin(), b.end());
  return out;
}

namespace {

// Compare rotations of seq starting at offsets u and v (equal length, so this
// is position-wise: larger entry first means smaller).
Ord cmp_rotation(const Measure& seq, int u, int v) {
  const int n = static_cast<int>(seq.size());
  for (int i = 0; i < n; ++i) {
    int a = seq[(u + i) % n];
    int b = seq[(v + i) % n];
    if (a != b) return a > b ? Ord::Less : Ord::Greater;
  }
  return Ord::Equal;
}

bool is_power_of(const Measure& seq, int d) {
  const int n = static_cast<int>(seq.size());
  for (int i = d; i < n; ++i) {
    if (seq[i] != seq[i - d]) return false;
  }
  return true;
}

int primitive_root_length(const Measure& seq) {
  const int n = static_cast<int>(seq.size());
  for (int d = 1; d < n; ++d) {
    if (n % d == 0 && is_power_of(seq, d)) return d;
  }
  return n;
}

}  // namespace

Rotation minimal_rotation(const Measure& seq) {
  if (seq.empty()) throw EmptySequence("minimal_rotation of an empty sequence");
  const int n = static_cast<int>(seq.size());
  int best = 0;
  for (int u = 1; u < n; ++u) {
    if (cmp_rotation(seq, u, best) == Ord::Less) best = u;
  }
  Rotation out;
  out.shift = best;
  out.rotated.resize(seq.size());
  for (int i = 0; i < n; ++i) out.rotated[i] = seq[(best + i) % n];
  out.primitive = primitive_root_length(seq) == n;
  return out;
}

PeriodicMeasure canonical_periodic(const Measure& prefix, const Measure& period) {
  if (period.empty()) throw EmptyPeriod("canonical_periodic with empty period");
  Measure p = period;
  p.resize(primitive_root_length(p));
  Rotation rot = minimal_rotation(p);
  PeriodicMeasure out;
  out.prefix = prefix;
  // Absorb the rotation phase into the prefix so the infinite word is
  // unchanged: prefix.(p)^oo == (prefix.p[0:shift]).(rotated)^oo.
  out.prefix.insert(out.prefix.end(), p.begin(), p.begin() + rot.shift);
  out.period = std::move(rot.rotated);
  // Strip trailing whole copies of the period from the prefix.
  const std::size_t k = out.period.size();
  while (out.prefix.size() >= k &&
         std::equal(out.period.begin(), out.period.end(), out.prefix.end() - k)) {
    out.prefix.erase(out.prefix.end() - k, out.prefix.end());
  }
  return out;
}

Rational e_value(const PeriodicMeasure& m) {
  long long sp = std::accumulate(m.prefix.begin(), m.prefix.end(), 0LL);
  long long sq = std::accumulate(m.period.begin(), m.period.end(), 0LL);
  Rational tail = e_value(m.period);
  mp::cpp_int pow_q = mp::cpp_int(1) << static_cast<unsigned>(sq);
  tail *= Rational(pow_q, pow_q - 1);
  tail /= Rational(mp::cpp_int(1) << static_cast<unsigned>(sp), 1);
  return e_value(m.prefix) + tail;
}

namespace {

// Uniform view of a finite or eventually periodic measure as an infinite (or
// finite) sequence; entry(i) < 0 signals "past the end" of a finite one.
struct Stream {
  const Measure* prefix;
  const Measure* period;  // nullptr for finite measures

  int entry(std::size_t i) const {
    if (i < prefix->size()) return (*prefix)[i];
    if (!period || period->empty()) return -1;
    return (*period)[(i - prefix->size()) % period->size()];
  }
  std::size_t prefix_len() const { return prefix->size(); }
  std::size_t period_len() const { return period ? period->size() : 1; }
};

Ord cmp_streams(const Stream& a, const Stream& b) {
  // Unroll past both prefixes plus two full joint periods; if no difference
  // appears by then, the infinite words coincide.
  const std::size_t joint =
      std::lcm(a.period_len() ? a.period_len() : 1,
               b.period_len() ? b.period_len() : 1);
  const std::size_t bound = a.prefix_len() + b.prefix_len() + 2 * joint + 1;
  for (std::size_t i = 0; i < bound; ++i) {
    const int av = a.entry(i);
    const int bv = b.entry(i);
    if (av < 0 && bv < 0) return Ord::Equal;
    if (av < 0) return Ord::Less;      // a is a proper initial segment of b
    if (bv < 0) return Ord::Greater;
    if (av != bv) return av > bv ? Ord::Less : Ord::Greater;
  }
  return Ord::Equal;
}

}  // namespace

Ord cmp_periodic(const PeriodicMeasure& a, const PeriodicMeasure& b) {
  return cmp_streams({&a.prefix, &a.period}, {&b.prefix, &b.period});
}

Ord cmp_periodic(const Measure& a, const PeriodicMeasure& b) {
  return cmp_streams({&a, nullptr}, {&b.prefix, &b.period});
}

Ord cmp_periodic(const PeriodicMeasure& a, const Measure& b) {
  return cmp_streams({&a.prefix, &a.period}, {&b, nullptr});
}

std::string format_measure(const Measure& m) {
  if (m.empty()) return "()";
  bool digits = std::all_of(m.begin(), m.end(), [](int v) { return v >= 0 && v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(m[i]);
  }
  return out;
}

std::string format_periodic(const PeriodicMeasure& m) {
  std::string out;
  if (!m.prefix.empty()) out += format_measure(m.prefix);
  out += '(';
  out += format_measure(m.period);
  out += ')';
  return out;
}

std::string fixed6(const Rational& r) {
  const bool negative = r < 0;
  Rational abs = negative ? -r : r;
  mp::cpp_int scaled_num = mp::numerator(abs) * 1000000;
  mp::cpp_int den = mp::denominator(abs);
  // Round half away from zero.
  mp::cpp_int q = (scaled_num + den / 2) / den;
  std::string digits = q.str();
  if (digits.size() < 7) digits.insert(0, 7 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - 6) + "." +
                    digits.substr(digits.size() - 6);
  if (negative && q != 0) out.insert(0, 1, '-');
  return out;
}

}  // namespace aet
