#pragma once

// Exact arithmetic in the dihedral Artin group
//
//     A_m = < a, b | aba... = bab... >   (m letters on each side, m >= 3)
//
// via left-greedy Garside normal forms. The Garside element is
// delta = aba... (m letters); its positive divisors ("simples") are the
// alternating positive words of length 0..m, encoded as (start, length).
//
// Every element has a unique form delta^p * s_1 * ... * s_k with each s_i a
// proper simple (length 1..m-1) and every adjacent pair left-weighted:
//
//     (s, t) is left-weighted  <=>  last letter of s == first letter of t.
//
// (If the letters differed, s * first(t) would still be a simple, so s would
// not be the maximal simple prefix of s * t.) This predicate is the single
// source of truth for normality; see `is_left_weighted`.
//
// Conjugation by delta: delta x delta^-1 swaps a and b when m is odd and
// fixes both when m is even. Moving delta^q leftwards across a factor applies
// this automorphism q times.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "artin/error.hpp"
#include "artin/word.hpp"

namespace artin {

enum class Letter : std::uint8_t { First = 0, Second = 1 };

constexpr Letter other(Letter x) noexcept {
  return x == Letter::First ? Letter::Second : Letter::First;
}

class DihedralPresentation {
 public:
  explicit DihedralPresentation(int m, std::string first = "a",
                                std::string second = "b")
      : m_(m), first_(std::move(first)), second_(std::move(second)) {
    if (m_ < 3) throw DomainError("dihedral label must be >= 3, got " + std::to_string(m_));
    if (m_ > 0xFFFF) throw DomainError("dihedral label too large");
    if (first_.empty() || second_.empty() || first_ == second_)
      throw DomainError("dihedral generators must be distinct non-empty names");
  }

  int m() const noexcept { return m_; }
  const std::string& first() const noexcept { return first_; }
  const std::string& second() const noexcept { return second_; }
  const std::string& name(Letter x) const noexcept {
    return x == Letter::First ? first_ : second_;
  }

  std::optional<Letter> letter_of(std::string_view name) const {
    if (name == first_) return Letter::First;
    if (name == second_) return Letter::Second;
    return std::nullopt;
  }

  friend bool operator==(const DihedralPresentation&,
                         const DihedralPresentation&) = default;

 private:
  int m_;
  std::string first_;
  std::string second_;
};

using PresentationPtr = std::shared_ptr<const DihedralPresentation>;

inline PresentationPtr make_presentation(int m, std::string first = "a",
                                         std::string second = "b") {
  return std::make_shared<const DihedralPresentation>(m, std::move(first),
                                                      std::move(second));
}

/// Positive alternating word of `length` letters beginning with `start`.
/// length 0 is the identity, length m is delta (start canonicalised to First).
struct Simple {
  Letter start = Letter::First;
  std::uint16_t length = 0;

  Letter first_letter() const noexcept { return start; }
  Letter last_letter() const noexcept {
    return length % 2 == 1 ? start : other(start);
  }

  friend bool operator==(const Simple&, const Simple&) = default;
};

/// The simple of the given length whose last letter is `last`.
inline Simple simple_ending_with(Letter last, int length) {
  return {length % 2 == 1 ? last : other(last),
          static_cast<std::uint16_t>(length)};
}

inline bool is_left_weighted(const Simple& s, const Simple& t) {
  return s.last_letter() == t.first_letter();
}

/// Bare normal form data; all routines take the label m explicitly.
struct NormalForm {
  long inf = 0;
  std::vector<Simple> factors;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

namespace nf {

inline void apply_tau(std::vector<Simple>& f, std::size_t count, int m) {
  if (m % 2 == 0) return;
  for (std::size_t i = 0; i < count; ++i) f[i].start = other(f[i].start);
}

/// x <- x * delta^q.
inline void mul_delta_power(NormalForm& x, long q, int m) {
  x.inf += q;
  if (q % 2 != 0) apply_tau(x.factors, x.factors.size(), m);
}

/// x <- x * t for a simple t (any length 0..m). Restores left-greediness by
/// sliding letters leftwards; a factor that fills up to delta is pushed to
/// the front.
inline void absorb(NormalForm& x, Simple t, int m) {
  if (t.length == 0) return;
  if (t.length == m) {
    mul_delta_power(x, 1, m);
    return;
  }
  auto& f = x.factors;
  f.push_back(t);
  std::size_t j = f.size() - 1;
  while (j > 0 && j < f.size()) {
    Simple& s = f[j - 1];
    Simple& u = f[j];
    if (is_left_weighted(s, u)) break;
    int k = std::min<int>(m - s.length, u.length);
    s.length = static_cast<std::uint16_t>(s.length + k);
    u.length = static_cast<std::uint16_t>(u.length - k);
    if (k % 2 == 1) u.start = other(u.start);
    if (u.length == 0) f.erase(f.begin() + static_cast<long>(j));
    if (s.length != m) break;
    f.erase(f.begin() + static_cast<long>(j - 1));
    apply_tau(f, j - 1, m);
    x.inf += 1;
    j -= 1;
  }
}

/// x <- x * l^e.
inline void mul_letter(NormalForm& x, Letter l, long e, int m) {
  if (e > 0) {
    for (long i = 0; i < e; ++i) absorb(x, Simple{l, 1}, m);
    return;
  }
  // l^-1 = delta^-1 * r with r * l = delta.
  Simple r = simple_ending_with(other(l), m - 1);
  for (long i = 0; i < -e; ++i) {
    mul_delta_power(x, -1, m);
    absorb(x, r, m);
  }
}

/// x <- x * y.
inline void mul(NormalForm& x, const NormalForm& y, int m) {
  mul_delta_power(x, y.inf, m);
  for (const auto& s : y.factors) absorb(x, s, m);
}

inline NormalForm inverse(const NormalForm& x, int m) {
  NormalForm r;
  for (auto it = x.factors.rbegin(); it != x.factors.rend(); ++it) {
    // s^-1 = delta^-1 * c with c * s = delta.
    mul_delta_power(r, -1, m);
    absorb(r, simple_ending_with(other(it->first_letter()), m - it->length), m);
  }
  mul_delta_power(r, -x.inf, m);
  return r;
}

/// Packed byte string identifying the element, for hashing.
inline std::string key(const NormalForm& x) {
  std::string k(sizeof(long), '\0');
  long p = x.inf;
  for (std::size_t i = 0; i < sizeof(long); ++i)
    k[i] = static_cast<char>((static_cast<unsigned long>(p) >> (8 * i)) & 0xFF);
  for (const auto& s : x.factors) {
    std::uint16_t v = static_cast<std::uint16_t>((s.length << 1) |
                                                 static_cast<int>(s.start));
    k.push_back(static_cast<char>(v & 0xFF));
    k.push_back(static_cast<char>(v >> 8));
  }
  return k;
}

/// 64-bit hash of the normal form (splitmix64 mixing, four factors per
/// round). With `swap`, hashes the image under the automorphism a <-> b.
inline std::uint64_t fingerprint(const NormalForm& x, std::uint64_t seed = 0,
                                 bool swap = false) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t h = mix(mix(seed) ^ static_cast<std::uint64_t>(x.inf));
  std::uint64_t block = 0;
  int filled = 0;
  for (const auto& s : x.factors) {
    block = (block << 16) | (static_cast<std::uint64_t>(s.length) << 1) |
            (static_cast<std::uint64_t>(s.start) ^ static_cast<std::uint64_t>(swap));
    if (++filled == 4) {
      h = mix(h ^ block);
      block = 0;
      filled = 0;
    }
  }
  if (filled > 0) h = mix(h ^ block);
  return mix(h ^ x.factors.size());
}

/// Checks the normal-form invariants (used by tests and debug asserts).
inline bool is_normal(const NormalForm& x, int m) {
  for (std::size_t i = 0; i < x.factors.size(); ++i) {
    const auto& s = x.factors[i];
    if (s.length == 0 || s.length >= m) return false;
    if (i > 0 && !is_left_weighted(x.factors[i - 1], s)) return false;
  }
  return true;
}

}  // namespace nf

/// An element of a dihedral Artin group held in left-greedy normal form.
class DihedralElement {
 public:
  explicit DihedralElement(PresentationPtr p) : pres_(std::move(p)) {
    if (!pres_) throw DomainError("null presentation");
  }
  DihedralElement(PresentationPtr p, NormalForm nf)
      : pres_(std::move(p)), nf_(std::move(nf)) {
    if (!pres_) throw DomainError("null presentation");
    if (!nf::is_normal(nf_, pres_->m()))
      throw DomainError("factor list is not in left-greedy normal form");
  }

  static DihedralElement identity(PresentationPtr p) {
    return DihedralElement(std::move(p));
  }
  static DihedralElement generator(PresentationPtr p, Letter l, long exp = 1) {
    DihedralElement x(std::move(p));
    nf::mul_letter(x.nf_, l, exp, x.m());
    return x;
  }
  static DihedralElement delta(PresentationPtr p, long exp = 1) {
    DihedralElement x(std::move(p));
    x.nf_.inf = exp;
    return x;
  }

  const DihedralPresentation& presentation() const noexcept { return *pres_; }
  const PresentationPtr& presentation_ptr() const noexcept { return pres_; }
  int m() const noexcept { return pres_->m(); }
  long inf() const noexcept { return nf_.inf; }
  const std::vector<Simple>& canonical() const noexcept { return nf_.factors; }
  const NormalForm& normal_form() const noexcept { return nf_; }
  bool is_trivial() const noexcept { return nf_.inf == 0 && nf_.factors.empty(); }

  /// In-place right multiplication by a letter power; avoids the copies of
  /// operator* in enumeration loops.
  DihedralElement& mul_letter(Letter l, long exp) {
    nf::mul_letter(nf_, l, exp, m());
    return *this;
  }

  DihedralElement& operator*=(const DihedralElement& y) {
    check_same(y);
    nf::mul(nf_, y.nf_, m());
    return *this;
  }

  friend DihedralElement operator*(DihedralElement x, const DihedralElement& y) {
    x *= y;
    return x;
  }

  DihedralElement inverse() const {
    DihedralElement r(pres_);
    r.nf_ = nf::inverse(nf_, m());
    return r;
  }

  DihedralElement pow(long n) const {
    DihedralElement base = n < 0 ? inverse() : *this;
    DihedralElement r(pres_);
    for (long i = 0; i < std::labs(n); ++i) r *= base;
    return r;
  }

  std::string key() const { return nf::key(nf_); }

  /// Same group element. Throws on presentation mismatch.
  bool equals(const DihedralElement& y) const {
    check_same(y);
    return nf_ == y.nf_;
  }

  friend bool operator==(const DihedralElement& x, const DihedralElement& y) {
    return x.equals(y);
  }

 private:
  void check_same(const DihedralElement& y) const {
    if (pres_ != y.pres_ && !(*pres_ == *y.pres_))
      throw DomainError("dihedral presentation mismatch");
  }

  PresentationPtr pres_;
  NormalForm nf_;
};

inline DihedralElement multiply(const DihedralElement& x, const DihedralElement& y) {
  return x * y;
}
inline DihedralElement invert(const DihedralElement& x) { return x.inverse(); }
inline bool equals(const DihedralElement& x, const DihedralElement& y) {
  return x.equals(y);
}
inline bool is_trivial(const DihedralElement& x) { return x.is_trivial(); }

/// Normal form of a word over the two generators of `p`.
inline DihedralElement normal_form(const PresentationPtr& p, const GeneratorWord& w) {
  DihedralElement x(p);
  for (const auto& s : w.syllables()) {
    auto l = p->letter_of(s.gen);
    if (!l)
      throw DomainError("generator '" + s.gen + "' is not in the presentation <" +
                        p->first() + "," + p->second() + ">");
    x.mul_letter(*l, s.exp);
  }
  return x;
}

inline DihedralElement parse_dihedral(const PresentationPtr& p, std::string_view text) {
  std::vector<std::string> alphabet{p->first(), p->second()};
  int m = p->m();
  auto w = parse_word(text, alphabet, [&](const std::string& a, const std::string& b) {
    return a != b ? m : 0;
  });
  return normal_form(p, w);
}

inline DihedralElement garside_delta(const PresentationPtr& p) {
  return DihedralElement::delta(p, 1);
}

/// Generator of the centre: delta for even m, delta^2 for odd m.
inline DihedralElement center_generator(const PresentationPtr& p) {
  return DihedralElement::delta(p, p->m() % 2 == 0 ? 1 : 2);
}

/// Homomorphism to Z used for cyclic-subgroup membership.
///   odd m:  both generators -> 1 (total exponent sum);
///   even m: target -> 1, the other generator -> 0.
/// Both are well defined because the braid relation is balanced in the
/// corresponding sense. `target` is ignored when m is odd.
inline long exponent_invariant(const DihedralElement& x, Letter target = Letter::First) {
  const int m = x.m();
  long total = 0;
  if (m % 2 == 1) {
    total = x.inf() * m;
    for (const auto& s : x.canonical()) total += s.length;
    return total;
  }
  total = x.inf() * (m / 2);
  for (const auto& s : x.canonical())
    total += s.start == target ? (s.length + 1) / 2 : s.length / 2;
  return total;
}

/// The unique element of the coset x<gen> with exponent_invariant 0.
inline DihedralElement coset_representative(const DihedralElement& x, Letter gen) {
  DihedralElement r = x;
  r.mul_letter(gen, -exponent_invariant(x, gen));
  return r;
}

/// Some(k) iff x == gen^k.
inline std::optional<long> member_of_generator_cyclic(const DihedralElement& x,
                                                      Letter gen) {
  long k = exponent_invariant(x, gen);
  DihedralElement r = x;
  r.mul_letter(gen, -k);
  if (r.is_trivial()) return k;
  return std::nullopt;
}

/// g x g^-1.
inline DihedralElement conjugate(const DihedralElement& x, const DihedralElement& g) {
  return g * x * g.inverse();
}

/// Letters of a simple, joined without separator when both names are single
/// characters and with '.' otherwise.
inline std::string to_string(const DihedralPresentation& p, const Simple& s) {
  bool compact = p.first().size() == 1 && p.second().size() == 1;
  std::string out;
  Letter l = s.start;
  for (int i = 0; i < s.length; ++i) {
    if (i > 0 && !compact) out += '.';
    out += p.name(l);
    l = other(l);
  }
  return out;
}

/// Prints `D^p * s1 * s2 * ...`.
inline std::string to_string(const DihedralElement& x) {
  std::string out = "D^" + std::to_string(x.inf());
  for (const auto& s : x.canonical()) out += " * " + to_string(x.presentation(), s);
  return out;
}

/// A word spelling the normal form.
inline GeneratorWord to_word(const DihedralElement& x) {
  const auto& p = x.presentation();
  std::vector<Syllable> raw;
  auto delta = alternating_word(p.first(), p.second(), p.m());
  if (x.inf() < 0) delta = delta.inverse();
  for (long i = 0; i < std::labs(x.inf()); ++i)
    raw.insert(raw.end(), delta.syllables().begin(), delta.syllables().end());
  for (const auto& s : x.canonical()) {
    Letter l = s.start;
    for (int i = 0; i < s.length; ++i, l = other(l)) raw.push_back({p.name(l), 1});
  }
  return free_reduce(std::move(raw));
}

}  // namespace artin
