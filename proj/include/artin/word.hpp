#pragma once

#include <charconv>
#include <cstdlib>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "artin/coxeter_graph.hpp"
#include "artin/error.hpp"

namespace artin {

struct Syllable {
  std::string gen;
  long exp;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

class GeneratorWord;
GeneratorWord free_reduce(std::vector<Syllable> raw);

/// Syllable-reduced word: no zero exponents, no two adjacent syllables on the
/// same generator. The empty word is the identity.
class GeneratorWord {
 public:
  GeneratorWord() = default;

  const std::vector<Syllable>& syllables() const noexcept { return syl_; }
  bool is_identity() const noexcept { return syl_.empty(); }

  /// Total number of letters, sum of |exponent|.
  long length() const noexcept {
    long n = 0;
    for (const auto& s : syl_) n += std::labs(s.exp);
    return n;
  }

  GeneratorWord inverse() const {
    GeneratorWord w;
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
      w.syl_.push_back({it->gen, -it->exp});
    return w;
  }

  friend GeneratorWord operator*(const GeneratorWord& x,
                                 const GeneratorWord& y) {
    auto raw = x.syl_;
    raw.insert(raw.end(), y.syl_.begin(), y.syl_.end());
    return free_reduce(std::move(raw));
  }

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;

 private:
  friend GeneratorWord free_reduce(std::vector<Syllable> raw);
  std::vector<Syllable> syl_;
};

/// Merges adjacent syllables on one generator and drops zero exponents, to a
/// fixed point (a single stack pass suffices).
inline GeneratorWord free_reduce(std::vector<Syllable> raw) {
  GeneratorWord w;
  auto& out = w.syl_;
  for (auto& s : raw) {
    if (s.exp == 0) continue;
    if (!out.empty() && out.back().gen == s.gen) {
      out.back().exp += s.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(std::move(s));
    }
  }
  return w;
}

/// Alternating positive word of `length` letters starting at `first`.
inline GeneratorWord alternating_word(const std::string& first,
                                      const std::string& second,
                                      long length) {
  std::vector<Syllable> raw;
  for (long i = 0; i < length; ++i)
    raw.push_back({i % 2 == 0 ? first : second, 1});
  return free_reduce(std::move(raw));
}

inline std::string to_string(const GeneratorWord& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += s.gen;
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

/// Label lookup used to expand `d[..]` tokens; returns 0 for "no edge".
using LabelFn = std::function<int(const std::string&, const std::string&)>;

namespace detail {

inline long parse_exponent(std::string_view s, std::string_view token) {
  long v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty())
    throw ParseError(0, "bad exponent in token '" + std::string(token) + "'");
  return v;
}

inline bool in_alphabet(std::span<const std::string> alphabet,
                        std::string_view name) {
  for (const auto& a : alphabet)
    if (a == name) return true;
  return false;
}

// Splits "xy" or "x,y" into two alphabet names.
inline std::pair<std::string, std::string> split_pair(
    std::span<const std::string> alphabet, std::string_view inner,
    std::string_view token) {
  if (auto comma = inner.find(','); comma != std::string_view::npos) {
    std::string a(trim(inner.substr(0, comma)));
    std::string b(trim(inner.substr(comma + 1)));
    if (in_alphabet(alphabet, a) && in_alphabet(alphabet, b)) return {a, b};
  } else {
    for (std::size_t k = 1; k < inner.size(); ++k) {
      std::string a(inner.substr(0, k));
      std::string b(inner.substr(k));
      if (in_alphabet(alphabet, a) && in_alphabet(alphabet, b)) return {a, b};
    }
  }
  throw ParseError(0, "cannot read generator pair in '" + std::string(token) + "'");
}

}  // namespace detail

/// Reads the flat word syntax: whitespace-separated tokens `x`, `x^k`,
/// `d[xy]` / `d[x,y]` (Garside element of the pair, optionally `^k`), `1`,
/// and runs of single-character generator names such as `aba`.
inline GeneratorWord parse_word(std::string_view text,
                                std::span<const std::string> alphabet,
                                const LabelFn& label) {
  std::vector<Syllable> raw;
  for (const auto& token : detail::split_ws(text)) {
    std::string_view tok = token;
    if (tok == "1") continue;
    long exp = 1;
    std::string_view base = tok;
    if (auto caret = tok.rfind('^'); caret != std::string_view::npos) {
      base = tok.substr(0, caret);
      exp = detail::parse_exponent(tok.substr(caret + 1), tok);
    }
    if (base.size() > 3 && base.substr(0, 2) == "d[" && base.back() == ']') {
      auto [a, b] = detail::split_pair(alphabet, base.substr(2, base.size() - 3), tok);
      if (a == b) throw ParseError(0, "d[] needs two distinct generators");
      int m = label ? label(a, b) : 0;
      if (m == 0)
        throw ParseError(0, "no edge " + a + "-" + b + " for '" + token + "'");
      auto delta = alternating_word(a, b, m);
      if (exp < 0) delta = delta.inverse();
      for (long i = 0; i < std::labs(exp); ++i)
        raw.insert(raw.end(), delta.syllables().begin(), delta.syllables().end());
      continue;
    }
    if (detail::in_alphabet(alphabet, base)) {
      raw.push_back({std::string(base), exp});
      continue;
    }
    bool letters = exp == 1 && !base.empty();
    for (char c : base)
      letters = letters && detail::in_alphabet(alphabet, std::string(1, c));
    if (!letters)
      throw ParseError(0, "unknown generator in token '" + token + "'");
    for (char c : base) raw.push_back({std::string(1, c), 1});
  }
  return free_reduce(std::move(raw));
}

inline GeneratorWord parse_word(std::string_view text, const CoxeterGraph& g) {
  return parse_word(text, g.vertices(),
                    [&g](const std::string& a, const std::string& b) {
                      return g.label(a, b);
                    });
}

/// A factor delta_{uv}^exp; u precedes v in declaration order.
struct DeltaFactor {
  std::string u;
  std::string v;
  long exp;

  friend bool operator==(const DeltaFactor&, const DeltaFactor&) = default;
};

/// Word in Garside elements of the edges of a Coxeter graph, kept reduced
/// (adjacent factors on the same edge merged, zero powers dropped).
class DeltaWord {
 public:
  DeltaWord() = default;

  const std::vector<DeltaFactor>& factors() const noexcept { return f_; }
  bool is_identity() const noexcept { return f_.empty(); }
  std::size_t size() const noexcept { return f_.size(); }

  void push_back(DeltaFactor x) {
    if (x.exp == 0) return;
    if (!f_.empty() && f_.back().u == x.u && f_.back().v == x.v) {
      f_.back().exp += x.exp;
      if (f_.back().exp == 0) f_.pop_back();
      return;
    }
    f_.push_back(std::move(x));
  }

  DeltaWord inverse() const {
    DeltaWord w;
    for (auto it = f_.rbegin(); it != f_.rend(); ++it)
      w.push_back({it->u, it->v, -it->exp});
    return w;
  }

  friend DeltaWord operator*(const DeltaWord& x, const DeltaWord& y) {
    DeltaWord w = x;
    for (const auto& f : y.f_) w.push_back(f);
    return w;
  }

  friend bool operator==(const DeltaWord&, const DeltaWord&) = default;

 private:
  std::vector<DeltaFactor> f_;
};

/// delta_{ab}^exp with endpoints put in declaration order.
inline DeltaFactor delta_factor(const CoxeterGraph& g, std::size_t a,
                                std::size_t b, long exp) {
  if (g.label(a, b) == 0)
    throw DomainError("no edge " + g.name(a) + "-" + g.name(b));
  if (a > b) std::swap(a, b);
  return {g.name(a), g.name(b), exp};
}

inline std::string delta_symbol(const std::string& u, const std::string& v) {
  if (u.size() == 1 && v.size() == 1) return "d[" + u + v + "]";
  return "d[" + u + "," + v + "]";
}

inline std::string to_string(const DeltaWord& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const auto& f : w.factors()) {
    if (!out.empty()) out += ' ';
    out += delta_symbol(f.u, f.v);
    if (f.exp != 1) out += "^" + std::to_string(f.exp);
  }
  return out;
}

/// Spells a delta word out over the generators.
inline GeneratorWord expand(const CoxeterGraph& g, const DeltaWord& w) {
  std::vector<Syllable> raw;
  for (const auto& f : w.factors()) {
    auto delta = alternating_word(f.u, f.v, g.label(f.u, f.v));
    if (f.exp < 0) delta = delta.inverse();
    for (long i = 0; i < std::labs(f.exp); ++i)
      raw.insert(raw.end(), delta.syllables().begin(), delta.syllables().end());
  }
  return free_reduce(std::move(raw));
}

/// Reads a word made only of `d[..]` tokens into a DeltaWord.
inline DeltaWord parse_delta_word(std::string_view text, const CoxeterGraph& g) {
  DeltaWord w;
  for (const auto& token : detail::split_ws(text)) {
    std::string_view tok = token;
    if (tok == "1") continue;
    long exp = 1;
    std::string_view base = tok;
    if (auto caret = tok.rfind('^'); caret != std::string_view::npos) {
      base = tok.substr(0, caret);
      exp = detail::parse_exponent(tok.substr(caret + 1), tok);
    }
    if (!(base.size() > 3 && base.substr(0, 2) == "d[" && base.back() == ']'))
      throw ParseError(0, "expected a d[..] factor, got '" + token + "'");
    auto [a, b] =
        detail::split_pair(g.vertices(), base.substr(2, base.size() - 3), tok);
    w.push_back(delta_factor(g, g.index_of(a), g.index_of(b), exp));
  }
  return w;
}

}  // namespace artin
