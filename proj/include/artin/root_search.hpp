#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "artin/dihedral.hpp"

namespace artin {

/// Random alternating word with at most `max_syllables` syllables and
/// exponents in [-max_exp, max_exp] \ {0}.
template <class Rng>
GeneratorWord random_alternating_word(Rng& rng, const DihedralPresentation& p,
                                      int max_syllables = 8, int max_exp = 3) {
  std::uniform_int_distribution<int> count(0, max_syllables);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> mag(1, max_exp);
  int k = count(rng);
  Letter l = coin(rng) ? Letter::Second : Letter::First;
  std::vector<Syllable> raw;
  for (int i = 0; i < k; ++i, l = other(l)) {
    long e = mag(rng);
    if (coin(rng)) e = -e;
    raw.push_back({p.name(l), e});
  }
  return free_reduce(std::move(raw));
}

enum class RootOutcome { Vacuous, Holds, Violated };

/// Tests  h^-1 w^n h in <gen>  =>  h^-1 w h in <gen>.
inline RootOutcome check_root_case(const DihedralElement& w, const DihedralElement& h,
                                   long n, Letter gen = Letter::First) {
  auto hinv = h.inverse();
  if (!member_of_generator_cyclic(hinv * w.pow(n) * h, gen)) return RootOutcome::Vacuous;
  return member_of_generator_cyclic(hinv * w * h, gen) ? RootOutcome::Holds
                                                       : RootOutcome::Violated;
}

struct RootViolation {
  GeneratorWord w;
  GeneratorWord h;
  long n;
};

struct RootSearchReport {
  int m = 0;
  long trials = 0;
  long max_n = 0;
  std::uint64_t seed = 0;
  long cases = 0;
  long vacuous = 0;
  long non_vacuous = 0;
  std::vector<RootViolation> violations;
};

/// Falsification search for root stability of the conjugated cyclic
/// parabolic h<a>h^-1.
///
/// Each trial draws a conjugator h and a core element g, sets w = h g h^-1 and
/// checks every 2 <= n <= max_n. The core g cycles through five families so
/// that a useful share of cases is non-vacuous:
///   0: random word   1: a^k   2: a^k v (v short)   3: u a^k u^-1   4: a^k delta^j
template <class Rng = std::mt19937_64>
RootSearchReport search_root_counterexample(const PresentationPtr& p, long trials,
                                            long max_n, std::uint64_t seed) {
  if (trials < 1) throw DomainError("trials must be >= 1");
  if (max_n < 2) throw DomainError("max_n must be >= 2");
  Rng rng(seed);
  RootSearchReport rep;
  rep.m = p->m();
  rep.trials = trials;
  rep.max_n = max_n;
  rep.seed = seed;

  std::uniform_int_distribution<int> family(0, 4);
  std::uniform_int_distribution<int> mag(1, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  auto a_power = [&] {
    long k = mag(rng);
    return DihedralElement::generator(p, Letter::First, coin(rng) ? k : -k);
  };

  for (long t = 0; t < trials; ++t) {
    auto hw = random_alternating_word(rng, *p);
    auto h = normal_form(p, hw);
    DihedralElement g(p);
    switch (family(rng)) {
      case 0: g = normal_form(p, random_alternating_word(rng, *p)); break;
      case 1: g = a_power(); break;
      case 2: g = a_power() * normal_form(p, random_alternating_word(rng, *p, 2)); break;
      case 3: {
        auto u = normal_form(p, random_alternating_word(rng, *p, 4));
        g = u * a_power() * u.inverse();
        break;
      }
      default: {
        long j = mag(rng) % 2 + 1;
        g = a_power() * DihedralElement::delta(p, coin(rng) ? j : -j);
      }
    }
    auto w = h * g * h.inverse();
    for (long n = 2; n <= max_n; ++n) {
      ++rep.cases;
      switch (check_root_case(w, h, n)) {
        case RootOutcome::Vacuous: ++rep.vacuous; break;
        case RootOutcome::Holds: ++rep.non_vacuous; break;
        case RootOutcome::Violated:
          ++rep.non_vacuous;
          rep.violations.push_back({to_word(w), hw, n});
      }
    }
  }
  return rep;
}

}  // namespace artin
