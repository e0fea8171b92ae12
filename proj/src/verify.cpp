#include "gca/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "gca/automaton.hpp"
#include "gca/catalog.hpp"
#include "gca/configuration.hpp"
#include "gca/equivariance.hpp"
#include "gca/structure.hpp"
#include "gca/subgroup.hpp"

namespace gca {

namespace {

using Rng = std::mt19937_64;
using Images = std::vector<std::vector<Symbol>>;

constexpr std::size_t kMaxConfigurations = std::size_t{1} << 16;
constexpr std::size_t kRandomInstances = 200;
constexpr std::size_t kRulePoolCap = 200;
constexpr std::size_t kSampleConfigurations = 256;
constexpr std::size_t kChainMaxOrder = 4;

Element el(int i) { return Element::index(static_cast<std::size_t>(i)); }

std::size_t below(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

// Accumulates one check. Failures keep the first counterexample; enumeration
// runs from the smallest groups up, so it is a smallest one found.
struct Probe {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::optional<std::string> first;
  std::string note;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first = what();
  }
};

void run_check(Report& report, const std::string& name, const std::function<void(Probe&)>& body) {
  Probe p;
  Check c;
  c.name = name;
  try {
    body(p);
    c.status = p.failures ? CheckStatus::Fail : CheckStatus::Pass;
    c.detail = std::to_string(p.failures) + " failures";
    if (!p.note.empty()) c.detail += "; " + p.note;
    c.counterexample = p.first;
  } catch (const Error& e) {
    const bool budget = e.kind() == ErrorKind::BudgetExceeded || e.kind() == ErrorKind::Unsupported ||
                        e.kind() == ErrorKind::InfiniteFamily;
    c.status = budget ? CheckStatus::Unsupported : CheckStatus::Fail;
    c.detail = std::string(to_string(e.kind())) + " after " + std::to_string(p.cases) + " cases";
    c.counterexample = p.first ? *p.first : std::string(e.what());
    if (p.first) c.detail += std::string("; ") + e.what();
  }
  c.cases = p.cases;
  report.check(std::move(c));
}

// ---- brute-force oracles over raw multiplication tables ----

std::vector<std::vector<Symbol>> all_configurations(std::size_t cells, std::size_t q) {
  std::vector<std::vector<Symbol>> out;
  std::vector<Symbol> x(cells, 0);
  do out.push_back(x);
  while (next_configuration(x, q));
  return out;
}

// y(h) = mu(t -> x(phi(h) t)), first memory cell least significant.
std::vector<Symbol> naive_apply(const Gca& t, const std::vector<Symbol>& x) {
  const Group& g = t.source();
  const Group& h = t.target();
  const auto& mem = t.rule().memory();
  const std::size_t q = t.alphabet().size();
  std::vector<Symbol> y(h.order());
  for (int k = 0; k < static_cast<int>(h.order()); ++k) {
    const int base = t.phi()(k);
    std::size_t index = 0, weight = 1;
    for (const auto& m : mem) {
      index += weight * x[static_cast<std::size_t>(g.mul(base, static_cast<int>(m.as_index())))];
      weight *= q;
    }
    y[static_cast<std::size_t>(k)] = t.rule().table()[index];
  }
  return y;
}

Images naive_images(const Gca& t) {
  Images out;
  for (const auto& x : all_configurations(t.source().order(), t.alphabet().size())) out.push_back(naive_apply(t, x));
  return out;
}

bool images_injective(Images images) {
  std::sort(images.begin(), images.end());
  return std::adjacent_find(images.begin(), images.end()) == images.end();
}

bool images_surjective(Images images, std::size_t cells, std::size_t q) {
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images.size() == configuration_count(cells, q);
}

std::vector<std::vector<int>> brute_homs(const Group& h, const Group& g) {
  const int n = static_cast<int>(h.order()), m = static_cast<int>(g.order());
  std::vector<std::vector<int>> out;
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  while (true) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        ok = f[static_cast<std::size_t>(h.mul(a, b))] ==
             g.mul(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]);
    if (ok) out.push_back(f);
    int i = 0;
    while (i < n && ++f[static_cast<std::size_t>(i)] == m) f[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  return out;
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// Subgroups as member bitmasks.
std::vector<std::uint64_t> brute_subgroups(const Group& g) {
  const int n = static_cast<int>(g.order());
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask >> g.identity_index() & 1)) continue;
    bool closed = true;
    for (int a = 0; a < n && closed; ++a)
      for (int b = 0; b < n && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !(mask >> g.mul(a, b) & 1)) closed = false;
    if (closed) out.push_back(mask);
  }
  return out;
}

std::uint64_t mask_of(const Subgroup& k) {
  std::uint64_t m = 0;
  for (int i : k.indices()) m |= std::uint64_t{1} << i;
  return m;
}

bool brute_normal(const Group& g, std::uint64_t mask) {
  const int n = static_cast<int>(g.order());
  for (int x = 0; x < n; ++x)
    for (int k = 0; k < n; ++k)
      if ((mask >> k & 1) && !(mask >> g.mul(g.mul(x, k), g.inv(x)) & 1)) return false;
  return true;
}

std::vector<Element> brute_minimal_memory(const LocalRule& mu) {
  const std::size_t n = mu.memory().size();
  const std::size_t q = mu.alphabet().size();
  std::vector<Element> out;
  // A cell is essential iff changing it alone changes the value somewhere.
  for (std::size_t i = 0; i < n; ++i) {
    bool essential = false;
    for (std::size_t p = 0; p < mu.pattern_count() && !essential; ++p) {
      auto digits = mu.decode(p);
      const Symbol v = mu(std::span<const Symbol>(digits));
      for (Symbol s = 0; s < q && !essential; ++s) {
        digits[i] = s;
        if (mu(std::span<const Symbol>(digits)) != v) essential = true;
      }
    }
    if (essential) out.push_back(mu.memory()[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> sorted(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  return v;
}

LocalRule random_rule(const Group& g, const Alphabet& a, const std::vector<Element>& cells, std::size_t max_memory,
                      Rng& rng) {
  const std::size_t size = below(rng, std::min(max_memory, cells.size()) + 1);
  std::vector<Element> pool = cells, mem;
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t j = below(rng, pool.size());
    mem.push_back(pool[j]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
  }
  std::vector<Symbol> table(configuration_count(size, a.size()));
  for (auto& s : table) s = static_cast<Symbol>(below(rng, a.size()));
  return LocalRule(g, a, mem, table);
}

// Every minimal rule on the cells when there are few, otherwise an even
// subsample of them (q = 2) or random rules (q > 2).
std::vector<LocalRule> rule_pool(const Group& g, const Alphabet& a, const std::vector<Element>& cells,
                                 std::size_t max_memory, Rng& rng) {
  if (a.size() == 2) {
    auto all = minimal_rules(g, a, cells, max_memory);
    if (all.size() <= kRulePoolCap) return all;
    std::vector<LocalRule> out;
    for (std::size_t i = 0; i < kRulePoolCap; ++i) out.push_back(all[i * all.size() / kRulePoolCap]);
    return out;
  }
  std::vector<LocalRule> out;
  for (std::size_t i = 0; i < kRulePoolCap / 4; ++i) out.push_back(random_rule(g, a, cells, max_memory, rng));
  return out;
}

std::string describe(const Gca& t) {
  std::ostringstream out;
  out << t.target().name() << " -> " << t.source().name() << " phi " << t.phi().describe() << " memory {";
  for (std::size_t i = 0; i < t.rule().memory().size(); ++i)
    out << (i ? "," : "") << t.source().format(t.rule().memory()[i]);
  out << "} table [";
  for (std::size_t i = 0; i < t.rule().table().size(); ++i) out << (i ? "," : "") << int(t.rule().table()[i]);
  out << "]";
  return out.str();
}

std::string show(const std::vector<Symbol>& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(int(x[i]));
  return s + "]";
}

struct Suite {
  VerifyOptions opt;
  Alphabet a;
  std::vector<Group> groups;
  Report& report;

  Gca random_gca(Rng& rng) const {
    const Group& g = groups[below(rng, groups.size())];
    const Group& h = groups[below(rng, groups.size())];
    const auto homs = enumerate_homomorphisms(h, g);
    return Gca(homs[below(rng, homs.size())], random_rule(g, a, g.elements(), opt.max_memory, rng));
  }

  void groups_checks() {
    run_check(report, "groups.axioms", [&](Probe& p) {
      for (const auto& g : groups) {
        const int n = static_cast<int>(g.order());
        const int e = g.identity_index();
        for (int x = 0; x < n; ++x) {
          p.expect(g.mul(e, x) == x && g.mul(x, e) == x, [&] { return g.name() + " identity at " + g.format(el(x)); });
          p.expect(g.mul(x, g.inv(x)) == e && g.mul(g.inv(x), x) == e,
                   [&] { return g.name() + " inverse of " + g.format(el(x)); });
          for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
              p.expect(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)), [&] {
                return g.name() + " associativity at (" + g.format(el(x)) + "," + g.format(el(y)) + "," +
                       g.format(el(z)) + ")";
              });
        }
      }
    });
    run_check(report, "groups.homomorphisms", [&](Probe& p) {
      std::size_t skipped = 0;
      for (const auto& h : groups)
        for (const auto& g : groups) {
          if (power(g.order(), h.order()) > kMaxConfigurations) {
            ++skipped;
            continue;
          }
          auto brute = brute_homs(h, g);
          std::vector<std::vector<int>> lib;
          for (const auto& phi : enumerate_homomorphisms(h, g)) lib.push_back(phi.index_table());
          const bool ordered = std::is_sorted(lib.begin(), lib.end());
          std::sort(brute.begin(), brute.end());
          p.expect(ordered && lib == brute, [&] {
            return "Hom(" + h.name() + ", " + g.name() + "): " + std::to_string(lib.size()) + " enumerated, " +
                   std::to_string(brute.size()) + " by brute force" + (ordered ? "" : ", not in canonical order");
          });
        }
      p.note = std::to_string(skipped) + " pairs beyond the brute-force bound";
    });
    run_check(report, "groups.subgroups", [&](Probe& p) {
      for (const auto& g : groups) {
        auto brute = brute_subgroups(g);
        std::vector<std::uint64_t> lib, lib_normal, brute_normals;
        for (const auto& k : all_subgroups(g)) lib.push_back(mask_of(k));
        for (const auto& k : normal_subgroups(g)) lib_normal.push_back(mask_of(k));
        for (auto m : brute)
          if (brute_normal(g, m)) brute_normals.push_back(m);
        std::sort(lib.begin(), lib.end());
        std::sort(lib_normal.begin(), lib_normal.end());
        p.expect(lib == brute, [&] { return g.name() + ": subgroup lattice differs"; });
        p.expect(lib_normal == brute_normals, [&] { return g.name() + ": normal subgroups differ"; });
      }
    });
    run_check(report, "groups.full-invariance", [&](Probe& p) {
      for (const auto& g : groups) {
        const auto ends = brute_homs(g, g);
        for (const auto& k : all_subgroups(g)) {
          const auto m = mask_of(k);
          bool brute = true;
          for (const auto& f : ends)
            for (int i = 0; i < static_cast<int>(g.order()); ++i)
              if ((m >> i & 1) && !(m >> f[static_cast<std::size_t>(i)] & 1)) brute = false;
          p.expect(brute == is_fully_invariant(k), [&] { return g.name() + " K=" + k.describe(); });
        }
      }
    });
  }

  std::vector<std::vector<Symbol>> sample_configurations(const Group& g, Rng& rng) const {
    if (configuration_count(g.order(), a.size()) <= kSampleConfigurations) return all_configurations(g.order(), a.size());
    std::vector<std::vector<Symbol>> out(kSampleConfigurations, std::vector<Symbol>(g.order()));
    for (auto& x : out)
      for (auto& s : x) s = static_cast<Symbol>(below(rng, a.size()));
    return out;
  }

  void configuration_checks() {
    run_check(report, "configurations.shift-action", [&](Probe& p) {
      Rng rng(opt.seed);
      for (const auto& g : groups) {
        const int n = static_cast<int>(g.order());
        for (const auto& values : sample_configurations(g, rng)) {
          const auto x = Configuration::dense(g, a, values);
          for (int u = 0; u < n; ++u) {
            const auto ux = shift(el(u), x);
            bool pointwise = true;
            for (int k = 0; k < n; ++k)
              pointwise = pointwise && ux.at(k) == values[static_cast<std::size_t>(g.mul(g.inv(u), k))];
            p.expect(pointwise, [&] { return g.name() + " shift by " + g.format(el(u)) + " of " + show(values); });
            for (int v = 0; v < n; ++v)
              p.expect(shift(el(u), shift(el(v), x)) == shift(el(g.mul(u, v)), x), [&] {
                return g.name() + " action law at " + g.format(el(u)) + "," + g.format(el(v)) + " on " + show(values);
              });
          }
        }
      }
    });
    run_check(report, "configurations.text-roundtrip", [&](Probe& p) {
      Rng rng(opt.seed + 1);
      for (const auto& g : groups)
        for (const auto& values : sample_configurations(g, rng)) {
          const auto x = Configuration::dense(g, a, values);
          const auto text = format_configuration(x);
          p.expect(parse_configuration(text, g, a) == x, [&] { return g.name() + " " + text; });
        }
      for (std::size_t rank = 1; rank <= 2; ++rank) {
        const Group z = Group::free_abelian(rank);
        for (std::size_t i = 0; i < 64; ++i) {
          std::map<Point, Symbol> support;
          const Symbol fallback = static_cast<Symbol>(below(rng, a.size()));
          for (std::size_t c = 0; c < 4; ++c) {
            Point pt(rank);
            for (auto& v : pt) v = static_cast<std::int64_t>(below(rng, 7)) - 3;
            const Symbol s = static_cast<Symbol>(below(rng, a.size()));
            if (s != fallback) support[pt] = s;
          }
          const auto x = Configuration::finite_support(z, a, fallback, support);
          const auto text = format_configuration(x);
          p.expect(parse_configuration(text, z, a) == x, [&] { return z.name() + " " + text; });
        }
      }
    });
  }

  void core_checks() {
    std::vector<std::pair<Gca, Gca>> pairs;
    {
      Rng rng(opt.seed + 2);
      while (pairs.size() < kRandomInstances) {
        Gca first = random_gca(rng);
        const Group& k = groups[below(rng, groups.size())];
        const auto psis = enumerate_homomorphisms(k, first.target());
        Gca second(psis[below(rng, psis.size())],
                   random_rule(first.target(), a, first.target().elements(), opt.max_memory, rng));
        pairs.emplace_back(std::move(first), std::move(second));
      }
    }
    run_check(report, "core.apply", [&](Probe& p) {
      for (const auto& [t, unused] : pairs) {
        for (const auto& x : all_configurations(t.source().order(), a.size())) {
          const auto cx = Configuration::dense(t.source(), a, x);
          const auto expected = naive_apply(t, x);
          p.expect(apply(t, cx).values() == expected, [&] { return describe(t) + " on " + show(x); });
          bool reference = true;
          for (int h = 0; h < static_cast<int>(t.target().order()); ++h)
            reference = reference && reference_evaluate(t, cx, el(h)) == expected[static_cast<std::size_t>(h)];
          p.expect(reference, [&] { return "reference evaluation of " + describe(t) + " on " + show(x); });
        }
      }
    });
    run_check(report, "core.compose", [&](Probe& p) {
      for (const auto& [first, second] : pairs) {
        const Gca c = compose(first, second);
        bool ok = c.phi() == compose(first.phi(), second.phi());
        for (const auto& x : all_configurations(first.source().order(), a.size()))
          ok = ok && naive_apply(c, x) == naive_apply(second, naive_apply(first, x));
        p.expect(ok, [&] { return describe(second) + " after " + describe(first); });
      }
    });
    run_check(report, "core.factorize", [&](Probe& p) {
      for (const auto& [t, unused] : pairs) {
        const auto f = factorize(t);
        const Gca back = pullback(f.phi, a);
        bool ok = f.tau.phi().is_identity() && f.tau.rule() == t.rule() && f.phi == t.phi();
        for (const auto& x : all_configurations(t.source().order(), a.size()))
          ok = ok && naive_apply(back, naive_apply(f.tau, x)) == naive_apply(t, x);
        p.expect(ok, [&] { return describe(t); });
      }
    });
    run_check(report, "core.minimal-memory", [&](Probe& p) {
      for (const auto& [first, second] : pairs) {
        p.expect(sorted(minimal_memory_set(first)) == brute_minimal_memory(first.rule()), [&] { return describe(first); });
        const Gca c = compose(first, second);
        p.expect(sorted(minimal_memory_set(c)) == brute_minimal_memory(c.rule()), [&] { return describe(c); });
        const Gca m = minimized(c);
        p.expect(naive_images(m) == naive_images(c), [&] { return "minimized " + describe(c); });
      }
    });
    run_check(report, "core.injectivity", [&](Probe& p) {
      for (const auto& [t, unused] : pairs) {
        const auto images = naive_images(t);
        const auto r = injectivity_surjectivity(t);
        p.expect(r.injective == images_injective(images) &&
                     r.surjective == images_surjective(images, t.target().order(), a.size()),
                 [&] { return describe(t); });
      }
    });
    run_check(report, "core.same-map", [&](Probe& p) {
      Rng rng(opt.seed + 3);
      for (const auto& [t, unused] : pairs) {
        const auto homs = enumerate_homomorphisms(t.target(), t.source());
        const auto images = naive_images(t);
        for (std::size_t i = 0; i < 4; ++i) {
          const Gca u(homs[below(rng, homs.size())],
                      i == 0 ? t.rule() : random_rule(t.source(), a, t.source().elements(), opt.max_memory, rng));
          p.expect(same_map(t, u) == (naive_images(u) == images), [&] { return describe(t) + " vs " + describe(u); });
        }
        p.expect(same_map(t, minimized(t)), [&] { return describe(t) + " vs its minimization"; });
      }
    });
  }

  void pullback_checks() {
    std::vector<std::vector<Homomorphism>> homs(groups.size() * groups.size());
    std::vector<std::vector<Images>> images(groups.size() * groups.size());
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (std::size_t j = 0; j < groups.size(); ++j) {
        homs[i * groups.size() + j] = enumerate_homomorphisms(groups[i], groups[j]);
        for (const auto& phi : homs[i * groups.size() + j])
          images[i * groups.size() + j].push_back(naive_images(pullback(phi, a)));
      }
    const auto each = [&](const std::function<void(std::size_t, std::size_t)>& body) {
      for (std::size_t i = 0; i < groups.size(); ++i)
        for (std::size_t j = 0; j < groups.size(); ++j) body(i, j);
    };
    const auto name = [&](const Homomorphism& phi) {
      return phi.describe() + " : " + phi.domain().name() + " -> " + phi.codomain().name();
    };
    run_check(report, "pullback.equality", [&](Probe& p) {
      each([&](std::size_t i, std::size_t j) {
        const auto& hs = homs[i * groups.size() + j];
        const auto& im = images[i * groups.size() + j];
        for (std::size_t u = 0; u < hs.size(); ++u)
          for (std::size_t v = 0; v < hs.size(); ++v)
            p.expect((im[u] == im[v]) == (hs[u] == hs[v]), [&] { return name(hs[u]) + " vs " + hs[v].describe(); });
      });
    });
    run_check(report, "pullback.injectivity", [&](Probe& p) {
      each([&](std::size_t i, std::size_t j) {
        const auto& hs = homs[i * groups.size() + j];
        for (std::size_t u = 0; u < hs.size(); ++u)
          p.expect(hs[u].is_surjective() == images_injective(images[i * groups.size() + j][u]),
                   [&] { return name(hs[u]); });
      });
    });
    run_check(report, "pullback.surjectivity", [&](Probe& p) {
      each([&](std::size_t i, std::size_t j) {
        const auto& hs = homs[i * groups.size() + j];
        for (std::size_t u = 0; u < hs.size(); ++u)
          p.expect(hs[u].is_injective() ==
                       images_surjective(images[i * groups.size() + j][u], groups[i].order(), a.size()),
                   [&] { return name(hs[u]); });
      });
    });
    run_check(report, "pullback.contravariance", [&](Probe& p) {
      // (phi o psi)^* = psi^* o phi^* with psi : K -> H and phi : H -> G.
      for (std::size_t kk = 0; kk < groups.size(); ++kk)
        each([&](std::size_t hh, std::size_t gg) {
          const auto& phis = homs[hh * groups.size() + gg];
          const auto& psis = homs[kk * groups.size() + hh];
          for (const auto& psi : psis)
            for (std::size_t u = 0; u < phis.size(); ++u) {
              const auto lhs = naive_images(pullback(compose(phis[u], psi), a));
              Images rhs;
              const Gca back(pullback(psi, a));
              for (const auto& y : images[hh * groups.size() + gg][u]) rhs.push_back(naive_apply(back, y));
              p.expect(lhs == rhs, [&] { return name(phis[u]) + " after " + name(psi); });
            }
        });
    });
  }

  void equivariance_checks() {
    Rng rng(opt.seed + 4);
    struct Instance {
      Gca t;
      std::vector<Homomorphism> ends;
    };
    std::vector<Instance> instances;
    for (const auto& g : groups) {
      const auto ends = enumerate_endomorphisms(g);
      for (std::size_t i = 0; i < 12; ++i)
        instances.push_back({Gca(ends[below(rng, ends.size())], random_rule(g, a, g.elements(), opt.max_memory, rng)), ends});
    }
    run_check(report, "equivariance.decision", [&](Probe& p) {
      for (const auto& [t, ends] : instances) {
        const auto images = naive_images(t);
        for (const auto& psi : ends) {
          const auto v = decide_equivariance(t, psi);
          const bool brute = naive_images(Gca(psi, t.rule())) == images;
          bool ok = v.equivariant == brute;
          if (!v.equivariant) {
            ok = ok && v.witness && v.reverified;
            if (v.witness) {
              const auto x = v.witness->x.values();
              const int h = static_cast<int>(v.witness->h.as_index());
              const Symbol a_phi = naive_apply(t, x)[static_cast<std::size_t>(h)];
              const Symbol a_psi = naive_apply(Gca(psi, t.rule()), x)[static_cast<std::size_t>(h)];
              ok = ok && a_phi == v.witness->value_phi && a_psi == v.witness->value_psi && a_phi != a_psi;
            }
          }
          p.expect(ok, [&] { return describe(t) + " against psi " + psi.describe(); });
        }
      }
    });
    run_check(report, "equivariance.uhp-scan", [&](Probe& p) {
      for (const auto& [t, ends] : instances) {
        const auto images = naive_images(t);
        std::vector<Homomorphism> brute;
        for (const auto& psi : ends)
          if (naive_images(Gca(psi, t.rule())) == images) brute.push_back(psi);
        p.expect(uhp_scan(t) == brute, [&] { return describe(t); });
      }
    });
    run_check(report, "equivariance.witness-z", [&](Probe& p) {
      const Group z = Group::free_abelian(1);
      const std::vector<std::vector<Element>> memories = {{Element::point({0}), Element::point({1})},
                                                          {Element::point({-1}), Element::point({1})}};
      for (const auto& memory : memories)
        for (std::int64_t s = -2; s <= 2; ++s)
          for (std::int64_t r = -2; r <= 2; ++r) {
            if (s == r) continue;
            const auto phi = Homomorphism::from_matrix(z, z, IntMatrix::from_rows({{s}}));
            const auto psi = Homomorphism::from_matrix(z, z, IntMatrix::from_rows({{r}}));
            const std::size_t patterns = configuration_count(memory.size(), a.size());
            std::vector<Symbol> table(patterns, 0);
            do {
              const LocalRule mu(z, a, memory, table);
              if (mu.is_constant()) continue;
              const auto v = decide_equivariance(Gca(phi, mu), psi);
              const auto label = [&] {
                return "slopes " + std::to_string(s) + "," + std::to_string(r) + " table " + show(table);
              };
              if (v.equivariant || !v.witness) {
                p.expect(false, label);
                continue;
              }
              const std::int64_t h = v.witness->h.coords()[0];
              const auto value = [&](std::int64_t slope) {
                std::vector<Symbol> digits;
                for (const auto& m : memory) digits.push_back(evaluate(v.witness->x, Element::point({slope * h + m.coords()[0]})));
                return mu(std::span<const Symbol>(digits));
              };
              p.expect(v.reverified && value(s) != value(r), label);
            } while (next_configuration(table, a.size()));
          }
    });
    run_check(report, "equivariance.symmetric-counterexample", [&](Probe& p) {
      for (std::size_t n = 1; n <= opt.max_order; ++n) {
        const Group g = build_cyclic(n);
        const auto ends = enumerate_endomorphisms(g);
        for (const auto& phi : ends)
          for (const auto& psi : ends) {
            if (phi == psi) continue;
            const auto r = symmetric_counterexample(phi, psi, a);
            bool ok = r.exists && r.tau && r.verified && !r.tau->rule().is_constant();
            if (ok) ok = naive_images(Gca(phi, r.tau->rule())) == naive_images(Gca(psi, r.tau->rule()));
            p.expect(ok, [&] { return g.name() + " " + phi.describe() + " vs " + psi.describe(); });
          }
      }
    });
    run_check(report, "equivariance.characteristic-certificate", [&](Probe& p) {
      std::size_t certified = 0;
      for (const auto& g : groups) {
        const auto ends = enumerate_endomorphisms(g);
        const Homomorphism id = Homomorphism::identity(g);
        for (std::size_t i = 0; i < 12; ++i) {
          const Gca tau(id, random_rule(g, a, g.elements(), opt.max_memory, rng));
          const auto cert = characteristic_uhp_certificate(tau);
          if (!cert) continue;
          ++certified;
          const auto x = cert->preimage.values();
          const auto y = naive_apply(tau, x);
          std::size_t hits = 0;
          for (auto s : y) hits += s == cert->a;
          const bool shape = y == cert->image.values() && hits == 1 &&
                             y[cert->g.as_index()] == cert->a;
          p.expect(shape, [&] { return "certificate for " + describe(tau); });
          for (const auto& phi : ends) {
            const auto images = naive_images(Gca(phi, tau.rule()));
            std::size_t matches = 0;
            for (const auto& psi : ends) matches += naive_images(Gca(psi, tau.rule())) == images;
            p.expect(matches == 1, [&] { return "unique homomorphism fails for " + describe(Gca(phi, tau.rule())); });
          }
        }
      }
      p.note = std::to_string(certified) + " certificates";
    });
  }

  void structure_checks() {
    Rng rng(opt.seed + 5);
    run_check(report, "structure.fix-invariance", [&](Probe& p) {
      for (const auto& g : groups) {
        const auto pool = rule_pool(g, a, g.elements(), opt.max_memory, rng);
        for (const auto& phi : enumerate_endomorphisms(g))
          for (const auto& k : all_subgroups(g)) {
            if (!is_invariant_under(k, phi)) continue;
            for (std::size_t i = 0; i < 8 && i < pool.size(); ++i) {
              const Gca t(phi, pool[below(rng, pool.size())]);
              bool brute = true;
              for (const auto& x : all_configurations(g.order(), a.size())) {
                const auto fixed = [&](const std::vector<Symbol>& y) {
                  for (int kk : k.indices())
                    for (int u = 0; u < static_cast<int>(g.order()); ++u)
                      if (y[static_cast<std::size_t>(g.mul(kk, u))] != y[static_cast<std::size_t>(u)]) return false;
                  return true;
                };
                if (fixed(x) && !fixed(naive_apply(t, x))) brute = false;
              }
              p.expect(brute && invariance_check(t, k), [&] { return describe(t) + " K=" + k.describe(); });
            }
          }
      }
    });
    run_check(report, "structure.quotient-diagram", [&](Probe& p) {
      for (const auto& g : groups) {
        const auto pool = rule_pool(g, a, g.elements(), opt.max_memory, rng);
        const auto ends = enumerate_endomorphisms(g);
        for (const auto& n : normal_subgroups(g)) {
          const auto q = quotient_group(g, n);
          for (const auto& phi : ends) {
            if (!is_invariant_under(n, phi)) continue;
            for (const auto& rule : pool) {
              const Gca t(phi, rule);
              const auto pkg = quotient_gca(t, n, q);
              bool ok = pkg.diagram_verified;
              for (const auto& y : all_configurations(q.group.order(), a.size())) {
                std::vector<Symbol> lifted(g.order()), out(g.order());
                const auto hy = naive_apply(pkg.quotient_gca, y);
                for (int u = 0; u < static_cast<int>(g.order()); ++u) {
                  lifted[static_cast<std::size_t>(u)] = y[static_cast<std::size_t>(q.projection(u))];
                  out[static_cast<std::size_t>(u)] = hy[static_cast<std::size_t>(q.projection(u))];
                }
                ok = ok && naive_apply(t, lifted) == out;
              }
              p.expect(ok, [&] { return describe(t) + " N=" + n.describe(); });
            }
          }
        }
      }
    });
    run_check(report, "structure.quotient-monoid", [&](Probe& p) {
      for (const auto& g : groups) {
        const auto pool = rule_pool(g, a, g.elements(), opt.max_memory, rng);
        const auto ends = enumerate_endomorphisms(g);
        for (const auto& n : normal_subgroups(g)) {
          if (!is_fully_invariant(n)) continue;
          std::vector<Gca> sample;
          for (std::size_t i = 0; i < 6; ++i)
            sample.emplace_back(ends[below(rng, ends.size())], pool[below(rng, pool.size())]);
          p.expect(quotient_functoriality_check(g, n, sample), [&] { return g.name() + " N=" + n.describe(); });
          for (std::size_t i = 0; i + 1 < sample.size(); ++i) {
            const auto hat_c = quotient_gca(compose(sample[i], sample[i + 1]), n).quotient_gca;
            const auto hat_a = quotient_gca(sample[i], n).quotient_gca;
            const auto hat_b = quotient_gca(sample[i + 1], n).quotient_gca;
            bool ok = true;
            for (const auto& y : all_configurations(hat_c.source().order(), a.size()))
              ok = ok && naive_apply(hat_c, y) == naive_apply(hat_b, naive_apply(hat_a, y));
            p.expect(ok, [&] { return "hat of " + describe(sample[i + 1]) + " after " + describe(sample[i]); });
          }
        }
      }
    });
    run_check(report, "structure.restriction-transfer", [&](Probe& p) {
      for (const auto& h : groups)
        for (const auto& g : groups)
          for (const auto& phi : enumerate_homomorphisms(h, g))
            for (const auto& k : all_subgroups(h)) {
              const Subgroup img = image(phi, k);
              for (const auto& rule : rule_pool(g, a, img.elements(), opt.max_memory, rng)) {
                const Gca t(phi, rule);
                const auto pkg = restrict(t, k);
                const auto whole = naive_images(t);
                const auto part = naive_images(pkg.restricted);
                const bool inj = images_injective(whole);
                const bool bij = inj && images_surjective(whole, h.order(), a.size());
                const bool rinj = images_injective(part);
                const bool rbij = rinj && images_surjective(part, k.order(), a.size());
                const bool onto = phi.is_surjective(), into = phi.is_injective();
                bool diagram = pkg.diagram_verified;
                const auto xs = all_configurations(g.order(), a.size());
                for (std::size_t i = 0; i < xs.size() && diagram; ++i) {
                  std::vector<Symbol> xr;
                  for (int c : img.indices()) xr.push_back(xs[i][static_cast<std::size_t>(c)]);
                  const auto yr = naive_apply(pkg.restricted, xr);
                  for (std::size_t j = 0; j < yr.size(); ++j)
                    diagram = diagram && yr[j] == whole[i][static_cast<std::size_t>(k.indices()[j])];
                }
                const auto r = transfer_theorem_check(t, k);
                const bool agree = r.injective == inj && r.restricted_injective == rinj;
                p.expect(diagram && agree && inj == (rinj && onto) && bij == (rbij && onto && into),
                         [&] { return describe(t) + " K=" + k.describe(); });
              }
            }
    });
    run_check(report, "structure.induction-roundtrip", [&](Probe& p) {
      for (const auto& h : groups)
        for (const auto& g : groups)
          for (const auto& phi : enumerate_homomorphisms(h, g))
            for (const auto& k : all_subgroups(h)) {
              const Subgroup img = image(phi, k);
              const auto pool = rule_pool(g, a, img.elements(), opt.max_memory, rng);
              for (std::size_t i = 0; i < 4 && i < pool.size(); ++i) {
                const Gca t(phi, pool[below(rng, pool.size())]);
                const auto s = restrict(t, k).restricted;
                const Gca up = induce(s, k, phi);
                const auto down = restrict(up, k).restricted;
                p.expect(naive_images(up) == naive_images(t) && naive_images(down) == naive_images(s),
                         [&] { return describe(t) + " K=" + k.describe(); });
              }
            }
    });
    run_check(report, "structure.restriction-chain", [&](Probe& p) {
      std::vector<Group> chain;
      for (const auto& g : groups)
        if (g.order() <= kChainMaxOrder) chain.push_back(g);
      for (const auto& h : chain)
        for (const auto& r : chain)
          for (const auto& g : chain)
            for (const auto& phi : enumerate_homomorphisms(h, r))
              for (const auto& psi : enumerate_homomorphisms(r, g))
                for (const auto& k : all_subgroups(h)) {
                  const Subgroup mid = image(phi, k);
                  const Subgroup bottom = image(psi, mid);
                  const auto outer = rule_pool(r, a, mid.elements(), opt.max_memory, rng);
                  const auto inner = rule_pool(g, a, bottom.elements(), opt.max_memory, rng);
                  for (std::size_t i = 0; i < 6; ++i) {
                    const Gca first(psi, inner[below(rng, inner.size())]);
                    const Gca second(phi, outer[below(rng, outer.size())]);
                    p.expect(restriction_composition_check(first, second, k),
                             [&] { return describe(second) + " after " + describe(first) + " K=" + k.describe(); });
                  }
                }
    });
    run_check(report, "structure.submonoid", [&](Probe& p) {
      std::size_t compositions = 0;
      for (const auto& g : groups)
        for (const auto& k : all_subgroups(g)) {
          const auto r = gca_submonoid_check(g, k, opt.max_memory, a);
          compositions += r.compositions;
          p.expect(r.agree(), [&] {
            return g.name() + " K=" + k.describe() + ": fully invariant " + (r.fully_invariant ? "yes" : "no") +
                   ", closed " + (r.closed ? "yes" : "no") + (r.escape ? "; " + *r.escape : "");
          });
        }
      p.note = std::to_string(compositions) + " compositions";
    });
  }
};

}  // namespace

void run_verify(const VerifyOptions& options, Report& report) {
  require(options.q >= 2, ErrorKind::InvalidArgument, "verify needs q >= 2");
  require(options.max_order >= 1, ErrorKind::InvalidArgument, "verify needs max order >= 1");
  auto groups = small_groups(options.max_order);
  require(configuration_count(options.max_order, options.q) <= kMaxConfigurations, ErrorKind::BudgetExceeded,
          "q^max-order exceeds the exhaustive budget of 65536 configurations");
  nlohmann::ordered_json names = nlohmann::ordered_json::array();
  for (const auto& g : groups) names.push_back(g.name());
  report.fact("max_order", options.max_order);
  report.fact("q", options.q);
  report.fact("max_memory", options.max_memory);
  report.fact("seed", options.seed);
  report.fact("groups", names);
  Suite suite{options, Alphabet(options.q), std::move(groups), report};
  suite.groups_checks();
  suite.configuration_checks();
  suite.core_checks();
  suite.pullback_checks();
  suite.equivariance_checks();
  suite.structure_checks();
  std::size_t passed = 0;
  for (const auto& c : report.checks()) passed += c.status == CheckStatus::Pass;
  report.fact("checks", report.checks().size());
  report.fact("passed", passed);
}

}  // namespace gca
