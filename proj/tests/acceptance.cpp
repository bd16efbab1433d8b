// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include "oracles.hpp"
#include "syncon/congruence.hpp"
#include "syncon/languages.hpp"
#include "syncon/profinite.hpp"
#include "syncon/samples.hpp"
#include "syncon/syntactic.hpp"

using namespace syncon;

namespace {

  struct Verdict {
    bool        ok;
    std::string detail;
  };

  std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
  }

  bool run(int number, double limit_seconds, std::function<Verdict()> const& body) {
    auto    start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = body();
    } catch (std::exception const& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = fmt_seconds(elapsed);
    if (limit_seconds > 0) {
      timing += " (limit " + fmt_seconds(limit_seconds) + ")";
      if (elapsed >= limit_seconds) {
        v.ok = false;
      }
    }
    std::printf("AC%d %s %s; %s\n", number, v.ok ? "PASS" : "FAIL", v.detail.c_str(),
                timing.c_str());
    std::fflush(stdout);
    return v.ok;
  }

  Partition pull_back(std::vector<Element> const& pi, Partition const& p) {
    std::vector<std::size_t> labels;
    for (auto x : pi) {
      labels.push_back(p.class_of(x));
    }
    return Partition::from_labels(std::span<std::size_t const>(labels));
  }

  Subset preimage(std::vector<Element> const& pi, Subset const& s) {
    std::vector<Element> members;
    for (Element x = 0; x < pi.size(); ++x) {
      if (s.contains(pi[x])) {
        members.push_back(x);
      }
    }
    return Subset(pi.size(), members);
  }

  // Random surjective homomorphisms shared by the second and third criteria.
  std::vector<Homomorphism> homomorphism_sample() {
    Rng                       rng(2024);
    std::vector<Homomorphism> out;
    for (int i = 0; i < 120; ++i) {
      auto a = random_binary_algebra(rng, 1 + uniform_index(rng, 4));
      out.push_back(random_surjective_homomorphism(rng, a));
    }
    return out;
  }

  Verdict lattice_oracle() {
    Rng         rng(1);
    std::size_t algebras = 0, subsets = 0, mismatches = 0;
    for (int i = 0; i < 200; ++i) {
      auto a = random_binary_algebra(rng, 1 + static_cast<std::size_t>(i % 4));
      auto m = translation_monoid(a);
      ++algebras;
      for (auto const& L : all_subsets(a.size())) {
        ++subsets;
        auto refinement = largest_congruence_saturating(a, L).partition();
        auto by_monoid  = syntactic_partition_by_monoid(a, m, L);
        auto maximum    = oracle::maximum_saturating(a, L);
        auto definition = oracle::syntactic_by_definition(a, L);
        if (!maximum || refinement != *maximum || by_monoid != *maximum
            || definition != *maximum) {
          ++mismatches;
        }
      }
    }
    return {algebras >= 200 && mismatches == 0,
            std::to_string(algebras) + " algebras, " + std::to_string(subsets) + " subsets, "
                + std::to_string(mismatches) + " mismatches"};
  }

  Verdict pullbacks(std::vector<Homomorphism> const& sample) {
    std::size_t cases = 0, failures = 0;
    for (auto const& phi : sample) {
      auto const& b = phi.target();
      for (auto const& L : all_subsets(b.size())) {
        ++cases;
        auto report  = pullback_syntactic_check(phi, L);
        auto sigma_b = *oracle::maximum_saturating(b, L);
        auto sigma_a = *oracle::maximum_saturating(phi.source(), phi.preimage(L));
        bool ok      = pull_back(phi.image(), sigma_b) == sigma_a
                  && report.pulled_back == sigma_a && report.source_syntactic == sigma_a;
        auto qa = syntactic_congruence(phi.source(), phi.preimage(L)).quotient;
        auto qb = syntactic_congruence(b, L).quotient;
        std::vector<bool> hit(qb.size(), false);
        for (auto x : report.induced_map) {
          hit[x] = true;
        }
        ok = ok && report.induced_map.size() == qb.size()
             && std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })
             && !homomorphism_failure(qa, qb, report.induced_map);
        failures += !ok;
      }
    }
    return {sample.size() >= 100 && failures == 0,
            std::to_string(sample.size()) + " homomorphisms, " + std::to_string(cases)
                + " subsets, " + std::to_string(failures) + " failures"};
  }

  Verdict lifted_sets(std::vector<Homomorphism> const& sample) {
    std::size_t cases = 0, failures = 0, largest = 0;
    for (auto const& phi : sample) {
      auto const& a = phi.source();
      auto        m = translation_monoid(a);
      for (auto const& L : all_subsets(a.size())) {
        ++cases;
        auto f  = determining_set_from_quotient(a, L);
        bool ok = std::all_of(f.functions.begin(), f.functions.end(),
                              [&](Transformation const& g) { return m.contains(g); });
        ok      = ok && is_S_determined(a, L, f).determined;
        auto index = oracle::maximum_saturating(a, L)->num_classes();
        // 2^|F| exceeds any carrier here once |F| reaches the word size.
        ok = ok && (f.functions.size() >= 64 || index <= (std::size_t{1} << f.functions.size()));
        largest    = std::max(largest, f.functions.size());
        failures += !ok;
      }
    }
    return {failures == 0, std::to_string(cases) + " subsets, largest |F| "
                               + std::to_string(largest) + ", " + std::to_string(failures)
                               + " failures"};
  }

  Verdict linearization() {
    Rng         rng(3);
    Signature   sig({{"*", 2}, {"f", 1}, {"g", 3}});
    std::size_t tuples = 0, failures = 0;
    while (tuples < 600) {
      auto a = random_algebra(rng, 1 + uniform_index(rng, 4), sig);
      auto t = random_term(rng, sig, {"x1", "x2", "x3"}, 1 + uniform_index(rng, 4));
      auto r = count_occurrences(t, "x1");
      if (r < 1 || r > 3) {
        continue;
      }
      auto lin = linearize(t, "x1");
      bool ok  = lin.terms.size() == r;
      for (auto const& s : lin.terms) {
        ok = ok && is_linear_in(s, lin.x);
      }
      auto pick = [&] { return static_cast<Element>(uniform_index(rng, a.size())); };
      Element    x = pick(), x2 = pick(), v2 = pick(), v3 = pick();
      Assignment base{{"x2", v2}, {"x3", v3}, {lin.y, x}, {lin.z, x2}};
      auto s_at = [&](std::size_t i, Element value) {
        auto w   = base;
        w[lin.x] = value;
        return eval_term(a, lin.terms[i], w);
      };
      auto t_at = [&](Element value) {
        return eval_term(a, t, Assignment{{"x1", value}, {"x2", v2}, {"x3", v3}});
      };
      ok = ok && s_at(0, x2) == t_at(x2) && s_at(r - 1, x) == t_at(x);
      for (std::size_t i = 0; i + 1 < r; ++i) {
        ok = ok && s_at(i, x) == s_at(i + 1, x2);
      }
      ++tuples;
      failures += !ok;
    }
    return {failures == 0, std::to_string(tuples) + " tuples, " + std::to_string(failures)
                               + " failures"};
  }

  Verdict constant_algebras() {
    std::size_t cases = 0, mismatches = 0;
    for (std::size_t n = 2; n <= 6; ++n) {
      for (Element c = 0; c < n; ++c) {
        auto a = constant_binary(n, c);
        for (auto const& L : all_subsets(n)) {
          ++cases;
          mismatches +=
              syntactic_congruence(a, L).congruence.partition() != Partition::of_subset(L);
        }
      }
    }
    return {mismatches == 0, std::to_string(cases) + " (algebra, subset) pairs, "
                                 + std::to_string(mismatches) + " mismatches"};
  }

  Verdict sparse() {
    auto r   = sparse_separation(64, 4096);
    bool ok  = r.pairs == 2080 && r.separated == 2080 && r.determining_lower_bound == 7;
    for (auto const& w : r.witnesses) {
      ok = ok
           && in_sparse_set(SparseSet::powers_of_two, w.m + w.x)
                  != in_sparse_set(SparseSet::powers_of_two, w.n + w.x);
    }
    return {ok, std::to_string(r.separated) + "/" + std::to_string(r.pairs)
                    + " pairs separated, |F| >= " + std::to_string(r.determining_lower_bound)};
  }

  Verdict max_plus() {
    auto             r = max_plus_witnesses(20);
    TruncatedMaxPlus model(20);
    bool             formula = true;
    for (std::uint64_t i = 0; i <= 20; ++i) {
      for (std::uint64_t j = 0; i + j <= 20; ++j) {
        MaxPlusElement u{i + j, ExtendedNat::finite(i)};
        auto           p = model.multiply(u, {i, ExtendedNat::finite(j)});
        formula = formula && p && *p == MaxPlusElement{i + j, ExtendedNat::finite(i + j)};
        for (std::uint64_t k = 0; k <= 20; ++k) {
          auto q  = model.multiply(u, {k, ExtendedNat::infinity()});
          formula = formula && q
                    && *q == MaxPlusElement{std::max(i + j, k), ExtendedNat::infinity()};
        }
      }
    }
    bool ok = formula && r.mixed_separated == r.mixed_pairs && r.mixed_pairs == 4851
              && r.infinite_separated == 0 && r.infinite_pairs == 210;
    return {ok, "mixed " + std::to_string(r.mixed_separated) + "/"
                    + std::to_string(r.mixed_pairs) + " separated, A x {inf} "
                    + std::to_string(r.infinite_separated) + "/"
                    + std::to_string(r.infinite_pairs) + " separated over "
                    + std::to_string(r.contexts) + " contexts"};
  }

  Verdict ab_star() {
    auto d = parse_dfa("dfa ab_star\nalphabet a b\nstates 3\ninitial 0\naccepting 0\n"
                       "1 2\n2 0\n2 2\n");
    auto m        = syntactic_monoid(d);
    auto by_words = oracle::word_monoid_size(minimal_dfa(d), 50);
    auto sigma    = syntactic_congruence(m.algebra, m.accepted).congruence.partition();
    auto terms    = is_term_determined(m.algebra, m.accepted, semigroup_term_set("*"), "x1");
    bool ok       = m.algebra.size() == 6 && by_words == 6
              && sigma == Partition::discrete(6) && terms.determined;
    return {ok, "size " + std::to_string(m.algebra.size()) + " (oracle "
                    + std::to_string(by_words) + "), equality " + (sigma == Partition::discrete(6) ? "yes" : "no")
                    + ", four terms determine " + (terms.determined ? "yes" : "no")};
  }

  Verdict omega() {
    Rng         rng(9);
    std::size_t tables = 0, elements = 0, failures = 0;
    for (int i = 0; i < 60; ++i) {
      auto s = random_semigroup(rng, 5);
      if (!is_associative(s, 0)) {
        ++failures;
        continue;
      }
      ++tables;
      for (Element a = 0; a < s.size(); ++a) {
        ++elements;
        auto w  = omega_power(s, a, std::nullopt);
        bool ok = oracle::idempotent_powers(s, a) == std::set<Element>{w};
        for (std::uint64_t n = s.size(); n <= s.size() + 3; ++n) {
          auto p = omega_power(s, a, n);
          ok     = ok && p == w && p == oracle::power(s, a, oracle::factorial(n));
        }
        failures += !ok;
      }
    }
    return {tables >= 50 && failures == 0,
            std::to_string(tables) + " tables, " + std::to_string(elements) + " elements, "
                + std::to_string(failures) + " failures"};
  }

  Verdict tower() {
    auto sys = parse_system(
        "system cyclic2\ndepth 3\n"
        "algebra Z2\ncarrier 2\nop + 2\n0 1 1 0\n"
        "algebra Z4\ncarrier 4\nop + 2\n0 1 2 3 1 2 3 0 2 3 0 1 3 0 1 2\n"
        "algebra Z8\ncarrier 8\nop + 2\n"
        "0 1 2 3 4 5 6 7 1 2 3 4 5 6 7 0 2 3 4 5 6 7 0 1 3 4 5 6 7 0 1 2\n"
        "4 5 6 7 0 1 2 3 5 6 7 0 1 2 3 4 6 7 0 1 2 3 4 5 7 0 1 2 3 4 5 6\n"
        "map 2 1\n0 1 0 1\nmap 3 2\n0 1 2 3 0 1 2 3\n");
    if (!validate_system(sys).valid) {
      return {false, "the tower does not validate"};
    }
    std::size_t cylinders = 0, failures = 0;
    for (std::size_t k = 1; k <= 3; ++k) {
      for (auto const& s : all_subsets(sys.level(k).size())) {
        ++cylinders;
        CylinderSet c{k, s};
        auto        r     = recognize_clopen(sys, c);
        auto        sigma = *oracle::maximum_saturating(sys.level(k), s);
        bool        ok    = r.target.size() == sigma.num_classes();
        for (std::size_t m = k; m <= 3; ++m) {
          auto pi = sys.composite(m, k);
          ok      = ok && preimage(r.maps[m - k], r.image) == preimage(pi, s);
          ok      = ok && cylinder_syntactic(sys, c, m).partition() == pull_back(pi, sigma);
        }
        failures += !ok;
      }
    }
    std::size_t quotients = 0;
    for (std::size_t k = 1; k <= 3; ++k) {
      for (auto const& s : all_subsets(sys.level(k).size())) {
        std::vector<Congruence> thetas;
        for (std::size_t m = 1; m <= 3; ++m) {
          thetas.push_back(m < k ? universal_congruence(sys.level(m))
                                 : cylinder_syntactic(sys, CylinderSet{k, s}, m));
        }
        auto q  = quotient_system(sys, thetas);
        bool ok = validate_system(q).valid;
        for (std::size_t m = 1; m < 3; ++m) {
          auto const& conn = sys.connecting(m);
          for (Element x = 0; x < conn.size(); ++x) {
            auto upper = thetas[m].partition().class_of(x);
            auto lower = thetas[m - 1].partition().class_of(conn[x]);
            ok         = ok && q.connecting(m)[upper] == lower;
          }
        }
        ++quotients;
        failures += !ok;
      }
    }
    return {failures == 0, std::to_string(cylinders) + " cylinders, " + std::to_string(quotients)
                               + " quotient systems, " + std::to_string(failures) + " failures"};
  }

}  // namespace

int main() {
  auto sample = homomorphism_sample();
  bool ok     = true;
  ok &= run(1, 60, lattice_oracle);
  ok &= run(2, 30, [&] { return pullbacks(sample); });
  ok &= run(3, 0, [&] { return lifted_sets(sample); });
  ok &= run(4, 0, linearization);
  ok &= run(5, 0, constant_algebras);
  ok &= run(6, 5, sparse);
  ok &= run(7, 10, max_plus);
  ok &= run(8, 0, ab_star);
  ok &= run(9, 0, omega);
  ok &= run(10, 0, tower);
  return ok ? 0 : 1;
}
