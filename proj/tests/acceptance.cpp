//  Copyright 2026 The soberkit Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.


// Acceptance gate: one pass/fail line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "soberkit/cli.hpp"
#include "support.hpp"

namespace {

using namespace soberkit;
using testing_support::masks;
using testing_support::to_oracle;

constexpr std::uint64_t kCorpusSeed = 1;
constexpr std::size_t kRandomCount = 1000;

/// Every poset on at most five points up to isomorphism, then 1000 seeded
/// random posets on at most seven points.
const std::vector<FinPoset>& corpus() {
  static const std::vector<FinPoset> c = [] {
    std::vector<FinPoset> out = posets_up_to_iso_upto(5);
    Rng rng(kCorpusSeed);
    for (std::size_t i = 0; i < kRandomCount; ++i) out.push_back(random_poset(rng, 1 + rng.below(7)));
    return out;
  }();
  return c;
}

struct Check {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

bool all_pass(const Space& x, const std::vector<std::string>& ids, Check& out, const std::string& where) {
  for (const auto& r : verify_theorems(x, ids)) {
    if (r.verdict != Outcome::Pass) {
      out.fail(where + ": " + r.id + " is " + to_string(r.verdict) + " (" + r.detail + ") " + r.witness);
      return false;
    }
  }
  return true;
}

Check exact_ledger() {
  Check o;
  for (const auto& [name, p] : testing_support::named_instances()) {
    const auto q = to_oracle(p);
    if (masks(irreducible_closed(p)) != oracle::irreducible_closed(q)) o.fail(name + ": Irr_c differs from brute force");
    if (masks(compact_saturated(p)) != oracle::compact_saturated(q)) o.fail(name + ": K differs from brute force");
    if (open_filters_and_phi(p, true).filters.size() != oracle::open_filters(q).size())
      o.fail(name + ": OFilt differs from brute force");
  }
  if (irreducible_closed(FinPoset::lambda()).size() != 3) o.fail("|Irr_c(Lambda)| != 3");
  if (compact_saturated(FinPoset::lambda()).size() != 4) o.fail("|K(Lambda)| != 4");
  if (compact_saturated(FinPoset::chain(2)).size() != 2) o.fail("|K(2-chain)| != 2");
  if (open_filters_and_phi(FinPoset::chain(2), true).filters.size() != 2) o.fail("|OFilt(2-chain)| != 2");
  return o;
}

Check inclusion_chain() {
  Check o;
  for (const auto& p : corpus())
    if (!all_pass(Space(p), {"inclusion-chain"}, o, serialize_space(Space(p)))) break;
  o.note = o.ok ? std::to_string(corpus().size()) + " instances" : o.note;
  return o;
}

Check equivalence_suites() {
  Check o;
  const std::vector<std::string> ids = {"d-space.7cond", "sober.7cond", "sober.equational", "sober.rip",
                                        "soberequiv", "wf.equational"};
  for (const auto& p : corpus()) {
    for (const auto& r : verify_theorems(Space(p), ids)) {
      // Identical truth values, and on finite spaces all of them true.
      if (r.verdict != Outcome::Pass || r.detail.find("all true") == std::string::npos) {
        o.fail(r.id + " on " + serialize_space(Space(p)) + ": " + r.detail + " " + r.witness);
        return o;
      }
    }
  }
  o.note = std::to_string(ids.size()) + " suites on " + std::to_string(corpus().size()) + " instances";
  return o;
}

Check cofinite_vector() {
  Check o;
  const ClassificationVector v = classify(Space::cofinite());
  const std::vector<std::pair<const char*, bool>> want = {
      {"rudin_space", true}, {"wd_space", true},        {"dc_space", false}, {"well_filtered", false},
      {"sober", false},      {"locally_compact", true}, {"T1", true},        {"d_space", true}};
  for (auto [name, value] : want)
    if (v.get(name) != value) o.fail(std::string(name) + " has the wrong value");
  if (v.witnesses.at("well_filtered").rfind("CofiniteTails", 0) != 0) o.fail("well_filtered witness is not CofiniteTails");
  return o;
}

Check reflection() {
  Check o;
  std::size_t bounded = 0;
  for (const auto& p : corpus()) {
    for (const auto& r : verify_theorems(Space(p), {"reflection.eta", "reflection.iso", "reflection.universal"})) {
      if (r.verdict != Outcome::Pass) {
        o.fail(r.id + " on " + serialize_space(Space(p)) + ": " + r.detail + " " + r.witness);
        return o;
      }
      bounded += r.bounded;
    }
  }
  all_pass(Space::cofinite(), {"reflection.iso", "reflection.sober"}, o, "cofinite");
  const SymbolicReflection s = symbolic_reflection(Space::cofinite(), true);
  if (s.added_points != 1 || !s.equals_sobrification) o.fail("cofinite reflection description");
  if (o.ok) o.note = std::to_string(bounded) + " bounded uniqueness sweeps";
  return o;
}

Check power_spaces() {
  Check o;
  std::size_t n = 0;
  for (const auto& p : posets_up_to_iso_upto(4)) {
    ++n;
    const PowerSpace s = smyth(p);
    for (std::size_t i = 0; i < s.carrier.size(); ++i)
      for (std::size_t j = 0; j < s.carrier.size(); ++j)
        if (s.space.leq(i, j) != s.carrier[j].subset_of(s.carrier[i])) o.fail("Smyth order is not reverse inclusion");
    const PowerSpace h = hoare_closed(p);
    if (!oracle::is_sober(to_oracle(h.space))) o.fail("Hoare space is not sober");
    const OpenFilterReport f = open_filters_and_phi(p, true);
    if (f.filters.size() != f.k.size() || !f.order_iso) o.fail("Hofmann-Mislove correspondence fails");
    all_pass(Space(p), {"hoare.sober", "hofmann-mislove", "smyth.union"}, o, serialize_space(Space(p)));
  }
  if (o.ok) o.note = std::to_string(n) + " instances";
  return o;
}

Check rudin_triples() {
  Check o;
  Rng rng(kCorpusSeed + 6);
  std::size_t triples = 0;
  while (triples < 200) {
    const FinPoset p = random_poset(rng, 1 + rng.below(7));
    const auto k = compact_saturated(p);
    // A least member K0 plus random members above it: a filtered family.
    const Subset k0 = k[rng.below(k.size())];
    std::vector<Subset> fam{k0};
    for (Subset m : k)
      if (m != k0 && k0.subset_of(m) && rng.below(2) == 0) fam.push_back(m);
    std::vector<Subset> cs;
    for (Subset c : closed_sets(p))
      if (c.intersects(k0)) cs.push_back(c);
    const Subset c = cs[rng.below(cs.size())];
    ++triples;
    const Subset a = topological_rudin_minimize(p, fam, c);
    const auto q = to_oracle(p);
    const std::string where = serialize_space(Space(p)) + " C=" + c.str();
    if (!a.subset_of(c)) o.fail(where + ": result leaves C");
    if (!oracle::is_closed(q, a.bits())) o.fail(where + ": result not closed");
    if (!oracle::is_irreducible(q, a.bits())) o.fail(where + ": result not irreducible");
    for (Subset m : fam)
      if (!a.intersects(m)) o.fail(where + ": result misses a member");
    // No proper closed subset meets every member.
    for (oracle::Mask b : oracle::closed_sets(q)) {
      if (b == a.bits() || !oracle::sub(b, a.bits())) continue;
      bool meets = true;
      for (Subset m : fam) meets = meets && (b & m.bits()) != 0;
      if (meets) o.fail(where + ": a proper closed subset meets every member");
    }
  }
  if (o.ok) o.note = std::to_string(triples) + " triples";
  return o;
}

Check determinism() {
  Check o;
  RunConfig cfg;
  cfg.format = OutputFormat::Records;
  cfg.seed = kCorpusSeed;
  cfg.count = 40;
  cfg.max_n = 5;
  auto run = [&] {
    std::ostringstream out;
    run_command({"search", "", std::nullopt, ""}, cfg, out);
    for (const auto& p : testing_support::named_instances())
      run_command({"verify", "", Space(p.poset), p.name}, cfg, out);
    run_command({"verify", "", Space::cofinite(), "cofinite"}, cfg, out);
    return out.str();
  };
  const std::string a = run();
  const std::string b = run();
  if (a != b) o.fail("outputs differ");
  if (a.empty()) o.fail("no output");
  if (o.ok) o.note = std::to_string(a.size()) + " bytes";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {"exact example ledger", 1, exact_ledger},
      {"inclusion chain", 120, inclusion_chain},
      {"equivalence suites", 300, equivalence_suites},
      {"cofinite vector", 1, cofinite_vector},
      {"reflection", 300, reflection},
      {"power-space battery", 120, power_spaces},
      {"Rudin minimizer triples", 60, rudin_triples},
      {"determinism", 300, determinism},
  };
  corpus();  // shared setup, not charged to any criterion
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Check o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > criteria[i].budget_s) o.fail("took " + std::to_string(secs) + " s");
    failed += !o.ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].name << " (" << secs << " s, budget "
         << criteria[i].budget_s << " s)";
    if (!o.note.empty()) line << ": " << o.note;
    std::cout << line.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
