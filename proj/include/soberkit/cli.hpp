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

#ifndef SOBERKIT_CLI_HPP_
#define SOBERKIT_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "soberkit/caps.hpp"
#include "soberkit/classify.hpp"
#include "soberkit/enumerate.hpp"
#include "soberkit/error.hpp"
#include "soberkit/io.hpp"
#include "soberkit/powerspace.hpp"
#include "soberkit/reflect.hpp"
#include "soberkit/rudin.hpp"
#include "soberkit/space.hpp"
#include "soberkit/theorems.hpp"

namespace soberkit {

enum class OutputFormat { Human, Records };

struct RunConfig {
  Caps caps;
  std::uint64_t seed = 1;
  std::vector<std::string> suite;  // empty: all theorems
  OutputFormat format = OutputFormat::Human;
  std::size_t count = 10;  // search instances
  std::size_t max_n = 5;   // search carrier bound

  void validate() const {
    if (caps.carrier == 0 || caps.powerspace == 0 || caps.sets == 0 || caps.maps == 0)
      throw PreconditionError("caps must be positive");
    if (max_n == 0 || max_n > caps.carrier) throw PreconditionError("max-n must lie in 1..cap-carrier");
  }
};

struct Command {
  std::string verb;  // classify | families | powerspace | reflect | verify | search
  std::string mode;  // smyth | hoare for powerspace, sober | wf for reflect
  std::optional<Space> space;
  std::string instance;  // name used in reports, usually the file path
};

/// One result line. Human mode prints `instance key = value`; records mode
/// prints one JSON object per line with keys in a fixed order.
class Reporter {
 public:
  Reporter(std::ostream& out, OutputFormat format, std::string command)
      : out_(out), format_(format), command_(std::move(command)) {}

  void emit(const std::string& instance, const std::string& key, const nlohmann::ordered_json& value,
            const std::string& witness = {}, const nlohmann::ordered_json& extra = {}) {
    if (format_ == OutputFormat::Records) {
      nlohmann::ordered_json r;
      r["command"] = command_;
      r["instance"] = instance;
      r["key"] = key;
      r["value"] = value;
      if (!witness.empty()) r["witness"] = witness;
      if (extra.is_object())
        for (const auto& [k, v] : extra.items()) r[k] = v;
      out_ << r.dump() << '\n';
      return;
    }
    out_ << instance << ' ' << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump());
    if (extra.is_object())
      for (const auto& [k, v] : extra.items())
        out_ << "  [" << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << ']';
    if (!witness.empty()) out_ << "  witness: " << witness;
    out_ << '\n';
  }

 private:
  std::ostream& out_;
  OutputFormat format_;
  std::string command_;
};

namespace detail {

inline nlohmann::ordered_json sets_json(const std::vector<Subset>& sets) {
  auto a = nlohmann::ordered_json::array();
  for (Subset s : sets) a.push_back(s.str());
  return a;
}

inline nlohmann::ordered_json covers_json(const FinPoset& p) {
  auto a = nlohmann::ordered_json::array();
  for (auto [x, y] : p.covers()) a.push_back({x, y});
  return a;
}

inline void emit_reports(Reporter& rep, const std::string& instance, const std::vector<TheoremReport>& reports) {
  for (const auto& r : reports) {
    nlohmann::ordered_json extra;
    extra["detail"] = r.detail;
    if (r.bounded) extra["bounded"] = true;
    rep.emit(instance, r.id, to_string(r.verdict), r.witness, extra);
  }
}

inline std::size_t count_failures(const std::vector<TheoremReport>& reports) {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.verdict == Outcome::Fail;
  return n;
}

}  // namespace detail

struct SearchSummary {
  std::size_t instances = 0;
  std::size_t passes = 0;
  std::size_t not_applicable = 0;
  std::vector<std::pair<std::string, TheoremReport>> failures;  // instance name, report
};

/// Random posets on 1..max_n points, the selected suite on each. Instances
/// run in order, so equal seeds give equal summaries.
inline SearchSummary random_poset_search(const RunConfig& cfg, Reporter* rep = nullptr) {
  cfg.validate();
  SearchSummary s;
  Rng rng(cfg.seed);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    const FinPoset p = random_poset(rng, 1 + rng.below(cfg.max_n));
    const std::string name = "random#" + std::to_string(i);
    const auto reports = verify_theorems(Space(p), cfg.suite, cfg.caps);
    ++s.instances;
    for (const auto& r : reports) {
      if (r.verdict == Outcome::Pass) ++s.passes;
      if (r.verdict == Outcome::NotApplicable) ++s.not_applicable;
      if (r.verdict == Outcome::Fail) {
        s.failures.emplace_back(name, r);
        if (rep) rep->emit(name, r.id, "fail", r.witness, {{"poset", serialize_space(Space(p))}});
      }
    }
  }
  return s;
}

/// Runs one command and returns the exit status: 0 iff no theorem report
/// failed. Operational errors propagate as exceptions.
inline int run_command(const Command& cmd, const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  Reporter rep(out, cfg.format, cmd.verb + (cmd.mode.empty() ? "" : " " + cmd.mode));
  const std::string& inst = cmd.instance;
  auto space = [&]() -> const Space& {
    if (!cmd.space) throw PreconditionError(cmd.verb + " needs an input space");
    return *cmd.space;
  };

  if (cmd.verb == "classify") {
    const ClassificationVector v = classify(space(), cfg.caps);
    for (const char* name : kFlagNames) {
      nlohmann::ordered_json extra;
      if (v.notes.count(name)) extra["note"] = v.notes.at(name);
      rep.emit(inst, name, v.get(name), v.witnesses.count(name) ? v.witnesses.at(name) : std::string(), extra);
    }
    return 0;
  }

  if (cmd.verb == "families") {
    const Space& x = space();
    const Families f = enumerate_families(x, cfg.caps);
    if (f.symbolic) {
      rep.emit(inst, "irr_c", f.irr_c_desc);
      rep.emit(inst, "s_c", f.s_c_desc);
      rep.emit(inst, "d_c", f.d_c_desc);
      rep.emit(inst, "k", f.k_desc);
      rep.emit(inst, "rd", f.irr_c_desc);
      rep.emit(inst, "wd", f.irr_c_desc);
      return 0;
    }
    const FinPoset& p = x.poset();
    rep.emit(inst, "irr_c", detail::sets_json(f.irr_c), {}, {{"count", f.irr_c.size()}});
    rep.emit(inst, "s_c", detail::sets_json(f.s_c), {}, {{"count", f.s_c.size()}});
    rep.emit(inst, "d_c", detail::sets_json(f.d_c), {}, {{"count", f.d_c.size()}});
    const auto rd = rudin_sets(p, cfg.caps);
    const auto wd = wd_sets(p, {}, cfg.caps);
    rep.emit(inst, "rd", detail::sets_json(rd), {}, {{"count", rd.size()}});
    rep.emit(inst, "wd", detail::sets_json(wd), {}, {{"count", wd.size()}});
    rep.emit(inst, "k", detail::sets_json(f.k), {}, {{"count", f.k.size()}});
    return 0;
  }

  if (cmd.verb == "powerspace") {
    const FinPoset& p = space().poset();
    PowerSpace ps;
    if (cmd.mode == "smyth")
      ps = smyth(p, cfg.caps);
    else if (cmd.mode == "hoare")
      ps = hoare_closed(p, cfg.caps);
    else
      throw PreconditionError("powerspace takes smyth or hoare");
    rep.emit(inst, "points", detail::sets_json(ps.carrier), {}, {{"count", ps.carrier.size()}});
    rep.emit(inst, "covers", detail::covers_json(ps.space));
    const Verdict sober = is_sober(ps.space, cfg.caps);
    rep.emit(inst, "sober", sober.value, sober.witness);
    return 0;
  }

  if (cmd.verb == "reflect") {
    const Space& x = space();
    if (cmd.mode != "sober" && cmd.mode != "wf") throw PreconditionError("reflect takes sober or wf");
    if (x.is_cofinite()) {
      const SymbolicReflection s = symbolic_reflection(x, cmd.mode == "wf", cfg.caps);
      auto carrier = nlohmann::ordered_json::array();
      for (const auto& c : s.carrier) carrier.push_back(c);
      rep.emit(inst, "points", carrier);
      rep.emit(inst, "added_points", s.added_points);
      rep.emit(inst, "added_point", s.added_point);
      rep.emit(inst, "added_is_top", s.added_is_top);
      rep.emit(inst, "sober", s.sober);
      rep.emit(inst, "equals_sobrification", s.equals_sobrification);
      return 0;
    }
    const Reflection r = cmd.mode == "wf" ? wf_reflection(x, cfg.caps) : sobrification(x.poset(), cfg.caps);
    rep.emit(inst, "points", detail::sets_json(r.reflected.carrier), {}, {{"count", r.reflected.carrier.size()}});
    rep.emit(inst, "covers", detail::covers_json(r.reflected.space));
    rep.emit(inst, "eta", r.eta);
    const auto h = homeomorphic(x.poset(), r.reflected.space);
    rep.emit(inst, "homeomorphism", h ? nlohmann::ordered_json(*h) : nlohmann::ordered_json(nullptr));
    return 0;
  }

  if (cmd.verb == "verify") {
    const auto reports = verify_theorems(space(), cfg.suite, cfg.caps);
    detail::emit_reports(rep, inst, reports);
    const std::size_t failed = detail::count_failures(reports);
    rep.emit(inst, "summary", failed == 0 ? "pass" : "fail", {}, {{"reports", reports.size()}, {"failures", failed}});
    return failed == 0 ? 0 : 1;
  }

  if (cmd.verb == "search") {
    const SearchSummary s = random_poset_search(cfg, &rep);
    rep.emit("search", "summary", s.failures.empty() ? "pass" : "fail", {},
             {{"seed", cfg.seed},
              {"instances", s.instances},
              {"passes", s.passes},
              {"not_applicable", s.not_applicable},
              {"failures", s.failures.size()}});
    return s.failures.empty() ? 0 : 1;
  }

  throw PreconditionError("unknown command " + cmd.verb);
}

}  // namespace soberkit

#endif  // SOBERKIT_CLI_HPP_
