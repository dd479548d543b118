/*
   Copyright 2026 The ppbinom Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ppbinom/json_io.hpp"

#include <nlohmann/json.hpp>

namespace ppbinom {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json verdict_json(const PPVerdict& v) {
    ordered_json j;
    j["q"] = v.q;
    j["p"] = v.p;
    j["e"] = v.e;
    j["a"] = v.a.code();
    j["brute"] = v.brute ? ordered_json(*v.brute) : ordered_json(nullptr);
    j["hermite"] = v.hermite ? ordered_json(*v.hermite) : ordered_json(nullptr);
    j["predicted"] = v.predicted;
    j["agree"] = v.agree;
    return j;
}

ordered_json factorization_json(const Factorization& f) {
    ordered_json j;
    j["sign"] = f.sign;
    ordered_json factors = ordered_json::array();
    for (const auto& [prime, mult] : f.factors) factors.push_back({{"prime", prime.get_str()}, {"exponent", mult}});
    j["factors"] = factors;
    j["cofactor"] = f.cofactor.get_str();
    j["complete"] = f.complete;
    return j;
}

ordered_json gpoly_json(const GPolyRecord& rec) {
    ordered_json j;
    j["alpha"] = rec.alpha;
    j["d_alpha"] = rec.d_alpha;
    j["q_bound"] = rec.q_bound;
    j["g"] = ordered_json::parse(to_json_array(rec.g));
    j["bracket"] = ordered_json::parse(to_json_array(rec.bracket));
    return j;
}

}  // namespace

std::string verdict_to_jsonl(const PPVerdict& v) { return verdict_json(v).dump(); }

std::string sweep_summary_to_json(const SweepResult& r) {
    ordered_json j;
    ordered_json per_q = ordered_json::array();
    std::uint64_t checked = 0;
    for (const auto& s : r.per_q) {
        checked += s.checked;
        per_q.push_back({{"q", s.q},
                         {"p", s.p},
                         {"e", s.e},
                         {"checked", s.checked},
                         {"pp_count", s.pp_count},
                         {"predicted_count", s.predicted_count},
                         {"disagreements", s.disagreements}});
    }
    j["per_q"] = per_q;
    ordered_json dis = ordered_json::array();
    for (const auto& v : r.disagreements) dis.push_back(verdict_json(v));
    j["disagreements"] = dis;
    j["total_checked"] = checked;
    j["total_disagreements"] = r.disagreements.size();
    return j.dump();
}

std::string gpoly_to_json(const GPolyRecord& rec) { return gpoly_json(rec).dump(); }

std::string factorization_to_json(const Factorization& f) { return factorization_json(f).dump(); }

std::string elimination_to_json(const EliminationReport& rep) {
    ordered_json j;
    ordered_json gs = ordered_json::array();
    for (const auto& g : rep.g) gs.push_back({{"alpha", g.alpha}, {"d_alpha", g.d_alpha}});
    j["g"] = gs;
    j["resultant"] = rep.resultant.get_str();
    j["factorization"] = factorization_json(rep.factorization);
    j["rejected_primes"] = rep.rejected_primes;
    j["surviving_primes"] = rep.surviving_primes;
    ordered_json chains = ordered_json::array();
    for (const auto& c : rep.chains) {
        ordered_json cj;
        cj["p"] = c.p;
        cj["gcd"] = c.gcd.to_string();
        cj["roots"] = c.roots;
        cj["gcd_splits"] = c.gcd_splits;
        ordered_json ev = ordered_json::array();
        for (const auto& e : c.evaluations) ev.push_back({{"root", e.root}, {"alpha", e.alpha}, {"value", e.value}});
        cj["evaluations"] = ev;
        cj["q_limit"] = c.q_limit == 0 ? ordered_json(nullptr) : ordered_json(c.q_limit);
        cj["candidate_q"] = c.candidate_q;
        cj["note"] = c.note;
        chains.push_back(cj);
    }
    j["chains"] = chains;
    j["small_q_searched"] = rep.small_q_searched;
    j["candidate_q"] = rep.candidate_q;
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks) {
        checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"match", c.match}});
    }
    j["fixture_checks"] = checks;
    j["fixtures_match"] = rep.fixtures_match();
    return j.dump();
}

}  // namespace ppbinom
