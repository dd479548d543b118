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

#ifndef PPBINOM_JSON_IO_HPP
#define PPBINOM_JSON_IO_HPP

// Machine-readable forms of the classification results. Every function
// returns compact single-line JSON with keys in a fixed order, so equal
// inputs always give byte-identical output.

#include <string>

#include "ppbinom/classify.hpp"

namespace ppbinom {

/// {"q":..,"p":..,"e":..,"a":..,"brute":..,"hermite":..,"predicted":..,"agree":..}
/// A test that was not run is null.
std::string verdict_to_jsonl(const PPVerdict& v);
/// {"per_q":[...],"disagreements":[...],"total_checked":..,"total_disagreements":..}
std::string sweep_summary_to_json(const SweepResult& r);
std::string gpoly_to_json(const GPolyRecord& rec);
std::string factorization_to_json(const Factorization& f);
std::string elimination_to_json(const EliminationReport& rep);

}  // namespace ppbinom

#endif  // PPBINOM_JSON_IO_HPP
