// Copyright 2026 The sumattack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUMATTACK_PORTER_STEMMER_H_
#define SUMATTACK_PORTER_STEMMER_H_

#include <string>
#include <string_view>

namespace sumattack {

// The classic Porter (1980) suffix-stripping stemmer. Expects a lowercase
// ASCII word; anything else is returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace sumattack

#endif  // SUMATTACK_PORTER_STEMMER_H_
