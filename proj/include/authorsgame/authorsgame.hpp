// Copyright 2026 The authorsgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AUTHORSGAME_AUTHORSGAME_HPP_
#define AUTHORSGAME_AUTHORSGAME_HPP_

#include "authorsgame/analysis.hpp"
#include "authorsgame/counterexamples.hpp"
#include "authorsgame/dynamics.hpp"
#include "authorsgame/errors.hpp"
#include "authorsgame/game.hpp"
#include "authorsgame/harness.hpp"
#include "authorsgame/json_io.hpp"
#include "authorsgame/payoff_table.hpp"
#include "authorsgame/profile_space.hpp"
#include "authorsgame/rational.hpp"

#endif  // AUTHORSGAME_AUTHORSGAME_HPP_
