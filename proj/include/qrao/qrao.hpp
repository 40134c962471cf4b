// Copyright 2026 The qrao-maxcut Authors
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

#pragma once

#include "qrao/encoding.hpp"
#include "qrao/experiment.hpp"
#include "qrao/graph.hpp"
#include "qrao/observable.hpp"
#include "qrao/random.hpp"
#include "qrao/rounding.hpp"
#include "qrao/serialization.hpp"
#include "qrao/statevector.hpp"
#include "qrao/vqe.hpp"
