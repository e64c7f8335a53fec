// Copyright 2026 The spantag Authors.
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

// Convenience header pulling in the whole library.

#ifndef SPANTAG_SPANTAG_HPP_
#define SPANTAG_SPANTAG_HPP_

#include "spantag/analysis.hpp"
#include "spantag/boundary_index.hpp"
#include "spantag/codec.hpp"
#include "spantag/commands.hpp"
#include "spantag/core.hpp"
#include "spantag/corpus.hpp"
#include "spantag/ere.hpp"
#include "spantag/infer.hpp"
#include "spantag/metrics.hpp"
#include "spantag/parallel.hpp"
#include "spantag/report.hpp"
#include "spantag/span_table.hpp"

#endif  // SPANTAG_SPANTAG_HPP_
