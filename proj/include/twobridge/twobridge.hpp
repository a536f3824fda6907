// Copyright 2026 The twobridge Authors
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

#ifndef TWOBRIDGE_TWOBRIDGE_HPP
#define TWOBRIDGE_TWOBRIDGE_HPP

#include "twobridge/alexander.hpp"
#include "twobridge/charvar.hpp"
#include "twobridge/chebyshev.hpp"
#include "twobridge/classify.hpp"
#include "twobridge/contfrac.hpp"
#include "twobridge/error.hpp"
#include "twobridge/factor.hpp"
#include "twobridge/io.hpp"
#include "twobridge/knotnum.hpp"
#include "twobridge/orsepi.hpp"
#include "twobridge/polyring.hpp"
#include "twobridge/verify.hpp"

#define TWOBRIDGE_VERSION "0.3.0"

#endif  // TWOBRIDGE_TWOBRIDGE_HPP
