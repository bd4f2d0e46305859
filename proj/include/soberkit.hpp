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

#ifndef SOBERKIT_SOBERKIT_HPP_
#define SOBERKIT_SOBERKIT_HPP_

#include "soberkit/caps.hpp"
#include "soberkit/classify.hpp"
#include "soberkit/enumerate.hpp"
#include "soberkit/error.hpp"
#include "soberkit/families.hpp"
#include "soberkit/io.hpp"
#include "soberkit/poset.hpp"
#include "soberkit/powerspace.hpp"
#include "soberkit/reflect.hpp"
#include "soberkit/rudin.hpp"
#include "soberkit/space.hpp"
#include "soberkit/subset.hpp"
#include "soberkit/theorems.hpp"

#endif  // SOBERKIT_SOBERKIT_HPP_
